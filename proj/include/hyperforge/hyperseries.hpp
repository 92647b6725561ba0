#pragma once

#include "hyperforge/exact.hpp"
#include "hyperforge/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyperforge {

// prefactor * sum_n (upper)_n / ((lower)_n n!) * weight(n) * x^n
struct HyperSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    PolyQ weight{1};
    Rational prefactor{1};
    Rational x{1};
    // when set, the sum stops at this index (partial sum)
    std::optional<long> truncate_at;

    HyperSpec() = default;
    HyperSpec(std::vector<Rational> up, std::vector<Rational> lo, Rational arg = 1)
        : upper(std::move(up)), lower(std::move(lo)), x(std::move(arg)) {}

    HyperSpec& with_weight(const PolyQ& w) {
        weight = w;
        return *this;
    }
    std::string str() const;
};

struct SeriesValue {
    Scalar value;
    bool exact = false;
    long terms_used = 0;
    std::optional<Real> tail_bound;
};

enum class Convergence { Terminates, ConvergesInsideDisk, ConvergesAtUnity, Divergent };
const char* to_string(Convergence c);

struct EvalOptions {
    int precision = 64;
    long budget = 100000;
    int consecutive = 5;  // sub-threshold terms required before stopping
    int guard = 10;       // extra digits in the stopping threshold
};

// Index of the last nonzero term for a terminating spec.
std::optional<long> termination_index(const HyperSpec& s);
Rational parametric_excess(const HyperSpec& s);
// Same multisets of upper and lower parameters and the same argument.
bool same_parameters(const HyperSpec& x, const HyperSpec& y);
// A non-positive integer lower parameter reached before the series stops.
std::optional<Rational> lower_pole(const HyperSpec& s);
Convergence check_convergence(const HyperSpec& s);

// term(n) without the prefactor, via the running ratio
std::vector<Rational> series_terms(const HyperSpec& s, long count);

SeriesValue eval_terminating(const HyperSpec& s);
SeriesValue eval_convergent(const HyperSpec& s, const EvalOptions& opt = {});
// Levin u-transform for non-terminating series at |x| = 1.
SeriesValue eval_accelerated(const HyperSpec& s, const EvalOptions& opt = {});
// Exact when terminating, otherwise numeric via the appropriate method.
SeriesValue evaluate(const HyperSpec& s, const EvalOptions& opt = {});

// Complex parameters, used for root-form specs.
struct CHyperSpec {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    Complex prefactor{Real(1)};
    Rational x{1};
    std::optional<long> terminate_at;
};

struct ComplexValue {
    Complex value;
    long terms_used = 0;
    std::optional<Real> tail_bound;
};

ComplexValue evaluate(const CHyperSpec& s, const EvalOptions& opt = {});

// Replace the weight by parameter pairs (1-r; -r) built from its roots r.
CHyperSpec weight_to_root_shift(const HyperSpec& s, int precision);

// Guard used when numeric work is requested at a precision above the
// current default. Not for use under concurrency.
class WorkingPrecision {
public:
    explicit WorkingPrecision(int precision);

private:
    std::unique_ptr<PrecisionScope> scope_;
};

}  // namespace hyperforge
