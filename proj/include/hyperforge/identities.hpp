#pragma once

#include "hyperforge/exact.hpp"
#include "hyperforge/hyperseries.hpp"
#include "hyperforge/sampling.hpp"
#include "hyperforge/summations.hpp"
#include "hyperforge/transforms.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperforge {

// Named scalars plus the integer data an entry may use: n (termination),
// k (Maier's degree), shifts (f, m) and IPD pairs (h, p).
struct IdentityParams {
    std::map<std::string, Rational> s;
    std::vector<Rational> f, h;
    std::vector<long> m, p;
    long n = 0, k = 0;

    const Rational& operator[](const std::string& name) const;
    Rational& operator[](const std::string& name) { return s[name]; }
    bool has(const std::string& name) const { return s.count(name) > 0; }
    // name -> value pairs, rationals as "num/den"
    std::vector<std::pair<std::string, std::string>> fields() const;
    std::string str() const;
};

struct IdentitySide {
    GammaRatio prefactor;
    HyperSpec series;
};

using SideBuilder = std::function<IdentitySide(const IdentityParams&)>;
using SpecBuilder = std::function<HyperSpec(const IdentityParams&)>;

struct IdentityConstraint {
    std::string name;
    ErrorKind kind;
    std::function<bool(const IdentityParams&)> holds;
};

// Lemma input: base transform parameters and the density vectors a, b.
struct LemmaSetup {
    TransformParams t;
    std::vector<Rational> a, b;
};

struct Derivation {
    std::string transform;
    std::string rule;
    // the lemma produces the printed right side's series from the left side's
    bool reversed = false;
    std::function<LemmaSetup(const IdentityParams&)> setup;
    // summation arguments that turn the k-th inner series into rule.lhs
    std::function<SumArgs(const IdentityParams&, long k)> bind;
};

struct NumericExtension {
    std::string note;
    std::function<IdentityParams(Sampler&)> sample;
    // limit forms replace the printed builders
    SpecBuilder lhs;
    SideBuilder rhs;
    // claimed wherever both sides converge, rather than where one side terminates
    bool both_converge = false;
    // the claim's stated region, beyond convergence of the two sides
    std::function<bool(const IdentityParams&)> region;
};

// A printed form that differs from the catalog form. The verdict is decided
// by the oracle at run time.
struct PrintedVariant {
    std::string what;
    SpecBuilder lhs;  // empty: same as the entry
    SideBuilder rhs;
    std::function<IdentityParams(Sampler&)> sample;  // empty: the entry's sampler
};

struct IdentityEntry {
    std::string id;
    std::string case_label;
    std::string anchor;
    SpecBuilder lhs;
    SideBuilder rhs;
    std::vector<IdentityConstraint> constraints;
    std::function<IdentityParams(Sampler&)> sample;
    std::optional<Derivation> derivation;
    std::string no_derivation;  // reason when derivation is empty
    std::vector<NumericExtension> numeric;
    std::optional<PrintedVariant> printed;
};

const std::vector<IdentityEntry>& catalog_identities();
const IdentityEntry& identity(const std::string& id);

// Throws the kind of the first failing constraint.
void check_constraints(const IdentityEntry& e, const IdentityParams& p);
// Constraints, poles of either side and accidental non-positive integers.
bool admissible(const IdentityEntry& e, const IdentityParams& p, std::string* why = nullptr);
// Draws until admissible; nullopt after `attempts` rejections.
std::optional<IdentityParams> draw_admissible(const IdentityEntry& e, Sampler& g, int attempts = 400);
std::optional<IdentityParams> draw_numeric(const IdentityEntry& e, size_t which, Sampler& g, int attempts = 400);

enum class VerifyMode { Exact, Numeric };
const char* to_string(VerifyMode m);

struct IdentityCheck {
    Scalar lhs, rhs;
    Real abs_discrepancy{0};
    Real rel_discrepancy{0};
    bool exact = false;
    long terms_used = 0;
    bool passed = false;
};

// Numeric mode passes at relative discrepancy <= 10^(16-P).
// `budget` caps the terms summed per series.
IdentityCheck verify_identity(const IdentityEntry& e, const IdentityParams& p, VerifyMode mode, int precision,
                              long budget = 100000);
// Same, with the numeric-extension builders.
IdentityCheck verify_numeric_extension(const IdentityEntry& e, size_t which, const IdentityParams& p, int precision,
                                       long budget = 100000);
IdentityCheck verify_printed(const IdentityEntry& e, const IdentityParams& p);

struct MasterTerm {
    long k = 0;
    Rational coefficient;
    HyperSpec inner;
};

struct MasterExpansion {
    std::string transform;
    std::vector<Rational> a, b;
    HyperSpec lhs;
    std::vector<MasterTerm> terms;
    bool finite = false;  // every coefficient past the last term vanishes
};

// Σ_k (δ)_k (a)_{uk} D^k / ((γ)_k (b)_{uk} k!) F(-λ+vk, a+uk; b+uk) for k <= max_k.
MasterExpansion master_lemma_expand(const BaseTransform& t, const TransformParams& p, const std::vector<Rational>& a,
                                    const std::vector<Rational>& b, long max_k);
// Σ coefficient * inner, exactly; every inner series must terminate.
Rational master_sum(const MasterExpansion& m);

struct RegeneratedTerm {
    long k = 0;
    Scalar regenerated, printed;
    bool matches = false;
};

struct Regeneration {
    bool lhs_matches = false;  // lemma left side equals the printed series
    std::vector<RegeneratedTerm> terms;
    bool passed = false;
};

// Rebuilds the first max_k+1 terms of the printed series from the lemma and
// the bound summation rule. Throws SummationPatternMismatch on a bad binding.
Regeneration regenerate_rhs(const IdentityEntry& e, const IdentityParams& p, long max_k = 7);

struct Adjudication {
    std::string subject;
    std::string entry;  // identity or rule id
    long checks = 0;
    long printed_failures = 0;
    long corrected_failures = 0;
    std::string verdict;
};

// Oracle verdicts on every suspected misprint the catalog records.
std::vector<Adjudication> adjudicate_all(int samples, std::uint64_t seed);

// The map behind the self-inverse transformation I-14.
IdentitySide curious_transform(const IdentityParams& p);

struct LimitStep {
    long n = 0;
    Real discrepancy{0};
};

// A limit identity against its parent along a path indexed by n.
struct LimitStudy {
    std::string entry, parent, path;
    std::vector<LimitStep> steps;
    bool monotone = false;
    Real final_discrepancy{0};
};

std::vector<LimitStudy> limit_studies(const std::vector<long>& ns, int precision);

}  // namespace hyperforge
