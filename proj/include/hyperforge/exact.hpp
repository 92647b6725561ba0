#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperforge {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

enum class ErrorKind {
    UnpairablePole,
    PoleError,
    NotTerminating,
    LowerPole,
    Divergent,
    SlowConvergence,
    DegenerateParameters,
    BalanceViolated,
    PoleInQuotient,
    RootAtNonnegativeInteger,
    ZeroConstantTerm,
    IllConditioned,
    ConditionsViolated,
    SummationPatternMismatch,
    ConstraintViolated,
    DivisionByZero,
    Unsupported,
};

const char* to_string(ErrorKind k);

class MathError : public std::runtime_error {
public:
    MathError(ErrorKind k, const std::string& what);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind k, const std::string& what);

bool is_integer(const Rational& q);
bool is_nonpos_int(const Rational& q);
bool is_half_integer(const Rational& q);
long to_long(const Rational& q);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);
Rational frac(long num, long den = 1);

// (a)_n for any integer n; (a)_{-m} = 1/(a-m)_m.
Rational poch(const Rational& a, long n);
Rational poch(const std::vector<Rational>& a, long n);
Rational multiple_poch_split(const Rational& a, int l, long k);
Rational factorial(long n);
Rational ipow(const Rational& x, long n);

// Working precision in decimal digits. HYPERFORGE_PRECISION overrides 64.
int default_precision();
// Digits actually used by Real arithmetic for a target precision P.
int working_digits(int target);
void set_working_precision(int target);

class PrecisionScope {
public:
    explicit PrecisionScope(int target);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rational& q);
std::string to_string(const Real& r, int digits);
Real lgamma_signed(const Real& x, int& sign);

struct GammaRatio {
    std::vector<Rational> num;
    std::vector<Rational> den;
    Rational factor{1};
    int sqrt_pi = 0;  // power of sqrt(pi)
    Rational two{0};  // power of 2

    GammaRatio() = default;
    GammaRatio(std::vector<Rational> n, std::vector<Rational> d, Rational f = 1)
        : num(std::move(n)), den(std::move(d)), factor(std::move(f)) {}

    GammaRatio& operator*=(const GammaRatio& o);
    GammaRatio& operator*=(const Rational& q);
    GammaRatio& operator/=(const GammaRatio& o);
    GammaRatio inverse() const;

    // true when the value is a rational number (after reduce)
    bool is_exact() const;
    Rational exact_value() const;
};

GammaRatio operator*(GammaRatio a, const GammaRatio& b);
GammaRatio operator/(GammaRatio a, const GammaRatio& b);
GammaRatio operator*(GammaRatio a, const Rational& q);

GammaRatio reduce(const GammaRatio& g);
std::pair<Rational, GammaRatio> gamma_ratio_reduce(const GammaRatio& g);
Real gamma_ratio_eval(const GammaRatio& g, int precision = 0);

// Either an exact rational or a numeric approximation.
struct Scalar {
    bool exact = true;
    Rational q{0};
    Real r{0};

    Scalar() = default;
    Scalar(const Rational& v) : exact(true), q(v) {}
    static Scalar numeric(const Real& v);
    Real approx() const { return exact ? to_real(q) : r; }
    std::string str(int digits) const;
};

Scalar evaluate(const GammaRatio& g);
Scalar operator*(const Scalar& a, const Scalar& b);

}  // namespace hyperforge
