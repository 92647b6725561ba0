#include "hyperforge/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <mpfr.h>

namespace hyperforge {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::UnpairablePole: return "UnpairablePole";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::NotTerminating: return "NotTerminating";
    case ErrorKind::LowerPole: return "LowerPole";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::BalanceViolated: return "BalanceViolated";
    case ErrorKind::PoleInQuotient: return "PoleInQuotient";
    case ErrorKind::RootAtNonnegativeInteger: return "RootAtNonnegativeInteger";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::ConditionsViolated: return "ConditionsViolated";
    case ErrorKind::SummationPatternMismatch: return "SummationPatternMismatch";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Unsupported: return "Unsupported";
    }
    return "?";
}

MathError::MathError(ErrorKind k, const std::string& what)
    : std::runtime_error(std::string(to_string(k)) + ": " + what), kind_(k) {}

void fail(ErrorKind k, const std::string& what) { throw MathError(k, what); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_nonpos_int(const Rational& q) { return is_integer(q) && q <= 0; }

bool is_half_integer(const Rational& q) { return denominator(q) == 2; }

long to_long(const Rational& q) {
    if (!is_integer(q)) fail(ErrorKind::Unsupported, "not an integer: " + to_string(q));
    return numerator(q).convert_to<long>();
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt d(s.substr(slash + 1));
    if (d == 0) fail(ErrorKind::DivisionByZero, s);
    return Rational(BigInt(s.substr(0, slash)), d);
}

Rational frac(long num, long den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "frac");
    return Rational(BigInt(num)) / BigInt(den);
}

Rational poch(const Rational& a, long n) {
    if (n < 0) {
        Rational d = poch(a + n, -n);
        if (d == 0) fail(ErrorKind::DivisionByZero, "(a)_{-m} at a pole");
        return 1 / d;
    }
    Rational r(1);
    for (long j = 0; j < n; ++j) {
        r *= a + j;
        if (r == 0) break;
    }
    return r;
}

Rational poch(const std::vector<Rational>& a, long n) {
    Rational r(1);
    for (const auto& x : a) r *= poch(x, n);
    return r;
}

Rational multiple_poch_split(const Rational& a, int l, long k) {
    Rational r = ipow(Rational(l), static_cast<long>(l) * k);
    for (int j = 0; j < l; ++j) r *= poch((a + j) / l, k);
    return r;
}

Rational factorial(long n) { return poch(Rational(1), n); }

Rational ipow(const Rational& x, long n) {
    if (n < 0) return 1 / ipow(x, -n);
    Rational r(1), b(x);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

int default_precision() {
    if (const char* env = std::getenv("HYPERFORGE_PRECISION")) {
        int p = std::atoi(env);
        if (p > 0) return p;
    }
    return 64;
}

int working_digits(int target) { return 3 * target + 20; }

void set_working_precision(int target) { Real::default_precision(working_digits(target)); }

PrecisionScope::PrecisionScope(int target) : saved_(Real::default_precision()) {
    set_working_precision(target);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
    Real n(numerator(q));
    Real d(denominator(q));
    return n / d;
}

std::string to_string(const Real& r, int digits) { return r.str(digits, std::ios_base::scientific); }

Real lgamma_signed(const Real& x, int& sign) {
    Real res;
    mpfr_lgamma(res.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
    return res;
}

GammaRatio& GammaRatio::operator*=(const GammaRatio& o) {
    num.insert(num.end(), o.num.begin(), o.num.end());
    den.insert(den.end(), o.den.begin(), o.den.end());
    factor *= o.factor;
    sqrt_pi += o.sqrt_pi;
    two += o.two;
    return *this;
}

GammaRatio& GammaRatio::operator*=(const Rational& q) {
    factor *= q;
    return *this;
}

GammaRatio& GammaRatio::operator/=(const GammaRatio& o) { return *this *= o.inverse(); }

GammaRatio GammaRatio::inverse() const {
    if (factor == 0) fail(ErrorKind::DivisionByZero, "inverse of zero gamma ratio");
    GammaRatio r(den, num, 1 / factor);
    r.sqrt_pi = -sqrt_pi;
    r.two = -two;
    return r;
}

bool GammaRatio::is_exact() const {
    if (factor == 0) return true;
    return num.empty() && den.empty() && sqrt_pi == 0 && is_integer(two);
}

Rational GammaRatio::exact_value() const {
    if (factor == 0) return 0;
    if (!is_exact()) fail(ErrorKind::Unsupported, "gamma ratio is not rational");
    return factor * ipow(Rational(2), to_long(two));
}

GammaRatio operator*(GammaRatio a, const GammaRatio& b) { return a *= b; }
GammaRatio operator/(GammaRatio a, const GammaRatio& b) { return a /= b; }
GammaRatio operator*(GammaRatio a, const Rational& q) { return a *= q; }

namespace {

// Γ(x+n)/Γ(x) with the convention that a pole in x only cancels against a
// pole in x+n.
Rational shift_ratio(const Rational& x, long n) {
    if (n >= 0) return poch(x, n);
    Rational d = poch(x + n, -n);
    if (d == 0) fail(ErrorKind::UnpairablePole, "Gamma pole at " + to_string(x + n));
    return 1 / d;
}

// Pair num[i] with den[j] when the difference is an integer. Poles pair with
// poles first, then the closest pair wins.
bool pair_once(GammaRatio& g) {
    int bi = -1, bj = -1;
    Rational best;
    bool best_pole = false;
    for (size_t i = 0; i < g.num.size(); ++i) {
        for (size_t j = 0; j < g.den.size(); ++j) {
            Rational d = g.num[i] - g.den[j];
            if (!is_integer(d)) continue;
            bool pole = is_nonpos_int(g.num[i]) && is_nonpos_int(g.den[j]);
            Rational ad = abs(d);
            bool better = bi < 0 || (pole && !best_pole) || (pole == best_pole && ad < best);
            if (better) {
                bi = int(i), bj = int(j);
                best = ad;
                best_pole = pole;
            }
        }
    }
    if (bi < 0) return false;
    Rational x = g.num[bi], y = g.den[bj];
    long n = to_long(x - y);
    // Γ(x)/Γ(y), x = y + n
    if (is_nonpos_int(x) && !is_nonpos_int(y))
        fail(g.factor == 0 ? ErrorKind::PoleInQuotient : ErrorKind::UnpairablePole, "Gamma pole at " + to_string(x));
    if (is_nonpos_int(x) && is_nonpos_int(y)) {
        // limit of Γ(x+ε)/Γ(y+ε)
        long a = -to_long(x), b = -to_long(y);
        Rational v = factorial(b) / factorial(a);
        if ((a - b) % 2) v = -v;
        g.factor *= v;
    } else {
        g.factor *= shift_ratio(y, n);
    }
    g.num.erase(g.num.begin() + bi);
    g.den.erase(g.den.begin() + bj);
    return true;
}

// Γ(z)Γ(z+1/2+j) = (z+1/2)_j 2^{1-2z} √π Γ(2z), inside one side.
bool duplicate_once(std::vector<Rational>& side, GammaRatio& g, bool numerator_side) {
    for (size_t i = 0; i < side.size(); ++i) {
        for (size_t j = 0; j < side.size(); ++j) {
            if (i == j) continue;
            Rational z = side[i], w = side[j];
            Rational d = w - z - Rational(1, 2);
            if (!is_integer(d) || d < 0) continue;
            if (is_nonpos_int(z) || is_nonpos_int(z + Rational(1, 2)) || is_nonpos_int(w)) continue;
            long n = to_long(d);
            Rational f = poch(z + Rational(1, 2), n);
            Rational two = 1 - 2 * z;
            Rational z2 = 2 * z;
            size_t hi = std::max(i, j), lo = std::min(i, j);
            side.erase(side.begin() + hi);
            side.erase(side.begin() + lo);
            side.push_back(z2);
            if (numerator_side) {
                g.factor *= f;
                g.two += two;
                g.sqrt_pi += 1;
            } else {
                g.factor /= f;
                g.two -= two;
                g.sqrt_pi -= 1;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

GammaRatio reduce(const GammaRatio& in) {
    GammaRatio g = in;
    std::sort(g.num.begin(), g.num.end());
    std::sort(g.den.begin(), g.den.end());
    for (;;) {
        if (pair_once(g)) continue;
        if (g.factor != 0 && duplicate_once(g.num, g, true)) continue;
        if (g.factor != 0 && duplicate_once(g.den, g, false)) continue;
        break;
    }
    if (g.factor == 0) {
        // 0 times an unpaired pole is a limit the ratio cannot see
        for (const auto& x : g.num)
            if (is_nonpos_int(x)) fail(ErrorKind::PoleInQuotient, "zero factor against Gamma pole at " + to_string(x));
        return GammaRatio({}, {}, 0);
    }
    for (const auto& x : g.num)
        if (is_nonpos_int(x)) fail(ErrorKind::UnpairablePole, "Gamma pole at " + to_string(x));
    for (const auto& x : g.den)
        if (is_nonpos_int(x)) return GammaRatio({}, {}, 0);
    // Γ(n) = (n-1)! for positive integers, Γ(1/2+m) = (1/2)_m √π
    auto absorb = [&](std::vector<Rational>& side, bool numerator_side) {
        std::vector<Rational> keep;
        int s = numerator_side ? 1 : -1;
        for (const auto& x : side) {
            if (is_integer(x) && x > 0) {
                Rational f = factorial(to_long(x) - 1);
                if (numerator_side) g.factor *= f;
                else g.factor /= f;
            } else if (is_half_integer(x)) {
                Rational f = poch(Rational(1, 2), to_long(x - Rational(1, 2)));
                if (numerator_side) g.factor *= f;
                else g.factor /= f;
                g.sqrt_pi += s;
            } else {
                keep.push_back(x);
            }
        }
        side = std::move(keep);
    };
    absorb(g.num, true);
    absorb(g.den, false);
    // Γ(z)Γ(1-z+j) = π (1-z)_j / sin(πz), used only where sin(πz) = ±1/2
    auto reflect = [&](std::vector<Rational>& side, bool numerator_side) {
        for (size_t i = 0; i < side.size(); ++i) {
            const Rational z = side[i];
            BigInt n = numerator(z), d = denominator(z), q = n / d;
            if (n < 0 && q * d != n) q -= 1;
            Rational fl(q);
            Rational f = z - fl;
            if (f != Rational(1, 6) && f != Rational(5, 6)) continue;
            for (size_t j = 0; j < side.size(); ++j) {
                if (j == i || !is_integer(z + side[j])) continue;
                long shift = to_long(z + side[j]) - 1;
                Rational sin = is_integer(fl / 2) ? Rational(1, 2) : Rational(-1, 2);
                Rational r = poch(1 - z, shift);
                if (numerator_side) {
                    g.factor *= r / sin;
                    g.sqrt_pi += 2;
                } else {
                    g.factor *= sin / r;
                    g.sqrt_pi -= 2;
                }
                side.erase(side.begin() + long(std::max(i, j)));
                side.erase(side.begin() + long(std::min(i, j)));
                return true;
            }
        }
        return false;
    };
    while (g.sqrt_pi >= 2 && reflect(g.den, false)) {
    }
    while (g.sqrt_pi <= -2 && reflect(g.num, true)) {
    }
    if (is_integer(g.two)) {
        g.factor *= ipow(Rational(2), to_long(g.two));
        g.two = 0;
    }
    std::sort(g.num.begin(), g.num.end());
    std::sort(g.den.begin(), g.den.end());
    return g;
}

std::pair<Rational, GammaRatio> gamma_ratio_reduce(const GammaRatio& g) {
    GammaRatio r = reduce(g);
    Rational f = r.factor;
    r.factor = 1;
    return {f, r};
}

Real gamma_ratio_eval(const GammaRatio& in, int precision) {
    std::unique_ptr<PrecisionScope> scope;
    if (precision > 0) scope = std::make_unique<PrecisionScope>(precision);
    GammaRatio g = reduce(in);
    if (g.factor == 0) return Real(0);
    Real logv = 0;
    int sign = 1;
    for (const auto& x : g.num) {
        if (is_nonpos_int(x)) fail(ErrorKind::PoleError, to_string(x));
        int s;
        logv += lgamma_signed(to_real(x), s);
        sign *= s;
    }
    for (const auto& x : g.den) {
        int s;
        logv -= lgamma_signed(to_real(x), s);
        sign *= s;
    }
    Real v = exp(logv);
    if (g.sqrt_pi) v *= pow(boost::multiprecision::sqrt(boost::math::constants::pi<Real>()), g.sqrt_pi);
    if (g.two != 0) v *= pow(Real(2), to_real(g.two));
    v *= to_real(g.factor);
    return sign < 0 ? Real(-v) : v;
}

Scalar Scalar::numeric(const Real& v) {
    Scalar s;
    s.exact = false;
    s.r = v;
    return s;
}

std::string Scalar::str(int digits) const { return exact ? to_string(q) : to_string(r, digits); }

Scalar evaluate(const GammaRatio& g) {
    GammaRatio r = reduce(g);
    if (r.is_exact()) return Scalar(r.exact_value());
    return Scalar::numeric(gamma_ratio_eval(r));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact && b.exact) return Scalar(a.q * b.q);
    return Scalar::numeric(a.approx() * b.approx());
}

}  // namespace hyperforge
