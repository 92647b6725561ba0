#include "hyperforge/hyperseries.hpp"

#include <algorithm>

namespace hyperforge {

namespace {

Real mag(const Real& v) { return boost::multiprecision::abs(v); }
Real mag(const Complex& v) { return abs(v); }

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s;
}

template <class T>
T lift(const Rational& q) {
    return T(to_real(q));
}

template <class T>
struct TermStream {
    std::vector<T> up, lo;
    T x;
    const PolyQ* weight;
    T t{Real(1)};
    long n = 0;

    // weighted term n, then advance the running ratio
    T next() {
        T out = t;
        if (weight->degree() > 0) out *= lift<T>((*weight)(Rational(n)));
        else if (weight->degree() == 0) out *= lift<T>(weight->coeff(0));
        T num = x, den = T(Real(n + 1));
        for (const auto& a : up) num *= a + T(Real(n));
        for (const auto& b : lo) den *= b + T(Real(n));
        if (mag(den) == 0) fail(ErrorKind::LowerPole, "lower parameter pole at index " + std::to_string(n));
        t = t * num / den;
        ++n;
        return out;
    }
};


template <class T>
struct SumT {
    T value;
    long terms;
    Real tail;
};

template <class T>
SumT<T> direct_sum(TermStream<T>& ts, const EvalOptions& opt) {
    T s{Real(0)};
    Real thresh = pow(Real(10), -(opt.precision + opt.guard));
    int below = 0;
    Real prev_mag = -1, ratio = 1;
    for (long i = 0; i < opt.budget; ++i) {
        T a = ts.next();
        s += a;
        Real m = mag(a);
        if (prev_mag > 0) ratio = m / prev_mag;
        prev_mag = m;
        Real scale = std::max(mag(s), Real(thresh));
        if (m <= thresh * scale) {
            if (++below >= opt.consecutive) {
                Real tail = ratio < 1 ? Real(m * ratio / (1 - ratio)) : m;
                return {s, i + 1, tail};
            }
        } else {
            below = 0;
        }
    }
    if (ratio > Real(1) - Real(1) / 1000)
        fail(ErrorKind::SlowConvergence, "term ratio still near 1 after budget");
    fail(ErrorKind::SlowConvergence, "term budget exhausted");
}

template <class T>
T levin_u(const std::vector<T>& a, const std::vector<T>& partial, long k) {
    // L = sum_j (-1)^j C(k,j) ((1+j)/(1+k))^(k-1) S_j/w_j  /  same with 1/w_j,  w_j = (1+j) a_j
    T num{Real(0)}, den{Real(0)};
    Real binom = 1;
    Real kk = Real(k + 1);
    for (long j = 0; j <= k; ++j) {
        if (j > 0) binom = binom * Real(k - j + 1) / Real(j);
        Real c = binom * pow(Real(j + 1) / kk, k - 1);
        if (j % 2) c = -c;
        if (mag(a[j]) == 0) fail(ErrorKind::SlowConvergence, "zero term blocks acceleration");
        T inv_w = T(Real(1)) / (a[j] * T(Real(j + 1)));
        num += T(c) * partial[j] * inv_w;
        den += T(c) * inv_w;
    }
    return num / den;
}

template <class T>
SumT<T> accelerated_sum(TermStream<T>& ts, const EvalOptions& opt) {
    std::vector<T> a, partial;
    T s{Real(0)};
    auto grow = [&](long n) {
        while (long(a.size()) < n) {
            a.push_back(ts.next());
            s += a.back();
            partial.push_back(s);
        }
    };
    Real thresh = pow(Real(10), -(opt.precision + opt.guard));
    Real accept = pow(Real(10), 8 - opt.precision);
    const long step = 20, cap = std::min<long>(opt.budget, 400);
    grow(40);
    T prev = levin_u(a, partial, long(a.size()) - 1);
    Real best_diff = -1;
    T best = prev;
    for (long n = 40 + step; n <= cap; n += step) {
        grow(n);
        T cur = levin_u(a, partial, n - 1);
        Real diff = mag(cur - prev);
        Real scale = std::max(mag(cur), Real(1e-300));
        if (best_diff < 0 || diff < best_diff) {
            best_diff = diff;
            best = cur;
        }
        if (diff <= thresh * scale) return {cur, n, diff};
        prev = cur;
    }
    if (best_diff >= 0 && best_diff <= accept * std::max(mag(best), Real(1e-300)))
        return {best, cap, best_diff};
    fail(ErrorKind::SlowConvergence, "acceleration did not settle");
}

}  // namespace

std::string HyperSpec::str() const {
    std::string s = "F(" + join(upper) + "; " + join(lower);
    if (weight != PolyQ(1)) s += " : " + weight.str();
    s += " | " + to_string(x) + ")";
    if (prefactor != 1) s = to_string(prefactor) + " * " + s;
    if (truncate_at) s += " [n<=" + std::to_string(*truncate_at) + "]";
    return s;
}

const char* to_string(Convergence c) {
    switch (c) {
    case Convergence::Terminates: return "Terminates";
    case Convergence::ConvergesInsideDisk: return "ConvergesInsideDisk";
    case Convergence::ConvergesAtUnity: return "ConvergesAtUnity";
    case Convergence::Divergent: return "Divergent";
    }
    return "?";
}

std::optional<long> termination_index(const HyperSpec& s) {
    std::optional<long> n;
    for (const auto& a : s.upper)
        if (is_nonpos_int(a)) {
            long m = -to_long(a);
            if (!n || m < *n) n = m;
        }
    if (s.truncate_at && (!n || *s.truncate_at < *n)) n = *s.truncate_at;
    if (s.weight.is_zero() && !n) n = 0;
    return n;
}

bool same_parameters(const HyperSpec& x, const HyperSpec& y) {
    auto sorted = [](std::vector<Rational> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return x.x == y.x && sorted(x.upper) == sorted(y.upper) && sorted(x.lower) == sorted(y.lower);
}

std::optional<Rational> lower_pole(const HyperSpec& s) {
    auto last = termination_index(s);
    for (const auto& b : s.lower)
        if (is_nonpos_int(b) && (!last || *last > -b)) return b;
    return std::nullopt;
}

Rational parametric_excess(const HyperSpec& s) {
    Rational r(0);
    for (const auto& b : s.lower) r += b;
    for (const auto& a : s.upper) r -= a;
    return r;
}

Convergence check_convergence(const HyperSpec& s) {
    if (termination_index(s)) return Convergence::Terminates;
    Rational ax = abs(s.x);
    if (s.x == 0) return Convergence::ConvergesInsideDisk;
    if (s.upper.size() < s.lower.size() + 1) return Convergence::ConvergesInsideDisk;
    if (s.upper.size() > s.lower.size() + 1) return Convergence::Divergent;
    if (ax < 1) return Convergence::ConvergesInsideDisk;
    if (ax > 1) return Convergence::Divergent;
    Rational excess = parametric_excess(s);
    int deg = std::max(0, s.weight.degree());
    // x = -1 only needs conditional convergence: terms ~ n^(deg-s-1) with alternating sign
    Rational need = s.x == 1 ? Rational(deg) : Rational(deg - 1);
    return excess > need ? Convergence::ConvergesAtUnity : Convergence::Divergent;
}

std::vector<Rational> series_terms(const HyperSpec& s, long count) {
    std::vector<Rational> out;
    Rational t(1);
    for (long n = 0; n < count; ++n) {
        out.push_back(t);
        Rational num = s.x, den(n + 1);
        for (const auto& a : s.upper) num *= a + n;
        for (const auto& b : s.lower) den *= b + n;
        if (num == 0) {
            t = 0;
            continue;
        }
        if (den == 0) fail(ErrorKind::LowerPole, "lower parameter pole at index " + std::to_string(n));
        t = t * num / den;
    }
    return out;
}

SeriesValue eval_terminating(const HyperSpec& s) {
    auto N = termination_index(s);
    if (!N) fail(ErrorKind::NotTerminating, s.str());
    SeriesValue out;
    out.exact = true;
    if (s.weight.is_zero() || s.prefactor == 0) {
        out.value = Scalar(Rational(0));
        return out;
    }
    Rational sum(0), t(1);
    long n = 0;
    for (;; ++n) {
        sum += t * s.weight(Rational(n));
        if (n == *N) break;
        Rational num = s.x;
        for (const auto& a : s.upper) num *= a + n;
        if (num == 0) break;
        Rational den(n + 1);
        for (const auto& b : s.lower) den *= b + n;
        if (den == 0) fail(ErrorKind::LowerPole, "lower parameter pole at index " + std::to_string(n));
        t = t * num / den;
    }
    out.value = Scalar(s.prefactor * sum);
    out.terms_used = n + 1;
    return out;
}

WorkingPrecision::WorkingPrecision(int precision) {
    if (Real::default_precision() < unsigned(working_digits(precision)))
        scope_ = std::make_unique<PrecisionScope>(precision);
}

namespace {

TermStream<Real> real_stream(const HyperSpec& s) {
    TermStream<Real> ts;
    for (const auto& a : s.upper) ts.up.push_back(to_real(a));
    for (const auto& b : s.lower) ts.lo.push_back(to_real(b));
    ts.x = to_real(s.x);
    ts.weight = &s.weight;
    return ts;
}

SeriesValue numeric_result(const HyperSpec& s, const SumT<Real>& r) {
    SeriesValue out;
    out.value = Scalar::numeric(to_real(s.prefactor) * r.value);
    out.terms_used = r.terms;
    out.tail_bound = boost::multiprecision::abs(to_real(s.prefactor)) * r.tail;
    return out;
}

}  // namespace

SeriesValue eval_convergent(const HyperSpec& s, const EvalOptions& opt) {
    WorkingPrecision wp(opt.precision);
    Convergence c = check_convergence(s);
    if (c == Convergence::Divergent) fail(ErrorKind::Divergent, s.str());
    if (c == Convergence::ConvergesAtUnity) return eval_accelerated(s, opt);
    if (s.x == 0) {
        SeriesValue out;
        out.value = Scalar::numeric(to_real(s.prefactor * s.weight(Rational(0))));
        out.terms_used = 1;
        out.tail_bound = Real(0);
        return out;
    }
    auto ts = real_stream(s);
    return numeric_result(s, direct_sum(ts, opt));
}

SeriesValue eval_accelerated(const HyperSpec& s, const EvalOptions& opt) {
    WorkingPrecision wp(opt.precision);
    if (check_convergence(s) == Convergence::Divergent) fail(ErrorKind::Divergent, s.str());
    auto ts = real_stream(s);
    return numeric_result(s, accelerated_sum(ts, opt));
}

SeriesValue evaluate(const HyperSpec& s, const EvalOptions& opt) {
    if (termination_index(s)) return eval_terminating(s);
    return eval_convergent(s, opt);
}

ComplexValue evaluate(const CHyperSpec& s, const EvalOptions& opt) {
    WorkingPrecision wp(opt.precision);
    TermStream<Complex> ts;
    ts.up = s.upper;
    ts.lo = s.lower;
    ts.x = Complex(s.x);
    PolyQ one(1);
    ts.weight = &one;
    ComplexValue out;
    if (s.terminate_at) {
        Complex sum;
        for (long n = 0; n <= *s.terminate_at; ++n) sum += ts.next();
        out.value = s.prefactor * sum;
        out.terms_used = *s.terminate_at + 1;
        out.tail_bound = Real(0);
        return out;
    }
    Rational ax = abs(s.x);
    if (ax > 1) fail(ErrorKind::Divergent, "argument outside the unit disk");
    SumT<Complex> r = ax < 1 ? direct_sum(ts, opt) : accelerated_sum(ts, opt);
    out.value = s.prefactor * r.value;
    out.terms_used = r.terms;
    out.tail_bound = abs(s.prefactor) * r.tail;
    return out;
}

CHyperSpec weight_to_root_shift(const HyperSpec& s, int precision) {
    WorkingPrecision wp(precision);
    CHyperSpec out;
    for (const auto& a : s.upper) out.upper.emplace_back(a);
    for (const auto& b : s.lower) out.lower.emplace_back(b);
    out.x = s.x;
    out.terminate_at = termination_index(s);
    Rational p0 = s.weight(Rational(0));
    if (p0 == 0) fail(ErrorKind::ZeroConstantTerm, "weight vanishes at 0");
    out.prefactor = Complex(to_real(s.prefactor * p0));
    if (s.weight.degree() < 1) return out;
    auto roots = poly_roots(s.weight, precision);
    Real near = pow(Real(10), -precision / 2);
    for (const auto& r : roots) {
        if (r.im == 0 && r.re > -near) {
            Real j = boost::multiprecision::round(r.re);
            if (boost::multiprecision::abs(r.re - j) < near) {
                long jj = j.convert_to<long>();
                if (s.weight(Rational(jj)) == 0)
                    fail(ErrorKind::RootAtNonnegativeInteger, "weight root at " + std::to_string(jj));
            }
        }
        out.upper.push_back(Complex(Real(1)) - r);
        out.lower.push_back(-r);
    }
    return out;
}

}  // namespace hyperforge
