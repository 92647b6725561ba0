#include "hyperforge/charpoly.hpp"

#include "hyperforge/hyperseries.hpp"

namespace hyperforge {

long total(const std::vector<long>& m) {
    long s = 0;
    for (long x : m) s += x;
    return s;
}

bool YPoly::exact() const { return reduce(scale).is_exact(); }

PolyQ YPoly::poly() const { return tilde * reduce(scale).exact_value(); }

Rational unit_shift_sum(long k, const std::vector<Rational>& f, const std::vector<long>& m) {
    HyperSpec s;
    s.upper.push_back(Rational(-k));
    for (size_t i = 0; i < f.size(); ++i) s.upper.push_back(f[i] + m[i]);
    s.lower = f;
    return eval_terminating(s).value.q;
}

YPoly build_Yp(long u, long v, const Rational& d, const Rational& e, const Rational& lambda,
               const std::vector<Rational>& h, const std::vector<long>& p) {
    if (is_nonpos_int(e - d)) fail(ErrorKind::PoleError, "Gamma(e-d) at a pole");
    long P = total(p);
    Rational pre(1);
    for (size_t i = 0; i < h.size(); ++i) pre *= poch(h[i] - d, p[i]);
    PolyQ res;
    for (long j = 0; j <= P; ++j) {
        // F(-j, 1-h+d; 1-h+d-p) in cancelled form: (x)_i/(x-p)_i = (x-p+i)_p/(x-p)_p
        Rational inner(0);
        for (long i = 0; i <= j; ++i) {
            Rational r = poch(Rational(-j), i) / factorial(i);
            for (size_t l = 0; l < h.size(); ++l) {
                Rational x = 1 - h[l] + d;
                Rational den = poch(x - p[l], p[l]);
                if (den == 0) fail(ErrorKind::DegenerateParameters, "h-d in 1-p..0");
                r *= poch(x - p[l] + i, p[l]) / den;
            }
            inner += r;
        }
        Rational c = poch(d - e + 1, j) / factorial(j) * inner;
        if (c == 0) continue;
        res += PolyQ::rising(d, Rational(u), j) * PolyQ::rising(d - e - lambda + j + 1, Rational(v), P - j) * c;
    }
    return {res * pre, GammaRatio({}, {e - d})};
}

PolyQ build_Qm(const Rational& b, const Rational& c, const std::vector<Rational>& f, const std::vector<long>& m) {
    long M = total(m);
    Rational norm = poch(c - b - M, M);
    if (norm == 0) fail(ErrorKind::DegenerateParameters, "(c-b-m)_m = 0");
    PolyQ res;
    for (long k = 0; k <= M; ++k) {
        Rational c0 = (k % 2 ? Rational(-1) : Rational(1)) / factorial(k) * unit_shift_sum(k, f, m) * poch(b, k);
        res += PolyQ::rising(0, 1, k) * PolyQ::rising(c - b - M, -1, M - k) * c0;
    }
    return res * (1 / norm);
}

PolyQ build_hatQm(const Rational& a, const Rational& b, const Rational& c, const std::vector<Rational>& f,
                  const std::vector<long>& m) {
    long M = total(m);
    if (poch(c - a - M, M) == 0 || poch(c - b - M, M) == 0 || poch(1 + a + b - c, M) == 0)
        fail(ErrorKind::DegenerateParameters, "hat Q_m denominators vanish");
    PolyQ res;
    for (long k = 0; k <= M; ++k) {
        Rational c0 = unit_shift_sum(k, f, m) * poch(a, k) * poch(b, k) /
                      (poch(c - a - M, k) * poch(c - b - M, k) * factorial(k));
        if (c0 == 0) continue;
        // 3F2(-M+k, t+k, c-a-b-M; c-a-M+k, c-b-M+k) as a polynomial in t
        PolyQ inner;
        for (long j = 0; j <= M - k; ++j) {
            Rational cj = poch(Rational(-M + k), j) * poch(c - a - b - M, j) /
                          (poch(c - a - M + k, j) * poch(c - b - M + k, j) * factorial(j));
            inner += PolyQ::rising(k, 1, j) * cj;
        }
        res += PolyQ::rising(0, 1, k) * inner * c0;
    }
    return res;
}

PolyQ build_R2m(const Rational& beta, const std::vector<Rational>& f, const std::vector<long>& m) {
    long M = total(m);
    Rational fm(1);
    for (size_t i = 0; i < f.size(); ++i) fm *= poch(f[i], m[i]);
    PolyQ res;
    for (long k = 0; k <= M; ++k) {
        Rational c0 = (k % 2 ? Rational(-1) : Rational(1)) * fm / (ipow(Rational(4), k) * factorial(k)) *
                      unit_shift_sum(k, f, m);
        res += PolyQ::rising(0, 1, 2 * k) * PolyQ::rising(beta - M, -1, M - k) * c0;
    }
    return res;
}

PolyQ build_hatR2m(const Rational& alpha, const Rational& beta, const std::vector<Rational>& f,
                   const std::vector<long>& m) {
    if (is_nonpos_int(beta)) fail(ErrorKind::LowerPole, "beta is a non-positive integer");
    long M = total(m);
    Rational fm(1);
    for (size_t i = 0; i < f.size(); ++i) fm *= poch(f[i], m[i]);
    PolyQ res;
    for (long k = 0; k <= M; ++k) {
        Rational c0 = fm / (poch(beta, k) * factorial(k)) * unit_shift_sum(k, f, m);
        res += PolyQ::rising(0, 1, k) * PolyQ::rising(alpha, -1, k) * c0;
    }
    return res;
}

namespace {

PolyQ maier(const Rational& alpha, const std::vector<Rational>& up, const std::vector<Rational>& lo, long k) {
    PolyQ res;
    for (long j = 0; j <= k; ++j) {
        Rational den = poch(lo, j) * factorial(j);
        if (den == 0) fail(ErrorKind::LowerPole, "lower parameter pole");
        Rational c0 = poch(Rational(-k), j) * poch(up, j) / den;
        res += PolyQ::rising(0, -1, j) * PolyQ::rising(alpha, 1, j) * c0;
    }
    return res;
}

}  // namespace

PolyQ build_P2k(const Rational& alpha, const Rational& beta, const Rational& delta, long k) {
    return maier(alpha, {}, {beta, delta}, k);
}

PolyQ build_hatP2k(const Rational& alpha, const Rational& beta, const Rational& delta, const Rational& gamma,
                   long k) {
    return maier(alpha, {beta + delta + gamma + k - alpha - 1}, {beta, delta, gamma}, k);
}

PolyQ weight_neg(const PolyQ& q) {
    Rational q0 = q(Rational(0));
    if (q0 == 0) fail(ErrorKind::ZeroConstantTerm, "characteristic polynomial vanishes at 0");
    return q.compose_linear(-1, 0) * (1 / q0);
}

PolyQ weight_pos(const PolyQ& q) {
    Rational q0 = q(Rational(0));
    if (q0 == 0) fail(ErrorKind::ZeroConstantTerm, "characteristic polynomial vanishes at 0");
    return q * (1 / q0);
}

PolyQ weight_sigma(const Rational& c, const Rational& sigma2) {
    Rational d = c * c - sigma2;
    if (d == 0) fail(ErrorKind::DegenerateParameters, "c^2 = sigma^2");
    return PolyQ{c * c - sigma2, 2 * c, 1} * (1 / d);
}

PolyQ weight_pair(const Rational& x) {
    if (x == 0) fail(ErrorKind::DegenerateParameters, "pair (1;0)");
    return PolyQ{x, 1} * (1 / x);
}

}  // namespace hyperforge
