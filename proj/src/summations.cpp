#include "hyperforge/summations.hpp"

#include "hyperforge/charpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hyperforge {

namespace {

Rational delta2(const Rational& a, long k) { return poch(a / 2, k) * poch((a + 1) / 2, k); }

// ∏ (h_i + s_i)_k with s_i = shift * p_i
Rational prod_poch(const std::vector<Rational>& h, const std::vector<long>& p, long shift, long k) {
    Rational r(1);
    for (size_t i = 0; i < h.size(); ++i) r *= poch(h[i] + shift * p[i], k);
    return r;
}

Rational prod_delta2(const std::vector<Rational>& h, const std::vector<long>& p, long shift, long k) {
    Rational r(1);
    for (size_t i = 0; i < h.size(); ++i) r *= delta2(h[i] + shift * p[i], k);
    return r;
}

// ∏ (h_i)_{p_i}
Rational hp(const std::vector<Rational>& h, const std::vector<long>& p, long k = 0, long u = 0) {
    Rational r(1);
    for (size_t i = 0; i < h.size(); ++i) r *= poch(h[i] + u * k, p[i]);
    return r;
}

GammaRatio rational(const Rational& q) { return GammaRatio({}, {}, q); }

Constraint nonzero(std::string name, std::function<Rational(const SumArgs&)> f) {
    return {std::move(name), ErrorKind::PoleInQuotient, [f](const SumArgs& a) { return f(a) != 0; }};
}

Constraint k_range() {
    return {"0 <= k <= n", ErrorKind::ConditionsViolated, [](const SumArgs& a) { return a.k >= 0 && a.k <= a.n; }};
}

Constraint balance(Rational target) {
    std::string name = "b1+b2+n-a2+lambda = " + to_string(target);
    return {name, ErrorKind::BalanceViolated,
            [target](const SumArgs& a) { return a.b1 + a.b2 + a.n - a.a2 + a.lambda == target; }};
}

bool terminates(const HyperSpec& s) {
    return std::any_of(s.upper.begin(), s.upper.end(), [](const Rational& q) { return is_nonpos_int(q); });
}

// ---- Saalschütz family ----

HyperSpec saal_lhs(const SumArgs& a) {
    return HyperSpec({-a.lambda, Rational(-a.n + a.k), a.a2 + a.k}, {a.b1 + a.k, a.b2 + a.k});
}

GammaRatio saal_rhs(const SumArgs& a) {
    return rational(poch(a.b1 + a.lambda, a.n) * poch(a.b2 + a.lambda, a.n) * poch(a.b1, a.k) * poch(a.b2, a.k) /
                    (poch(a.b1, a.n) * poch(a.b2, a.n) * poch(a.b1 + a.lambda, a.k) * poch(a.b2 + a.lambda, a.k)));
}

Rational rr_X(const SumArgs& a) {
    return a.n * a.a2 * (a.b3 + a.lambda) + a.b3 * (a.b1 + a.lambda - 1) * (a.b2 + a.lambda - 1);
}

Rational rr_mu_den(const SumArgs& a) {
    return a.lambda * (a.b3 - a.b1 + 1) - (a.b1 + a.n - 1) * (a.b1 - a.a2 - 1);
}

HyperSpec rr_lhs(const SumArgs& a) {
    return HyperSpec({-a.lambda, Rational(-a.n + a.k), a.a2 + a.k, a.b3 + 1 + a.k}, {a.b1 + a.k, a.b2 + a.k, a.b3 + a.k});
}

GammaRatio rr_rhs(const SumArgs& a) {
    Rational X = rr_X(a);
    Rational omega = X * poch(a.b1 + a.lambda, a.n - 1) * poch(a.b2 + a.lambda, a.n) /
                     (a.b3 * (1 + a.a2 - a.b1) * poch(a.b1, a.n) * poch(a.b2, a.n));
    Rational mu = X / rr_mu_den(a);
    return rational(omega * poch(a.b1, a.k) * poch(a.b2, a.k) * poch(a.b3, a.k) * poch(mu + 1, a.k) /
                    (poch(a.b1 + a.lambda, a.k) * poch(a.b2 + a.lambda, a.k) * poch(a.b3 + 1, a.k) * poch(mu, a.k)));
}

Rational kr_X(const SumArgs& a) { return a.n * a.a2 + (a.b1 + a.lambda - 1) * (a.b2 + a.lambda - 1); }
Rational kr_nu_den(const SumArgs& a) { return a.b1 + a.b2 + a.n - a.a2 + 2 * (a.lambda - 1); }

GammaRatio kr_rhs(const SumArgs& a) {
    Rational X = kr_X(a);
    Rational B = poch(a.b1 + a.lambda, a.n - 1) * poch(a.b2 + a.lambda, a.n - 1) / (poch(a.b1, a.n) * poch(a.b2, a.n)) * X;
    Rational q = B * poch(a.b1, a.k) * poch(a.b2, a.k) / (poch(a.b1 + a.lambda, a.k) * poch(a.b2 + a.lambda, a.k));
    // λ = 0 makes ν infinite; (ν+1)_k/(ν)_k tends to 1
    if (kr_nu_den(a) != 0) {
        Rational nu = X / kr_nu_den(a);
        q *= poch(nu + 1, a.k) / poch(nu, a.k);
    }
    return rational(q);
}

// ---- Bailey ----

HyperSpec bailey1_lhs(const SumArgs& a) {
    return HyperSpec({-a.lambda, a.alpha + a.k, Rational(-a.n + a.k)},
                     {1 + a.lambda + a.alpha + a.k, 1 - 2 * a.lambda - a.n + a.k});
}

GammaRatio bailey1_rhs(const SumArgs& a) {
    const Rational& al = a.alpha;
    const Rational& l = a.lambda;
    long n = a.n, k = a.k;
    Rational z = -al - 2 * l - 2 * n;
    Rational num = poch(al + 2 * l, n) * poch(l, n) * poch(1 - 2 * l - n, k) * poch(1 + l + al, k) * poch(z, k + 1);
    Rational den = poch(2 * l, n) * poch(1 + l + al, n) * poch(1 - l - n, k) * poch(z, k) * poch(al + 2 * l, k + 1);
    return rational(-num / den);
}

HyperSpec np2_lhs(const SumArgs& a) {
    return HyperSpec({-a.lambda + 2 * a.k, 1 - a.lambda / 2 + a.k, Rational(-a.n + a.k)}, {-a.lambda / 2 + a.k, a.b + a.k});
}

GammaRatio np2_rhs(const SumArgs& a) {
    const Rational& b = a.b;
    const Rational& l = a.lambda;
    long n = a.n, k = a.k;
    Rational num = (b + l - n - 1) * poch(b + l, n - 1) * poch(b, k) * poch(1 - b - l, k);
    Rational den = poch(b, n) * ipow(Rational(-4), k) * poch((2 - b - l - n) / 2, k) * poch((3 - b - l - n) / 2, k);
    return rational(num / den);
}

HyperSpec dougall_lhs(const SumArgs& a) {
    const Rational& l = a.lambda;
    long k = a.k;
    return HyperSpec({-l + 2 * k, 1 - l / 2 + k, 1 - l - a.b1 + k, 1 - l - a.b2 + k, Rational(-a.n + k)},
                     {-l / 2 + k, a.b1 + k, a.b2 + k, 1 - l + a.n + k});
}

Rational dougall_den(const SumArgs& a) {
    const Rational& l = a.lambda;
    long n = a.n, k = a.k;
    return poch(a.b1, n) * poch(a.b2, n) * poch(2 - a.b1 - a.b2 - l - n, k) * poch((1 - l) / 2, k) * poch((2 - l) / 2, k);
}

GammaRatio dougall_rhs(const SumArgs& a) {
    const Rational& l = a.lambda;
    long n = a.n, k = a.k;
    Rational num = poch(1 - l, n) * poch(a.b1 + a.b2 + l - 1, n) * poch(a.b1, k) * poch(a.b2, k) * poch(1 - l + n, k);
    return rational(num / (dougall_den(a) * ipow(Rational(-4), k)));
}

// ---- Gauss, Karlsson–Minton, Whipple ----

HyperSpec gauss_lhs(const SumArgs& a) { return HyperSpec({a.a, a.b}, {a.c}); }

GammaRatio gauss_rhs(const SumArgs& a) { return GammaRatio({a.c, a.c - a.a - a.b}, {a.c - a.a, a.c - a.b}); }

HyperSpec km_lhs(const SumArgs& a) {
    HyperSpec s({a.a, a.d}, {a.d + 1});
    for (size_t i = 0; i < a.h.size(); ++i) s.upper.push_back(a.h[i] + a.p[i]);
    for (const auto& x : a.h) s.lower.push_back(x);
    return s;
}

GammaRatio km_rhs(const SumArgs& a) {
    Rational hd(1);
    for (size_t i = 0; i < a.h.size(); ++i) hd *= poch(a.h[i] - a.d, a.p[i]);
    return GammaRatio({a.d + 1, 1 - a.a}, {a.d + 1 - a.a}, hd / hp(a.h, a.p));
}

HyperSpec whipple_lhs(const SumArgs& a) {
    const Rational& l = a.lambda;
    long k = a.k;
    return HyperSpec({-l - k, 1 + l + k, a.a2 + k}, {a.b1 + k, 1 + 2 * a.a2 - a.b1 + k});
}

GammaRatio whipple_rhs(const SumArgs& a) {
    const Rational& l = a.lambda;
    const Rational& b1 = a.b1;
    const Rational& a2 = a.a2;
    long k = a.k;
    Rational c = 1 + 2 * a2 - b1;
    GammaRatio g({b1, c}, {(b1 - l) / 2, (1 - l + 2 * a2 - b1) / 2, (1 + l + b1) / 2, (2 + l + 2 * a2 - b1) / 2});
    g.sqrt_pi = 2;
    g.two = 1 - 2 * a2;
    g.factor = poch(b1, k) * poch(c, k) /
               (ipow(Rational(4), k) * poch((1 + l + b1) / 2, k) * poch((2 + l + 2 * a2 - b1) / 2, k));
    return g;
}

// ---- inverse-pair-difference (Lemma) family ----

HyperSpec ipd_lhs(const SumArgs& a) {
    long uk = a.u * a.k;
    HyperSpec s({-a.lambda + a.v * a.k, a.d + uk}, {a.e + uk});
    for (size_t i = 0; i < a.h.size(); ++i) s.upper.push_back(a.h[i] + a.p[i] + uk);
    for (const auto& x : a.h) s.lower.push_back(x + uk);
    return s;
}

Rational ytilde(const SumArgs& a, GammaRatio& scale) {
    YPoly y = build_Yp(a.u, a.v, a.d, a.e, a.lambda, a.h, a.p);
    scale = y.scale;
    return y.tilde(Rational(a.k));
}

GammaRatio ipd_rhs(const SumArgs& a) {
    long P = total(a.p);
    long u = a.u, v = a.v, k = a.k;
    const Rational& l = a.lambda;
    GammaRatio scale;
    Rational yt = ytilde(a, scale);
    // Γ(t)Γ(1-t)/Γ(1-t+m) = (-1)^m Γ(t-m), t = e+λ-d, m = vk+P: one Gamma
    // instead of a double pole whose arguments move in opposite directions
    GammaRatio g({a.e + l - a.d - v * k - P, a.e + u * k}, {(u - v) * k + a.e + l});
    g.factor = ipow(Rational(-1), P) * yt / hp(a.h, a.p, k, u);
    return g * scale;
}

// Γ(e+λ-d)Γ(e)/(Γ(e+λ)Γ(e-d)) times the rational part of each printed form.
GammaRatio ipd_special_rhs(const std::string& form, const SumArgs& a) {
    long P = total(a.p);
    long k = a.k;
    const Rational& d = a.d;
    const Rational& e = a.e;
    const Rational& l = a.lambda;
    const auto& h = a.h;
    const auto& p = a.p;
    GammaRatio scale;
    Rational yt = ytilde(a, scale);
    Rational q;
    if (form == "ipd10") {
        q = poch(e, k) * prod_poch(h, p, 0, k) * yt /
            (poch(1 + d - e - l, P) * hp(h, p) * prod_poch(h, p, 1, k) * poch(e + l, k));
    } else if (form == "ipd11") {
        q = ipow(Rational(-1), k) * poch(e, k) * prod_poch(h, p, 0, k) * yt /
            (hp(h, p) * prod_poch(h, p, 1, k) * poch(1 + d - e - l, P) * poch(1 + d - e - l + P, k));
    } else if (form == "ipd1-1") {
        q = poch(e, k) * poch(e + l - d - P, k) * prod_poch(h, p, 0, k) * yt /
            (poch(1 - e - l + d, P) * hp(h, p) * prod_poch(h, p, 1, k) * ipow(Rational(4), k) * delta2(e + l, k));
    } else if (form == "ipd12") {
        q = prod_poch(h, p, 0, k) * poch(e, k) * poch(1 - e - l, k) * yt /
            (poch(1 + d - e - l, P) * hp(h, p) * prod_poch(h, p, 1, k) * ipow(Rational(-4), k) *
             delta2(1 - e - l + P + d, k));
    } else if (form == "ipd22") {
        q = delta2(e, k) * prod_delta2(h, p, 0, k) * yt /
            (poch(1 - e - l + d, P) * hp(h, p) * prod_delta2(h, p, 1, k) * delta2(1 - e - l + P + d, k));
    } else if (form == "ipd21") {
        q = ipow(Rational(-4), k) * delta2(e, k) * prod_delta2(h, p, 0, k) * yt /
            (hp(h, p) * prod_delta2(h, p, 1, k) * poch(e + l, k) * poch(1 + d - e - l, P + k));
    } else {
        fail(ErrorKind::Unsupported, "unknown IPD form " + form);
    }
    GammaRatio g({e + l - d, e}, {e + l}, q);
    return g * scale;
}

Rational ipd_special_den(const std::string& form, const SumArgs& a) {
    long P = total(a.p);
    long k = a.k;
    const Rational& d = a.d;
    const Rational& e = a.e;
    const Rational& l = a.lambda;
    Rational r = hp(a.h, a.p) * poch(1 + d - e - l, P);
    if (form == "ipd10") return r * prod_poch(a.h, a.p, 1, k) * poch(e + l, k);
    if (form == "ipd11") return r * prod_poch(a.h, a.p, 1, k) * poch(1 + d - e - l + P, k);
    if (form == "ipd1-1") return r * prod_poch(a.h, a.p, 1, k) * delta2(e + l, k);
    if (form == "ipd12") return r * prod_poch(a.h, a.p, 1, k) * delta2(1 - e - l + P + d, k);
    if (form == "ipd22") return r * prod_delta2(a.h, a.p, 1, k) * delta2(1 - e - l + P + d, k);
    return r * prod_delta2(a.h, a.p, 1, k) * poch(e + l, k) * poch(1 + d - e - l, P + k);
}

std::pair<long, long> ipd_uv(const std::string& form) {
    static const std::map<std::string, std::pair<long, long>> m = {
        {"ipd10", {1, 0}}, {"ipd11", {1, 1}}, {"ipd1-1", {1, -1}},
        {"ipd12", {1, 2}}, {"ipd22", {2, 2}}, {"ipd21", {2, 1}}};
    auto it = m.find(form);
    if (it == m.end()) fail(ErrorKind::Unsupported, "unknown IPD form " + form);
    return it->second;
}

void draw_hp(Sampler& g, SumArgs& a) {
    int l = int(g.integer(1, 2));
    for (int i = 0; i < l; ++i) {
        a.h.push_back(g.rat());
        a.p.push_back(g.integer(1, 2));
    }
}

SumArgs draw_ipd(Sampler& g, long u, long v) {
    SumArgs a;
    a.u = u;
    a.v = v;
    a.k = g.integer(0, 3);
    draw_hp(g, a);
    a.d = g.rat();
    a.e = g.rat();
    a.lambda = g.integer(0, 4) + v * a.k;
    return a;
}

std::vector<Constraint> ipd_constraints() {
    return {
        {"u >= 1", ErrorKind::ConditionsViolated, [](const SumArgs& a) { return a.u >= 1 && a.h.size() == a.p.size(); }},
        {"terminating or Re(e+lambda-d-p-vk) > 0", ErrorKind::Divergent,
         [](const SumArgs& a) { return terminates(ipd_lhs(a)) || a.e + a.lambda - a.d - total(a.p) - a.v * a.k > 0; }},
        nonzero("(h+uk)_p", [](const SumArgs& a) { return hp(a.h, a.p, a.k, a.u); }),
    };
}

std::vector<SummationRule> build_rules() {
    std::vector<SummationRule> r;

    r.push_back({"gauss",
                 {{"terminating or Re(c-a-b) > 0", ErrorKind::Divergent,
                   [](const SumArgs& a) { return terminates(gauss_lhs(a)) || a.c - a.a - a.b > 0; }}},
                 gauss_lhs, gauss_rhs, [](Sampler& g) {
                     SumArgs a;
                     a.a = -g.integer(0, 5);
                     a.b = g.rat();
                     a.c = g.rat();
                     return a;
                 }});

    auto saal_sample = [](Rational bal, bool with_b3) {
        return [bal, with_b3](Sampler& g) {
            SumArgs a;
            a.n = g.integer(1, 5);
            a.k = g.integer(0, a.n);
            a.a2 = g.rat();
            a.b1 = g.rat();
            a.lambda = g.rat();
            a.b2 = bal - a.b1 - a.n + a.a2 - a.lambda;
            if (with_b3) a.b3 = g.rat();
            return a;
        };
    };

    r.push_back({"saalschutz",
                 {balance(1), k_range(), nonzero("(b1)_n (b2)_n (b1+lambda)_k (b2+lambda)_k", [](const SumArgs& a) {
                      return poch(a.b1, a.n) * poch(a.b2, a.n) * poch(a.b1 + a.lambda, a.k) * poch(a.b2 + a.lambda, a.k);
                  })},
                 saal_lhs, saal_rhs, saal_sample(1, false)});

    r.push_back({"rakha_rathie",
                 {balance(2), k_range(),
                  nonzero("b3 (1+a2-b1) (b1)_n (b2)_n",
                          [](const SumArgs& a) { return a.b3 * (1 + a.a2 - a.b1) * poch(a.b1, a.n) * poch(a.b2, a.n); }),
                  {"mu denominator nonzero", ErrorKind::DegenerateParameters,
                   [](const SumArgs& a) { return rr_mu_den(a) != 0; }},
                  {"mu nonzero", ErrorKind::DegenerateParameters, [](const SumArgs& a) { return rr_X(a) != 0; }},
                  nonzero("(b1+lambda)_k (b2+lambda)_k (b3+1)_k (mu)_k", [](const SumArgs& a) {
                      return poch(a.b1 + a.lambda, a.k) * poch(a.b2 + a.lambda, a.k) * poch(a.b3 + 1, a.k) *
                             poch(rr_X(a) / rr_mu_den(a), a.k);
                  })},
                 rr_lhs, rr_rhs, saal_sample(2, true)});

    r.push_back({"kim_rathie",
                 {balance(2), k_range(),
                  nonzero("(b1)_n (b2)_n (b1+lambda)_k (b2+lambda)_k", [](const SumArgs& a) {
                      return poch(a.b1, a.n) * poch(a.b2, a.n) * poch(a.b1 + a.lambda, a.k) * poch(a.b2 + a.lambda, a.k);
                  }),
                  {"nu nonzero", ErrorKind::DegenerateParameters,
                   [](const SumArgs& a) { return kr_nu_den(a) == 0 || kr_X(a) != 0; }},
                  nonzero("(nu)_k", [](const SumArgs& a) {
                      return kr_nu_den(a) == 0 ? Rational(1) : poch(kr_X(a) / kr_nu_den(a), a.k);
                  })},
                 saal_lhs, kr_rhs, saal_sample(2, false)});

    r.push_back({"bailey_2balanced",
                 {k_range(), nonzero("(2l)_n (1+l+alpha)_n (1-l-n)_k (-alpha-2l-2n)_k (alpha+2l)_{k+1}",
                                     [](const SumArgs& a) {
                                         const Rational& l = a.lambda;
                                         return poch(2 * l, a.n) * poch(1 + l + a.alpha, a.n) * poch(1 - l - a.n, a.k) *
                                                poch(-a.alpha - 2 * l - 2 * a.n, a.k) * poch(a.alpha + 2 * l, a.k + 1);
                                     })},
                 bailey1_lhs, bailey1_rhs, [](Sampler& g) {
                     SumArgs a;
                     a.n = g.integer(1, 5);
                     a.k = g.integer(0, a.n);
                     a.alpha = g.rat();
                     a.lambda = g.rat();
                     return a;
                 }});

    r.push_back({"karlsson_minton",
                 {{"h and p of equal length", ErrorKind::ConditionsViolated,
                   [](const SumArgs& a) { return a.h.size() == a.p.size(); }},
                  {"a + p < 1", ErrorKind::ConditionsViolated, [](const SumArgs& a) { return a.a + total(a.p) < 1; }},
                  nonzero("(h)_p", [](const SumArgs& a) { return hp(a.h, a.p); })},
                 km_lhs, km_rhs, [](Sampler& g) {
                     SumArgs a;
                     draw_hp(g, a);
                     a.a = -(total(a.p) + g.integer(0, 3));
                     a.d = g.rat();
                     return a;
                 }});

    r.push_back({"ipd", ipd_constraints(), ipd_lhs, ipd_rhs, [](Sampler& g) {
                     static const long uv[6][2] = {{1, 0}, {1, 1}, {1, -1}, {1, 2}, {2, 2}, {2, 1}};
                     long i = g.integer(0, 5);
                     return draw_ipd(g, uv[i][0], uv[i][1]);
                 }});

    for (std::string form : {"ipd10", "ipd11", "ipd1-1", "ipd12", "ipd22", "ipd21"}) {
        auto [u, v] = ipd_uv(form);
        auto cs = ipd_constraints();
        cs.insert(cs.begin(), {"(u,v) = (" + std::to_string(u) + "," + std::to_string(v) + ")",
                               ErrorKind::SummationPatternMismatch,
                               [u = u, v = v](const SumArgs& a) { return a.u == u && a.v == v; }});
        cs.push_back(nonzero("denominator of the simplified form",
                             [form](const SumArgs& a) { return ipd_special_den(form, a); }));
        r.push_back({form, cs, ipd_lhs, [form](const SumArgs& a) { return ipd_special_rhs(form, a); },
                     [u = u, v = v](Sampler& g) { return draw_ipd(g, u, v); }});
    }

    r.push_back({"whipple",
                 {{"terminating or Re(a2+k) > 0", ErrorKind::Divergent,
                   [](const SumArgs& a) { return terminates(whipple_lhs(a)) || a.a2 + a.k > 0; }},
                  {"k >= 0", ErrorKind::ConditionsViolated, [](const SumArgs& a) { return a.k >= 0; }},
                  // Γ(b1)/Γ((b1-l)/2) at a double pole: the arguments move at different rates
                  {"b1, 1+2a2-b1 not non-positive integers", ErrorKind::PoleInQuotient,
                   [](const SumArgs& a) { return !is_nonpos_int(a.b1) && !is_nonpos_int(1 + 2 * a.a2 - a.b1); }}},
                 whipple_lhs, whipple_rhs, [](Sampler& g) {
                     SumArgs a;
                     a.lambda = g.integer(0, 4);
                     a.k = g.integer(0, 3);
                     a.a2 = g.rat();
                     a.b1 = g.rat();
                     return a;
                 }});

    r.push_back({"bailey_np2",
                 {k_range(), {"well-poised pair not degenerate", ErrorKind::DegenerateParameters,
                   [](const SumArgs& a) { return !is_nonpos_int(-a.lambda / 2 + a.k); }},
                  nonzero("(b)_n ((2-b-l-n)/2)_k ((3-b-l-n)/2)_k",
                                     [](const SumArgs& a) {
                                         Rational s = 2 - a.b - a.lambda - a.n;
                                         return poch(a.b, a.n) * poch(s / 2, a.k) * poch((s + 1) / 2, a.k);
                                     })},
                 np2_lhs, np2_rhs, [](Sampler& g) {
                     SumArgs a;
                     a.n = g.integer(1, 5);
                     a.k = g.integer(0, a.n);
                     a.lambda = g.generic();
                     a.b = g.rat();
                     return a;
                 }});

    r.push_back({"dougall",
                 {k_range(), {"well-poised pair not degenerate", ErrorKind::DegenerateParameters,
                   [](const SumArgs& a) { return !is_nonpos_int(-a.lambda / 2 + a.k); }},
                  nonzero("(b1)_n (b2)_n (2-b1-b2-l-n)_k ((1-l)/2)_k ((2-l)/2)_k", dougall_den)},
                 dougall_lhs, dougall_rhs, [](Sampler& g) {
                     SumArgs a;
                     a.n = g.integer(1, 5);
                     a.k = g.integer(0, a.n);
                     a.lambda = g.generic();
                     a.b1 = g.rat();
                     a.b2 = g.rat();
                     return a;
                 }});
    return r;
}

}  // namespace

std::string SumArgs::str() const {
    std::ostringstream o;
    o << "n=" << n << " k=" << k << " u=" << u << " v=" << v;
    auto put = [&](const char* name, const Rational& q) {
        if (q != 0) o << " " << name << "=" << to_string(q);
    };
    put("a", a), put("b", b), put("c", c), put("d", d), put("e", e), put("lambda", lambda);
    put("a2", a2), put("b1", b1), put("b2", b2), put("b3", b3), put("alpha", alpha);
    if (!h.empty()) {
        o << " h=(";
        for (size_t i = 0; i < h.size(); ++i) o << (i ? "," : "") << to_string(h[i]);
        o << ") p=(";
        for (size_t i = 0; i < p.size(); ++i) o << (i ? "," : "") << p[i];
        o << ")";
    }
    return o.str();
}

void SummationRule::validate(const SumArgs& a) const {
    for (const auto& c : constraints)
        if (!c.holds(a)) fail(c.kind, id + ": " + c.name);
    if (auto b = lower_pole(lhs(a))) fail(ErrorKind::LowerPole, id + ": lower parameter " + to_string(*b));
}

Scalar SummationRule::apply(const SumArgs& a) const {
    validate(a);
    return evaluate(closed_form(a));
}

bool SummationRule::matches(const HyperSpec& s, const SumArgs& a) const { return same_parameters(s, lhs(a)); }

const std::vector<SummationRule>& summation_rules() {
    static const std::vector<SummationRule> rules = build_rules();
    return rules;
}

const SummationRule& summation_rule(const std::string& id) {
    for (const auto& r : summation_rules())
        if (r.id == id) return r;
    fail(ErrorKind::Unsupported, "unknown summation rule " + id);
}

Scalar gauss_sum(const Rational& a, const Rational& b, const Rational& c) {
    SumArgs s;
    s.a = a, s.b = b, s.c = c;
    return summation_rule("gauss").apply(s);
}

Scalar saalschutz_sum(long n, const Rational& a2, const Rational& b1, const Rational& b2, const Rational& lambda,
                      long k) {
    SumArgs s;
    s.n = n, s.k = k, s.a2 = a2, s.b1 = b1, s.b2 = b2, s.lambda = lambda;
    return summation_rule("saalschutz").apply(s);
}

Scalar rakha_rathie_sum(long n, long k, const Rational& a2, const Rational& b1, const Rational& b2,
                        const Rational& b3, const Rational& lambda) {
    SumArgs s;
    s.n = n, s.k = k, s.a2 = a2, s.b1 = b1, s.b2 = b2, s.b3 = b3, s.lambda = lambda;
    return summation_rule("rakha_rathie").apply(s);
}

Scalar kim_rathie_sum(long n, long k, const Rational& a2, const Rational& b1, const Rational& b2,
                      const Rational& lambda) {
    SumArgs s;
    s.n = n, s.k = k, s.a2 = a2, s.b1 = b1, s.b2 = b2, s.lambda = lambda;
    return summation_rule("kim_rathie").apply(s);
}

Scalar bailey_2balanced_sum(long n, long k, const Rational& alpha, const Rational& lambda) {
    SumArgs s;
    s.n = n, s.k = k, s.alpha = alpha, s.lambda = lambda;
    return summation_rule("bailey_2balanced").apply(s);
}

Scalar karlsson_minton_sum(const Rational& a, const Rational& d, const std::vector<Rational>& h,
                           const std::vector<long>& p) {
    SumArgs s;
    s.a = a, s.d = d, s.h = h, s.p = p;
    return summation_rule("karlsson_minton").apply(s);
}

Scalar ipd_sum(long u, long v, long k, const Rational& lambda, const Rational& d, const Rational& e,
               const std::vector<Rational>& h, const std::vector<long>& p) {
    SumArgs s;
    s.u = u, s.v = v, s.k = k, s.lambda = lambda, s.d = d, s.e = e, s.h = h, s.p = p;
    return summation_rule("ipd").apply(s);
}

Scalar ipd_special(const std::string& form, long k, const Rational& lambda, const Rational& d, const Rational& e,
                   const std::vector<Rational>& h, const std::vector<long>& p) {
    auto [u, v] = ipd_uv(form);
    SumArgs s;
    s.u = u, s.v = v, s.k = k, s.lambda = lambda, s.d = d, s.e = e, s.h = h, s.p = p;
    return summation_rule(form).apply(s);
}

Scalar whipple_3f2_sum(long k, const Rational& lambda, const Rational& a2, const Rational& b1) {
    SumArgs s;
    s.k = k, s.lambda = lambda, s.a2 = a2, s.b1 = b1;
    return summation_rule("whipple").apply(s);
}

Scalar bailey_np2_sum(long n, long k, const Rational& lambda, const Rational& b) {
    SumArgs s;
    s.n = n, s.k = k, s.lambda = lambda, s.b = b;
    return summation_rule("bailey_np2").apply(s);
}

Scalar dougall_5f4_sum(long n, long k, const Rational& lambda, const Rational& b1, const Rational& b2) {
    SumArgs s;
    s.n = n, s.k = k, s.lambda = lambda, s.b1 = b1, s.b2 = b2;
    return summation_rule("dougall").apply(s);
}

}  // namespace hyperforge
