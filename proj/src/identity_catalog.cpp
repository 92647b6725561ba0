#include "hyperforge/charpoly.hpp"
#include "hyperforge/identities.hpp"

namespace hyperforge {

namespace {

using P = IdentityParams;
using Vec = std::vector<Rational>;
using Draw = std::function<IdentityParams(Sampler&)>;
using Fill = std::function<void(Sampler&, IdentityParams&)>;

const Rational half(1, 2);

Vec cat(std::initializer_list<Vec> parts) {
    Vec out;
    for (const auto& v : parts) out.insert(out.end(), v.begin(), v.end());
    return out;
}

Vec shifted(const Vec& f, const std::vector<long>& m) {
    Vec out;
    for (size_t i = 0; i < f.size(); ++i) out.push_back(f[i] + m[i]);
    return out;
}

Vec dl(const Rational& a) { return {a / 2, (a + 1) / 2}; }

Vec dls(const Vec& v) {
    Vec out;
    for (const auto& a : v) {
        out.push_back(a / 2);
        out.push_back((a + 1) / 2);
    }
    return out;
}

Rational hpr(const Vec& h, const std::vector<long>& p) {
    Rational r(1);
    for (size_t i = 0; i < h.size(); ++i) r *= poch(h[i], p[i]);
    return r;
}

HyperSpec hs(Vec up, Vec lo, PolyQ w = PolyQ(1), Rational x = 1) {
    HyperSpec s(std::move(up), std::move(lo), std::move(x));
    s.weight = std::move(w);
    return s;
}

GammaRatio G(Vec num, Vec den, Rational f = 1) { return GammaRatio(std::move(num), std::move(den), std::move(f)); }
GammaRatio Q(const Rational& f) { return GammaRatio({}, {}, f); }

PolyQ yt(long u, long v, const Rational& d, const Rational& e, const Rational& lam, const Vec& h,
         const std::vector<long>& p) {
    return build_Yp(u, v, d, e, lam, h, p).tilde;
}

std::vector<long> join(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Vec join(const Vec& a, const Vec& b) { return cat({a, b}); }

Rational N(const P& q) { return Rational(q.n); }

// ---- samplers ----

Draw draw(std::vector<std::string> names, std::vector<Fill> fills = {}) {
    return [names, fills](Sampler& g) {
        P q;
        for (const auto& n : names) q[n] = g.rat();
        for (const auto& f : fills) f(g, q);
        return q;
    };
}

Fill neg(std::string name, long lo = 1, long hi = 4) {
    return [name, lo, hi](Sampler& g, P& q) { q[name] = Rational(-g.integer(lo, hi)); };
}
Fill gen(std::string name) {
    return [name](Sampler& g, P& q) { q[name] = g.generic(); };
}
Fill nn(long lo = 1, long hi = 4) {
    return [lo, hi](Sampler& g, P& q) { q.n = g.integer(lo, hi); };
}
Fill kk(long lo = 1, long hi = 2) {
    return [lo, hi](Sampler& g, P& q) { q.k = g.integer(lo, hi); };
}
Fill shifts() {
    return [](Sampler& g, P& q) {
        q.f = {g.rat()};
        q.m = {g.integer(1, 2)};
    };
}
Fill unit_shift() {
    return [](Sampler& g, P& q) {
        q.f = {g.rat()};
        q.m = {1};
    };
}
Fill pairs() {
    return [](Sampler& g, P& q) {
        long l = g.integer(1, 2);
        for (long i = 0; i < l; ++i) {
            q.h.push_back(g.rat());
            q.p.push_back(g.integer(1, 2));
        }
    };
}
Fill unit_pair() {
    return [](Sampler& g, P& q) {
        q.h = {g.rat()};
        q.p = {1};
    };
}
Fill solve(std::string name, std::function<Rational(const P&)> fn) {
    return [name, fn](Sampler&, P& q) { q[name] = fn(q); };
}

// ---- constraints ----

IdentityConstraint balance(std::string name, std::function<Rational(const P&)> lhs, Rational rhs) {
    return {std::move(name), ErrorKind::BalanceViolated, [lhs, rhs](const P& q) { return lhs(q) == rhs; }};
}

IdentityConstraint mp2_regular() {
    return {"(1+a+b-c)_m (c-a-m)_m (c-b-m)_m != 0", ErrorKind::DegenerateParameters, [](const P& q) {
                long m = total(q.m);
                const Rational &a = q["a"], &b = q["b"], &c = q["c"];
                return poch(1 + a + b - c, m) != 0 && poch(c - a - m, m) != 0 && poch(c - b - m, m) != 0;
            }};
}

// ---- derivations ----

TransformParams tp(std::map<std::string, Rational> s, Vec f = {}, std::vector<long> m = {}, long k = 0) {
    TransformParams t;
    t.s = std::move(s);
    t.f = std::move(f);
    t.m = std::move(m);
    t.k = k;
    return t;
}

Rational lambda_of(const std::string& transform, const LemmaSetup& s) {
    return base_transform(transform).lambda_of(s.t);
}

// The inner sums are F(-λ+vk, d+uk, h+p+uk; e+uk, h+uk).
Derivation ipd_derivation(std::string transform, std::string form, std::function<TransformParams(const P&)> t) {
    Derivation d;
    d.transform = transform;
    d.rule = form;
    d.setup = [t](const P& q) {
        LemmaSetup s{t(q), {q["d"]}, {q["e"]}};
        for (size_t i = 0; i < q.h.size(); ++i) {
            s.a.push_back(q.h[i] + q.p[i]);
            s.b.push_back(q.h[i]);
        }
        return s;
    };
    d.bind = [transform, form, setup = d.setup](const P& q, long k) {
        SumArgs a;
        a.u = form == "ipd22" || form == "ipd21" ? 2 : 1;
        a.v = form == "ipd10" ? 0 : form == "ipd11" ? 1 : form == "ipd1-1" ? -1 : form == "ipd21" ? 1 : 2;
        a.k = k;
        a.lambda = lambda_of(transform, setup(q));
        a.d = q["d"];
        a.e = q["e"];
        a.h = q.h;
        a.p = q.p;
        return a;
    };
    return d;
}

Derivation lemma(std::string transform, std::string rule, std::function<LemmaSetup(const P&)> setup,
                 std::function<SumArgs(const P&, const Rational& lambda, long k)> bind, bool reversed = false) {
    Derivation d;
    d.transform = transform;
    d.rule = rule;
    d.reversed = reversed;
    d.setup = setup;
    d.bind = [transform, setup, bind](const P& q, long k) { return bind(q, lambda_of(transform, setup(q)), k); };
    return d;
}

// Dougall: inner F(-λ+2k, 1-λ/2+k, 1-λ-b1+k, 1-λ-b2+k, -n+k; ...)
std::function<SumArgs(const P&, const Rational&, long)> dougall_bind(std::function<Rational(const P&)> b1,
                                                                     std::function<Rational(const P&)> b2,
                                                                     std::string term) {
    return [b1, b2, term](const P& q, const Rational& l, long k) {
        SumArgs a;
        a.k = k;
        a.lambda = l;
        a.b1 = b1(q);
        a.b2 = b2(q);
        a.n = -to_long(q[term]);
        return a;
    };
}

std::function<SumArgs(const P&, const Rational&, long)> np2_bind(std::function<Rational(const P&)> b) {
    return [b](const P& q, const Rational& l, long k) {
        SumArgs a;
        a.k = k;
        a.lambda = l;
        a.b = b(q);
        a.n = q.n;
        return a;
    };
}

// (1+A/2, C, D, E) over (A/2, 1+A-C, 1+A-D, 1+A-E)
LemmaSetup wp_density(TransformParams t, const Rational& A, const Vec& tops) {
    LemmaSetup s{std::move(t), {1 + A / 2}, {A / 2}};
    for (const auto& x : tops) {
        s.a.push_back(x);
        s.b.push_back(1 + A - x);
    }
    return s;
}

Rational sigma_rr(const Rational& A, const Rational& B, const Rational& D) {
    return A * A + (A + half) * B * D / (A - B - D - half);
}

// Case IV helpers
GammaRatio vwp_gamma(const Rational& A, const Rational& C, const Rational& D, const Rational& E) {
    return G({1 + A - C - D - E, 1 + A - C, 1 + A - D, 1 + A - E}, {1 + A, 1 + A - C - D, 1 + A - D - E, 1 + A - C - E});
}

GammaRatio dougall_gamma(const Rational& A, const Rational& D, const Rational& E, const Rational& F) {
    return G({1 + A - D, 1 + A - E, 1 + A - F, 1 + A - D - E - F}, {1 + A, 1 + A - D - F, 1 + A - D - E, 1 + A - E - F});
}

Rational np2_pre(const Rational& C, const Rational& A, long n) {
    return (C - A - n - 1) * poch(C - A, n - 1) / poch(C, n);
}

Vec wp_lower(const Rational& A, const Vec& tops) {
    Vec out{A / 2};
    for (const auto& x : tops) out.push_back(1 + A - x);
    return out;
}

// I-14 map: (n, b, d, e, f, g, h) -> prefactor, upper, lower
struct Mapped {
    Rational pre;
    Vec up, lo;
};

Mapped curious_map(long n, const Rational& b, const Rational& d, const Rational& e, const Rational& f,
                   const Rational& g, const Rational& h) {
    Rational zs = f * (2 + b + d - n - g - e) / b;
    Rational X = n * d * (2 + h + d - n - e - g) + h * (1 + d - n - e) * (1 + d - n - g);
    Rational mu = X / ((2 + d - n - e - g) * (h - g + 1) - (g + n - 1) * (g - d - 1));
    Rational Om = poch(2 + d - n - e, n - 1) * poch(2 + d - n - g, n - 1) / (h * poch(g, n) * poch(e, n)) * X;
    return {Om, {Rational(-n), d, 2 - g - e - n + d + b, mu + 1, zs + 1}, {2 - g - n + d, 2 - e - n + d, mu, zs}};
}

std::vector<IdentityEntry> build() {
    std::vector<IdentityEntry> c;
    auto add = [&](std::string id, std::string cs, std::string anchor, SpecBuilder lhs, SideBuilder rhs,
                   Draw sample) -> IdentityEntry& {
        IdentityEntry e;
        e.id = std::move(id);
        e.case_label = std::move(cs);
        e.anchor = std::move(anchor);
        e.lhs = std::move(lhs);
        e.rhs = std::move(rhs);
        e.sample = std::move(sample);
        c.push_back(std::move(e));
        return c.back();
    };

    // ================= Case I =================
    auto mp2 = [](const P& q) { return tp({{"a", q["a"]}, {"b", q["b"]}, {"c", q["c"]}}, q.f, q.m); };
    auto mp2_lam = [](const P& q) { return q["c"] - q["a"] - q["b"] - total(q.m); };
    auto hatq = [](const P& q) { return weight_neg(build_hatQm(q["a"], q["b"], q["c"], q.f, q.m)); };

    {
        auto& e = add(
            "I-1", "I", "miller-paris-2-with-inverse-pairs",
            [](const P& q) {
                return hs(cat({{q["a"], q["b"], q["d"]}, shifted(q.f, q.m), shifted(q.h, q.p)}),
                          cat({{q["c"], q["e"]}, q.f, q.h}));
            },
            [=](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"];
                long M = total(q.m), Pt = total(q.p);
                Rational l = mp2_lam(q);
                PolyQ Y = yt(1, 0, d, e, l, q.h, q.p);
                GammaRatio pre = G({e + l - d, e}, {e + l, e - d}, 1 / (hpr(q.h, q.p) * poch(1 + d - e - l, Pt)));
                return IdentitySide{pre, hs({cc - a - M, cc - b - M, d}, {cc, e + l}, Y * hatq(q))};
            },
            draw({"a", "b", "c", "e"}, {neg("d"), shifts(), pairs()}));
        e.constraints = {mp2_regular()};
        e.derivation = ipd_derivation("MP2", "ipd10", mp2);
        e.numeric.push_back(NumericExtension{"d generic; needs Re(e-d-p) > 0 and Re(c+e-a-b-d-m-p) > 0",
                                     draw({"a", "b", "c", "e"}, {gen("d"), shifts(), pairs()}),
                                     {},
                                     {},
                                     false,
                                     [](const P& q) {
                                         const Rational &a = q["a"], &b = q["b"], &c = q["c"], &d = q["d"], &e = q["e"];
                                         long p = total(q.p);
                                         return e - d - p > 0 && c + e - a - b - d - total(q.m) - p > 0;
                                     }});
    }
    {
        auto& e = add(
            "I-2", "I", "miller-paris-2-with-gauss-factor",
            [](const P& q) {
                return hs(cat({{q["a"], q["b"], q["d"]}, shifted(q.f, q.m), shifted(q.h, q.p)}),
                          cat({{q["c"], q["e"]}, q.f, q.h}));
            },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"];
                long MP = total(q.m) + total(q.p);
                Rational s = cc + e - a - b - MP;
                PolyQ w = weight_neg(build_hatQm(a, b, cc, join(q.f, q.h), join(q.m, q.p)));
                return IdentitySide{G({e, s - d}, {e - d, s}), hs({cc - a - MP, cc - b - MP, d}, {cc, s}, w)};
            },
            draw({"a", "b", "c", "e"}, {neg("d"), shifts(), pairs()}));
        e.constraints = {{"(1+a+b-c)_(m+p) (c-a-m-p)_(m+p) (c-b-m-p)_(m+p) != 0", ErrorKind::DegenerateParameters,
                          [](const P& q) {
                              long m = total(q.m) + total(q.p);
                              const Rational &a = q["a"], &b = q["b"], &cc = q["c"];
                              return poch(1 + a + b - cc, m) != 0 && poch(cc - a - m, m) != 0 &&
                                     poch(cc - b - m, m) != 0;
                          }}};
        e.derivation = lemma(
            "MP2", "gauss",
            [](const P& q) {
                return LemmaSetup{tp({{"a", q["a"]}, {"b", q["b"]}, {"c", q["c"]}}, join(q.f, q.h), join(q.m, q.p)),
                                  {q["d"]},
                                  {q["e"]}};
            },
            [](const P& q, const Rational& l, long k) {
                SumArgs a;
                a.a = -l;
                a.b = q["d"] + k;
                a.c = q["e"] + k;
                return a;
            });
    }
    {
        auto& e = add(
            "I-3", "I", "miller-paris-2-with-karlsson-minton",
            [](const P& q) {
                return hs(cat({{q["a"], q["b"], q["d"]}, shifted(q.f, q.m), shifted(q.h, q.p)}),
                          cat({{q["c"], q["d"] + 1}, q.f, q.h}));
            },
            [=](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"];
                long M = total(q.m);
                Rational l = mp2_lam(q);
                Vec hd;
                for (const auto& x : q.h) hd.push_back(x - d);
                GammaRatio pre = G({l + 1, d + 1}, {d + l + 1}, hpr(hd, q.p) / hpr(q.h, q.p));
                return IdentitySide{pre, hs({cc - a - M, cc - b - M, d}, {cc, d + l + 1}, M ? hatq(q) : PolyQ(1))};
            },
            [](Sampler& g) {
                P q;
                long mm = g.integer(0, 2);
                if (mm) {
                    q.f = {g.rat()};
                    q.m = {mm};
                }
                pairs()(g, q);
                q["c"] = g.rat();
                q["d"] = g.rat();
                long n = g.integer(mm, mm + 2);
                long a = n + total(q.p) + g.integer(0, 2);
                q["a"] = Rational(-a);
                q["b"] = q["c"] - mm + n;
                return q;
            });
        e.constraints = {mp2_regular(),
                         {"c-a-b-m >= p (inner Karlsson-Minton sums converge)", ErrorKind::ConditionsViolated,
                          [=](const P& q) { return mp2_lam(q) >= total(q.p); }}};
        e.derivation = lemma(
            "MP2", "karlsson_minton",
            [](const P& q) {
                LemmaSetup s{tp({{"a", q["a"]}, {"b", q["b"]}, {"c", q["c"]}}, q.f, q.m), {q["d"]}, {q["d"] + 1}};
                for (size_t i = 0; i < q.h.size(); ++i) {
                    s.a.push_back(q.h[i] + q.p[i]);
                    s.b.push_back(q.h[i]);
                }
                return s;
            },
            [](const P& q, const Rational& l, long k) {
                SumArgs a;
                a.a = -l;
                a.d = q["d"] + k;
                for (const auto& x : q.h) a.h.push_back(x + k);
                a.p = q.p;
                return a;
            });
    }
    {
        auto& e = add(
            "I-4", "I", "miller-paris-2-unit-shift-one-pair",
            [](const P& q) {
                const Rational &h = q.h[0], &f = q.f[0];
                return hs({q["a"], q["b"], q["d"], h + 1, f + 1}, {q["c"], q["e"], h, f});
            },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"];
                const Rational &h = q.h[0], &f = q.f[0];
                Rational s = e + cc - a - b - d - 2;
                Rational xi = h + (cc - a - b - 1) * (h - d) / (e - d - 1);
                Rational ze = (cc - a - 1) * (cc - b - 1) * f / ((cc - a - b - 1) * f + a * b);
                GammaRatio pre = G({e, s}, {s + d + 1, e - d}, ((e - d - 1) * h + (cc - a - b - 1) * (h - d)) / h);
                return IdentitySide{pre, hs({cc - a - 1, cc - b - 1, d, xi + 1, ze + 1}, {cc, e + cc - a - b - 1, xi, ze})};
            },
            draw({"a", "b", "c", "e"}, {neg("d"), unit_shift(), unit_pair()}));
        e.constraints = {mp2_regular()};
        e.derivation = ipd_derivation("MP2", "ipd10", mp2);
    }
    {
        auto& e = add(
            "I-5", "I", "euler-pfaff-2-one-pair",
            [](const P& q) { return hs({q["a"], q["b"], q["d"], q.h[0] + 1}, {q["c"], q["e"], q.h[0]}); },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &h = q.h[0];
                Rational s = e + cc - a - b - d - 1;
                Rational xi = h + (cc - a - b) * (h - d) / (e - d - 1);
                Rational lin = ((e - d - 1) * h + (cc - a - b) * (h - d)) / ((e - d - 1) * h);
                return IdentitySide{G({e, s}, {s + d + 1, e - d - 1}, lin),
                                    hs({cc - a, cc - b, d, xi + 1}, {cc, e + cc - a - b, xi})};
            },
            draw({"a", "b", "c", "e"}, {neg("d"), unit_pair()}));
        e.derivation = ipd_derivation("MP2", "ipd10", mp2);
    }

    auto g_saal = [=](const P& q) { return 1 - q["e"] - q.n + q["d"] - mp2_lam(q); };
    auto saal_setup = [](const P& q) {
        return LemmaSetup{tp({{"a", q["a"]}, {"b", q["b"]}, {"c", q["c"]}}, q.f, q.m),
                          {Rational(-q.n), q["d"]},
                          {q["g"], q["e"]}};
    };
    auto saal_bind = [](const P& q, const Rational& l, long k) {
        SumArgs a;
        a.n = q.n;
        a.k = k;
        a.lambda = l;
        a.a2 = q["d"];
        a.b1 = q["g"];
        a.b2 = q["e"];
        return a;
    };
    {
        auto& e = add(
            "I-6", "I", "miller-paris-2-saalschutzian",
            [](const P& q) {
                return hs(cat({{Rational(-q.n), q["a"], q["b"], q["d"]}, shifted(q.f, q.m)}),
                          cat({{q["c"], q["g"], q["e"]}, q.f}));
            },
            [=](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &g = q["g"];
                Rational l = mp2_lam(q);
                Rational pre = poch(g + l, q.n) * poch(e + l, q.n) / (poch(g, q.n) * poch(e, q.n));
                return IdentitySide{Q(pre), hs({-N(q), a + l, b + l, d}, {cc, g + l, e + l}, hatq(q))};
            },
            draw({"a", "b", "c", "d", "e"}, {shifts(), nn(), solve("g", g_saal)}));
        e.constraints = {mp2_regular(),
                         balance("g+e+n-d+lambda = 1", [=](const P& q) {
                             return q["g"] + q["e"] + q.n - q["d"] + mp2_lam(q);
                         }, 1)};
        e.derivation = lemma("MP2", "saalschutz", saal_setup, saal_bind);
    }
    {
        auto g7 = [](const P& q) { return 2 - q["e"] - q.n + q["d"] - q["c"] + q["a"] + q["b"]; };
        auto& e = add(
            "I-7", "I", "saalschutzian-unit-shift",
            [](const P& q) {
                return hs({-N(q), q["a"], q["b"], q["d"], q.f[0] + 1}, {q["c"], q["g"], q["e"], q.f[0]});
            },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &g = q["g"],
                               &f = q.f[0];
                Rational l = cc - a - b - 1;
                Rational ze = (cc - a - 1) * (cc - b - 1) * f / ((cc - a - b - 1) * f + a * b);
                Rational pre = poch(g + l, q.n) * poch(e + l, q.n) / (poch(g, q.n) * poch(e, q.n));
                return IdentitySide{Q(pre), hs({-N(q), cc - a - 1, cc - b - 1, d, ze + 1}, {cc, g + l, e + l, ze})};
            },
            draw({"a", "b", "c", "d", "e"}, {unit_shift(), nn(), solve("g", g7)}));
        e.constraints = {mp2_regular(), balance("g+e+n-d+c-a-b = 2", [](const P& q) {
                             return q["g"] + q["e"] + q.n - q["d"] + q["c"] - q["a"] - q["b"];
                         }, 2)};
        e.derivation = lemma("MP2", "saalschutz", saal_setup, saal_bind);
    }
    add("I-8", "I", "unit-shift-limit-of-saalschutzian",
        [](const P& q) { return hs({q["a"], q["b"], q["d"], q["f"] + 1}, {q["c"], q["e"], q["f"]}); },
        [](const P& q) {
            const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &f = q["f"];
            Rational ze = (cc - a - 1) * (cc - b - 1) * f / ((cc - a - b - 1) * f + a * b);
            return IdentitySide{G({e, e + cc - a - b - 1 - d}, {e - d, e + cc - a - b - 1}),
                                hs({cc - a - 1, cc - b - 1, d, ze + 1}, {cc, e + cc - a - b - 1, ze})};
        },
        draw({"a", "b", "c", "e", "f"}, {neg("d")}))
        .no_derivation = "limit identity: n -> infinity in the unit-shift Saalschutzian form";
    add("I-9", "I", "saalschutzian-confluent-limit",
        [](const P& q) { return hs({-N(q), q["d"], q["b"], q["f"] + 1}, {q["g"], q["e"], q["f"]}); },
        [](const P& q) {
            const Rational &b = q["b"], &d = q["d"], &e = q["e"], &f = q["f"], &g = q["g"];
            long n = q.n;
            Rational zs = f * (1 + b + d - n - g - e) / b;
            Rational pre = poch(g - d, n) * poch(e - d, n) / (poch(g, n) * poch(e, n));
            return IdentitySide{Q(pre), hs({-N(q), d, 1 - n + d + b - g - e, zs + 1}, {1 - g + d - n, 1 - e + d - n, zs})};
        },
        draw({"b", "d", "e", "f", "g"}, {nn()}))
        .no_derivation = "limit identity: a, c -> infinity with c-a fixed";
    {
        auto g10 = [](const P& q) { return 2 - q["e"] - q["c"] - q.n + q["a"] + q["b"] + q["d"]; };
        auto& e = add(
            "I-10", "I", "saalschutzian-shift-absorbed",
            [](const P& q) { return hs({-N(q), q["d"], q["a"], q["b"]}, {q["g"], q["e"], q["c"]}); },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &g = q["g"];
                Rational l = cc - a - b - 1;
                Rational zs = (cc - a - 1) * (cc - b - 1) / l;
                Rational pre = poch(g + l, q.n) * poch(e + l, q.n) / (poch(g, q.n) * poch(e, q.n));
                return IdentitySide{Q(pre), hs({-N(q), d, a + l, b + l, zs + 1}, {g + l, e + l, cc, zs})};
            },
            draw({"a", "b", "c", "d", "e"}, {nn(), solve("g", g10)}));
        e.constraints = {balance("g+e+n-d+c-a-b = 2", [](const P& q) {
            return q["g"] + q["e"] + q.n - q["d"] + q["c"] - q["a"] - q["b"];
        }, 2)};
        e.no_derivation = "limit identity: f -> infinity in the unit-shift Saalschutzian form";
    }
    {
        auto& e = add(
            "I-11", "I", "truncated-balanced-series",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &D = q["D"], &E = q["E"], &Gp = q["G"];
                Rational e3 = A * B * D, e2 = A * B + A * D + B * D;
                Rational ze = e3 / (e2 - (1 - Gp) * (1 - E));
                HyperSpec s = hs({A, B, D, ze + 1}, {Gp, E, ze});
                s.truncate_at = q.n;
                return s;
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &D = q["D"], &E = q["E"], &Gp = q["G"];
                long n = q.n;
                Rational pre = poch(A + 1, n) * poch(B + 1, n) * poch(D + 1, n) /
                               (poch(Gp, n) * poch(E, n) * poch(Rational(1), n));
                HyperSpec one({}, {});
                one.truncate_at = 0;
                return IdentitySide{Q(pre), one};
            },
            draw({"A", "B", "D", "E"}, {nn(1, 5), solve("G", [](const P& q) {
                                            return q["A"] + q["B"] + q["D"] + 2 - q["E"];
                                        })}));
        e.constraints = {balance("A+B+D+2 = G+E", [](const P& q) { return q["A"] + q["B"] + q["D"] + 2 - q["G"] - q["E"]; },
                                 0)};
        e.no_derivation = "partial sum of a balanced series; not a single lemma application";
    }

    auto rr_setup = [](const P& q) {
        return LemmaSetup{tp({{"a", q["a"]}, {"b", q["b"]}, {"c", q["c"]}}, q.f, q.m),
                          {Rational(-q.n), q["d"], q["h"] + 1},
                          {q["g"], q["e"], q["h"]}};
    };
    auto rr_bind = [](const P& q, const Rational& l, long k) {
        SumArgs a;
        a.n = q.n;
        a.k = k;
        a.lambda = l;
        a.a2 = q["d"];
        a.b1 = q["g"];
        a.b2 = q["e"];
        a.b3 = q["h"];
        return a;
    };
    // Ω and μ of the Rakha-Rathie evaluation
    auto rr_om_mu = [](const P& q, const Rational& l) {
        const Rational &d = q["d"], &e = q["e"], &g = q["g"], &h = q["h"];
        long n = q.n;
        Rational X = n * d * (h + l) + h * (g + l - 1) * (e + l - 1);
        Rational Om = poch(g + l, n - 1) * poch(e + l, n - 1) / (h * poch(g, n) * poch(e, n)) * X;
        Rational mu = X / (l * (h - g + 1) - (g + n - 1) * (g - d - 1));
        return std::pair{Om, mu};
    };
    auto g_rr = [=](const P& q) { return 2 - q["e"] - q.n + q["d"] - mp2_lam(q); };
    auto rr_balance = balance("g+e+n-d+lambda = 2", [=](const P& q) {
        return q["g"] + q["e"] + q.n - q["d"] + mp2_lam(q);
    }, 2);
    {
        auto& e = add(
            "I-12", "I", "miller-paris-2-rakha-rathie",
            [](const P& q) {
                return hs(cat({{-N(q), q["a"], q["b"], q["d"], q["h"] + 1}, shifted(q.f, q.m)}),
                          cat({{q["c"], q["g"], q["e"], q["h"]}, q.f}));
            },
            [=](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &g = q["g"];
                Rational l = mp2_lam(q);
                auto [Om, mu] = rr_om_mu(q, l);
                return IdentitySide{Q(Om), hs({-N(q), d, a + l, b + l, mu + 1}, {g + l, e + l, cc, mu}, hatq(q))};
            },
            draw({"a", "b", "c", "d", "e", "h"}, {shifts(), nn(), solve("g", g_rr)}));
        e.constraints = {mp2_regular(), rr_balance};
        e.derivation = lemma("MP2", "rakha_rathie", rr_setup, rr_bind);
    }
    {
        auto& e = add(
            "I-13", "I", "rakha-rathie-unit-shift",
            [](const P& q) {
                return hs({-N(q), q["a"], q["b"], q["d"], q["h"] + 1, q.f[0] + 1}, {q["c"], q["g"], q["e"], q["h"], q.f[0]});
            },
            [=](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &g = q["g"],
                               &f = q.f[0];
                Rational l = cc - a - b - 1;
                Rational ze = (cc - a - 1) * (cc - b - 1) * f / ((cc - a - b - 1) * f + a * b);
                auto [Om, mu] = rr_om_mu(q, l);
                return IdentitySide{Q(Om), hs({-N(q), d, a + l, b + l, mu + 1, ze + 1}, {g + l, e + l, cc, mu, ze})};
            },
            draw({"a", "b", "c", "d", "e", "h"}, {unit_shift(), nn(), solve("g", g_rr)}));
        e.constraints = {mp2_regular(), rr_balance};
        e.derivation = lemma("MP2", "rakha_rathie", rr_setup, rr_bind);
    }
    {
        auto& e = add(
            "I-14", "I", "curious-self-inverse-transformation",
            [](const P& q) {
                return hs({-N(q), q["b"], q["d"], q["h"] + 1, q["f"] + 1}, {q["g"], q["e"], q["h"], q["f"]});
            },
            [](const P& q) {
                Mapped m = curious_map(q.n, q["b"], q["d"], q["e"], q["f"], q["g"], q["h"]);
                return IdentitySide{Q(m.pre), hs(m.up, m.lo)};
            },
            draw({"b", "d", "e", "f", "g", "h"}, {nn()}));
        e.no_derivation = "limit identity: a, c -> infinity in the unit-shift Rakha-Rathie form";
    }
    {
        auto g15 = [=](const P& q) { return 2 - q["e"] - q.n - mp2_lam(q) + q["d"]; };
        auto& e = add(
            "I-15", "I", "miller-paris-2-kim-rathie",
            [](const P& q) {
                return hs(cat({{-N(q), q["a"], q["b"], q["d"]}, shifted(q.f, q.m)}), cat({{q["c"], q["g"], q["e"]}, q.f}));
            },
            [=](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &g = q["g"];
                long n = q.n;
                Rational l = mp2_lam(q);
                Rational X = n * d + (g + l - 1) * (e + l - 1);
                Rational B = poch(g + l, n - 1) * poch(e + l, n - 1) / (poch(g, n) * poch(e, n)) * X;
                Rational nu = X / (g + e + n - d + 2 * (l - 1));
                return IdentitySide{Q(B), hs({-N(q), a + l, b + l, d, nu + 1}, {cc, g + l, e + l, nu}, hatq(q))};
            },
            draw({"a", "b", "c", "d", "e"}, {shifts(), nn(), solve("g", g15)}));
        e.constraints = {mp2_regular(), rr_balance};
        e.derivation = lemma("MP2", "kim_rathie", saal_setup, saal_bind);
    }
    {
        auto& e = add(
            "I-16", "I", "miller-paris-2-bailey-2-balanced",
            [=](const P& q) {
                Rational l = mp2_lam(q);
                return hs(cat({{-N(q), q["a"], q["b"], q["alpha"]}, shifted(q.f, q.m)}),
                          cat({{q["c"], 1 + l + q["alpha"], 1 - 2 * l - q.n}, q.f}));
            },
            [=](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &cc = q["c"], &al = q["alpha"];
                long n = q.n;
                Rational l = mp2_lam(q);
                Rational z = -al - 2 * l - 2 * n;
                Rational Gc = -poch(al + 2 * l, n) * poch(l, n) * z / (poch(2 * l, n) * poch(1 + l + al, n) * (al + 2 * l));
                return IdentitySide{Q(Gc), hs({-N(q), a + l, b + l, al, z + 1}, {cc, 1 - l - n, al + 2 * l + 1, z}, hatq(q))};
            },
            draw({"a", "b", "c", "alpha"}, {shifts(), nn()}));
        e.constraints = {mp2_regular()};
        e.derivation = lemma(
            "MP2", "bailey_2balanced",
            [=](const P& q) {
                Rational l = mp2_lam(q);
                return LemmaSetup{tp({{"a", q["a"]}, {"b", q["b"]}, {"c", q["c"]}}, q.f, q.m),
                                  {q["alpha"], -N(q)},
                                  {1 + l + q["alpha"], 1 - 2 * l - q.n}};
            },
            [](const P& q, const Rational& l, long k) {
                SumArgs a;
                a.n = q.n;
                a.k = k;
                a.lambda = l;
                a.alpha = q["alpha"];
                return a;
            });
    }

    // ================= Case II =================
    auto mp1 = [](const P& q) { return tp({{"a", -N(q)}, {"b", q["b"]}, {"c", q["c"]}}, q.f, q.m); };
    auto ii_lhs = [](const P& q) {
        return hs(cat({{-N(q), q["b"], q["d"]}, shifted(q.f, q.m), shifted(q.h, q.p)}), cat({{q["c"], q["e"]}, q.f, q.h}));
    };
    {
        auto& e = add(
            "II-1", "II", "miller-paris-1-with-inverse-pairs", ii_lhs,
            [](const P& q) {
                const Rational &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"];
                long n = q.n, M = total(q.m), Pt = total(q.p);
                PolyQ Y = yt(1, 1, d, e, N(q), q.h, q.p);
                PolyQ w = M ? weight_neg(build_Qm(b, cc, q.f, q.m)) : PolyQ(1);
                Rational pre = poch(e - d, n) / (poch(e, n) * poch(1 + d - e - n, Pt) * hpr(q.h, q.p));
                return IdentitySide{Q(pre), hs({-N(q), cc - b - M, d}, {cc, 1 + d - e - n + Pt}, Y * w)};
            },
            draw({"b", "c", "d", "e"}, {shifts(), pairs(), nn()}));
        e.derivation = ipd_derivation("MP1", "ipd11", mp1);
    }
    {
        auto& e = add(
            "II-2", "II", "miller-paris-1-with-gauss-factor", ii_lhs,
            [](const P& q) {
                const Rational &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"];
                long n = q.n, MP = total(q.m) + total(q.p);
                PolyQ w = MP ? weight_neg(build_Qm(b, cc, join(q.f, q.h), join(q.m, q.p))) : PolyQ(1);
                return IdentitySide{Q(poch(e - d, n) / poch(e, n)), hs({-N(q), cc - b - MP, d}, {cc, 1 - e + d - n}, w)};
            },
            draw({"b", "c", "d", "e"}, {shifts(), pairs(), nn()}));
        e.derivation = lemma(
            "MP1", "gauss",
            [](const P& q) {
                return LemmaSetup{tp({{"a", -N(q)}, {"b", q["b"]}, {"c", q["c"]}}, join(q.f, q.h), join(q.m, q.p)),
                                  {q["d"]},
                                  {q["e"]}};
            },
            [](const P& q, const Rational&, long k) {
                SumArgs a;
                a.a = Rational(-q.n + k);
                a.b = q["d"] + k;
                a.c = q["e"] + k;
                return a;
            });
        e.printed = PrintedVariant{
            "unit-shift display: lower parameter 1-e-d-n",
            [](const P& q) { return hs({-N(q), q["b"], q["d"], q.f[0] + 1}, {q["c"], q["e"], q.f[0]}); },
            [](const P& q) {
                const Rational &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &f = q.f[0];
                Rational ze = (cc - b - 1) * f / (f - b);
                return IdentitySide{Q(poch(e - d, q.n) / poch(e, q.n)),
                                    hs({-N(q), cc - b - 1, d, ze + 1}, {cc, 1 - e - d - N(q), ze})};
            },
            draw({"b", "c", "d", "e"}, {unit_shift(), nn()})};
    }
    {
        auto& e = add(
            "II-3", "II", "miller-paris-1-unit-shift-one-pair",
            [](const P& q) {
                return hs({-N(q), q["b"], q["d"], q.h[0] + 1, q.f[0] + 1}, {q["c"], q["e"], q.h[0], q.f[0]});
            },
            [](const P& q) {
                const Rational &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &h = q.h[0], &f = q.f[0];
                long n = q.n;
                Rational xs = ((h - d) * n + (e - d - 1) * h) / (e - h - 1);
                Rational ze = (cc - b - 1) * f / (f - b);
                Rational pre = poch(e - d, n) / (h * poch(e, n)) * (h + n * d / (1 + d - e - n));
                return IdentitySide{Q(pre), hs({-N(q), cc - b - 1, d, ze + 1, xs + 1}, {cc, 2 + d - e - n, ze, xs})};
            },
            draw({"b", "c", "d", "e"}, {unit_shift(), unit_pair(), nn()}));
        e.derivation = ipd_derivation("MP1", "ipd11", mp1);
    }
    {
        auto& e = add(
            "II-4", "II", "euler-pfaff-1-one-pair",
            [](const P& q) { return hs({-N(q), q["b"], q["d"], q.h[0] + 1}, {q["c"], q["e"], q.h[0]}); },
            [](const P& q) {
                const Rational &b = q["b"], &cc = q["c"], &d = q["d"], &e = q["e"], &h = q.h[0];
                long n = q.n;
                Rational xs = ((h - d) * n + (e - d - 1) * h) / (e - h - 1);
                Rational pre = poch(e - d, n) / poch(e, n) * (1 + d * n / (h * (1 + d - e - n)));
                return IdentitySide{Q(pre), hs({-N(q), cc - b, d, xs + 1}, {cc, 2 + d - e - n, xs})};
            },
            draw({"b", "c", "d", "e"}, {unit_pair(), nn()}));
        e.derivation = ipd_derivation("MP1", "ipd11", mp1);
    }
    {
        auto& e = add(
            "II-5", "II", "krattenthaler-rao-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, al + half}, dl(q["d"]), dls(shifted(q.h, q.p))}), cat({{be}, dl(q["e"]), dls(q.h)}));
            },
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                long Pt = total(q.p);
                PolyQ Y = yt(1, 1, d, e, -2 * al, q.h, q.p);
                GammaRatio pre = G({e - 2 * al - d, e}, {e - 2 * al, e - d}, 1 / (hpr(q.h, q.p) * poch(1 + d - e + 2 * al, Pt)));
                return IdentitySide{pre, hs({2 * al, be - half, d, e}, {2 * be - 1, e, 1 + d - e + 2 * al + Pt}, Y, 2)};
            },
            draw({"alpha", "beta", "e"}, {neg("d", 1, 5), pairs()}));
        e.derivation = ipd_derivation("KR33", "ipd11", [](const P& q) {
            return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}});
        });
    }

    // ================= Case III =================
    auto kr35 = [](const P& q) { return tp({{"alpha", q["a"]}, {"beta", q["b"]}}); };
    {
        auto& e = add(
            "III-1", "III", "gauss-quadratic-with-whipple",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"];
                return hs({1, A, B, C}, {(A + B + 1) / 2, D, 1 + 2 * C - D});
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"];
                return IdentitySide{Q(1), hs({1, A / 2, B / 2, C}, {(A + B + 1) / 2, (1 + D) / 2, 1 + C - D / 2})};
            },
            [](Sampler& g) {
                P q;
                q["B"] = g.rat();
                q["D"] = g.rat();
                if (g.coin()) {
                    q["A"] = Rational(-2 * g.integer(1, 3));
                    q["C"] = g.rat();
                } else {
                    q["A"] = g.rat();
                    q["C"] = Rational(-g.integer(1, 4));
                }
                return q;
            });
        e.derivation = lemma(
            "KR35", "whipple",
            [](const P& q) {
                return LemmaSetup{tp({{"alpha", q["A"]}, {"beta", q["B"]}}), {1, q["C"]}, {q["D"], 1 + 2 * q["C"] - q["D"]}};
            },
            [](const P& q, const Rational& l, long k) {
                SumArgs a;
                a.k = k;
                a.lambda = l;
                a.a2 = q["C"];
                a.b1 = q["D"];
                return a;
            });
    }
    auto iii_draw = [](bool unit) {
        return [unit](Sampler& g) {
            P q;
            q["b"] = g.rat();
            q["e"] = g.rat();
            unit ? unit_pair()(g, q) : pairs()(g, q);
            if (g.coin()) {
                q["a"] = Rational(-2 * g.integer(1, 3));
                q["d"] = g.rat();
            } else {
                q["a"] = g.rat();
                q["d"] = Rational(-g.integer(1, 4));
            }
            return q;
        };
    };
    {
        auto& e = add(
            "III-2", "III", "gauss-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"];
                return hs(cat({{a, b, q["d"]}, shifted(q.h, q.p)}), cat({{(a + b + 1) / 2, q["e"]}, q.h}));
            },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &d = q["d"], &e = q["e"];
                long Pt = total(q.p);
                PolyQ Y = yt(1, -1, d, e, 0, q.h, q.p);
                Rational pre = 1 / (poch(1 - e + d, Pt) * hpr(q.h, q.p));
                return IdentitySide{Q(pre), hs({a / 2, b / 2, d, e - d - Pt}, cat({{(a + b + 1) / 2}, dl(e)}), Y)};
            },
            iii_draw(false));
        e.derivation = ipd_derivation("KR35", "ipd1-1", kr35);
        e.numeric.push_back(NumericExtension{"a and d generic; both sides converge",
                                     draw({"a", "b", "e"}, {gen("a"), gen("d"), pairs()}),
                                     {},
                                     {},
                                     true});
    }
    {
        auto& e = add(
            "III-3", "III", "gauss-quadratic-one-pair",
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"];
                return hs({a, b, q["d"], q.h[0] + 1}, {(a + b + 1) / 2, q["e"], q.h[0]});
            },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &d = q["d"], &e = q["e"], &h = q.h[0];
                Rational xs = -(e - d - 1) * h / (2 * d - h - e + 1);
                return IdentitySide{Q(1), hs({a / 2, b / 2, d, e - d - 1, xs + 1}, cat({{(a + b + 1) / 2}, dl(e), {xs}}))};
            },
            iii_draw(true));
        e.derivation = ipd_derivation("KR35", "ipd1-1", kr35);
    }
    auto kr39 = [](const P& q) { return tp({{"alpha", q["a"]}, {"beta", q["b"]}}); };
    {
        auto& e = add(
            "III-4", "III", "quadratic-reflection-with-inverse-pairs",
            [](const P& q) {
                const Rational& a = q["a"];
                return hs(cat({{a, 1 - a, q["d"]}, shifted(q.h, q.p)}), cat({{q["b"], q["e"]}, q.h}));
            },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &d = q["d"], &e = q["e"];
                long Pt = total(q.p);
                PolyQ Y = yt(1, -1, d, e, b - 1, q.h, q.p);
                GammaRatio pre = G({e + b - d - 1, e}, {e + b - 1, e - d}, 1 / (poch(2 - e - b + d, Pt) * hpr(q.h, q.p)));
                return IdentitySide{pre, hs({(b - a) / 2, (a + b - 1) / 2, d, e + b - d - Pt - 1}, cat({{b}, dl(e + b - 1)}), Y)};
            },
            draw({"a", "b", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("KR39", "ipd1-1", kr39);
    }
    {
        auto& e = add(
            "III-5", "III", "quadratic-reflection-one-pair",
            [](const P& q) {
                const Rational& a = q["a"];
                return hs({a, 1 - a, q["d"], q.h[0] + 1}, {q["b"], q["e"], q.h[0]});
            },
            [](const P& q) {
                const Rational &a = q["a"], &b = q["b"], &d = q["d"], &e = q["e"], &h = q.h[0];
                Rational xs = -((h - d) * (b - 1) + (e - d - 1) * h) / (2 * d - h - e + 1);
                GammaRatio pre = G({e + b - d - 1, e}, {e + b - 1, e - d}, 1 + d * (b - 1) / (h * (2 - e - b + d)));
                return IdentitySide{pre, hs({(b - a) / 2, (a + b - 1) / 2, d, e + b - d - 2, xs + 1}, {b, (e + b - 1) / 2, (e + b) / 2, xs})};
            },
            draw({"a", "b", "e"}, {neg("d"), unit_pair()}));
        e.derivation = ipd_derivation("KR39", "ipd1-1", kr39);
    }

    // ================= Case IV =================
    auto k1 = [](const Rational& A, const Rational& B) { return tp({{"alpha", A}, {"beta", B}}); };
    {
        auto& e = add(
            "IV-1", "IV", "very-well-poised-6f5-at-minus-one",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                return hs({A, 1 + A / 2, B, C, D, E}, wp_lower(A, {B, C, D, E}), PolyQ(1), -1);
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                return IdentitySide{vwp_gamma(A, C, D, E), hs({C, D, E}, {1 + A - B, C + D + E - A})};
            },
            draw({"A", "B", "C", "D"}, {neg("E")}));
        e.derivation = lemma(
            "K1", "dougall", [=](const P& q) { return wp_density(k1(q["A"], q["B"]), q["A"], {q["C"], q["D"], q["E"]}); },
            dougall_bind([](const P& q) { return 1 + q["A"] - q["C"]; }, [](const P& q) { return 1 + q["A"] - q["D"]; }, "E"));
        e.numeric.push_back(NumericExtension{"E generic; both sides converge", draw({"A", "B", "C", "D"}, {gen("E")}), {}, {}, true});
    }
    {
        auto& e = add(
            "IV-2", "IV", "quadratic-3-1-11-with-dougall",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                return hs(cat({{A, 1 + A / 2, B}, dl(C), dl(D), dl(E)}),
                          cat({{A / 2, 1 + A - B}, dl(1 + 2 * A - C), dl(1 + 2 * A - D), dl(1 + 2 * A - E)}));
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                GammaRatio pre = G({1 + 2 * A - C, 1 + 2 * A - D, 1 + 2 * A - E, 1 + 2 * A - C - D - E},
                                   {1 + 2 * A, 1 + 2 * A - C - D, 1 + 2 * A - C - E, 1 + 2 * A - D - E});
                return IdentitySide{pre, hs({A - B + half, C, D, E}, {A + half, 2 * A - 2 * B + 1, C + D + E - 2 * A})};
            },
            draw({"A", "B", "C", "D"}, {neg("E", 1, 5)}));
        e.derivation = lemma(
            "AAR3111", "dougall",
            [=](const P& q) {
                const Rational &A = q["A"], &C = q["C"], &D = q["D"], &E = q["E"];
                return LemmaSetup{k1(A, q["B"]), {1 + A, C, D, E}, {A, 1 + 2 * A - C, 1 + 2 * A - D, 1 + 2 * A - E}};
            },
            dougall_bind([](const P& q) { return 1 + 2 * q["A"] - q["C"]; },
                         [](const P& q) { return 1 + 2 * q["A"] - q["D"]; }, "E"));
        e.numeric.push_back(NumericExtension{"E generic; right side terminates through B = A+1/2+N",
                                     [](Sampler& g) {
                                         P q;
                                         q["A"] = g.rat();
                                         q["C"] = g.rat();
                                         q["D"] = g.rat();
                                         q["E"] = g.generic();
                                         q["B"] = q["A"] + half + g.integer(0, 3);
                                         return q;
                                     },
                                     {},
                                     {}});
    }
    auto wq = [](const P& q) { return tp({{"alpha", q["A"]}, {"beta", q["B"]}, {"delta", q["C"]}}); };
    {
        auto& e = add(
            "IV-3", "IV", "whipple-quadratic-with-dougall",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"];
                return hs({A, 1 + A / 2, B, C, D, E, F}, wp_lower(A, {B, C, D, E, F}));
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"];
                return IdentitySide{dougall_gamma(A, D, E, F), hs({1 + A - B - C, D, E, F}, {1 + A - B, 1 + A - C, D + E + F - A})};
            },
            draw({"A", "B", "C", "D", "E"}, {neg("F")}));
        e.derivation = lemma(
            "WQ", "dougall", [=](const P& q) { return wp_density(wq(q), q["A"], {q["D"], q["E"], q["F"]}); },
            dougall_bind([](const P& q) { return 1 + q["A"] - q["D"]; }, [](const P& q) { return 1 + q["A"] - q["E"]; }, "F"));
        e.numeric.push_back(NumericExtension{"F generic; right side terminates through C = 1+A-B+N",
                                     [](Sampler& g) {
                                         P q;
                                         for (const char* s : {"A", "B", "D", "E"}) q[s] = g.rat();
                                         q["F"] = g.generic();
                                         q["C"] = 1 + q["A"] - q["B"] + g.integer(0, 3);
                                         return q;
                                     },
                                     {},
                                     {},
                                     false,
                                     // A-B integral makes C an integer too: a second terminating parameter
                                     [](const P& q) { return !is_integer(q["A"] - q["B"]); }});
    }
    add("IV-4", "IV", "balanced-4f3-quadratic-reduction",
        [](const P& q) {
            const Rational &A = q["A"], &B = q["B"], &C = q["C"], &K = q["kappa"];
            return hs({A, B, C, -N(q)}, {K - B, K - C, K + q.n});
        },
        [](const P& q) {
            const Rational &A = q["A"], &B = q["B"], &C = q["C"], &K = q["kappa"];
            long n = q.n;
            Rational pre = poch(K, n) * poch(K - B - C, n) / (poch(K - B, n) * poch(K - C, n));
            return IdentitySide{Q(pre), hs(cat({dl(K - A), {B, C, -N(q)}}), cat({dl(K), {K - A, B + C - K + 1 - N(q)}}))};
        },
        draw({"A", "B", "C", "kappa"}, {nn()}))
        .no_derivation = "not a single lemma application";
    {
        auto& e = add(
            "IV-5", "IV", "well-poised-5f4-quadratic-reduction",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &K = q["kappa"];
                return hs({A, 1 + A / 2, B, C, D}, {A / 2, K - B, K - C, K - D});
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &K = q["kappa"];
                GammaRatio pre = G({K - B, K - C, K - D, K - B - C - D}, {K, K - B - C, K - B - D, K - C - D});
                return IdentitySide{pre, hs(cat({dl(K - A - 1), {B, C, D}}), cat({dl(K), {K - A, B + C + D - K + 1}}))};
            },
            draw({"A", "B", "C", "kappa"}, {neg("D")}));
        e.no_derivation = "not a single lemma application";
        e.numeric.push_back(NumericExtension{"D generic; kappa = 1+A, right side terminates at its first term",
                                             [](Sampler& g) {
                                                 P q;
                                                 for (const char* s : {"A", "B", "C"}) q[s] = g.rat();
                                                 q["D"] = g.generic();
                                                 q["kappa"] = 1 + q["A"];
                                                 return q;
                                             },
                                             {},
                                             {}});
        e.numeric.push_back(NumericExtension{"D generic; both sides converge", draw({"A", "B", "C", "kappa"}, {gen("D")}), {}, {}, true});
    }
    {
        auto& e = add(
            "IV-6", "IV", "kummer-1-with-nearly-poised",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"];
                return hs({A, 1 + A / 2, B, -N(q)}, {A / 2, 1 - B + A, C}, PolyQ(1), -1);
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"];
                long n = q.n;
                return IdentitySide{Q(np2_pre(C, A, n)), hs({1 + A / 2, (1 + A) / 2, 1 - C + A, -N(q)},
                                                            {1 - B + A, (2 - C + A - n) / 2, (3 - C + A - n) / 2})};
            },
            draw({"A", "B", "C"}, {nn()}));
        e.derivation = lemma(
            "K1", "bailey_np2",
            [=](const P& q) { return LemmaSetup{k1(q["A"], q["B"]), {1 + q["A"] / 2, -N(q)}, {q["A"] / 2, q["C"]}}; },
            np2_bind([](const P& q) { return q["C"]; }));
    }
    {
        auto& e = add(
            "IV-7", "IV", "quadratic-3-1-11-with-nearly-poised",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"];
                return hs({A, 1 + A / 2, B, -N(q) / 2, (1 - N(q)) / 2}, {A / 2, 1 - B + A, C / 2, (C + 1) / 2});
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"];
                long n = q.n;
                return IdentitySide{Q(np2_pre(C, 2 * A, n)),
                                    hs({1 + A, A - B + half, 1 - C + 2 * A, -N(q)},
                                       {1 - 2 * B + 2 * A, (2 - C + 2 * A - n) / 2, (3 - C + 2 * A - n) / 2})};
            },
            draw({"A", "B", "C"}, {nn(1, 5)}));
        e.derivation = lemma(
            "AAR3111", "bailey_np2",
            [=](const P& q) { return LemmaSetup{k1(q["A"], q["B"]), {1 + q["A"], -N(q)}, {q["A"], q["C"]}}; },
            np2_bind([](const P& q) { return q["C"]; }));
    }
    {
        auto& e = add(
            "IV-8", "IV", "whipple-quadratic-with-nearly-poised",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"];
                return hs({A, 1 + A / 2, B, C, -N(q)}, {A / 2, 1 - B + A, 1 - C + A, D});
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"];
                long n = q.n;
                return IdentitySide{Q(np2_pre(D, A, n)), hs({1 + A / 2, (1 + A) / 2, 1 - D + A, 1 + A - B - C, -N(q)},
                                                            {1 - B + A, 1 - C + A, (2 - D + A - n) / 2, (3 - D + A - n) / 2})};
            },
            draw({"A", "B", "C", "D"}, {nn()}));
        e.derivation = lemma(
            "WQ", "bailey_np2",
            [=](const P& q) { return LemmaSetup{wq(q), {1 + q["A"] / 2, -N(q)}, {q["A"] / 2, q["D"]}}; },
            np2_bind([](const P& q) { return q["D"]; }));
    }
    {
        auto& e = add(
            "IV-9", "IV", "rakha-rathie-quadratic-with-dougall",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"];
                return hs({(A - 1) / 2 - B, C, D, E, F + 1}, {(A + 1) / 2, A - B + 1, C + D + E - A, F});
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"];
                Rational s2 = (A * (A - 2 * F) * (A - 2 * B - 1) - 2 * F * (A - 2 * B)) / (4 * (A - 2 * B - 2 * F - 1));
                GammaRatio pre = G({1 + A - C - E, 1 + A - D - E, 1 + A - C - D, 1 + A}, {1 + A - C, 1 + A - D, 1 + A - E, 1 + A - C - D - E});
                return IdentitySide{pre, hs({A, 1 + A / 2, B, C, D, E}, wp_lower(A, {B, C, D, E}), weight_sigma(A / 2, s2))};
            },
            draw({"A", "B", "C", "D", "F"}, {neg("E")}));
        e.derivation = lemma(
            "RR31", "dougall",
            [](const P& q) {
                const Rational& A = q["A"];
                return wp_density(tp({{"alpha", A / 2}, {"beta", A / 2 - q["B"] - half}, {"delta", q["F"]}}), A,
                                  {q["C"], q["D"], q["E"]});
            },
            dougall_bind([](const P& q) { return 1 + q["A"] - q["C"]; }, [](const P& q) { return 1 + q["A"] - q["D"]; }, "E"),
            true);
        e.numeric.push_back(NumericExtension{"E generic; both sides converge", draw({"A", "B", "C", "D", "F"}, {gen("E")}), {}, {}, true});
    }
    {
        auto& e = add(
            "IV-10", "IV", "wang-rathie-quadratic-with-dougall",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"], &Gp = q["G"];
                return hs({A - B - C, D, E, F, Gp + 1}, {1 + A - B, 1 + A - C, D + E + F - A, Gp});
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"], &Gp = q["G"];
                Rational w2 = Gp * B * C / (A - B - C - Gp) + A * A / 4;
                GammaRatio pre = G({A + 1, 1 + A - D - F, 1 + A - E - F, 1 + A - D - E}, {1 + A - F, 1 + A - D, 1 + A - E, 1 + A - D - E - F});
                return IdentitySide{pre, hs({A, 1 + A / 2, B, C, D, E, F}, wp_lower(A, {B, C, D, E, F}), weight_sigma(A / 2, w2))};
            },
            draw({"A", "B", "C", "D", "E", "G"}, {neg("F")}));
        e.derivation = lemma(
            "WR31", "dougall",
            [](const P& q) {
                const Rational& A = q["A"];
                return wp_density(
                    tp({{"alpha", (A + 1) / 2}, {"beta", A - q["B"]}, {"gamma", 1 + A - q["C"]}, {"delta", q["G"]}}), A,
                    {q["D"], q["E"], q["F"]});
            },
            dougall_bind([](const P& q) { return 1 + q["A"] - q["D"]; }, [](const P& q) { return 1 + q["A"] - q["E"]; }, "F"),
            true);
        // F -> infinity
        e.numeric.push_back(NumericExtension{
            "F -> infinity: right side becomes a very-well-poised series at x = -1",
            draw({"A", "B", "C", "D", "E", "G"}),
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &Gp = q["G"];
                return hs({A - B - C, D, E, Gp + 1}, {1 + A - B, 1 + A - C, Gp});
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &Gp = q["G"];
                Rational w2 = Gp * B * C / (A - B - C - Gp) + A * A / 4;
                return IdentitySide{G({A + 1, 1 + A - D - E}, {1 + A - D, 1 + A - E}),
                                    hs({A, 1 + A / 2, B, C, D, E}, wp_lower(A, {B, C, D, E}), weight_sigma(A / 2, w2), -1)};
            }});
    }
    {
        auto& e = add(
            "IV-11", "IV", "rakha-rathie-quadratic-with-nearly-poised",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"];
                return hs({-N(q), A + 1, A - B - half, C, D + 1}, cat({{1 + 2 * A - B}, dl(1 + C - N(q)), {D}}));
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"];
                long n = q.n;
                Rational pre = -poch(1 + 2 * A - C, n) / ((C + n) * poch(1 - C, n - 1));
                return IdentitySide{Q(pre), hs({-N(q), 2 * A, 1 + A, B}, {A, 1 + 2 * A - B, 1 + 2 * A - C},
                                               weight_sigma(A, sigma_rr(A, B, D)))};
            },
            draw({"A", "B", "C", "D"}, {nn()}));
        e.derivation = lemma(
            "RR31", "bailey_np2",
            [](const P& q) {
                const Rational& A = q["A"];
                return LemmaSetup{tp({{"alpha", A}, {"beta", A - q["B"] - half}, {"delta", q["D"]}}),
                                  {1 + A, -N(q)},
                                  {A, 1 + 2 * A - q["C"]}};
            },
            np2_bind([](const P& q) { return 1 + 2 * q["A"] - q["C"]; }), true);
        e.printed = PrintedVariant{
            "sigma^2 = ((A-B)(A(A-1)-D/2)+A(D-A)/2)/(A-B-D-1/2)",
            {},
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"];
                long n = q.n;
                Rational s2 = ((A - B) * (A * (A - 1) - D / 2) + A * (D - A) / 2) / (A - B - D - half);
                Rational pre = -poch(1 + 2 * A - C, n) / ((C + n) * poch(1 - C, n - 1));
                return IdentitySide{Q(pre), hs({-N(q), 2 * A, 1 + A, B}, {A, 1 + 2 * A - B, 1 + 2 * A - C}, weight_sigma(A, s2))};
            },
            {}};
    }
    {
        auto& e = add(
            "IV-12", "IV", "wang-rathie-quadratic-with-nearly-poised",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                return hs({-N(q), A, A + half, 2 * A - B - C - 1, D, E + 1}, cat({{2 * A - B, 2 * A - C}, dl(1 + D - N(q)), {E}}));
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                long n = q.n;
                Rational w2 = B * C * E / (2 * A - B - C - E - 1) + (A - half) * (A - half);
                Rational pre = -poch(2 * A - D, n) / ((D + n) * poch(1 - D, n - 1));
                return IdentitySide{Q(pre), hs({-N(q), 2 * A - 1, A + half, B, C}, {A - half, 2 * A - B, 2 * A - C, 2 * A - D},
                                               weight_sigma(A - half, w2))};
            },
            draw({"A", "B", "C", "D", "E"}, {nn()}));
        e.derivation = lemma(
            "WR31", "bailey_np2",
            [](const P& q) {
                const Rational& A = q["A"];
                return LemmaSetup{
                    tp({{"alpha", A}, {"beta", 2 * A - q["B"] - 1}, {"gamma", 2 * A - q["C"]}, {"delta", q["E"]}}),
                    {A + half, -N(q)},
                    {A - half, 2 * A - q["D"]}};
            },
            np2_bind([](const P& q) { return 2 * q["A"] - q["D"]; }), true);
    }

    auto ab = [](const P& q) { return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}}); };
    auto abd = [](const P& q) { return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}, {"delta", q["delta"]}}); };
    auto ipd_pre = [](const P& q, const Rational& l) {
        const Rational &d = q["d"], &e = q["e"];
        return G({e - d + l, 1 + d - l - e, e}, {e + l, 1 + d - l - e + total(q.p), e - d}, 1 / hpr(q.h, q.p));
    };
    {
        auto& e = add(
            "IV-13", "IV", "kummer-1-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, be, q["d"]}, shifted(q.h, q.p)}), cat({{1 - be + al, q["e"]}, q.h}), PolyQ(1), -1);
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -al, q.h, q.p);
                return IdentitySide{ipd_pre(q, -al),
                                    hs(cat({dl(al), {d, 1 - e + al}}), cat({{1 - be + al}, dl(1 + d + al - e + total(q.p))}), Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("K1", "ipd12", ab);
    }
    {
        auto& e = add(
            "IV-14", "IV", "quadratic-3-1-11-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, be}, dl(q["d"]), dls(shifted(q.h, q.p))}), cat({{1 - be + al}, dl(q["e"]), dls(q.h)}));
            },
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                long Pt = total(q.p);
                PolyQ Y = yt(1, 2, d, e, -2 * al, q.h, q.p);
                GammaRatio pre = G({e - d - 2 * al, e}, {e - 2 * al, e - d}, 1 / (poch(1 + d + 2 * al - e, Pt) * hpr(q.h, q.p)));
                return IdentitySide{pre, hs({al, al - be + half, d, 1 - e + 2 * al},
                                            cat({{1 - 2 * be + 2 * al}, dl(1 + d + 2 * al - e + Pt)}), Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d", 1, 5), pairs()}));
        e.derivation = ipd_derivation("AAR3111", "ipd12", ab);
        e.printed = PrintedVariant{
            "right-side lower parameter 1-beta+alpha",
            {},
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                long Pt = total(q.p);
                PolyQ Y = yt(1, 2, d, e, -2 * al, q.h, q.p);
                GammaRatio pre = G({e - d - 2 * al, e}, {e - 2 * al, e - d}, 1 / (poch(1 + d + 2 * al - e, Pt) * hpr(q.h, q.p)));
                return IdentitySide{pre, hs({al, al - be + half, d, 1 - e + 2 * al},
                                            cat({{1 - be + al}, dl(1 + d + 2 * al - e + Pt)}), Y)};
            },
            {}};
    }
    {
        auto& e = add(
            "IV-15", "IV", "whipple-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"];
                return hs(cat({{al, be, de, q["d"]}, shifted(q.h, q.p)}), cat({{1 - be + al, 1 - de + al, q["e"]}, q.h}));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -al, q.h, q.p);
                return IdentitySide{ipd_pre(q, -al), hs(cat({dl(al), {1 + al - be - de, d, 1 - e + al}}),
                                                        cat({{1 - be + al, 1 - de + al}, dl(1 + d + al - e + total(q.p))}), Y)};
            },
            draw({"alpha", "beta", "delta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("WQ", "ipd12", abd);
    }
    {
        auto& e = add(
            "IV-16", "IV", "miller-paris-quadratic-with-dougall",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                return hs({A, 1 + A / 2, B, C, D, E}, wp_lower(A, {B, C, D, E}), weight_neg(build_hatR2m(A, B, q.f, q.m)), -1);
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"];
                return IdentitySide{vwp_gamma(A, C, D, E),
                                    hs(cat({{C, D, E}, shifted(q.f, q.m)}), cat({{1 + A - B, C + D + E - A}, q.f}))};
            },
            draw({"A", "B", "C", "D"}, {neg("E"), shifts()}));
        e.derivation = lemma(
            "MP63", "dougall",
            [](const P& q) {
                return wp_density(tp({{"alpha", q["A"]}, {"beta", q["B"]}}, q.f, q.m), q["A"], {q["C"], q["D"], q["E"]});
            },
            dougall_bind([](const P& q) { return 1 + q["A"] - q["C"]; }, [](const P& q) { return 1 + q["A"] - q["D"]; }, "E"));
        e.numeric.push_back(NumericExtension{"E generic; both sides converge", draw({"A", "B", "C", "D"}, {gen("E"), shifts()}), {}, {}, true});
    }
    {
        auto& e = add(
            "IV-17", "IV", "maier-quadratic-with-dougall",
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"];
                return hs({A, 1 + A / 2, B, C, D, E, F}, wp_lower(A, {B, C, D, E, F}), weight_pos(build_P2k(A, B, C, q.k)));
            },
            [](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"];
                return IdentitySide{dougall_gamma(A, D, E, F),
                                    hs({1 + A - B - C - q.k, D, E, F}, {1 + A - B, 1 + A - C, D + E + F - A})};
            },
            draw({"A", "B", "C", "D", "E"}, {neg("F"), kk()}));
        e.derivation = lemma(
            "MAI31", "dougall",
            [](const P& q) {
                return wp_density(tp({{"alpha", q["A"]}, {"beta", q["B"]}, {"delta", q["C"]}}, {}, {}, q.k), q["A"],
                                  {q["D"], q["E"], q["F"]});
            },
            dougall_bind([](const P& q) { return 1 + q["A"] - q["D"]; }, [](const P& q) { return 1 + q["A"] - q["E"]; }, "F"));
        e.numeric.push_back(NumericExtension{"F generic; right side terminates through C = 1+A-B-k+N",
                                     [](Sampler& g) {
                                         P q;
                                         for (const char* s : {"A", "B", "D", "E"}) q[s] = g.rat();
                                         q["F"] = g.generic();
                                         q.k = g.integer(1, 2);
                                         q["C"] = 1 + q["A"] - q["B"] - q.k + g.integer(0, 3);
                                         return q;
                                     },
                                     {},
                                     {},
                                     false,
                                     // A-B integral makes C an integer too: a second terminating parameter
                                     [](const P& q) { return !is_integer(q["A"] - q["B"]); }});
    }
    auto beta_pre = [](const P& q, const Rational& l) {
        const Rational &d = q["d"], &e = q["e"];
        return G({e - d + l, e}, {e + l, e - d}, 1 / (poch(1 + d - l - e, total(q.p)) * hpr(q.h, q.p)));
    };
    {
        auto& e = add(
            "IV-18", "IV", "choi-rathie-1-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, be, q["d"]}, shifted(q.h, q.p)}), cat({{be + 1, q["e"]}, q.h}));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -2 * be, q.h, q.p);
                return IdentitySide{beta_pre(q, -2 * be), hs({be, be - al / 2 + half, be - al / 2 + 1, d, 1 - e + 2 * be},
                                                             cat({{be + 1, 2 * be - al + 1}, dl(1 + d + 2 * be - e + total(q.p))}), Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("CR1", "ipd12", ab);
    }
    {
        auto& e = add(
            "IV-19", "IV", "choi-rathie-2-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al + 1, 2 * al, be, q["d"]}, shifted(q.h, q.p)}), cat({{al, be + 1, q["e"]}, q.h}));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -2 * be, q.h, q.p);
                return IdentitySide{beta_pre(q, -2 * be), hs({be, be - al, be - al + half, d, 1 - e + 2 * be},
                                                             cat({{be + 1, 2 * be - 2 * al + 1}, dl(1 + d + 2 * be - e + total(q.p))}), Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("CR2", "ipd12", ab);
    }
    {
        auto& e = add(
            "IV-20", "IV", "rakha-rathie-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"];
                Rational s2 = (al * al * be - al * be * de - be * de / 2 - de / 4) / (be - de);
                return hs(cat({{2 * al, al - be - half, q["d"]}, shifted(q.h, q.p)}),
                          cat({{al + be + Rational(3, 2), q["e"]}, q.h}), weight_sigma(al, s2));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -2 * al, q.h, q.p);
                return IdentitySide{beta_pre(q, -2 * al), hs({al, be, de + 1, d, 1 - e + 2 * al},
                                                             cat({{al + be + Rational(3, 2), de}, dl(1 + d + 2 * al - e + total(q.p))}), Y)};
            },
            draw({"alpha", "beta", "delta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("RR31", "ipd12", abd);
    }
    {
        auto& e = add(
            "IV-21", "IV", "miller-paris-quadratic-with-nearly-poised",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"];
                return hs({al, 1 + al / 2, be, -N(q)}, {al / 2, 1 - be + al, de}, weight_neg(build_hatR2m(al, be, q.f, q.m)), -1);
            },
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"];
                long n = q.n;
                return IdentitySide{Q(np2_pre(de, al, n)),
                                    hs(cat({{1 + al / 2, (1 + al) / 2, 1 - de + al, -N(q)}, shifted(q.f, q.m)}),
                                       cat({{1 - be + al, (2 - de + al - n) / 2, (3 - de + al - n) / 2}, q.f}))};
            },
            draw({"alpha", "beta", "delta"}, {nn(), shifts()}));
        e.derivation = lemma(
            "MP63", "bailey_np2",
            [](const P& q) {
                return LemmaSetup{tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}}, q.f, q.m),
                                  {1 + q["alpha"] / 2, -N(q)},
                                  {q["alpha"] / 2, q["delta"]}};
            },
            np2_bind([](const P& q) { return q["delta"]; }));
    }
    auto mai31 = [](const P& q) {
        return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}, {"delta", q["delta"]}}, {}, {}, q.k);
    };
    auto mai34 = [](const P& q) {
        return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}, {"delta", q["delta"]}, {"gamma", q["gamma"]}}, {}, {}, q.k);
    };
    {
        auto& e = add(
            "IV-22", "IV", "maier-quadratic-with-nearly-poised",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &ga = q["gamma"];
                return hs({al, 1 + al / 2, be, de, -N(q)}, {al / 2, 1 + al - be, 1 + al - de, ga},
                          weight_pos(build_P2k(al, be, de, q.k)));
            },
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &ga = q["gamma"];
                long n = q.n;
                return IdentitySide{Q(np2_pre(ga, al, n)),
                                    hs({1 + al / 2, (1 + al) / 2, al - be - de - q.k + 1, -N(q), 1 - ga + al},
                                       {1 + al - be, 1 + al - de, (2 - ga + al - n) / 2, (3 - ga + al - n) / 2})};
            },
            draw({"alpha", "beta", "delta", "gamma"}, {nn(), kk()}));
        e.derivation = lemma(
            "MAI31", "bailey_np2",
            [=](const P& q) { return LemmaSetup{mai31(q), {1 + q["alpha"] / 2, -N(q)}, {q["alpha"] / 2, q["gamma"]}}; },
            np2_bind([](const P& q) { return q["gamma"]; }));
    }
    {
        auto& e = add(
            "IV-23", "IV", "maier-3-4-quadratic-with-nearly-poised",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &ga = q["gamma"], &la = q["lambda"];
                return hs({al, 1 + al / 2, be, de, -N(q)}, {al / 2, 1 + al - be, 1 + al - de, la},
                          weight_pos(build_hatP2k(al, be, de, ga, q.k)));
            },
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &ga = q["gamma"], &la = q["lambda"];
                long n = q.n;
                return IdentitySide{Q(np2_pre(la, al, n)),
                                    hs({1 + al / 2, (1 + al) / 2, al - be - de - q.k + 1, -N(q), 1 - la + al, ga + q.k},
                                       {1 + al - be, 1 + al - de, (2 - la + al - n) / 2, (3 - la + al - n) / 2, ga})};
            },
            draw({"alpha", "beta", "delta", "gamma", "lambda"}, {nn(), kk()}));
        e.derivation = lemma(
            "MAI34", "bailey_np2",
            [=](const P& q) { return LemmaSetup{mai34(q), {1 + q["alpha"] / 2, -N(q)}, {q["alpha"] / 2, q["lambda"]}}; },
            np2_bind([](const P& q) { return q["lambda"]; }));
    }
    {
        auto lhs24 = [](const P& q) {
            const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"], &Gp = q["G"];
            return hs({A, 1 + A / 2, B, C, D, E, F}, wp_lower(A, {B, C, D, E, F}), weight_pos(build_hatP2k(A, B, C, Gp, q.k)));
        };
        auto rhs24 = [](bool printed) {
            return [printed](const P& q) {
                const Rational &A = q["A"], &B = q["B"], &C = q["C"], &D = q["D"], &E = q["E"], &F = q["F"], &Gp = q["G"];
                Rational first = 1 + A - B - C - (printed ? 0 : q.k);
                return IdentitySide{dougall_gamma(A, D, E, F),
                                    hs({first, D, E, F, Gp + q.k}, {1 + A - B, 1 + A - C, D + E + F - A, Gp})};
            };
        };
        auto& e = add("IV-24", "IV", "maier-3-4-quadratic-with-dougall", lhs24, rhs24(false),
                      draw({"A", "B", "C", "D", "E", "G"}, {neg("F"), kk()}));
        e.derivation = lemma(
            "MAI34", "dougall",
            [](const P& q) {
                return wp_density(tp({{"alpha", q["A"]}, {"beta", q["B"]}, {"delta", q["C"]}, {"gamma", q["G"]}}, {}, {}, q.k),
                                  q["A"], {q["D"], q["E"], q["F"]});
            },
            dougall_bind([](const P& q) { return 1 + q["A"] - q["D"]; }, [](const P& q) { return 1 + q["A"] - q["E"]; }, "F"));
        e.printed = PrintedVariant{"right-side first upper parameter 1+A-B-C", {}, rhs24(true), {}};
        e.numeric.push_back(NumericExtension{"F generic; both sides converge", draw({"A", "B", "C", "D", "E", "G"}, {gen("F"), kk()}), {}, {}, true});
    }
    {
        auto& e = add(
            "IV-25", "IV", "wang-rathie-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &ga = q["gamma"], &de = q["delta"];
                Rational w2 = (al - half) * (al - half) - de * (ga - 2 * al) * (2 * al - be - 1) / (be + ga - 2 * al - de);
                return hs(cat({{2 * al - 1, 2 * al - be - 1, 2 * al - ga, q["d"]}, shifted(q.h, q.p)}),
                          cat({{be + 1, ga, q["e"]}, q.h}), weight_sigma(al - half, w2));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &ga = q["gamma"], &de = q["delta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, 1 - 2 * al, q.h, q.p);
                return IdentitySide{beta_pre(q, 1 - 2 * al),
                                    hs({al, al - half, be + ga - 2 * al, de + 1, d, 2 * al - e},
                                       cat({{be + 1, ga, de}, dl(d + 2 * al - e + total(q.p))}), Y)};
            },
            draw({"alpha", "beta", "gamma", "delta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("WR31", "ipd12", [](const P& q) {
            return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}, {"gamma", q["gamma"]}, {"delta", q["delta"]}});
        });
    }
    auto alpha_pre = [=](const P& q) { return beta_pre(q, -q["alpha"]); };
    {
        auto& e = add(
            "IV-26", "IV", "miller-paris-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, be, q["d"]}, shifted(q.h, q.p)}), cat({{1 - be + al, q["e"]}, q.h}),
                          weight_neg(build_hatR2m(al, be, q.f, q.m)), -1);
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -al, q.h, q.p);
                return IdentitySide{alpha_pre(q), hs(cat({{al / 2, (al + 1) / 2, d, 1 + al - e}, shifted(q.f, q.m)}),
                                                     cat({{1 - be + al}, dl(1 + d + al - e + total(q.p)), q.f}), Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), pairs(), shifts()}));
        e.derivation = ipd_derivation("MP63", "ipd12", [](const P& q) {
            return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}}, q.f, q.m);
        });
        e.numeric.push_back(NumericExtension{"d generic; both sides converge", draw({"alpha", "beta", "e"}, {gen("d"), pairs(), shifts()}), {}, {}, true});
    }
    {
        auto& e = add(
            "IV-27", "IV", "maier-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"];
                return hs(cat({{al, be, de, q["d"]}, shifted(q.h, q.p)}), cat({{1 + al - be, 1 + al - de, q["e"]}, q.h}),
                          weight_pos(build_P2k(al, be, de, q.k)));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -al, q.h, q.p);
                return IdentitySide{alpha_pre(q), hs({al / 2, (al + 1) / 2, d, 1 + al - be - de - q.k, 1 + al - e},
                                                     cat({{1 - be + al, 1 - de + al}, dl(1 + d + al - e + total(q.p))}), Y)};
            },
            draw({"alpha", "beta", "delta", "e"}, {neg("d"), pairs(), kk()}));
        e.derivation = ipd_derivation("MAI31", "ipd12", mai31);
        e.numeric.push_back(NumericExtension{"d generic; both sides converge", draw({"alpha", "beta", "delta", "e"}, {gen("d"), pairs(), kk()}), {}, {}, true});
    }
    {
        auto& e = add(
            "IV-28", "IV", "maier-3-4-quadratic-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &ga = q["gamma"];
                return hs(cat({{al, be, de, q["d"]}, shifted(q.h, q.p)}), cat({{1 + al - be, 1 + al - de, q["e"]}, q.h}),
                          weight_pos(build_hatP2k(al, be, de, ga, q.k)));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &de = q["delta"], &ga = q["gamma"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(1, 2, d, e, -al, q.h, q.p);
                return IdentitySide{alpha_pre(q), hs({al / 2, (al + 1) / 2, d, 1 + al - be - de - q.k, 1 + al - e, ga + q.k},
                                                     cat({{1 - be + al, 1 - de + al}, dl(1 + d + al - e + total(q.p)), {ga}}), Y)};
            },
            draw({"alpha", "beta", "delta", "gamma", "e"}, {neg("d"), pairs(), kk()}));
        e.derivation = ipd_derivation("MAI34", "ipd12", mai34);
        e.numeric.push_back(NumericExtension{"d generic; both sides converge", draw({"alpha", "beta", "delta", "gamma", "e"}, {gen("d"), pairs(), kk()}), {}, {}, true});
    }

    // ================= Case V =================
    {
        auto& e = add(
            "V-1", "V", "kummer-2-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, be, q["d"]}, shifted(q.h, q.p)}), cat({{2 * be, q["e"]}, q.h}), PolyQ(1), 2);
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(2, 2, d, e, -al, q.h, q.p);
                return IdentitySide{alpha_pre(q), hs(cat({dl(al), dl(d)}), cat({{be + half}, dl(1 + d + al + total(q.p) - e)}), Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("K2", "ipd22", ab);
    }
    {
        auto rhs = [](bool printed) {
            return [printed](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"], &h = q.h[0];
                Rational xs = -(al * (d - h) + h * (e - d - 1)) / (2 * h - 2 * (e - 1));
                Rational lin = printed ? al - e - d - 1 - d * al / h : al - e + d + 1 - d * al / h;
                return IdentitySide{G({e - al - d, e}, {e - al, e - d}, lin / (1 + d + al - e)),
                                    hs(cat({dl(al), dl(d), {xs + 1}}), cat({{be + half}, dl(2 + d + al - e), {xs}}))};
            };
        };
        auto& e = add(
            "V-2", "V", "kummer-2-one-pair",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs({al, be, q["d"], q.h[0] + 1}, {2 * be, q["e"], q.h[0]}, PolyQ(1), 2);
            },
            rhs(false), draw({"alpha", "beta", "e"}, {neg("d"), unit_pair()}));
        e.derivation = ipd_derivation("K2", "ipd22", ab);
        e.printed = PrintedVariant{"prefactor linear factor alpha-e-d-1-d*alpha/h", {}, rhs(true), {}};
    }
    {
        auto& e = add(
            "V-3", "V", "miller-paris-quadratic-2-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, be - total(q.m), q["d"]}, shifted(q.h, q.p)}), cat({{2 * be, q["e"]}, q.h}),
                          weight_neg(build_R2m(be, q.f, q.m)), 2);
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(2, 2, d, e, -al, q.h, q.p);
                return IdentitySide{alpha_pre(q), hs(cat({dl(al), dl(d), shifted(q.f, q.m)}),
                                                     cat({{be + half}, dl(1 + d + al + total(q.p) - e), q.f}), Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), pairs(), shifts()}));
        e.derivation = ipd_derivation("MP61", "ipd22", [](const P& q) {
            return tp({{"alpha", q["alpha"]}, {"beta", q["beta"]}}, q.f, q.m);
        });
    }

    // ================= Case VI =================
    {
        auto& e = add(
            "VI-1", "VI", "quadratic-15-8-14-with-inverse-pairs",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs(cat({{al, be, q["d"]}, shifted(q.h, q.p)}), cat({{2 * be, q["e"]}, q.h}));
            },
            [=](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"];
                PolyQ Y = yt(2, 1, d, e, -al / 2, q.h, q.p);
                return IdentitySide{beta_pre(q, -al / 2),
                                    hs(cat({{al / 2, be - al / 2}, dl(d)}), {be + half, e - al / 2, 1 + d + al / 2 + total(q.p) - e}, Y)};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), pairs()}));
        e.derivation = ipd_derivation("N15814", "ipd21", ab);
        e.numeric.push_back(NumericExtension{"d generic; both sides converge", draw({"alpha", "beta", "e"}, {gen("d"), pairs()}), {}, {}, true});
    }
    {
        auto& e = add(
            "VI-2", "VI", "quadratic-15-8-14-one-pair",
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"];
                return hs({al, be, q["d"], q.h[0] + 1}, {2 * be, q["e"], q.h[0]});
            },
            [](const P& q) {
                const Rational &al = q["alpha"], &be = q["beta"], &d = q["d"], &e = q["e"], &h = q.h[0];
                Rational xs = -((d - h) * al / 2 + (e - d - 1) * h) / (h + d - 2 * e + 2);
                Rational lin = ((h - d) * al / 2 - (e - d - 1) * h) / ((1 + d + al / 2 - e) * h);
                return IdentitySide{G({e - al / 2 - d, e}, {e - al / 2, e - d}, lin),
                                    hs(cat({{al / 2, be - al / 2}, dl(d), {xs + 1}}), {be + half, e - al / 2, 2 + d + al / 2 - e, xs})};
            },
            draw({"alpha", "beta", "e"}, {neg("d"), unit_pair()}));
        e.derivation = ipd_derivation("N15814", "ipd21", ab);
        e.numeric.push_back(NumericExtension{"d generic; both sides converge", draw({"alpha", "beta", "e"}, {gen("d"), unit_pair()}), {}, {}, true});
    }
    return c;
}

}  // namespace

const std::vector<IdentityEntry>& catalog_identities() {
    static const std::vector<IdentityEntry> c = build();
    return c;
}

const IdentityEntry& identity(const std::string& id) {
    for (const auto& e : catalog_identities())
        if (e.id == id) return e;
    fail(ErrorKind::Unsupported, "unknown identity " + id);
}

// exposed for the limit and self-inverse checks
IdentitySide curious_transform(const IdentityParams& q) {
    Mapped m = curious_map(q.n, q["b"], q["d"], q["e"], q["f"], q["g"], q["h"]);
    return IdentitySide{GammaRatio({}, {}, m.pre), HyperSpec(m.up, m.lo)};
}

}  // namespace hyperforge
