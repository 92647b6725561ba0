#include "hyperforge/transforms.hpp"

#include "hyperforge/charpoly.hpp"

#include <sstream>

namespace hyperforge {

const Rational& TransformParams::operator[](const std::string& name) const {
    auto it = s.find(name);
    if (it == s.end()) fail(ErrorKind::Unsupported, "missing parameter " + name);
    return it->second;
}

std::string TransformParams::str() const {
    std::ostringstream o;
    bool first = true;
    for (const auto& [k, v] : s) {
        o << (first ? "" : " ") << k << "=" << to_string(v);
        first = false;
    }
    if (!f.empty()) {
        o << " f=(";
        for (size_t i = 0; i < f.size(); ++i) o << (i ? "," : "") << to_string(f[i]);
        o << ") m=(";
        for (size_t i = 0; i < m.size(); ++i) o << (i ? "," : "") << m[i];
        o << ")";
    }
    if (k) o << " k=" << k;
    return o.str();
}

Rational BaseTransform::lhs_arg(const Rational& x) const { return M * ipow(x, w); }

Rational BaseTransform::rhs_arg(const Rational& x) const {
    if (x == 1 && v > 0) fail(ErrorKind::DivisionByZero, "x = 1");
    return D * ipow(x, u) / ipow(1 - x, v);
}

namespace {

const Rational half = Rational(1, 2);

HyperSpec spec(std::vector<Rational> up, std::vector<Rational> lo, PolyQ weight = PolyQ(1)) {
    HyperSpec s(std::move(up), std::move(lo));
    s.weight = std::move(weight);
    return s;
}

// (f+m; f) appended to a spec
HyperSpec with_shifts(HyperSpec s, const TransformParams& p) {
    for (size_t i = 0; i < p.f.size(); ++i) {
        s.upper.push_back(p.f[i] + p.m[i]);
        s.lower.push_back(p.f[i]);
    }
    return s;
}

void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::ConditionsViolated, what);
}

void draw_shifts(Sampler& g, TransformParams& p) {
    int r = int(g.integer(1, 2));
    long left = 2;
    for (int i = 0; i < r && left > 0; ++i) {
        long mi = g.integer(1, left);
        p.f.push_back(g.generic());
        p.m.push_back(mi);
        left -= mi;
    }
}

// generic parameters by name
std::function<TransformParams(Sampler&)> generic(std::vector<std::string> names, bool shifts = false,
                                                long kmax = 0) {
    return [names, shifts, kmax](Sampler& g) {
        TransformParams p;
        for (const auto& n : names) p[n] = g.generic();
        if (shifts) draw_shifts(g, p);
        if (kmax) p.k = g.integer(1, kmax);
        return p;
    };
}

void no_check(const TransformParams&) {}

Rational rr31_sigma2(const TransformParams& p) {
    const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"];
    if (be == de) fail(ErrorKind::DegenerateParameters, "beta = delta");
    return (al * al * be - al * be * de - be * de / 2 - de / 4) / (be - de);
}

Rational wr31_omega2(const TransformParams& p) {
    const Rational &al = p["alpha"], &be = p["beta"], &ga = p["gamma"], &de = p["delta"];
    Rational den = be + ga - 2 * al - de;
    if (den == 0) fail(ErrorKind::DegenerateParameters, "beta+gamma-2alpha = delta");
    return (al - half) * (al - half) - de * (ga - 2 * al) * (2 * al - be - 1) / den;
}

std::vector<BaseTransform> build() {
    std::vector<BaseTransform> c;
    auto add = [&](BaseTransform t) { c.push_back(std::move(t)); };

    // ---- Case I ----
    add({"EP2", "second Euler-Pfaff", "I", 1, 1, 0, 1, 1, -1, 1,
         [](const TransformParams& p) { return p["c"] - p["a"] - p["b"]; },
         [](const TransformParams& p) { return spec({p["a"], p["b"]}, {p["c"]}); },
         [](const TransformParams& p) { return spec({p["c"] - p["a"], p["c"] - p["b"]}, {p["c"]}); }, no_check,
         generic({"a", "b", "c"})});

    add({"MP2", "second Miller-Paris", "I", 1, 1, 0, 1, 1, -1, 1,
         [](const TransformParams& p) { return p["c"] - p["a"] - p["b"] - total(p.m); },
         [](const TransformParams& p) { return with_shifts(spec({p["a"], p["b"]}, {p["c"]}), p); },
         [](const TransformParams& p) {
             long m = total(p.m);
             PolyQ w = p.m.empty() ? PolyQ(1) : weight_neg(build_hatQm(p["a"], p["b"], p["c"], p.f, p.m));
             return spec({p["c"] - p["a"] - m, p["c"] - p["b"] - m}, {p["c"]}, w);
         },
         [](const TransformParams& p) {
             long m = total(p.m);
             const Rational &a = p["a"], &b = p["b"], &cc = p["c"];
             require(poch(1 + a + b - cc, m) != 0 && poch(cc - a - m, m) != 0 && poch(cc - b - m, m) != 0,
                     "(1+a+b-c)_m (c-a-m)_m (c-b-m)_m != 0");
         },
         generic({"a", "b", "c"}, true)});

    // ---- Case II ----
    add({"EP1", "first Euler-Pfaff", "II", 1, 1, 1, 1, -1, -1, half,
         [](const TransformParams& p) { return -p["a"]; },
         [](const TransformParams& p) { return spec({p["a"], p["b"]}, {p["c"]}); },
         [](const TransformParams& p) { return spec({p["a"], p["c"] - p["b"]}, {p["c"]}); }, no_check,
         generic({"a", "b", "c"})});

    add({"MP1", "first Miller-Paris", "II", 1, 1, 1, 1, -1, -1, half,
         [](const TransformParams& p) { return -p["a"]; },
         [](const TransformParams& p) { return with_shifts(spec({p["a"], p["b"]}, {p["c"]}), p); },
         [](const TransformParams& p) {
             PolyQ w = p.m.empty() ? PolyQ(1) : weight_neg(build_Qm(p["b"], p["c"], p.f, p.m));
             return spec({p["a"], p["c"] - p["b"] - total(p.m)}, {p["c"]}, w);
         },
         [](const TransformParams& p) {
             for (const auto& f : p.f) require(f != p["b"], "b != f_j");
             require(poch(p["c"] - p["b"] - total(p.m), total(p.m)) != 0, "(c-b-m)_m != 0");
         },
         generic({"a", "b", "c"}, true)});

    add({"KR33", "Krattenthaler-Rao quadratic (3.3)", "II", 2, 1, 1, 1, -2, -1, Rational(1, 3),
         [](const TransformParams& p) { return -2 * p["alpha"]; },
         [](const TransformParams& p) { return spec({p["alpha"], p["alpha"] + half}, {p["beta"]}); },
         [](const TransformParams& p) { return spec({2 * p["alpha"], p["beta"] - half}, {2 * p["beta"] - 1}); },
         no_check, generic({"alpha", "beta"})});

    // ---- Case III ----
    add({"KR35", "Gauss quadratic, Krattenthaler-Rao (3.5)", "III", 1, 1, -1, 1, 4, -1, half,
         [](const TransformParams&) { return Rational(0); },
         [](const TransformParams& p) {
             return spec({p["alpha"], p["beta"]}, {(p["alpha"] + p["beta"] + 1) / 2});
         },
         [](const TransformParams& p) {
             return spec({p["alpha"] / 2, p["beta"] / 2}, {(p["alpha"] + p["beta"] + 1) / 2});
         },
         no_check, generic({"alpha", "beta"})});

    add({"KR39", "Krattenthaler-Rao quadratic (3.9)", "III", 1, 1, -1, 1, 4, -1, half,
         [](const TransformParams& p) { return p["beta"] - 1; },
         [](const TransformParams& p) { return spec({p["alpha"], 1 - p["alpha"]}, {p["beta"]}); },
         [](const TransformParams& p) {
             return spec({(p["beta"] - p["alpha"]) / 2, (p["alpha"] + p["beta"] - 1) / 2}, {p["beta"]});
         },
         no_check, generic({"alpha", "beta"})});

    // ---- Case IV ----
    add({"K1", "Kummer's first quadratic", "IV", 1, 1, 2, -1, -4, -1, 1,
         [](const TransformParams& p) { return -p["alpha"]; },
         [](const TransformParams& p) {
             return spec({p["alpha"], p["beta"]}, {1 - p["beta"] + p["alpha"]});
         },
         [](const TransformParams& p) {
             return spec({p["alpha"] / 2, p["alpha"] / 2 + half}, {1 - p["beta"] + p["alpha"]});
         },
         no_check, generic({"alpha", "beta"})});

    add({"AAR3111", "quadratic (3.1.11)", "IV", 2, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return -2 * p["alpha"]; },
         [](const TransformParams& p) {
             return spec({p["alpha"], p["beta"]}, {1 - p["beta"] + p["alpha"]});
         },
         [](const TransformParams& p) {
             return spec({p["alpha"], p["alpha"] - p["beta"] + half}, {1 - 2 * p["beta"] + 2 * p["alpha"]});
         },
         no_check, generic({"alpha", "beta"})});

    add({"WQ", "Whipple's quadratic", "IV", 1, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return -p["alpha"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"];
             return spec({al, be, de}, {1 - be + al, 1 - de + al});
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"];
             return spec({al / 2, (al + 1) / 2, 1 + al - be - de}, {1 - be + al, 1 - de + al});
         },
         no_check, generic({"alpha", "beta", "delta"})});

    add({"CR1", "first Choi-Rathie", "IV", 1, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return -2 * p["beta"]; },
         [](const TransformParams& p) { return spec({p["alpha"], p["beta"]}, {p["beta"] + 1}); },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             return spec({be, be - al / 2 + 1, be - al / 2 + half}, {be + 1, 2 * be - al + 1});
         },
         no_check, generic({"alpha", "beta"})});

    add({"CR2", "second Choi-Rathie", "IV", 1, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return -2 * p["beta"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             return spec({al + 1, 2 * al, be}, {al, be + 1});
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             return spec({be, be - al, be - al + half}, {be + 1, 2 * be - 2 * al + 1});
         },
         no_check, generic({"alpha", "beta"})});

    add({"RR31", "Rakha-Rathie (3.1)", "IV", 1, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return -2 * p["alpha"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             // pairs (1+α∓σ; α∓σ) as a weight
             return spec({2 * al, al - be - half}, {al + be + Rational(3, 2)}, weight_sigma(al, rr31_sigma2(p)));
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"];
             return spec({al, be, de + 1}, {al + be + Rational(3, 2), de});
         },
         no_check, generic({"alpha", "beta", "delta"})});

    add({"WR31", "Wang-Rathie (3.1)", "IV", 1, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return 1 - 2 * p["alpha"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &ga = p["gamma"];
             return spec({2 * al - 1, 2 * al - be - 1, 2 * al - ga}, {be + 1, ga},
                         weight_sigma(al - half, wr31_omega2(p)));
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &ga = p["gamma"], &de = p["delta"];
             return spec({al, al - half, be + ga - 2 * al, de + 1}, {be + 1, ga, de});
         },
         no_check, generic({"alpha", "beta", "gamma", "delta"})});

    add({"MP63", "Miller-Paris quadratic (6.3)", "IV", 1, 1, 2, -1, -4, -1, 1,
         [](const TransformParams& p) { return -p["alpha"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             return spec({al, be}, {1 - be + al}, weight_neg(build_hatR2m(al, be, p.f, p.m)));
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             return with_shifts(spec({al / 2, al / 2 + half}, {1 - be + al}), p);
         },
         no_check, generic({"alpha", "beta"}, true)});

    add({"MAI31", "Maier Theorem 3.1", "IV", 1, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return -p["alpha"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"];
             return spec({al, be, de}, {1 + al - be, 1 + al - de}, weight_pos(build_P2k(al, be, de, p.k)));
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"];
             return spec({al / 2, al / 2 + half, al - be - de - p.k + 1}, {1 + al - be, 1 + al - de});
         },
         [](const TransformParams& p) { require(p.k >= 0, "k >= 0"); },
         generic({"alpha", "beta", "delta"}, false, 2)});

    add({"MAI34", "Maier Theorem 3.4", "IV", 1, 1, 2, 1, -4, -1, 1,
         [](const TransformParams& p) { return -p["alpha"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"];
             return spec({al, be, de}, {1 + al - be, 1 + al - de},
                         weight_pos(build_hatP2k(al, be, de, p["gamma"], p.k)));
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"], &de = p["delta"], &ga = p["gamma"];
             return spec({al / 2, al / 2 + half, al - be - de - p.k + 1, ga + p.k}, {1 + al - be, 1 + al - de, ga});
         },
         [](const TransformParams& p) { require(p.k >= 0, "k >= 0"); },
         generic({"alpha", "beta", "delta", "gamma"}, false, 2)});

    // ---- Case V ----
    add({"K2", "Kummer's second quadratic", "V", 1, 2, 2, 2, 1, -1, half,
         [](const TransformParams& p) { return -p["alpha"]; },
         [](const TransformParams& p) { return spec({p["alpha"], p["beta"]}, {2 * p["beta"]}); },
         [](const TransformParams& p) {
             return spec({p["alpha"] / 2, p["alpha"] / 2 + half}, {p["beta"] + half});
         },
         no_check, generic({"alpha", "beta"})});

    add({"MP61", "Miller-Paris quadratic (6.1)", "V", 1, 2, 2, 2, 1, -1, half,
         [](const TransformParams& p) { return -p["alpha"]; },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             return spec({al, be - total(p.m)}, {2 * be}, weight_neg(build_R2m(be, p.f, p.m)));
         },
         [](const TransformParams& p) {
             const Rational &al = p["alpha"], &be = p["beta"];
             return with_shifts(spec({al / 2, al / 2 + half}, {be + half}), p);
         },
         no_check, generic({"alpha", "beta"}, true)});

    // ---- Case VI ----
    add({"N15814", "quadratic 15.8.14", "VI", 1, 2, 1, 1, Rational(-1, 4), -1, 1,
         [](const TransformParams& p) { return -p["alpha"] / 2; },
         [](const TransformParams& p) { return spec({p["alpha"], p["beta"]}, {2 * p["beta"]}); },
         [](const TransformParams& p) {
             return spec({p["alpha"] / 2, p["beta"] - p["alpha"] / 2}, {p["beta"] + half});
         },
         no_check, generic({"alpha", "beta"})});
    return c;
}

Real rel_diff(const Real& a, const Real& b) {
    Real d = abs(a - b);
    if (d == 0) return d;
    Real s = std::max(abs(a), abs(b));
    return d / s;
}

}  // namespace

const std::vector<BaseTransform>& catalog_base_transforms() {
    static const std::vector<BaseTransform> c = build();
    return c;
}

const BaseTransform& base_transform(const std::string& id) {
    for (const auto& t : catalog_base_transforms())
        if (t.id == id) return t;
    fail(ErrorKind::Unsupported, "unknown base transform " + id);
}

std::vector<Rational> transform_grid(const BaseTransform& t, int count) {
    std::vector<Rational> ok;
    const Rational lim(3, 4);
    for (long j = -39; j <= 39; ++j) {
        Rational x(j, 40);
        if (x <= t.x_lo || x >= t.x_hi) continue;
        if (abs(t.lhs_arg(x)) > lim || abs(t.rhs_arg(x)) > lim) continue;
        ok.push_back(x);
    }
    if (int(ok.size()) <= count) return ok;
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) out.push_back(ok[size_t(i) * (ok.size() - 1) / size_t(count - 1)]);
    return out;
}

TransformReport verify_base_transform(const BaseTransform& t, const TransformParams& p, const std::vector<Rational>& grid,
                                      int precision) {
    WorkingPrecision wp(precision);
    t.validate(p);
    HyperSpec L = t.lhs(p), R = t.rhs(p);
    for (const HyperSpec* s : {&L, &R})
        if (auto b = lower_pole(*s)) fail(ErrorKind::LowerPole, t.id + ": lower parameter " + to_string(*b));
    Rational lam = t.lambda_of(p);
    EvalOptions opt;
    opt.precision = precision;
    TransformReport rep;
    rep.exact = true;
    Real tol = pow(Real(10), 8 - precision);
    for (const auto& x : grid) {
        TransformPoint pt;
        pt.x = x;
        L.x = t.lhs_arg(x);
        R.x = t.rhs_arg(x);
        pt.lhs = evaluate(L, opt).value;
        Scalar r = evaluate(R, opt).value;
        Scalar pre = is_integer(lam) ? Scalar(ipow(1 - x, to_long(lam)))
                                     : Scalar::numeric(pow(to_real(1 - x), to_real(lam)));
        pt.rhs = pre * r;
        pt.exact = pt.lhs.exact && pt.rhs.exact;
        if (pt.exact) {
            pt.rel_discrepancy = pt.lhs.q == pt.rhs.q ? Real(0) : rel_diff(to_real(pt.lhs.q), to_real(pt.rhs.q));
        } else {
            pt.rel_discrepancy = rel_diff(pt.lhs.approx(), pt.rhs.approx());
            rep.exact = false;
        }
        if (pt.rel_discrepancy > rep.max_rel_discrepancy) rep.max_rel_discrepancy = pt.rel_discrepancy;
        rep.points.push_back(pt);
    }
    rep.exact = rep.exact && !grid.empty();
    rep.passed = rep.exact ? rep.max_rel_discrepancy == 0 : rep.max_rel_discrepancy <= tol;
    return rep;
}

}  // namespace hyperforge
