#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperforge/hyperseries.hpp"
#include "oracle.hpp"

using namespace hyperforge;
using oracle::Gen;

namespace {

const int P = 64;

Real rel_err(const Real& a, const Real& b) {
    Real d = abs(a - b);
    Real m = std::max(abs(a), abs(b));
    return m == 0 ? d : Real(d / m);
}

Rational exact_of(const HyperSpec& s) {
    SeriesValue v = eval_terminating(s);
    REQUIRE(v.exact);
    REQUIRE(v.value.exact);
    return v.value.q;
}

}  // namespace

TEST_CASE("terminating examples") {
    Rational b(3, 7), c(-5, 4), x(2, 9);
    CHECK(exact_of(HyperSpec({-1, b}, {c}, x)) == 1 - b * x / c);
    CHECK(exact_of(HyperSpec({-1, 1, 2}, {Rational(3, 2), Rational(3, 2)})) == Rational(1, 9));
    HyperSpec z({Rational(1, 3)}, {Rational(1, 5)}, Rational(1, 2));
    z.weight = PolyQ();
    CHECK(exact_of(z) == 0);
    CHECK_THROWS_AS(eval_terminating(HyperSpec({Rational(1, 2)}, {2})), MathError);
}

TEST_CASE("lower pole before termination is rejected") {
    try {
        eval_terminating(HyperSpec({-3, 1}, {-1}));
        FAIL("expected LowerPole");
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::LowerPole);
    }
    // earlier termination makes the lower pole harmless
    CHECK(exact_of(HyperSpec({-1, 1}, {-2})) == Rational(3, 2));
}

TEST_CASE("smallest non-positive upper parameter sets the termination index") {
    CHECK(*termination_index(HyperSpec({-5, -2, Rational(1, 2)}, {3})) == 2);
    HyperSpec t({Rational(1, 2)}, {}, Rational(1, 3));
    t.truncate_at = 4;
    CHECK(*termination_index(t) == 4);
}

TEST_CASE("convergence classification") {
    CHECK(check_convergence(HyperSpec({1, 1}, {2}, 1)) == Convergence::Divergent);
    CHECK(check_convergence(HyperSpec({1, 1}, {Rational(7, 2)}, 1)) == Convergence::ConvergesAtUnity);
    CHECK(check_convergence(HyperSpec({-5, 1}, {2}, 1)) == Convergence::Terminates);
    CHECK(check_convergence(HyperSpec({1, 1}, {2}, Rational(1, 2))) == Convergence::ConvergesInsideDisk);
    HyperSpec w({1, 1}, {Rational(7, 2)}, 1);
    w.weight = PolyQ{1, 1, 1};
    CHECK(check_convergence(w) == Convergence::Divergent);
    CHECK(check_convergence(HyperSpec({1, 1}, {Rational(3, 2)}, -1)) == Convergence::ConvergesAtUnity);
}

TEST_CASE("numeric examples") {
    PrecisionScope ps(P);
    EvalOptions opt;
    SeriesValue v = eval_convergent(HyperSpec({1, 1}, {2}, Rational(1, 2)), opt);
    CHECK_FALSE(v.exact);
    CHECK(rel_err(v.value.r, 2 * log(Real(2))) < pow(Real(10), 8 - P));

    SeriesValue z = eval_convergent(HyperSpec({Rational(1, 3)}, {Rational(1, 4)}, 0), opt);
    CHECK(z.value.approx() == 1);

    Rational a(1, 3), b(1, 4), c(7, 2);
    SeriesValue gs = evaluate(HyperSpec({a, b}, {c}, 1), opt);
    Real want = gamma_ratio_eval(GammaRatio({c, c - a - b}, {c - a, c - b}));
    CHECK(rel_err(gs.value.r, want) < Real("1e-48"));
}

TEST_CASE("accelerated sums at the boundary") {
    PrecisionScope ps(P);
    Gen g(21);
    for (int i = 0; i < 8; ++i) {
        Rational a = g.generic(6, 7), b = g.generic(6, 7);
        Rational c = a + b + Rational(g.integer(1, 5), g.integer(1, 3));
        if (is_nonpos_int(c) || is_nonpos_int(c - a) || is_nonpos_int(c - b)) continue;
        SeriesValue v = evaluate(HyperSpec({a, b}, {c}, 1));
        Real want = gamma_ratio_eval(GammaRatio({c, c - a - b}, {c - a, c - b}));
        CHECK(rel_err(v.value.r, want) < Real("1e-48"));
    }
    // Kummer: 2F1(a,b;1+a-b;-1)
    for (int i = 0; i < 6; ++i) {
        Rational a = g.generic(5, 7), b = g.generic(5, 7);
        if (is_nonpos_int(1 + a - b) || is_nonpos_int(1 + a / 2 - b) || is_nonpos_int(1 + a)) continue;
        SeriesValue v = evaluate(HyperSpec({a, b}, {1 + a - b}, -1));
        Real want = gamma_ratio_eval(GammaRatio({1 + a - b, 1 + a / 2}, {1 + a, 1 + a / 2 - b}));
        CHECK(rel_err(v.value.r, want) < Real("1e-48"));
    }
}

TEST_CASE("root shift examples") {
    PrecisionScope ps(P);
    HyperSpec s({-3, Rational(1, 2)}, {Rational(5, 3)}, Rational(1, 2));
    s.weight = PolyQ{1, 1};
    CHyperSpec r = weight_to_root_shift(s, P);
    REQUIRE(r.upper.size() == 3);
    CHECK(abs(r.upper[2] - Complex(Real(2))) < Real("1e-60"));
    CHECK(abs(r.lower[1] - Complex(Real(1))) < Real("1e-60"));

    HyperSpec c({-2, 1}, {3});
    c.weight = PolyQ(Rational(5));
    CHyperSpec rc = weight_to_root_shift(c, P);
    CHECK(rc.upper.size() == 2);
    CHECK(abs(rc.prefactor - Complex(Real(5))) < Real("1e-60"));

    HyperSpec bad({-2, 1}, {3});
    bad.weight = PolyQ{-2, 1};
    CHECK_THROWS_AS(weight_to_root_shift(bad, P), MathError);
    bad.weight = PolyQ{0, 1};
    CHECK_THROWS_AS(weight_to_root_shift(bad, P), MathError);
}

TEST_CASE("property: root-shift equivalence") {
    PrecisionScope ps(P);
    Gen g(22);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> w;
        int deg = int(g.integer(1, 3));
        for (int j = 0; j <= deg; ++j) w.push_back(g.rat(6, 5));
        PolyQ weight(w);
        if (weight.degree() < 1 || weight(Rational(0)) == 0) continue;
        HyperSpec s({-g.integer(1, 6), g.rat(), g.rat()}, {g.rat(), g.rat()}, g.rat(3, 3));
        s.weight = weight;
        Rational ex;
        CHyperSpec r;
        try {
            ex = exact_of(s);
            r = weight_to_root_shift(s, P);
        } catch (const MathError&) {
            continue;
        }
        Complex v = evaluate(r).value;
        CHECK(abs(v - Complex(ex)) <= pow(Real(10), 8 - P) * std::max(Real(1), Real(abs(to_real(ex)))));
        ++checked;
    }
    // non-terminating at |x| < 1
    for (int i = 0; i < 10; ++i) {
        HyperSpec s({g.generic(), g.generic()}, {g.generic()}, Rational(g.integer(-2, 2), 5));
        s.weight = PolyQ{g.rat(6, 5), g.rat(6, 5), g.rat(6, 5)};
        if (s.weight.degree() < 1 || s.weight(Rational(0)) == 0) continue;
        CHyperSpec r;
        try {
            r = weight_to_root_shift(s, P);
        } catch (const MathError&) {
            continue;
        }
        Real a = evaluate(s).value.approx();
        Complex b = evaluate(r).value;
        CHECK(abs(b - Complex(a)) <= pow(Real(10), 8 - P) * std::max(Real(1), Real(abs(a))));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("property: recurrence matches direct pochhammer terms") {
    Gen g(23);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> up{g.rat(), g.rat(), g.rat()}, lo{g.rat(), g.rat()};
        Rational x = g.rat(5, 5);
        auto t = series_terms(HyperSpec(up, lo, x), 31);
        for (long n = 0; n <= 30; ++n) {
            Rational num(1), den = oracle::fact(n);
            for (auto& a : up) num *= oracle::rising(a, n);
            for (auto& b : lo) den *= oracle::rising(b, n);
            CHECK(t[n] == num / den * ipow(x, n));
        }
    }
}

TEST_CASE("property: linear in the weight and exact when terminating") {
    Gen g(24);
    for (int i = 0; i < 40; ++i) {
        HyperSpec s({-g.integer(0, 7), g.rat(), g.rat()}, {g.rat(), g.rat()}, g.rat(4, 4));
        PolyQ p{g.rat(), g.rat(), g.rat()}, q{g.rat(), g.rat()};
        HyperSpec sp = s, sq = s, spq = s;
        sp.weight = p;
        sq.weight = q;
        spq.weight = p + q;
        SeriesValue v = eval_terminating(spq);
        CHECK(v.exact);
        CHECK(v.value.exact);
        CHECK(v.value.q == exact_of(sp) + exact_of(sq));
        long N = oracle::first_zero(s.upper);
        CHECK(exact_of(sp) == oracle::brute_sum(s.upper, s.lower, N, [&](long n) { return p(Rational(n)); }, s.x));
    }
}
