#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperforge/charpoly.hpp"
#include "hyperforge/transforms.hpp"
#include "oracle.hpp"

using namespace hyperforge;

namespace {

const int P = 64;

TransformParams named(std::initializer_list<std::pair<const char*, Rational>> v) {
    TransformParams p;
    for (const auto& [k, x] : v) p[k] = x;
    return p;
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& c = catalog_base_transforms();
    CHECK(c.size() == 20);
    const auto& ep1 = base_transform("EP1");
    CHECK(ep1.w == 1);
    CHECK(ep1.u == 1);
    CHECK(ep1.v == 1);
    CHECK(ep1.M == 1);
    CHECK(ep1.D == -1);
    CHECK(ep1.lambda_of(named({{"a", frac(2, 7)}, {"b", 1}, {"c", 3}})) == frac(-2, 7));
    const auto& kr35 = base_transform("KR35");
    CHECK(kr35.u == 1);
    CHECK(kr35.v == -1);
    CHECK(kr35.D == 4);
    CHECK(kr35.rhs_arg(frac(1, 4)) == frac(3, 4));
    const auto& k2 = base_transform("K2");
    CHECK((k2.w == 1 && k2.u == 2 && k2.v == 2 && k2.M == 2 && k2.D == 1));
    CHECK(k2.rhs_arg(frac(1, 3)) == frac(1, 4));
}

TEST_CASE("every transform holds on its grid") {
    PrecisionScope ps(P);
    for (const auto& t : catalog_base_transforms()) {
        auto grid = transform_grid(t);
        INFO(t.id);
        REQUIRE(grid.size() == 10);
        Sampler g(std::hash<std::string>{}(t.id));
        int ok = 0;
        for (int i = 0; i < 200 && ok < 10; ++i) {
            TransformParams p = t.sample(g);
            TransformReport r;
            try {
                r = verify_base_transform(t, p, grid, P);
            } catch (const MathError&) {
                continue;
            }
            INFO(p.str() << " worst " << to_string(r.max_rel_discrepancy, 6));
            CHECK(r.passed);
            ++ok;
        }
        CHECK(ok >= 10);
    }
}

TEST_CASE("EP2 at x = 0 and terminating instances") {
    PrecisionScope ps(P);
    const auto& t = base_transform("EP2");
    auto r0 = verify_base_transform(t, named({{"a", frac(1, 3)}, {"b", frac(2, 5)}, {"c", frac(7, 4)}}), {Rational(0)}, P);
    CHECK(r0.passed);
    CHECK(r0.points[0].lhs.approx() == 1);
    CHECK(r0.max_rel_discrepancy == 0);
    // a = -2 and c-b = -1: both sides are polynomials and λ = 1
    TransformParams p = named({{"a", -2}, {"b", frac(10, 3)}, {"c", frac(7, 3)}});
    auto r = verify_base_transform(t, p, {frac(1, 3)}, P);
    CHECK(r.exact);
    CHECK(r.passed);
    Rational x = frac(1, 3);
    Rational lhs = oracle::brute_sum({-2, frac(10, 3)}, {frac(7, 3)}, 2, x);
    CHECK(r.points[0].lhs.q == lhs);
    CHECK(r.points[0].rhs.q == (1 - x) * oracle::brute_sum({frac(13, 3), -1}, {frac(7, 3)}, 1, x));
}

TEST_CASE("MP1 with one unit shift at x = 1/4") {
    PrecisionScope ps(P);
    const auto& t = base_transform("MP1");
    TransformParams p = named({{"a", frac(2, 3)}, {"b", frac(1, 5)}, {"c", frac(9, 4)}});
    p.f = {frac(1, 3)};
    p.m = {1};
    CHECK(t.rhs_arg(frac(1, 4)) == frac(-1, 3));
    auto r = verify_base_transform(t, p, {frac(1, 4)}, P);
    CHECK(r.passed);
    CHECK(r.max_rel_discrepancy < pow(Real(10), 8 - P));
}

TEST_CASE("Miller-Paris builders reduce to Euler-Pfaff at m = 0") {
    TransformParams p = named({{"a", frac(2, 3)}, {"b", frac(1, 5)}, {"c", frac(9, 4)}});
    for (auto [mp, ep] : {std::pair{"MP1", "EP1"}, std::pair{"MP2", "EP2"}}) {
        const auto& a = base_transform(mp);
        const auto& b = base_transform(ep);
        CHECK(same_parameters(a.lhs(p), b.lhs(p)));
        CHECK(same_parameters(a.rhs(p), b.rhs(p)));
        CHECK(a.rhs(p).weight == b.rhs(p).weight);
        CHECK(a.lambda_of(p) == b.lambda_of(p));
    }
}

TEST_CASE("root form and weight form of the right side agree") {
    PrecisionScope ps(P);
    Sampler g(9);
    const auto& t = base_transform("MP2");
    int ok = 0;
    for (int i = 0; i < 100 && ok < 5; ++i) {
        TransformParams p = t.sample(g);
        try {
            t.validate(p);
            HyperSpec R = t.rhs(p);
            R.x = frac(1, 5);
            CHyperSpec C = weight_to_root_shift(R, P);
            C.x = R.x;
            Real a = evaluate(R).value.approx();
            ComplexValue b = evaluate(C);
            CHECK(abs(b.value - Complex(a)) <= pow(Real(10), 8 - P) * abs(Complex(a)));
            ++ok;
        } catch (const MathError&) {
        }
    }
    CHECK(ok >= 5);
}
