#pragma once

#include "hyperforge/exact.hpp"
#include "hyperforge/hyperseries.hpp"
#include "hyperforge/sampling.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hyperforge {

// Named scalars plus the shift data (f, m) and Maier's k where relevant.
struct TransformParams {
    std::map<std::string, Rational> s;
    std::vector<Rational> f;
    std::vector<long> m;
    long k = 0;

    const Rational& operator[](const std::string& name) const;
    Rational& operator[](const std::string& name) { return s[name]; }
    std::string str() const;
};

// F(lhs | M x^w) = (1-x)^λ F(rhs | D x^u / (1-x)^v)
// Parameters that are roots of a characteristic polynomial enter the
// builders as weights, so both sides stay rational.
struct BaseTransform {
    std::string id;
    std::string name;
    std::string case_label;
    long w = 1, u = 1, v = 0;
    Rational M{1}, D{1};
    Rational x_lo{-1}, x_hi{1};  // open interval
    std::function<Rational(const TransformParams&)> lambda_of;
    std::function<HyperSpec(const TransformParams&)> lhs;
    std::function<HyperSpec(const TransformParams&)> rhs;
    // throws ConditionsViolated (or a pole kind) when params are not admissible
    std::function<void(const TransformParams&)> validate;
    std::function<TransformParams(Sampler&)> sample;

    Rational lhs_arg(const Rational& x) const;
    Rational rhs_arg(const Rational& x) const;
};

const std::vector<BaseTransform>& catalog_base_transforms();
const BaseTransform& base_transform(const std::string& id);

// Up to `count` rational points inside the domain where both arguments have
// modulus at most 3/4.
std::vector<Rational> transform_grid(const BaseTransform& t, int count = 10);

struct TransformPoint {
    Rational x;
    Scalar lhs, rhs;
    Real rel_discrepancy{0};
    bool exact = false;
};

struct TransformReport {
    std::vector<TransformPoint> points;
    Real max_rel_discrepancy{0};
    bool exact = false;  // every point compared exactly
    bool passed = false;
};

TransformReport verify_base_transform(const BaseTransform& t, const TransformParams& p, const std::vector<Rational>& grid,
                                      int precision);

}  // namespace hyperforge
