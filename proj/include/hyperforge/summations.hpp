#pragma once

#include "hyperforge/exact.hpp"
#include "hyperforge/hyperseries.hpp"
#include "hyperforge/sampling.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hyperforge {

// Union of the parameters used by the summation rules. Each rule reads the
// fields it needs and ignores the rest.
struct SumArgs {
    long n = 0, k = 0;
    long u = 1, v = 0;
    Rational a{0}, b{0}, c{0}, d{0}, e{0};
    Rational lambda{0}, a2{0}, b1{0}, b2{0}, b3{0}, alpha{0};
    std::vector<Rational> h;
    std::vector<long> p;

    std::string str() const;
};

struct Constraint {
    std::string name;
    ErrorKind kind;
    std::function<bool(const SumArgs&)> holds;
};

struct SummationRule {
    std::string id;
    std::vector<Constraint> constraints;
    std::function<HyperSpec(const SumArgs&)> lhs;
    std::function<GammaRatio(const SumArgs&)> closed_form;
    // draw from the admissible region; may still hit a pole, callers skip those
    std::function<SumArgs(Sampler&)> sample;

    // throws the kind of the first failing constraint
    void validate(const SumArgs& a) const;
    // validate, then reduce the closed form
    Scalar apply(const SumArgs& a) const;
    // spec has the parameter multisets of lhs(a)
    bool matches(const HyperSpec& s, const SumArgs& a) const;
};

const std::vector<SummationRule>& summation_rules();
const SummationRule& summation_rule(const std::string& id);

Scalar gauss_sum(const Rational& a, const Rational& b, const Rational& c);
Scalar saalschutz_sum(long n, const Rational& a2, const Rational& b1, const Rational& b2, const Rational& lambda,
                      long k);
Scalar rakha_rathie_sum(long n, long k, const Rational& a2, const Rational& b1, const Rational& b2,
                        const Rational& b3, const Rational& lambda);
Scalar kim_rathie_sum(long n, long k, const Rational& a2, const Rational& b1, const Rational& b2,
                      const Rational& lambda);
Scalar bailey_2balanced_sum(long n, long k, const Rational& alpha, const Rational& lambda);
Scalar karlsson_minton_sum(const Rational& a, const Rational& d, const std::vector<Rational>& h,
                           const std::vector<long>& p);
Scalar ipd_sum(long u, long v, long k, const Rational& lambda, const Rational& d, const Rational& e,
               const std::vector<Rational>& h, const std::vector<long>& p);
// The pre-simplified (u,v) forms: "ipd10", "ipd11", "ipd1-1", "ipd12", "ipd22", "ipd21".
Scalar ipd_special(const std::string& form, long k, const Rational& lambda, const Rational& d, const Rational& e,
                   const std::vector<Rational>& h, const std::vector<long>& p);
Scalar whipple_3f2_sum(long k, const Rational& lambda, const Rational& a2, const Rational& b1);
Scalar bailey_np2_sum(long n, long k, const Rational& lambda, const Rational& b);
Scalar dougall_5f4_sum(long n, long k, const Rational& lambda, const Rational& b1, const Rational& b2);

}  // namespace hyperforge
