#pragma once

#include "hyperforge/exact.hpp"
#include "hyperforge/poly.hpp"

#include <vector>

namespace hyperforge {

// Y_p(u,v;t) = scale * tilde(t), scale = 1/Γ(e-d). Keeping Γ(e-d) apart
// leaves tilde with rational coefficients.
struct YPoly {
    PolyQ tilde;
    GammaRatio scale;

    bool exact() const;
    // the polynomial itself; requires exact()
    PolyQ poly() const;
};

// (r+1)F_r(-k, f+m; f)
Rational unit_shift_sum(long k, const std::vector<Rational>& f, const std::vector<long>& m);

YPoly build_Yp(long u, long v, const Rational& d, const Rational& e, const Rational& lambda,
               const std::vector<Rational>& h, const std::vector<long>& p);
PolyQ build_Qm(const Rational& b, const Rational& c, const std::vector<Rational>& f, const std::vector<long>& m);
PolyQ build_hatQm(const Rational& a, const Rational& b, const Rational& c, const std::vector<Rational>& f,
                  const std::vector<long>& m);
// α does not enter R_2m; only β and the shifts do.
PolyQ build_R2m(const Rational& beta, const std::vector<Rational>& f, const std::vector<long>& m);
PolyQ build_hatR2m(const Rational& alpha, const Rational& beta, const std::vector<Rational>& f,
                   const std::vector<long>& m);
PolyQ build_P2k(const Rational& alpha, const Rational& beta, const Rational& delta, long k);
PolyQ build_hatP2k(const Rational& alpha, const Rational& beta, const Rational& delta, const Rational& gamma,
                   long k);

long total(const std::vector<long>& m);

// Weights that turn a characteristic polynomial into per-term factors.
// Pair (ζ+1; ζ) over the roots ζ of q: n -> q(-n)/q(0).
PolyQ weight_neg(const PolyQ& q);
// Pair (1-ρ; -ρ) over the roots ρ of q: n -> q(n)/q(0).
PolyQ weight_pos(const PolyQ& q);
// Pairs (c-σ+1, c+σ+1; c-σ, c+σ): n -> ((c+n)^2-σ^2)/(c^2-σ^2).
PolyQ weight_sigma(const Rational& c, const Rational& sigma2);
// Pair (x+1; x): n -> (x+n)/x.
PolyQ weight_pair(const Rational& x);

}  // namespace hyperforge
