#pragma once

#include "regdet/specfun.hpp"

// Zeta-regularized products over arithmetic progressions,
//
//   prod_{k>=0} (d k + a)  :=  exp(-d/dw [ sum_k (d k + a)^{-w} ] at w = 0),
//
// kept as two independent implementations: the numeric definition through the
// Hurwitz zeta engine (regprod_numeric) and the Lerch-formula closed form
// (regprod_closed).  Each checks the other.

namespace regdet::regprod {

using specfun::Complex;
using specfun::EulerMaclaurinParams;

// One arithmetic progression d k + a, k = 0, 1, 2, ...
struct ProgressionSpec {
    double step;    // d > 0
    Complex offset; // a, with a/d not a nonpositive integer

    ProgressionSpec(double d, Complex a); // throws std::invalid_argument
};

// The definition, evaluated: sum_k (dk+a)^{-w} = d^{-w} zeta(w, a/d), so the
// regularized product is exp(log(d) zeta(0, a/d) - zeta'(0, a/d)).
// Restricted to Re(a/d) > 0.05 — the Euler-Maclaurin oracle degrades toward
// the nonpositive axis; the closed form covers the rest of the plane.
Complex regprod_numeric(const ProgressionSpec& spec,
                        const EulerMaclaurinParams& p = {});

// Lerch's formula zeta'(0, x) = log Gamma(x) - log(2 pi)/2 turns the
// definition into d^{1/2 - a/d} sqrt(2 pi) / Gamma(a/d).  Entire in a:
// at the would-be poles of Gamma the product legitimately vanishes and the
// returned value is an exact 0.
Complex regprod_closed(const ProgressionSpec& spec);

// The two progressions of the determinant formula, as instances:
//   phi1(s) = prod_{k>=0} (2k + 2 + s) = 2^{-s/2} sqrt(pi)    / Gamma(s/2 + 1)
//   phi2(s) = prod_{k>=0} (2k + 1 + s) = 2^{-s/2} sqrt(2 pi) / Gamma((s+1)/2)
// Both entire, with exact zeros at s in {-2, -4, ...} resp. {-1, -3, ...}.
Complex regprod_phi1(Complex s);
Complex regprod_phi2(Complex s);

} // namespace regdet::regprod
