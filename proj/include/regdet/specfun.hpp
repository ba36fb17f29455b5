#pragma once

#include <complex>
#include <utility>

// Complex special functions: log-Gamma, Gamma, the real/complex gamma factors
// Gamma_R and Gamma_C, and the Hurwitz zeta function with its w-derivative via
// Euler-Maclaurin continuation.  Everything here is pure and reentrant; the
// coefficient tables are compile-time constants.

namespace regdet::specfun {

using Complex = std::complex<double>;

// Tuning knobs for the Euler-Maclaurin continuation of zeta(w, a).
//   cutoff_N        length of the directly summed head
//   bernoulli_terms number of Bernoulli correction terms in the tail
// Defaults give a worst blended residual of ~2e-11 on the documented accuracy
// grid (Re w in [-2, 10], |Im w| <= 10, Re a in [0.3, 8], |Im a| <= 4) and
// ~1e-13 at w = 0, the point the regularized products evaluate at.
struct EulerMaclaurinParams {
    int cutoff_N = 32;
    int bernoulli_terms = 12;

    // Throws std::invalid_argument unless cutoff_N >= 8 and
    // 4 <= bernoulli_terms <= 30 (beyond 30 the asymptotic series is useless
    // in binary64).
    void validate() const;
};

// log Gamma(z).  For Re z >= 0.5 this is the standard continuous branch (the
// one mpmath/SLATEC return); for Re z < 0.5 the reflection formula is used and
// the imaginary part is reduced to (-pi, pi].  In either case
// exp(log_gamma(z)) = Gamma(z) to <= 1e-13 relative for |z| <= 50 away from
// poles.  Inputs within 1e-8 of a pole {0, -1, -2, ...} throw
// std::domain_error naming the pole.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)); throws std::overflow_error when the result
// exceeds binary64 range, std::domain_error near poles.
Complex gamma(Complex z);

// 1/Gamma(z).  Entire: returns exact 0 at the poles of Gamma (nonpositive
// integers) and never throws for finite input within the supported disk.
Complex reciprocal_gamma(Complex z);

// Gamma_R(s) = Gamma(s/2) pi^{-s/2}.  Poles at s in {0, -2, -4, ...}.
Complex gamma_R(Complex s);

// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s).  Poles at s in {0, -1, -2, ...}.
Complex gamma_C(Complex s);

// sin(pi z) with the real part of z reduced to [-1/2, 1/2] first, so the
// result is exactly 0 at real integers and accurate near them.
Complex sin_pi(Complex z);

// Hurwitz zeta zeta(w, a) = sum_{k>=0} (k+a)^{-w}, analytically continued in w
// by the Euler-Maclaurin formula
//   sum_{k<N} (k+a)^{-w} + (N+a)^{1-w}/(w-1) + (N+a)^{-w}/2
//   + sum_j B_{2j}/(2j)! (w)_{2j-1} (N+a)^{-w-2j+1}.
// Preconditions: a not within 1e-8 of {0, -1, -2, ...}; |w - 1| >= 1e-8.
// Accuracy contract on the documented grid above: blended residual <= 1e-10.
Complex hurwitz_zeta(Complex w, Complex a, const EulerMaclaurinParams& p = {});

// d/dw zeta(w, a), the termwise derivative of the same formula (each
// (k+a)^{-w} contributes -log(k+a) (k+a)^{-w}, the rising factorials are
// differentiated by the product rule).  Same preconditions.  Agrees with a
// central finite difference of hurwitz_zeta (step 1e-5) to <= 1e-7.
Complex hurwitz_zeta_dw(Complex w, Complex a, const EulerMaclaurinParams& p = {});

// Value and w-derivative in one pass (the regularized products need both at
// w = 0; this avoids walking the sum twice).
std::pair<Complex, Complex> hurwitz_zeta_with_dw(Complex w, Complex a,
                                                 const EulerMaclaurinParams& p = {});

} // namespace regdet::specfun
