#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regdet/ktheory.hpp"
#include "regdet/regprod.hpp"
#include "regdet/specfun.hpp"

// The regularized determinant G_K(s) of the Riemann operator on the higher
// K-groups of a number field with signature (r1, r2), in three independent
// presentations, plus certified checkers for its periodicity and reflection
// identities.

namespace regdet::detengine {

using ktheory::Signature;
using specfun::Complex;
using specfun::EulerMaclaurinParams;

// Constants attached to the field: degree r1 + 2 r2 and
// C(K) = (2 sqrt(pi))^{r1} (2 sqrt(2 pi))^{r2}.
struct FieldConstants {
    Signature signature;
    int degree;
    double c_of_k;

    explicit FieldConstants(Signature sig);
};

struct GridPointResult {
    Complex s;
    Complex lhs;
    Complex rhs;
    double residual; // |lhs - rhs| / max(1, |rhs|)
};

struct VerificationReport {
    std::string identity_name;
    std::vector<GridPointResult> gridpoints;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// |lhs - rhs| / max(1, |rhs|): relative for large values, absolute near the
// identities' legitimate zeros.
double blended_residual(Complex lhs, Complex rhs);

// z^e for integer e by repeated multiplication (preserves exact zeros;
// negative e inverts the base once).
Complex int_pow(Complex z, long e);

// G_K(s) = phi1(s)^{r1+r2} phi2(s)^{r2}; entire, no preconditions.  Exact
// zeros at s in {-2, -4, ...} (order r1+r2) and, when r2 > 0, at
// s in {-1, -3, ...} (order r2).
Complex g_closed(Complex s, const Signature& sig);

// The alternate display
//   s^{-r1-r2} Gamma_R(s)^{-r1} Gamma_C(s)^{-r2} (2 pi)^{-deg*s/2} C(K),
// singular as written at s = 0 and at the Gamma_R/Gamma_C poles; such inputs
// (within 1e-8) throw std::domain_error.  Equals g_closed elsewhere.
Complex g_alt(Complex s, const Signature& sig);

// The definition routed through the numeric Hurwitz engine:
// regprod_numeric(2, 2+s)^{r1+r2} * regprod_numeric(2, 1+s)^{r2}.
// Requires Re s > -1.9; the second factor (present only when r2 > 0)
// additionally requires Re s > -0.9 via regprod_numeric's own restriction.
Complex g_regularized(Complex s, const Signature& sig,
                      const EulerMaclaurinParams& p = {});

// The determinant over all n >= 0: (s - 1/2) s^{r1+r2-1} G_K(s).
Complex det_full(Complex s, const Signature& sig);

// lhs = G_K(s), rhs = G_K(s+2) (s+2)^{r1+r2} (s+1)^{r2} over the grid.
VerificationReport check_periodicity(const Signature& sig,
                                     const std::vector<Complex>& grid, double tol);

// lhs = G_K(s) G_K(-s), rhs = ((2/s) sin(pi s/2))^{r1} ((2/s) sin(pi s))^{r2}.
// Grid points with |s| < 1e-9 are skipped (the rhs has a removable limit
// at 0).
VerificationReport check_reflection(const Signature& sig,
                                    const std::vector<Complex>& grid, double tol);

// Oracle equivalence |regprod_numeric - regprod_closed| over the (d, a)
// corpus below; signature-independent.
VerificationReport check_lerch(double tol, const EulerMaclaurinParams& p = {});

// g_closed(0)^2, asserted (std::logic_error) to equal pi^{r1+r2} 2^{r2} to
// 1e-12 relative — the s -> 0 limit of the reflection identity's rhs.
Complex reflection_at_zero(const Signature& sig);

// Evaluates G_K(s) G_K(-s) at a rational s and compares with a caller-
// supplied algebraic reference value; true iff within 1e-10.
bool algebraicity_spot_check(const Signature& sig, ktheory::Rational s,
                             double reference);

// Row-major rectangular lattice: Re ascending outer, Im ascending inner.
std::vector<Complex> lattice_grid(double re_min, double re_max, int re_steps,
                                  double im_min, double im_max, int im_steps);

// Documented default grids.  The verification grid is the 10 x 20 lattice
// over Re, Im in [-4, 4] (200 points; no point lies on the real axis, so it
// avoids s = 0 and the negative integers).  The agreement grid is the
// 10 x 10 lattice over Re in [-1.5, 5], Im in [-4, 4] used for the
// closed/alt/regularized comparison.
std::vector<Complex> default_verification_grid();
std::vector<Complex> default_agreement_grid();

// Deterministic per-point jitter of amplitude `eps` (seeded), for off-lattice
// spot checks.
std::vector<Complex> jittered(const std::vector<Complex>& grid, double eps,
                              unsigned seed);

// The 60 (d, a) pairs for the Lerch oracle-equivalence suite:
// d in {1, 2, 3}, Re(a/d) in {0.1, 0.75, 2, 4.5, 8}, Im a in {-4, -1.3, 0.7, 4}.
std::vector<std::pair<double, Complex>> lerch_pair_corpus();

} // namespace regdet::detengine
