#pragma once

#include <boost/rational.hpp>

#include "regdet/specfun.hpp"

// Borel's rank table for K_n(A), the Riemann-operator spectrum, and the
// truncated characteristic product.  Everything in this module is exact
// (integers and rationals); only truncated_char_poly returns a float, and
// that is just the evaluated product.

namespace regdet::ktheory {

using specfun::Complex;
using Rational = boost::rational<long long>;

// Counts of real and complex places (r1, r2); the field degree is r1 + 2 r2.
struct Signature {
    int r1;
    int r2;

    Signature(int r1_, int r2_); // throws std::invalid_argument unless
                                 // r1, r2 >= 0 and r1 + r2 >= 1
    int degree() const { return r1 + 2 * r2; }

    bool operator==(const Signature&) const = default;
};

// The two ranks below the main product's range: rank K_0 = 1 and
// rank K_1 = r1 + r2 - 1 (Dirichlet).
struct RankProfile {
    Signature signature;
    int lowrank_K0;
    int lowrank_K1;

    explicit RankProfile(Signature sig)
        : signature(sig), lowrank_K0(1), lowrank_K1(sig.r1 + sig.r2 - 1) {}
};

// rank K_n(A) for n >= 2: r1+r2 if n = 1 mod 4, r2 if n = 3 mod 4, else 0.
// n < 2 is a misuse (those ranks live in rank_low) and throws
// std::invalid_argument.
int borel_rank(long n, const Signature& sig);

// rank K_0 = 1, rank K_1 = r1 + r2 - 1; only n = 0 and n = 1 are accepted.
int rank_low(int n, const Signature& sig);

// Eigenvalue of the Riemann operator on K_n(A): exactly (1 - n)/2.
Rational riemann_eigenvalue(long n);

// Finite truncation prod_{1 < n <= n_max} (s - (1-n)/2)^{rank K_n}.
// Requires 2 <= n_max <= 10^4.
Complex truncated_char_poly(Complex s, const Signature& sig, long n_max);

} // namespace regdet::ktheory
