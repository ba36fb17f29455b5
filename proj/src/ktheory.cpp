#include "regdet/ktheory.hpp"

#include <stdexcept>

namespace regdet::ktheory {

Signature::Signature(int r1_, int r2_) : r1(r1_), r2(r2_) {
    if (r1 < 0 || r2 < 0)
        throw std::invalid_argument("Signature: r1 and r2 must be nonnegative");
    if (r1 + r2 < 1)
        throw std::invalid_argument("Signature: r1 + r2 must be at least 1");
}

int borel_rank(long n, const Signature& sig) {
    if (n < 2)
        throw std::invalid_argument(
            "borel_rank: defined for n >= 2 only (use rank_low for n = 0, 1)");
    switch (n % 4) {
    case 1: return sig.r1 + sig.r2;
    case 3: return sig.r2;
    default: return 0;
    }
}

int rank_low(int n, const Signature& sig) {
    if (n == 0)
        return 1;
    if (n == 1)
        return sig.r1 + sig.r2 - 1;
    throw std::invalid_argument("rank_low: defined for n = 0 and n = 1 only");
}

Rational riemann_eigenvalue(long n) {
    if (n < 0)
        throw std::invalid_argument("riemann_eigenvalue: n must be nonnegative");
    return Rational(1 - static_cast<long long>(n), 2);
}

Complex truncated_char_poly(Complex s, const Signature& sig, long n_max) {
    if (n_max < 2)
        throw std::invalid_argument("truncated_char_poly: n_max must be >= 2");
    if (n_max > 10000)
        throw std::invalid_argument("truncated_char_poly: n_max must be <= 10^4");
    Complex product(1.0, 0.0);
    for (long n = 2; n <= n_max; ++n) {
        const int rank = borel_rank(n, sig);
        if (rank == 0)
            continue;
        const Rational lambda = riemann_eigenvalue(n);
        const Complex factor =
            s - Complex(static_cast<double>(lambda.numerator()) /
                            static_cast<double>(lambda.denominator()),
                        0.0);
        for (int i = 0; i < rank; ++i)
            product *= factor;
    }
    return product;
}

} // namespace regdet::ktheory
