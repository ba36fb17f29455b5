#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "regdet/ktheory.hpp"

// Signature (r1, r2) of a number field from a defining polynomial, by exact
// integer Sturm sequences.  No floating point is involved in root counting;
// coefficient growth in the remainder sequence is controlled by subresultant
// scaling.

namespace regdet::numberfield {

using BigInt = mpz_class;

// Dense big-integer polynomial, coefficients in ascending degree order.
// Normalized form has no trailing zero coefficients; the zero polynomial is
// not a valid value for any operation here.
struct IntegerPolynomial {
    std::vector<BigInt> coeffs;

    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> c);

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    const BigInt& leading() const { return coeffs.back(); }
    bool is_zero() const { return coeffs.empty(); }

    bool operator==(const IntegerPolynomial&) const = default;
};

// Text format: comma-separated ascending integer coefficients,
// e.g. "-2,0,0,1" is x^3 - 2.  Trailing zero coefficients are stripped; an
// all-zero or malformed list throws std::invalid_argument.
IntegerPolynomial parse_polynomial(const std::string& text);
std::string to_string(const IntegerPolynomial& f);

IntegerPolynomial derivative(const IntegerPolynomial& f);
IntegerPolynomial multiply(const IntegerPolynomial& a, const IntegerPolynomial& b);

// Exact division: returns the quotient iff g divides f exactly over Z[x].
std::optional<IntegerPolynomial> divide_exact(const IntegerPolynomial& f,
                                              const IntegerPolynomial& g);

BigInt content(const IntegerPolynomial& f);
IntegerPolynomial primitive_part(const IntegerPolynomial& f);

// Exact value f(x) at an integer, and the sign of f(num/den) for den > 0
// (computed as the sign of sum c_j num^j den^{deg-j}, no rounding anywhere).
BigInt evaluate(const IntegerPolynomial& f, const BigInt& x);
int sign_at(const IntegerPolynomial& f, const BigInt& num, const BigInt& den);

// Fraction-free signed remainder sequence.  polys[0] = f, polys[1] = f', and
// each later element is a positive constant multiple of the corresponding
// classical Sturm-chain element (subresultant scaling keeps coefficients
// small; the construction corrects the signs the scaling would otherwise
// scramble).  The chain ends at a nonzero constant iff f is squarefree.
struct SturmChain {
    std::vector<IntegerPolynomial> polys;
};

SturmChain sturm_chain(const IntegerPolynomial& f);

// Number of sign variations in the chain at -infinity / +infinity, read off
// the leading coefficients.
int sign_variations_at_infinity(const SturmChain& chain, bool negative);

// f / gcd(f, f'), content removed, sign normalized to positive leading
// coefficient.  Requires degree >= 1.
IntegerPolynomial squarefree_part(const IntegerPolynomial& f);

// Distinct real roots of a squarefree f via Sturm's theorem.  Throws
// std::domain_error if f is not squarefree (detected when the chain's last
// nonzero element has degree >= 1).
int count_real_roots(const IntegerPolynomial& f);

// r1 = number of real roots, r2 = (deg f - r1)/2.  Requires f squarefree of
// degree >= 1; irreducibility is the caller's responsibility (the CLI prints
// the caveat).
ktheory::Signature signature_from_polynomial(const IntegerPolynomial& f);

} // namespace regdet::numberfield
