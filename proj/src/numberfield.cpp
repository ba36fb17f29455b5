#include "regdet/numberfield.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace regdet::numberfield {

namespace {

void strip_trailing_zeros(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

int sign_of(const BigInt& x) { return sgn(x); }

// lc(g)^{deg f - deg g + 1} f = q g + r with deg r < deg g (pseudo-division).
IntegerPolynomial pseudo_remainder(const IntegerPolynomial& f,
                                   const IntegerPolynomial& g) {
    std::vector<BigInt> r = f.coeffs;
    const long dg = g.degree();
    const BigInt& lg = g.leading();
    long dr = static_cast<long>(r.size()) - 1;
    long steps = dr - dg + 1;
    while (dr >= dg && steps > 0) {
        const BigInt lead = r[dr];
        for (long i = 0; i <= dr; ++i)
            r[i] *= lg;
        for (long i = 0; i <= dg; ++i)
            r[dr - dg + i] -= lead * g.coeffs[i];
        --steps;
        while (dr >= 0 && r[dr] == 0)
            --dr;
        r.resize(dr + 1);
        // remaining multiplier applications keep the classical
        // lc(g)^{deg f - deg g + 1} scaling even if the degree dropped by
        // more than one
        if (dr < dg) {
            for (long k = 0; k < steps; ++k)
                for (auto& c : r)
                    c *= lg;
            break;
        }
    }
    strip_trailing_zeros(r);
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial divide_by_const(const IntegerPolynomial& f, const BigInt& d) {
    assert(d != 0);
    std::vector<BigInt> q(f.coeffs.size());
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        BigInt rem;
        mpz_tdiv_qr(q[i].get_mpz_t(), rem.get_mpz_t(), f.coeffs[i].get_mpz_t(),
                    d.get_mpz_t());
        assert(rem == 0 && "subresultant divisor must divide exactly");
        (void)rem;
    }
    return IntegerPolynomial(std::move(q));
}

IntegerPolynomial negate(IntegerPolynomial f) {
    for (auto& c : f.coeffs)
        c = -c;
    return f;
}

BigInt pow_big(const BigInt& base, long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

// Subresultant remainder sequence of (f, f') with per-element sign
// corrections so that the returned chain is elementwise a *positive* multiple
// of the classical Sturm chain.  Writing sigma_k for the raw subresultant
// elements and s_k for the Sturm elements, sigma_k = eps_k c_k s_k with
// c_k > 0, and the pseudo-remainder step gives
//     sigma_{k+1} = R / D,  R = lc(sigma_k)^{delta+1} sigma_{k-1} mod sigma_k,
// so eps_{k+1} = -eps_{k-1} * sign(lc(sigma_k))^{delta+1} * sign(D).
struct RawChain {
    std::vector<IntegerPolynomial> polys; // raw subresultant elements
    std::vector<int> eps;                 // sign corrections
};

RawChain subresultant_chain(const IntegerPolynomial& f) {
    RawChain chain;
    chain.polys.push_back(f);
    chain.eps.push_back(1);
    IntegerPolynomial fp = derivative(f);
    if (fp.is_zero())
        return chain; // degree 0 input
    chain.polys.push_back(fp);
    chain.eps.push_back(1);

    IntegerPolynomial A = f, B = fp;
    BigInt g(1), h(1);
    while (true) {
        const long delta = A.degree() - B.degree();
        IntegerPolynomial R = pseudo_remainder(A, B);
        if (R.is_zero())
            break;
        const BigInt divisor = g * pow_big(h, delta);
        IntegerPolynomial C = divide_by_const(R, divisor);

        const int k = static_cast<int>(chain.polys.size());
        const int eps_prev2 = chain.eps[k - 2]; // eps of A's slot
        const int lc_sign = sign_of(B.leading());
        const int mult_sign = (delta % 2 == 0) ? lc_sign : 1; // sign(lc^{delta+1})
        const int eps_next = -eps_prev2 * mult_sign * sign_of(divisor);

        chain.polys.push_back(C);
        chain.eps.push_back(eps_next);

        A = B;
        B = std::move(C);
        g = A.leading();
        // h = g^delta h^{1-delta}
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            const BigInt num = pow_big(g, delta);
            BigInt rem;
            BigInt den = pow_big(h, delta - 1);
            BigInt q;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                        den.get_mpz_t());
            assert(rem == 0 && "subresultant h-update must divide exactly");
            (void)rem;
            h = q;
        }
        if (B.degree() == 0)
            break;
    }
    return chain;
}

} // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
    strip_trailing_zeros(coeffs);
}

IntegerPolynomial parse_polynomial(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::string token;
    std::istringstream in(text);
    bool saw_any = false;
    if (!text.empty() && text.back() == ',')
        throw std::invalid_argument("polynomial: trailing comma in \"" + text +
                                    "\"");
    while (std::getline(in, token, ',')) {
        saw_any = true;
        const auto b = token.find_first_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("polynomial: empty coefficient in \"" +
                                        text + "\"");
        const auto e = token.find_last_not_of(" \t");
        const std::string body = token.substr(b, e - b + 1);
        try {
            coeffs.emplace_back(body); // mpz_class(string) validates the digits
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("polynomial: \"" + body +
                                        "\" is not an integer coefficient");
        }
    }
    if (!saw_any)
        throw std::invalid_argument("polynomial: empty coefficient list");
    strip_trailing_zeros(coeffs);
    if (coeffs.empty())
        throw std::invalid_argument("polynomial: the zero polynomial is not accepted");
    return IntegerPolynomial(std::move(coeffs));
}

std::string to_string(const IntegerPolynomial& f) {
    std::string out;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i)
            out += ",";
        out += f.coeffs[i].get_str();
    }
    return out;
}

IntegerPolynomial derivative(const IntegerPolynomial& f) {
    std::vector<BigInt> d;
    for (size_t i = 1; i < f.coeffs.size(); ++i)
        d.push_back(f.coeffs[i] * static_cast<long>(i));
    return IntegerPolynomial(std::move(d));
}

IntegerPolynomial multiply(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return IntegerPolynomial();
    std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntegerPolynomial(std::move(out));
}

std::optional<IntegerPolynomial> divide_exact(const IntegerPolynomial& f,
                                              const IntegerPolynomial& g) {
    if (g.is_zero())
        return std::nullopt;
    if (f.is_zero())
        return IntegerPolynomial();
    if (f.degree() < g.degree())
        return std::nullopt;
    std::vector<BigInt> rem = f.coeffs;
    std::vector<BigInt> quot(f.degree() - g.degree() + 1, BigInt(0));
    for (long d = f.degree(); d >= g.degree();) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[d].get_mpz_t(),
                    g.leading().get_mpz_t());
        if (r != 0)
            return std::nullopt;
        const long shift = d - g.degree();
        quot[shift] = q;
        for (long i = 0; i <= g.degree(); ++i)
            rem[shift + i] -= q * g.coeffs[i];
        while (d >= 0 && rem[d] == 0)
            --d;
        if (d < g.degree())
            break;
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    return IntegerPolynomial(std::move(quot));
}

BigInt content(const IntegerPolynomial& f) {
    BigInt g(0);
    for (const auto& c : f.coeffs)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntegerPolynomial primitive_part(const IntegerPolynomial& f) {
    if (f.is_zero())
        return f;
    BigInt c = content(f);
    if (sign_of(f.leading()) < 0)
        c = -c;
    return divide_by_const(f, c);
}

BigInt evaluate(const IntegerPolynomial& f, const BigInt& x) {
    BigInt acc(0);
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int sign_at(const IntegerPolynomial& f, const BigInt& num, const BigInt& den) {
    if (!(den > 0))
        throw std::invalid_argument("sign_at: denominator must be positive");
    // sign of sum c_j num^j den^{deg - j}
    BigInt acc(0);
    BigInt dpow(1);
    std::vector<BigInt> terms(f.coeffs.size());
    BigInt npow(1);
    for (size_t j = 0; j < f.coeffs.size(); ++j) {
        terms[j] = f.coeffs[j] * npow;
        npow *= num;
    }
    for (size_t j = f.coeffs.size(); j-- > 0;) {
        acc += terms[j] * dpow;
        dpow *= den;
    }
    return sign_of(acc);
}

SturmChain sturm_chain(const IntegerPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("sturm_chain: zero polynomial");
    RawChain raw = subresultant_chain(f);
    SturmChain out;
    out.polys.reserve(raw.polys.size());
    for (size_t i = 0; i < raw.polys.size(); ++i)
        out.polys.push_back(raw.eps[i] > 0 ? raw.polys[i] : negate(raw.polys[i]));
    return out;
}

int sign_variations_at_infinity(const SturmChain& chain, bool negative) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain.polys) {
        if (p.is_zero())
            continue;
        int s = sign_of(p.leading());
        if (negative && p.degree() % 2 == 1)
            s = -s;
        if (prev != 0 && s != 0 && s != prev)
            ++variations;
        if (s != 0)
            prev = s;
    }
    return variations;
}

IntegerPolynomial squarefree_part(const IntegerPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("squarefree_part: zero polynomial");
    if (f.degree() < 1)
        throw std::invalid_argument("squarefree_part: degree must be >= 1");
    RawChain raw = subresultant_chain(f);
    const IntegerPolynomial& last = raw.polys.back();
    if (last.degree() == 0) {
        // gcd(f, f') is a constant: f is already squarefree
        return primitive_part(f);
    }
    // gcd(f, f') up to sign and content is the last chain element
    const IntegerPolynomial g = primitive_part(last);
    auto q = divide_exact(primitive_part(f), g);
    assert(q && "primitive gcd must divide the primitive part");
    return primitive_part(*q);
}

int count_real_roots(const IntegerPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("count_real_roots: zero polynomial");
    if (f.degree() == 0)
        return 0;
    SturmChain chain = sturm_chain(f);
    if (chain.polys.back().degree() >= 1)
        throw std::domain_error(
            "count_real_roots: polynomial is not squarefree (gcd(f, f') has "
            "degree >= 1); take squarefree_part first");
    return sign_variations_at_infinity(chain, true) -
           sign_variations_at_infinity(chain, false);
}

ktheory::Signature signature_from_polynomial(const IntegerPolynomial& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument(
            "signature_from_polynomial: defining polynomial must have degree >= 1");
    const int r1 = count_real_roots(f);
    const long deg = f.degree();
    if ((deg - r1) % 2 != 0)
        throw std::logic_error(
            "signature_from_polynomial: deg - r1 is odd, which is impossible "
            "for squarefree input; Sturm chain bug");
    return ktheory::Signature(r1, static_cast<int>((deg - r1) / 2));
}

} // namespace regdet::numberfield
