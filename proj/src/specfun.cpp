#include "regdet/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace regdet::specfun {

namespace {

using LComplex = std::complex<long double>;

constexpr long double PI_L = 3.141592653589793238462643383279502884197L;
constexpr long double E_L = 2.718281828459045235360287471352662497757L;
// log(2 sqrt(e/pi))
constexpr long double LN_2_SQRT_E_OVER_PI_L = 0.6207822376352452223455184457816472123L;

// Lanczos coefficients, g = 10.900511, 11 terms (R. Pugh's thesis set).  The
// approximation error of this set is below 1e-15 in the log domain over the
// right half-plane; the outer combination is evaluated in long double so the
// conditioning of |log Gamma| ~ 180 near |z| = 50 does not eat the budget.
constexpr long double LANCZOS_G_L = 10.900511L;
constexpr std::array<long double, 11> LANCZOS_D = {
    2.48574089138753565546e-5L,
    1.05142378581721974210L,
    -3.45687097222016235469L,
    4.51227709466894823700L,
    -2.98285225323576655721L,
    1.05639711577126713077L,
    -1.95428773191645869583e-1L,
    1.70970543404441224307e-2L,
    -5.71926117404305781283e-4L,
    4.63399473359905636708e-6L,
    -2.71994908488607703910e-9L,
};

// Bernoulli numbers B_2, B_4, ..., B_60 (mpmath, 20 significant digits).
constexpr std::array<double, 30> BERNOULLI_2J = {
    0.16666666666666666667,     -0.033333333333333333333,
    0.023809523809523809524,    -0.033333333333333333333,
    0.075757575757575757576,    -0.25311355311355311355,
    1.1666666666666666667,      -7.0921568627450980392,
    54.971177944862155388,      -529.12424242424242424,
    6192.1231884057971014,      -86580.253113553113553,
    1425517.1666666666667,      -27298231.067816091954,
    601580873.90064236838,      -15116315767.092156863,
    429614643061.16666667,      -13711655205088.332772,
    488332318973593.16667,      -19296579341940068.149,
    841693047573682615.0,       -40338071854059455413.0,
    2.1150748638081991606e+21,  -1.2086626522296525935e+23,
    7.5008667460769643669e+24,  -5.0387781014810689141e+26,
    3.6528776484818123335e+28,  -2.8498769302450882226e+30,
    2.3865427499683627645e+32,  -2.1399949257225333666e+34,
};

// B_{2j} / (2j)! for j = 1..30, computed once.
const std::array<double, 30>& bernoulli_over_factorial() {
    static const std::array<double, 30> table = [] {
        std::array<double, 30> t{};
        long double fact = 1.0L;
        for (int j = 1; j <= 30; ++j) {
            fact *= (2.0L * j - 1.0L) * (2.0L * j);
            t[j - 1] = static_cast<double>(BERNOULLI_2J[j - 1] / fact);
        }
        return t;
    }();
    return table;
}

// log Gamma(z) for Re z >= 0.5 (continuous branch); long double throughout.
LComplex lanczos_log_gamma(LComplex z) {
    LComplex s = LANCZOS_D[0];
    for (int k = 1; k < 11; ++k)
        s += LANCZOS_D[k] / (z + static_cast<long double>(k - 1));
    const LComplex t = (z - 0.5L + LANCZOS_G_L) / E_L;
    return std::log(s) + LN_2_SQRT_E_OVER_PI_L + (z - 0.5L) * std::log(t);
}

// log sin(pi z) up to a multiple of 2 pi i, safe for large |Im z| (where
// sin(pi z) itself would overflow).  Used only under exp() afterwards.
LComplex log_sin_pi(LComplex z) {
    const double x = static_cast<double>(z.real());
    const double y = static_cast<double>(z.imag());
    const double n = std::floor(x + 0.5);
    const LComplex zr(static_cast<long double>(x) - static_cast<long double>(n),
                      z.imag());
    LComplex ls;
    if (std::abs(y) > 8.0) {
        // sin(pi zr) = (e^{i pi zr} - e^{-i pi zr}) / (2i); keep the dominant
        // exponential outside the log.  |e^{-2w}| <= e^{-16 pi} here, so the
        // log1p factor is representable directly.
        const LComplex i_pi(0.0L, PI_L);
        const LComplex w = (y < 0) ? i_pi * zr : -i_pi * zr;
        const LComplex denom = (y < 0) ? LComplex(0.0L, 2.0L) : LComplex(0.0L, -2.0L);
        ls = w + std::log(1.0L - std::exp(-2.0L * w)) - std::log(denom);
    } else {
        ls = std::log(std::sin(PI_L * zr));
    }
    if (std::fmod(std::abs(n), 2.0) == 1.0)
        ls += LComplex(0.0L, PI_L); // sign flip from the removed period
    return ls;
}

bool near_gamma_pole(Complex z, double* pole) {
    if (z.real() > 0.5)
        return false;
    const double n = std::round(z.real());
    if (n > 0.0)
        return false;
    if (std::abs(z - Complex(n, 0.0)) < 1e-8) {
        *pole = n;
        return true;
    }
    return false;
}

[[noreturn]] void throw_pole(const char* who, double pole) {
    std::ostringstream os;
    os << who << ": input within 1e-8 of the Gamma pole at " << pole;
    throw std::domain_error(os.str());
}

Complex to_double(LComplex v) {
    return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

// Core Euler-Maclaurin pass producing zeta(w, a) and its w-derivative.
std::pair<Complex, Complex> hurwitz_core(Complex w, Complex a,
                                         const EulerMaclaurinParams& p) {
    p.validate();
    if (std::abs(w - Complex(1.0, 0.0)) < 1e-8)
        throw std::domain_error("hurwitz_zeta: w = 1 is the pole of zeta(w, a)");
    {
        const double n = std::round(a.real());
        if (n <= 0.0 && std::abs(a - Complex(n, 0.0)) < 1e-8)
            throw std::domain_error(
                "hurwitz_zeta: a within 1e-8 of a nonpositive integer");
    }

    const int N = p.cutoff_N;
    const int M = p.bernoulli_terms;
    const auto& c = bernoulli_over_factorial();

    Complex sum(0.0, 0.0), dsum(0.0, 0.0);
    for (int k = 0; k < N; ++k) {
        const Complex L = std::log(Complex(k, 0.0) + a);
        const Complex e = std::exp(-w * L);
        sum += e;
        dsum -= L * e;
    }

    const Complex q = Complex(N, 0.0) + a;
    const Complex Lq = std::log(q);

    // integral tail q^{1-w}/(w-1)
    const Complex qp = std::exp((Complex(1.0, 0.0) - w) * Lq);
    const Complex wm1 = w - Complex(1.0, 0.0);
    sum += qp / wm1;
    dsum += qp * (-Lq / wm1 - Complex(1.0, 0.0) / (wm1 * wm1));

    // half term q^{-w}/2
    const Complex qn = std::exp(-w * Lq);
    sum += 0.5 * qn;
    dsum -= 0.5 * Lq * qn;

    // Bernoulli corrections: term_j = B_{2j}/(2j)! * (w)_{2j-1} * q^{-w-2j+1},
    // with the rising factorial P_j = w (w+1) ... (w+2j-2) and its derivative
    // dP_j carried along by the product rule.
    Complex P = w, dP(1.0, 0.0);
    Complex r = qn / q; // q^{-w-1}
    for (int j = 1; j <= M; ++j) {
        if (j > 1) {
            for (int i = 2 * j - 3; i <= 2 * j - 2; ++i) {
                const Complex f = w + Complex(i, 0.0);
                dP = dP * f + P;
                P *= f;
            }
        }
        sum += c[j - 1] * P * r;
        dsum += c[j - 1] * (dP * r - P * Lq * r);
        r /= q * q;
    }
    return {sum, dsum};
}

} // namespace

void EulerMaclaurinParams::validate() const {
    if (cutoff_N < 8)
        throw std::invalid_argument("EulerMaclaurinParams: cutoff_N must be >= 8");
    if (bernoulli_terms < 4 || bernoulli_terms > 30)
        throw std::invalid_argument(
            "EulerMaclaurinParams: bernoulli_terms must lie in [4, 30]");
}

Complex log_gamma(Complex z) {
    double pole = 0.0;
    if (near_gamma_pole(z, &pole))
        throw_pole("log_gamma", pole);
    const LComplex zl(z.real(), z.imag());
    if (z.real() >= 0.5)
        return to_double(lanczos_log_gamma(zl));
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z),
    // then reduce the imaginary part to (-pi, pi].
    LComplex v = std::log(PI_L) - log_sin_pi(zl) - lanczos_log_gamma(1.0L - zl);
    long double im = v.imag();
    im -= 2.0L * PI_L * std::floor((im + PI_L) / (2.0L * PI_L));
    return to_double(LComplex(v.real(), im));
}

Complex gamma(Complex z) {
    const Complex lg = log_gamma(z);
    if (lg.real() > 709.0)
        throw std::overflow_error("gamma: |Gamma(z)| exceeds binary64 range");
    return std::exp(lg);
}

Complex reciprocal_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        return Complex(0.0, 0.0); // exact zero at the poles of Gamma
    if (z.real() < 0.5) {
        // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi; 1-z is in the Lanczos
        // half-plane and sin_pi handles the near-integer region exactly.
        return sin_pi(z) * gamma(Complex(1.0, 0.0) - z) / std::acos(-1.0);
    }
    return std::exp(-log_gamma(z));
}

Complex gamma_R(Complex s) {
    double pole = 0.0;
    if (near_gamma_pole(s * 0.5, &pole)) {
        std::ostringstream os;
        os << "gamma_R: pole at s = " << 2.0 * pole;
        throw std::domain_error(os.str());
    }
    const Complex v = log_gamma(s * 0.5) - (s * 0.5) * std::log(std::acos(-1.0));
    if (v.real() > 708.0)
        throw std::overflow_error("gamma_R: result exceeds binary64 range");
    return std::exp(v);
}

Complex gamma_C(Complex s) {
    double pole = 0.0;
    if (near_gamma_pole(s, &pole)) {
        std::ostringstream os;
        os << "gamma_C: pole at s = " << pole;
        throw std::domain_error(os.str());
    }
    const Complex lg = log_gamma(s);
    const Complex v = lg - s * std::log(2.0 * std::acos(-1.0));
    if (v.real() > 708.0)
        throw std::overflow_error("gamma_C: result exceeds binary64 range");
    return 2.0 * std::exp(v);
}

Complex sin_pi(Complex z) {
    const double n = std::floor(z.real() + 0.5);
    const double r = z.real() - n;
    // sin(pi(r + iy)) = sin(pi r) cosh(pi y) + i cos(pi r) sinh(pi y)
    const double pr = PI_L * r; // exact-ish small argument
    const double py = static_cast<double>(PI_L) * z.imag();
    Complex v(std::sin(pr) * std::cosh(py), std::cos(pr) * std::sinh(py));
    if (std::fmod(std::abs(n), 2.0) == 1.0)
        v = -v;
    return v;
}

Complex hurwitz_zeta(Complex w, Complex a, const EulerMaclaurinParams& p) {
    return hurwitz_core(w, a, p).first;
}

Complex hurwitz_zeta_dw(Complex w, Complex a, const EulerMaclaurinParams& p) {
    return hurwitz_core(w, a, p).second;
}

std::pair<Complex, Complex> hurwitz_zeta_with_dw(Complex w, Complex a,
                                                 const EulerMaclaurinParams& p) {
    return hurwitz_core(w, a, p);
}

} // namespace regdet::specfun
