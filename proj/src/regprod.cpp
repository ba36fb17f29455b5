#include "regdet/regprod.hpp"

#include <cmath>
#include <stdexcept>

namespace regdet::regprod {

namespace {
constexpr double PI = 3.14159265358979323846;

// Exact zero-preserving closed form for the lattice ratio x = a/d.
Complex closed_from_ratio(double d, Complex x) {
    const Complex power = std::exp((0.5 - x) * std::log(d)); // d^{1/2 - a/d}
    return power * std::sqrt(2.0 * PI) * specfun::reciprocal_gamma(x);
}
} // namespace

ProgressionSpec::ProgressionSpec(double d, Complex a) : step(d), offset(a) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument("ProgressionSpec: step d must be positive");
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw std::invalid_argument("ProgressionSpec: offset a must be finite");
    const Complex x = a / d;
    if (x.imag() == 0.0 && x.real() <= 0.0 && x.real() == std::floor(x.real()))
        throw std::invalid_argument(
            "ProgressionSpec: a/d is a nonpositive integer, so a factor of the "
            "product vanishes");
}

Complex regprod_numeric(const ProgressionSpec& spec, const EulerMaclaurinParams& p) {
    const Complex x = spec.offset / spec.step;
    if (x.real() <= 0.05)
        throw std::domain_error(
            "regprod_numeric: requires Re(a/d) > 0.05; use regprod_closed instead");
    const auto [zeta0, dzeta0] = specfun::hurwitz_zeta_with_dw(Complex(0.0, 0.0), x, p);
    return std::exp(std::log(spec.step) * zeta0 - dzeta0);
}

Complex regprod_closed(const ProgressionSpec& spec) {
    return closed_from_ratio(spec.step, spec.offset / spec.step);
}

Complex regprod_phi1(Complex s) {
    // d = 2, a = 2 + s; entire, so bypass the ProgressionSpec lattice check
    // (at s in {-2, -4, ...} the value is an exact 0, not an error).
    return closed_from_ratio(2.0, (Complex(2.0, 0.0) + s) * 0.5);
}

Complex regprod_phi2(Complex s) {
    return closed_from_ratio(2.0, (Complex(1.0, 0.0) + s) * 0.5);
}

} // namespace regdet::regprod
