#include "regdet/detengine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace regdet::detengine {

namespace {
constexpr double PI = 3.14159265358979323846;

VerificationReport finish_report(std::string name,
                                 std::vector<GridPointResult> points, double tol) {
    VerificationReport rep;
    rep.identity_name = std::move(name);
    rep.gridpoints = std::move(points);
    rep.tolerance = tol;
    for (const auto& p : rep.gridpoints)
        rep.max_residual = std::max(rep.max_residual, p.residual);
    rep.passed = rep.max_residual <= tol;
    return rep;
}
} // namespace

FieldConstants::FieldConstants(Signature sig)
    : signature(sig), degree(sig.degree()),
      c_of_k(std::pow(2.0 * std::sqrt(PI), sig.r1) *
             std::pow(2.0 * std::sqrt(2.0 * PI), sig.r2)) {}

double blended_residual(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

Complex int_pow(Complex z, long e) {
    if (e == 0)
        return Complex(1.0, 0.0);
    if (e < 0) {
        z = Complex(1.0, 0.0) / z;
        e = -e;
    }
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1)
            acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

Complex g_closed(Complex s, const Signature& sig) {
    // zero-exponent factors are skipped entirely, so no spurious work (or
    // exceptions) can come from a factor that does not participate
    Complex v(1.0, 0.0);
    if (sig.r1 + sig.r2 > 0)
        v *= int_pow(regprod::regprod_phi1(s), sig.r1 + sig.r2);
    if (sig.r2 > 0)
        v *= int_pow(regprod::regprod_phi2(s), sig.r2);
    return v;
}

Complex g_alt(Complex s, const Signature& sig) {
    if (std::abs(s) < 1e-8)
        throw std::domain_error("g_alt: the alternate display is singular at s = 0");
    const FieldConstants fc(sig);
    Complex v(fc.c_of_k, 0.0);
    v *= int_pow(s, -(sig.r1 + sig.r2));
    if (sig.r1 > 0)
        v *= int_pow(specfun::gamma_R(s), -sig.r1);
    if (sig.r2 > 0)
        v *= int_pow(specfun::gamma_C(s), -sig.r2);
    v *= std::exp(-(static_cast<double>(fc.degree) * s * 0.5) * std::log(2.0 * PI));
    return v;
}

Complex g_regularized(Complex s, const Signature& sig, const EulerMaclaurinParams& p) {
    if (s.real() <= -1.9)
        throw std::domain_error(
            "g_regularized: the numeric oracle requires Re s > -1.9");
    Complex v(1.0, 0.0);
    if (sig.r1 + sig.r2 > 0) {
        const regprod::ProgressionSpec phi1(2.0, Complex(2.0, 0.0) + s);
        v *= int_pow(regprod::regprod_numeric(phi1, p), sig.r1 + sig.r2);
    }
    if (sig.r2 > 0) {
        const regprod::ProgressionSpec phi2(2.0, Complex(1.0, 0.0) + s);
        v *= int_pow(regprod::regprod_numeric(phi2, p), sig.r2);
    }
    return v;
}

Complex det_full(Complex s, const Signature& sig) {
    return (s - Complex(0.5, 0.0)) * int_pow(s, sig.r1 + sig.r2 - 1) *
           g_closed(s, sig);
}

VerificationReport check_periodicity(const Signature& sig,
                                     const std::vector<Complex>& grid, double tol) {
    std::vector<GridPointResult> points;
    points.reserve(grid.size());
    for (const Complex s : grid) {
        const Complex lhs = g_closed(s, sig);
        const Complex rhs = g_closed(s + 2.0, sig) *
                            int_pow(s + 2.0, sig.r1 + sig.r2) *
                            int_pow(s + 1.0, sig.r2);
        points.push_back({s, lhs, rhs, blended_residual(lhs, rhs)});
    }
    return finish_report("periodicity", std::move(points), tol);
}

VerificationReport check_reflection(const Signature& sig,
                                    const std::vector<Complex>& grid, double tol) {
    std::vector<GridPointResult> points;
    points.reserve(grid.size());
    for (const Complex s : grid) {
        if (std::abs(s) < 1e-9)
            continue; // removable singularity of the rhs
        const Complex lhs = g_closed(s, sig) * g_closed(-s, sig);
        const Complex two_over_s = Complex(2.0, 0.0) / s;
        const Complex rhs = int_pow(two_over_s * specfun::sin_pi(s * 0.5), sig.r1) *
                            int_pow(two_over_s * specfun::sin_pi(s), sig.r2);
        points.push_back({s, lhs, rhs, blended_residual(lhs, rhs)});
    }
    return finish_report("reflection", std::move(points), tol);
}

VerificationReport check_lerch(double tol, const EulerMaclaurinParams& p) {
    std::vector<GridPointResult> points;
    for (const auto& [d, a] : lerch_pair_corpus()) {
        const regprod::ProgressionSpec spec(d, a);
        const Complex lhs = regprod::regprod_numeric(spec, p);
        const Complex rhs = regprod::regprod_closed(spec);
        points.push_back({a, lhs, rhs, blended_residual(lhs, rhs)});
    }
    return finish_report("lerch", std::move(points), tol);
}

Complex reflection_at_zero(const Signature& sig) {
    const Complex g0 = g_closed(Complex(0.0, 0.0), sig);
    const Complex squared = g0 * g0;
    const double reference =
        std::pow(PI, sig.r1 + sig.r2) * std::pow(2.0, sig.r2);
    if (std::abs(squared - Complex(reference, 0.0)) > 1e-12 * reference) {
        std::ostringstream os;
        os << "reflection_at_zero: G(0)^2 = " << squared.real()
           << " deviates from pi^(r1+r2) 2^r2 = " << reference;
        throw std::logic_error(os.str());
    }
    return squared;
}

bool algebraicity_spot_check(const Signature& sig, ktheory::Rational s,
                             double reference) {
    const double sd = static_cast<double>(s.numerator()) /
                      static_cast<double>(s.denominator());
    if (sd == 0.0)
        throw std::invalid_argument("algebraicity_spot_check: s must be nonzero");
    const Complex value =
        g_closed(Complex(sd, 0.0), sig) * g_closed(Complex(-sd, 0.0), sig);
    return std::abs(value - Complex(reference, 0.0)) <= 1e-10;
}

std::vector<Complex> lattice_grid(double re_min, double re_max, int re_steps,
                                  double im_min, double im_max, int im_steps) {
    if (re_steps < 1 || im_steps < 1)
        throw std::invalid_argument("lattice_grid: step counts must be >= 1");
    std::vector<Complex> grid;
    grid.reserve(static_cast<size_t>(re_steps) * im_steps);
    for (int i = 0; i < re_steps; ++i) {
        const double re =
            re_steps == 1 ? re_min
                          : re_min + (re_max - re_min) * i / (re_steps - 1);
        for (int j = 0; j < im_steps; ++j) {
            const double im =
                im_steps == 1 ? im_min
                              : im_min + (im_max - im_min) * j / (im_steps - 1);
            grid.emplace_back(re, im);
        }
    }
    return grid;
}

std::vector<Complex> default_verification_grid() {
    // 10 x 20 over [-4,4]^2; the 20 imaginary values straddle 0 without
    // hitting it, so no grid point is real
    return lattice_grid(-4.0, 4.0, 10, -4.0, 4.0, 20);
}

std::vector<Complex> default_agreement_grid() {
    // 10 x 10 over Re in [-1.5, 5]; again no real points
    return lattice_grid(-1.5, 5.0, 10, -4.0, 4.0, 10);
}

std::vector<Complex> jittered(const std::vector<Complex>& grid, double eps,
                              unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-eps, eps);
    std::vector<Complex> out;
    out.reserve(grid.size());
    for (const Complex s : grid)
        out.emplace_back(s.real() + u(rng), s.imag() + u(rng));
    return out;
}

std::vector<std::pair<double, Complex>> lerch_pair_corpus() {
    const double ratios[] = {0.1, 0.75, 2.0, 4.5, 8.0}; // Re(a/d)
    const double ims[] = {-4.0, -1.3, 0.7, 4.0};        // Im a
    std::vector<std::pair<double, Complex>> corpus;
    for (double d : {1.0, 2.0, 3.0})
        for (double r : ratios)
            for (double im : ims)
                corpus.emplace_back(d, Complex(d * r, im));
    return corpus;
}

} // namespace regdet::detengine
