#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "checks.hpp"
#include "regdet/detengine.hpp"
#include "regdet/regprod.hpp"

using namespace regdet::detengine;
using regdet::ktheory::Rational;
using regdet::ktheory::Signature;
using regdet::specfun::Complex;
using regdet::specfun::EulerMaclaurinParams;

namespace {
const double PI = 3.14159265358979323846;

const std::vector<Signature> test_signatures() {
    return {Signature(1, 0), Signature(0, 1), Signature(2, 0),
            Signature(1, 1), Signature(0, 2), Signature(3, 1)};
}
} // namespace

TEST_CASE("FieldConstants carries degree and the reflection constant") {
    const FieldConstants q{Signature(1, 0)};
    CHECK(q.degree == 1);
    CHECK(q.c_of_k == doctest::Approx(2.0 * std::sqrt(PI)).epsilon(1e-14));
    const FieldConstants im{Signature(0, 1)};
    CHECK(im.degree == 2);
    CHECK(im.c_of_k ==
          doctest::Approx(2.0 * std::sqrt(2.0 * PI)).epsilon(1e-14));
    const FieldConstants mixed{Signature(2, 1)};
    CHECK(mixed.degree == 4);
    CHECK(mixed.c_of_k == doctest::Approx(4.0 * PI * 2.0 * std::sqrt(2.0 * PI))
                              .epsilon(1e-14));
}

TEST_CASE("blended_residual blends relative and absolute error") {
    CHECK(blended_residual(Complex(3.0, 0.0), Complex(1.0, 0.0)) ==
          doctest::Approx(2.0));
    CHECK(blended_residual(Complex(0.0, 0.0), Complex(0.0, 0.0)) == 0.0);
    // small rhs: denominator clamps at 1
    CHECK(blended_residual(Complex(1e-3, 0.0), Complex(0.0, 0.0)) ==
          doctest::Approx(1e-3));
    // large rhs: plain relative error
    CHECK(blended_residual(Complex(200.0, 0.0), Complex(100.0, 0.0)) ==
          doctest::Approx(1.0));
}

TEST_CASE("int_pow multiplies out integer exponents exactly") {
    const Complex z(1.5, -2.0);
    CHECK(int_pow(z, 0) == Complex(1.0, 0.0));
    CHECK(int_pow(z, 3) == z * z * z);
    CHECK(blended_err(int_pow(z, -2), 1.0 / (z * z)) < 1e-15);
    CHECK(int_pow(Complex(0.0, 0.0), 3) == Complex(0.0, 0.0));
}

TEST_CASE("g_closed assembles the gamma-factor product") {
    using regdet::regprod::regprod_phi1;
    using regdet::regprod::regprod_phi2;
    const Signature sig(2, 1);
    for (const Complex s : {Complex(0.4, 1.2), Complex(-2.7, -0.6)}) {
        const Complex phi1 = regprod_phi1(s);
        const Complex phi2 = regprod_phi2(s);
        const Complex direct = phi1 * phi1 * phi1 * phi2;
        CHECK(blended_err(g_closed(s, sig), direct) < 1e-13);
    }
    // reference: mpmath, (2,1)-signature product at s = 1.3 + 0.4i
    CHECK(rel_err(g_closed(Complex(1.3, 0.4), sig),
                  Complex(3.0345858972606879476730401207200,
                          -2.0286566891843587299822601346420)) < 1e-13);
}

TEST_CASE("g_closed takes the remark value at s = 0") {
    for (const Signature& sig : test_signatures()) {
        const double want = std::pow(PI, 0.5 * (sig.r1 + sig.r2)) *
                            std::pow(2.0, 0.5 * sig.r2);
        CHECK(rel_err(g_closed(Complex(0.0, 0.0), sig),
                      Complex(want, 0.0)) < 1e-12);
    }
}

TEST_CASE("g_closed vanishes exactly on the negative even/odd lattice") {
    const Signature sig(1, 1);
    for (double s : {-2.0, -4.0, -6.0}) {
        const Complex v = g_closed(Complex(s, 0.0), sig);
        CHECK(v.real() == 0.0);
        CHECK(v.imag() == 0.0);
    }
    for (double s : {-1.0, -3.0}) {
        const Complex v = g_closed(Complex(s, 0.0), sig);
        CHECK(v.real() == 0.0);
        CHECK(v.imag() == 0.0);
    }
    // no odd-lattice zeros without complex places
    CHECK(std::abs(g_closed(Complex(-1.0, 0.0), Signature(2, 0))) > 0.1);
}

TEST_CASE("g_closed zero orders follow the rank of the spectrum") {
    // |g(z0 + h)| / |g(z0 + h/2)| is approximately 2^m near a zero of
    // order m
    const auto order_of = [](const Signature& sig, double z0) {
        const double h = 1e-3;
        const double num = std::abs(g_closed(Complex(z0 + h, 0.0), sig));
        const double den = std::abs(g_closed(Complex(z0 + h / 2.0, 0.0), sig));
        return std::log2(num / den);
    };
    CHECK(order_of(Signature(1, 0), -2.0) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(order_of(Signature(3, 1), -2.0) == doctest::Approx(4.0).epsilon(0.01));
    CHECK(order_of(Signature(1, 1), -1.0) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(order_of(Signature(0, 2), -3.0) == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("g_alt agrees with g_closed away from its poles") {
    for (const Signature& sig : test_signatures())
        for (const Complex s : default_agreement_grid())
            CHECK(blended_err(g_alt(s, sig), g_closed(s, sig)) < 1e-9);
}

TEST_CASE("g_alt reproduces the real-axis spot values") {
    CHECK(rel_err(g_alt(Complex(1.0, 0.0), Signature(1, 0)),
                  Complex(std::sqrt(2.0), 0.0)) < 1e-12);
    CHECK(rel_err(g_alt(Complex(2.0, 0.0), Signature(1, 0)),
                  Complex(0.5 * std::sqrt(PI), 0.0)) < 1e-12);
    CHECK(blended_err(g_alt(Complex(1.0, 0.0), Signature(0, 1)),
                      g_closed(Complex(1.0, 0.0), Signature(0, 1))) < 1e-12);
}

TEST_CASE("g_alt rejects the pole at s = 0") {
    CHECK_THROWS_AS(g_alt(Complex(0.0, 0.0), Signature(1, 0)),
                    std::domain_error);
    CHECK_THROWS_AS(g_alt(Complex(-2.0, 0.0), Signature(1, 0)),
                    std::domain_error);
}

TEST_CASE("g_regularized agrees with g_closed inside its domain") {
    const EulerMaclaurinParams em{};
    for (const Signature& sig : test_signatures()) {
        int used = 0, skipped = 0;
        for (const Complex s : default_agreement_grid()) {
            try {
                const Complex reg = g_regularized(s, sig, em);
                CHECK(blended_err(reg, g_closed(s, sig)) < 1e-8);
                ++used;
            } catch (const std::domain_error&) {
                ++skipped;
            }
        }
        // only the leftmost grid column may fall outside the numeric domain
        CHECK(used >= 90);
        CHECK(used + skipped == 100);
    }
    CHECK_THROWS_AS(
        g_regularized(Complex(-2.5, 1.0), Signature(1, 0), em),
        std::domain_error);
}

TEST_CASE("g_regularized reproduces real-axis and complex spot values") {
    const EulerMaclaurinParams em{};
    CHECK(blended_err(g_regularized(Complex(0.0, 0.0), Signature(1, 0), em),
                      Complex(std::sqrt(PI), 0.0)) < 1e-8);
    CHECK(blended_err(g_regularized(Complex(1.0, 1.0), Signature(1, 1), em),
                      g_closed(Complex(1.0, 1.0), Signature(1, 1))) < 1e-8);
    CHECK(blended_err(g_regularized(Complex(3.0, 0.0), Signature(0, 2), em),
                      g_closed(Complex(3.0, 0.0), Signature(0, 2))) < 1e-8);
}

TEST_CASE("det_full prepends the n = 0, 1 eigenvalue factors") {
    // reference: mpmath, (s - 1/2) s^(r1+r2-1) G(s) at s = 2 over the
    // rationals
    CHECK(rel_err(det_full(Complex(2.0, 0.0), Signature(1, 0)),
                  Complex(1.3293403881791370204736256125059, 0.0)) < 1e-13);
    CHECK(rel_err(det_full(Complex(1.0, 0.0), Signature(1, 0)),
                  Complex(std::sqrt(2.0) / 2.0, 0.0)) < 1e-13);
    for (const Signature& sig : test_signatures()) {
        const Complex s(1.7, -0.9);
        const Complex explicit_product =
            (s - 0.5) * int_pow(s, sig.r1 + sig.r2 - 1) * g_closed(s, sig);
        CHECK(blended_err(det_full(s, sig), explicit_product) < 1e-13);
    }
}

TEST_CASE("det_full vanishes exactly at the prepended eigenvalue factors") {
    // (s - 1/2) kills every signature at s = 1/2; s^(r1+r2-1) kills s = 0
    // as soon as r1 + r2 >= 2
    for (const Signature& sig : test_signatures()) {
        CHECK(det_full(Complex(0.5, 0.0), sig) == Complex(0.0, 0.0));
        if (sig.r1 + sig.r2 >= 2)
            CHECK(det_full(Complex(0.0, 0.0), sig) == Complex(0.0, 0.0));
    }
}

TEST_CASE("iterated periodicity matches the truncated spectral product") {
    // peeling the period-2 shift m times leaves exactly the finite product
    // over the spectrum up to n = 4m + 1:
    // G(s) = G(s + 2m) * T(s, 4m + 1)
    using regdet::ktheory::truncated_char_poly;
    for (const Signature& sig : test_signatures())
        for (long n_max : {5L, 9L, 13L, 17L}) {
            const long m = (n_max - 1) / 4;
            for (const Complex s : {Complex(0.3, 0.7), Complex(-1.2, 1.5),
                                    Complex(2.4, -0.8)}) {
                const Complex lhs = g_closed(s, sig);
                const Complex rhs =
                    g_closed(s + Complex(2.0 * m, 0.0), sig) *
                    truncated_char_poly(s, sig, n_max);
                CHECK(blended_err(lhs, rhs) < 1e-12);
            }
        }
}

TEST_CASE("check_periodicity passes on the default grid for all signatures") {
    for (const Signature& sig : test_signatures()) {
        const auto report =
            check_periodicity(sig, default_verification_grid(), 1e-10);
        CHECK(report.identity_name == "periodicity");
        CHECK(report.passed);
        CHECK(report.max_residual < 1e-10);
        CHECK(report.gridpoints.size() == 200);
        CHECK(report.tolerance == 1e-10);
    }
}

TEST_CASE("check_reflection passes on the default grid for all signatures") {
    for (const Signature& sig : test_signatures()) {
        const auto report =
            check_reflection(sig, default_verification_grid(), 1e-10);
        CHECK(report.identity_name == "reflection");
        CHECK(report.passed);
        CHECK(report.max_residual < 1e-10);
        CHECK(report.gridpoints.size() == 200);
    }
}

TEST_CASE("periodicity matches exact zeros on both sides at s = -1") {
    // for r2 > 0 both G(-1) and the (s+1)^r2 factor vanish exactly, so the
    // blended residual is literally zero
    const auto report = check_periodicity(
        Signature(0, 1), {Complex(-1.0, 0.0), Complex(0.0, 0.0)}, 1e-10);
    REQUIRE(report.gridpoints.size() == 2);
    CHECK(report.gridpoints[0].lhs == Complex(0.0, 0.0));
    CHECK(report.gridpoints[0].rhs == Complex(0.0, 0.0));
    CHECK(report.gridpoints[0].residual == 0.0);
    // at s = 0 both sides equal G(0) = sqrt(2 pi)
    CHECK(rel_err(report.gridpoints[1].lhs,
                  Complex(std::sqrt(2.0 * PI), 0.0)) < 1e-13);
    CHECK(report.passed);
}

TEST_CASE("reflection reproduces its real-axis spot values") {
    const auto real_pts = check_reflection(
        Signature(1, 0), {Complex(1.0, 0.0), Complex(0.5, 0.0)}, 1e-10);
    REQUIRE(real_pts.gridpoints.size() == 2);
    // G(1) G(-1) = 2 for the rationals
    CHECK(rel_err(real_pts.gridpoints[0].lhs, Complex(2.0, 0.0)) < 1e-13);
    CHECK(real_pts.gridpoints[0].rhs == Complex(2.0, 0.0));
    // G(1/2) G(-1/2) = 2 sqrt(2)
    CHECK(rel_err(real_pts.gridpoints[1].lhs,
                  Complex(2.0 * std::sqrt(2.0), 0.0)) < 1e-13);
    CHECK(real_pts.passed);

    // an imaginary quadratic field: sin(pi s) kills the rhs at s = 1 and
    // the G(-1) factor kills the lhs, again exactly
    const auto zero_pt =
        check_reflection(Signature(0, 1), {Complex(1.0, 0.0)}, 1e-10);
    REQUIRE(zero_pt.gridpoints.size() == 1);
    CHECK(zero_pt.gridpoints[0].lhs == Complex(0.0, 0.0));
    CHECK(zero_pt.gridpoints[0].rhs == Complex(0.0, 0.0));
    CHECK(zero_pt.gridpoints[0].residual == 0.0);
}

TEST_CASE("check_lerch passes at the default tolerance") {
    const auto report = check_lerch(1e-8, EulerMaclaurinParams{});
    CHECK(report.identity_name == "lerch");
    CHECK(report.passed);
    CHECK(report.gridpoints.size() == 60);
    CHECK(report.max_residual < 1e-8);
}

TEST_CASE("verification reports store per-point blended residuals") {
    const auto report =
        check_periodicity(Signature(1, 1), default_verification_grid(), 1e-10);
    double worst = 0.0;
    for (const auto& p : report.gridpoints) {
        CHECK(p.residual == blended_residual(p.lhs, p.rhs));
        worst = std::max(worst, p.residual);
    }
    CHECK(report.max_residual == worst);
}

TEST_CASE("an unachievable tolerance flips the report to failed") {
    const auto report =
        check_periodicity(Signature(1, 1), default_verification_grid(), 1e-18);
    CHECK(!report.passed);
}

TEST_CASE("reflection_at_zero returns pi^(r1+r2) 2^r2") {
    CHECK(rel_err(reflection_at_zero(Signature(1, 0)),
                  Complex(PI, 0.0)) < 1e-14);
    CHECK(rel_err(reflection_at_zero(Signature(0, 1)),
                  Complex(2.0 * PI, 0.0)) < 1e-14);
    CHECK(rel_err(reflection_at_zero(Signature(2, 1)),
                  Complex(2.0 * PI * PI * PI, 0.0)) < 1e-14);
    for (const Signature& sig : test_signatures()) {
        const Complex v = reflection_at_zero(sig);
        const double want =
            std::pow(PI, sig.r1 + sig.r2) * std::pow(2.0, sig.r2);
        CHECK(rel_err(v, Complex(want, 0.0)) < 1e-12);
    }
}

TEST_CASE("algebraicity_spot_check certifies the rational-point values") {
    CHECK(algebraicity_spot_check(Signature(1, 0), Rational(1), 2.0));
    CHECK(algebraicity_spot_check(Signature(1, 0), Rational(1, 2),
                                  2.0 * std::sqrt(2.0)));
    // G(1/3) G(-1/3) = 6 sin(pi/3) = 3 sqrt(3) for an imaginary quadratic
    // field
    CHECK(algebraicity_spot_check(Signature(0, 1), Rational(1, 3),
                                  3.0 * std::sqrt(3.0)));
    CHECK(!algebraicity_spot_check(Signature(1, 0), Rational(1), 2.5));
    CHECK_THROWS_AS(algebraicity_spot_check(Signature(1, 0), Rational(0), 1.0),
                    std::invalid_argument);
}

TEST_CASE("lattice_grid enumerates rows in re-major order") {
    const auto grid = lattice_grid(0.0, 1.0, 2, -1.0, 1.0, 3);
    REQUIRE(grid.size() == 6);
    CHECK(grid[0] == Complex(0.0, -1.0));
    CHECK(grid[1] == Complex(0.0, 0.0));
    CHECK(grid[2] == Complex(0.0, 1.0));
    CHECK(grid[3] == Complex(1.0, -1.0));
    CHECK(grid[5] == Complex(1.0, 1.0));
    // a single-step axis degenerates to a line at the lower bound
    const auto line = lattice_grid(2.0, 9.0, 1, 0.0, 1.0, 3);
    REQUIRE(line.size() == 3);
    for (const Complex s : line)
        CHECK(s.real() == 2.0);
    CHECK_THROWS_AS(lattice_grid(0.0, 1.0, 0, 0.0, 1.0, 3),
                    std::invalid_argument);
}

TEST_CASE("the default grids dodge the real axis and the pole rows") {
    const auto verification = default_verification_grid();
    CHECK(verification.size() == 200);
    for (const Complex s : verification)
        CHECK(s.imag() != 0.0);
    const auto agreement = default_agreement_grid();
    CHECK(agreement.size() == 100);
    for (const Complex s : agreement) {
        CHECK(s.imag() != 0.0);
        CHECK(s.real() >= -1.5);
    }
}

TEST_CASE("jittered perturbs deterministically per seed") {
    const auto base = default_verification_grid();
    const auto a = jittered(base, 1e-3, 7);
    const auto b = jittered(base, 1e-3, 7);
    const auto c = jittered(base, 1e-3, 8);
    REQUIRE(a.size() == base.size());
    CHECK(a == b);
    CHECK(a != c);
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(a[i] - base[i]) <= 1e-3 * std::sqrt(2.0) + 1e-15);
}

TEST_CASE("lerch_pair_corpus spans the documented parameter box") {
    const auto corpus = lerch_pair_corpus();
    CHECK(corpus.size() == 60);
    std::set<double> steps;
    for (const auto& [d, a] : corpus) {
        steps.insert(d);
        const double ratio = a.real() / d;
        CHECK(ratio >= 0.1 - 1e-12);
        CHECK(ratio <= 8.0 + 1e-12);
        CHECK(std::abs(a.imag()) <= 4.0 + 1e-12);
    }
    CHECK(steps == std::set<double>{1.0, 2.0, 3.0});
}
