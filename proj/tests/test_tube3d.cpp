#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "shellrev/cylinder.hpp"
#include "shellrev/errors.hpp"
#include "shellrev/tube3d.hpp"

using namespace shellrev;

namespace {

TubeProblem make(double r, double h, double nu, double mu, int kp, double kz, TubeLoadCase lc, double p) {
    TubeProblem t;
    t.radius = r;
    t.thickness = h;
    t.nu = nu;
    t.mu = mu;
    t.k_phi = kp;
    t.k_z = kz;
    t.load_case = lc;
    t.pressure = p;
    return t;
}

// independent hand oracle: assemble and solve the 2x2 Lame system
// sigma_rr(R_in) = -p_in, sigma_rr(R_out) = +p_out for U_r = a r + b/r
std::pair<double, double> lame_oracle(const TubeProblem& t) {
    auto [p_in, p_out] = equivalent_pressures(t);
    double lam = t.lambda(), mu = t.mu;
    Eigen::Matrix2d m;
    Eigen::Vector2d rhs;
    m << 2 * (lam + mu), -2 * mu / (t.r_in() * t.r_in()), 2 * (lam + mu), -2 * mu / (t.r_out() * t.r_out());
    rhs << -p_in, p_out;
    Eigen::Vector2d ab = m.fullPivLu().solve(rhs);
    return {ab(0), ab(1)};
}

}  // namespace

TEST_CASE("equivalent pressures") {
    SUBCASE("inner, R=1, h=0.5: p_in = 4p/3") {
        auto [pi, po] = equivalent_pressures(make(1.0, 0.5, 0.3, 1.0, 0, 0, TubeLoadCase::Inner, 1.0));
        CHECK(pi == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
        CHECK(po == 0.0);
    }
    SUBCASE("both: p/2 on each surface") {
        auto [pi, po] = equivalent_pressures(make(1.7, 0.9, 0.3, 1.0, 0, 0, TubeLoadCase::Both, 2.0));
        CHECK(pi == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(po == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("inner thin limit: p_in -> p") {
        auto [pi, po] = equivalent_pressures(make(1.0, 1e-6, 0.3, 1.0, 0, 0, TubeLoadCase::Inner, 1.0));
        CHECK(pi == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(po == 0.0);
    }
}

TEST_CASE("Lame closed form") {
    SUBCASE("zero pressure gives the zero field") {
        RadialSolution sol = lame_axisymmetric(make(1.0, 0.2, 0.3, 1.0, 0, 0, TubeLoadCase::Both, 0.0));
        for (double v : sol.u_r) CHECK(v == 0.0);
    }
    SUBCASE("both case against the independent 2x2 oracle") {
        TubeProblem t = make(1.0, 0.2, 0.3, 1.0, 0, 0, TubeLoadCase::Both, 1.0);
        auto [a, b] = lame_oracle(t);
        RadialSolution sol = lame_axisymmetric(t);
        for (size_t i = 0; i < sol.r.size(); i += 16)
            CHECK(sol.u_r[i] == doctest::Approx(a * sol.r[i] + b / sol.r[i]).epsilon(1e-13));
    }
    SUBCASE("thin limit approaches the membrane hoop displacement") {
        double r = 1.0, h = 1e-3, nu = 0.3, mu = 1.0, p = 1.0;
        TubeProblem t = make(r, h, nu, mu, 0, 0, TubeLoadCase::Both, p);
        double membrane = p * r * r * (1 - nu) / (2 * mu * h);
        CHECK(averaged_radial(lame_axisymmetric(t)) == doctest::Approx(membrane).epsilon(5e-3));
    }
}

TEST_CASE("averaged radial displacement") {
    SUBCASE("constant profile averages to itself") {
        RadialSolution sol;
        sol.r = {1.0, 1.25, 1.5, 1.75, 2.0};
        sol.u_r.assign(5, 3.7);
        CHECK(averaged_radial(sol) == doctest::Approx(3.7).epsilon(1e-15));
    }
    SUBCASE("a r + b/r averages to a R + (b/h) ln(Ro/Ri) exactly") {
        TubeProblem t = make(1.3, 0.4, 0.25, 2.0, 0, 0, TubeLoadCase::Inner, 1.5);
        auto [a, b] = lame_oracle(t);
        RadialSolution sol = lame_axisymmetric(t, 128);
        double exact = a * t.radius + b / t.thickness * std::log(t.r_out() / t.r_in());
        CHECK(averaged_radial(sol) == doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("radial BVP solver") {
    SUBCASE("zero pressure gives the zero solution") {
        RadialSolution sol = solve_radial_bvp(make(1.0, 0.3, 0.3, 1.0, 1, 1.0, TubeLoadCase::Both, 0.0), 16);
        for (double v : sol.u_r) CHECK(std::abs(v) < 1e-14);
        for (double v : sol.u_phi) CHECK(std::abs(v) < 1e-14);
    }
    SUBCASE("axisymmetric case matches the Lame oracle at mesh 64") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> ur(0.5, 2.0), uh(0.05, 1.2), unu(0.05, 0.45), up(0.5, 2.0);
        std::uniform_int_distribution<int> ucase(0, 2);
        for (int t = 0; t < 25; ++t) {
            double r = ur(rng);
            TubeProblem pb = make(r, std::min(uh(rng), 1.8) * r, unu(rng), up(rng), 0, 0.0,
                                  static_cast<TubeLoadCase>(ucase(rng)), up(rng));
            RadialSolution num = solve_radial_bvp(pb, 64);
            auto [a, b] = lame_oracle(pb);
            double worst = 0.0, scale = 0.0;
            for (size_t i = 0; i < num.r.size(); ++i) {
                double exact = a * num.r[i] + b / num.r[i];
                worst = std::max(worst, std::abs(num.u_r[i] - exact));
                scale = std::max(scale, std::abs(exact));
            }
            CHECK(worst < 1e-8 * scale);
        }
    }
    SUBCASE("traction boundary residuals below 1e-8 p") {
        TubeProblem pb = make(1.0, 0.3, 0.3, 1.5, 1, 1.2, TubeLoadCase::Both, 2.0);
        RadialSolution sol = solve_radial_bvp(pb, 64);
        CHECK(surface_traction_residual(pb, sol) < 1e-8 * pb.pressure);
        TubeProblem pb0 = make(1.0, 0.4, 0.25, 1.0, 0, 0.0, TubeLoadCase::Inner, 1.0);
        CHECK(surface_traction_residual(pb0, solve_radial_bvp(pb0, 64)) < 1e-8);
    }
    SUBCASE("linearity in the pressure") {
        TubeProblem pb1 = make(1.0, 0.2, 0.3, 1.0, 1, 0.8, TubeLoadCase::Both, 1.0);
        TubeProblem pb2 = pb1;
        pb2.pressure = 2.0;
        double u1 = averaged_radial(solve_radial_bvp(pb1, 32));
        double u2 = averaged_radial(solve_radial_bvp(pb2, 32));
        CHECK(u2 == doctest::Approx(2.0 * u1).epsilon(1e-12));
    }
    SUBCASE("convergence order >= 3 under mesh halving") {
        TubeProblem pb = make(1.0, 0.5, 0.3, 1.0, 2, 2.0, TubeLoadCase::Both, 1.0);
        double e8 = solve_radial_bvp(pb, 8).error_estimate;
        double e16 = solve_radial_bvp(pb, 16).error_estimate;
        double e32 = solve_radial_bvp(pb, 32).error_estimate;
        CHECK(e8 / e16 >= 8.0);
        CHECK(e16 / e32 >= 8.0);
    }
    SUBCASE("reported error estimate bounds the refinement difference") {
        TubeProblem pb = make(1.0, 0.4, 0.3, 1.0, 1, 1.5, TubeLoadCase::Outer, 1.0);
        RadialSolution coarse = solve_radial_bvp(pb, 16);
        RadialSolution fine = solve_radial_bvp(pb, 32);
        double diff = std::abs(averaged_radial(coarse) - averaged_radial(fine));
        CHECK(diff <= coarse.error_estimate * std::abs(averaged_radial(fine)) * 1.5 + 1e-300);
    }
    SUBCASE("thin shell agrees with the harmonic solution within 5%") {
        double r = 1.0, h = 0.05, nu = 0.3, mu = 1.0, p = 1.0, kz = 1.0;
        TubeProblem pb = make(r, h, nu, mu, 0, kz, TubeLoadCase::Both, p);
        double tube = averaged_radial(solve_radial_bvp(pb, 64));
        double shell =
            solve_harmonic(TheoryVariant::Eliseev, HarmonicProblem::from_pressure(r, h, mu, nu, 0, kz, p)).u_n;
        CHECK(std::abs(tube - shell) / std::abs(shell) < 0.05);
    }
    SUBCASE("inner load stands apart at large thickness") {
        double r = 1.0, h = 1.2, nu = 0.3, mu = 1.0, p = 1.0, kz = 1.0;
        double u_in = averaged_radial(solve_radial_bvp(make(r, h, nu, mu, 0, kz, TubeLoadCase::Inner, p), 64));
        double u_out = averaged_radial(solve_radial_bvp(make(r, h, nu, mu, 0, kz, TubeLoadCase::Outer, p), 64));
        double u_both = averaged_radial(solve_radial_bvp(make(r, h, nu, mu, 0, kz, TubeLoadCase::Both, p), 64));
        double gap_inner = std::min(std::abs(u_in - u_both), std::abs(u_in - u_out));
        double gap_outer_both = std::abs(u_out - u_both);
        CHECK(gap_inner > gap_outer_both);
    }
    SUBCASE("transverse rigid mode makes k_phi=1, k_z=0 ill-posed") {
        CHECK_THROWS_AS(solve_radial_bvp(make(1.0, 0.2, 0.3, 1.0, 1, 0.0, TubeLoadCase::Both, 1.0), 16),
                        IllPosedError);
    }
    SUBCASE("mesh size below 8 is rejected") {
        CHECK_THROWS_AS(solve_radial_bvp(make(1.0, 0.2, 0.3, 1.0, 0, 0.0, TubeLoadCase::Both, 1.0), 4),
                        std::invalid_argument);
    }
}
