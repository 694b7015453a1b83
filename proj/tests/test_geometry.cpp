#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shellrev/errors.hpp"
#include "shellrev/profile.hpp"

using namespace shellrev;
using std::numbers::pi;

namespace {

double sample_inside(const MeridianProfile& p, double u) {
    auto [lo, hi] = p.s_domain();
    double margin = 0.05 * (hi - lo);
    return lo + margin + (hi - lo - 2 * margin) * u;
}

}  // namespace

TEST_CASE("profile_state examples") {
    SUBCASE("cylinder") {
        auto p = make_cylinder(2.5);
        for (double s : {-1.0, 0.0, 3.7}) {
            ProfileState st = profile_state(*p, s);
            CHECK(st.psi == doctest::Approx(0.0).epsilon(1e-14));
            CHECK(st.psi1 == doctest::Approx(0.0).epsilon(1e-14));
            CHECK(st.k == doctest::Approx(1.0 / 2.5).epsilon(1e-14));
            CHECK(st.k1 == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
    SUBCASE("plane disk at s=1") {
        auto p = make_plane();
        ProfileState st = profile_state(*p, 1.0);
        CHECK(st.psi == doctest::Approx(pi / 2).epsilon(1e-14));
        CHECK(st.psi1 == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(st.k == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("sphere at s=R0") {
        // R(s) = R0 sin(s/R0), x(s) = -R0 cos(s/R0): psi = pi/2 - s/R0,
        // psi' = -1/R0 (analytic differentiation of the parametrization)
        auto p = make_sphere(1.0);
        ProfileState st = profile_state(*p, 1.0);
        CHECK(st.psi == doctest::Approx(pi / 2 - 1.0).epsilon(1e-14));
        CHECK(st.psi1 == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(st.k == doctest::Approx(1.0 / std::sin(1.0)).epsilon(1e-13));
        CHECK(st.k1 == doctest::Approx(-std::cos(1.0) / (std::sin(1.0) * std::sin(1.0))).epsilon(1e-12));
    }
}

TEST_CASE("profile_state invariants: sin/cos and k*R") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (ProfilePtr p : {make_cylinder(1.4), make_cone(0.6), make_sphere(2.2), make_torus_section(0.8, 2.5)}) {
        for (int i = 0; i < 200; ++i) {
            double s = sample_inside(*p, uni(rng));
            ProfileState st = profile_state(*p, s);
            CHECK(std::abs(std::sin(st.psi) - p->radius(s, 1)) < 1e-12);
            CHECK(std::abs(std::cos(st.psi) - p->axial(s, 1)) < 1e-12);
            CHECK(std::abs(st.k * p->radius(s) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("arc-length identity at 1e6 random points per built-in profile") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (ProfilePtr p :
         {make_cylinder(1.0), make_cone(0.5), make_sphere(1.5), make_plane(), make_torus_section(0.5, 2.0)}) {
        double worst = 0.0;
        for (int i = 0; i < 1000000; ++i) {
            double s = sample_inside(*p, uni(rng));
            double xp = p->axial(s, 1), rp = p->radius(s, 1);
            worst = std::max(worst, std::abs(xp * xp + rp * rp - 1.0));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("frame_at examples and orthonormality") {
    SUBCASE("cylinder: t = i, n = rho(0)") {
        auto p = make_cylinder(1.0);
        SurfaceFrame f = frame_at(*p, 0.3, 0.0);
        CHECK(f.t.z == doctest::Approx(1.0));
        CHECK(norm(f.t - Vec3{0, 0, 1}) < 1e-14);
        CHECK(norm(f.n - Vec3{1, 0, 0}) < 1e-14);
    }
    SUBCASE("plane disk at s=1: t = rho(0), n = -i") {
        auto p = make_plane();
        SurfaceFrame f = frame_at(*p, 1.0, 0.0);
        CHECK(norm(f.t - Vec3{1, 0, 0}) < 1e-14);
        CHECK(norm(f.n - Vec3{0, 0, -1}) < 1e-14);
    }
    SUBCASE("sphere equator: psi = 0 so t = i, n = rho(0)") {
        // substituting psi from profile_state at s = pi/2 * R0 gives psi = 0
        auto p = make_sphere(1.0);
        CHECK(profile_state(*p, pi / 2).psi == doctest::Approx(0.0).epsilon(1e-14));
        SurfaceFrame f = frame_at(*p, pi / 2, 0.0);
        CHECK(norm(f.t - Vec3{0, 0, 1}) < 1e-13);
        CHECK(norm(f.n - Vec3{1, 0, 0}) < 1e-13);
    }
    SUBCASE("right-handed orthonormal triple everywhere") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (ProfilePtr p : {make_cone(0.8), make_sphere(1.1), make_torus_section(0.6, 2.0)}) {
            for (int i = 0; i < 300; ++i) {
                double s = sample_inside(*p, uni(rng));
                double phi = 2 * pi * uni(rng);
                SurfaceFrame f = frame_at(*p, s, phi);
                CHECK(std::abs(norm(f.e_phi) - 1.0) < 1e-12);
                CHECK(std::abs(norm(f.t) - 1.0) < 1e-12);
                CHECK(std::abs(norm(f.n) - 1.0) < 1e-12);
                CHECK(std::abs(dot(f.e_phi, f.t)) < 1e-12);
                CHECK(std::abs(dot(f.e_phi, f.n)) < 1e-12);
                CHECK(std::abs(dot(f.t, f.n)) < 1e-12);
                CHECK(norm(cross(f.e_phi, f.t) - f.n) < 1e-12);
            }
        }
    }
}

TEST_CASE("numeric frame derivatives converge to derivation formulas") {
    // d n / d s -> -psi' t and d n / d phi -> cos(psi) e_phi, with Richardson
    // extrapolation of order >= 2
    auto p = make_torus_section(0.7, 2.2);
    double s = 1.3, phi = 0.9;
    ProfileState st = profile_state(*p, s);
    SurfaceFrame f = frame_at(*p, s, phi);

    auto n_at = [&](double ss, double pp) { return frame_at(*p, ss, pp).n; };
    auto richardson = [&](auto eval, double h) {
        Vec3 d1 = (1.0 / (2 * h)) * (eval(h) - eval(-h));
        Vec3 d2 = (1.0 / h) * (eval(h / 2) - eval(-h / 2));
        return (1.0 / 3.0) * (4.0 * d2 - d1);
    };

    Vec3 dn_ds = richardson([&](double d) { return n_at(s + d, phi); }, 1e-4);
    Vec3 expected_s = -st.psi1 * f.t;
    CHECK(norm(dn_ds - expected_s) < 1e-9);

    Vec3 dn_dphi = richardson([&](double d) { return n_at(s, phi + d); }, 1e-4);
    Vec3 expected_phi = std::cos(st.psi) * f.e_phi;
    CHECK(norm(dn_dphi - expected_phi) < 1e-9);
}

TEST_CASE("curvature examples") {
    SUBCASE("plane disk: zero curvature") {
        auto p = make_plane();
        CurvatureState c = curvature_at(*p, 1.0);
        CHECK(std::abs(c.b_phiphi) < 1e-14);
        CHECK(std::abs(c.b_ss) < 1e-14);
    }
    SUBCASE("cylinder: b_phiphi = -1/R0, b_ss = 0") {
        auto p = make_cylinder(2.0);
        CurvatureState c = curvature_at(*p, 0.4);
        CHECK(c.b_phiphi == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(std::abs(c.b_ss) < 1e-14);
        CHECK(c.mean2h == doctest::Approx(-0.5).epsilon(1e-14));
    }
    SUBCASE("unit sphere at s=1: b_phiphi = b_ss = -1") {
        auto p = make_sphere(1.0);
        CurvatureState c = curvature_at(*p, 1.0);
        CHECK(c.b_phiphi == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(c.b_ss == doctest::Approx(-1.0).epsilon(1e-13));
    }
    SUBCASE("sphere umbilic property everywhere") {
        auto p = make_sphere(1.7);
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int i = 0; i < 2000; ++i) {
            double s = sample_inside(*p, uni(rng));
            CurvatureState c = curvature_at(*p, s);
            CHECK(std::abs(c.b_phiphi - c.b_ss) < 1e-10);
        }
    }
    SUBCASE("b_ss equals psi1 exactly") {
        auto p = make_torus_section(0.9, 2.4);
        double s = 2.0;
        CHECK(curvature_at(*p, s).b_ss == profile_state(*p, s).psi1);
    }
}

TEST_CASE("domain and apex errors") {
    auto sph = make_sphere(1.0);
    CHECK_THROWS_AS(profile_state(*sph, -0.1), OutOfDomainError);
    CHECK_THROWS_AS(profile_state(*sph, 4.0), OutOfDomainError);
    CHECK_THROWS_AS(profile_state(*sph, 1e-12), ApexSingularityError);
    CHECK_THROWS_AS(frame_at(*sph, pi - 1e-12, 0.0), ApexSingularityError);
    auto pl = make_plane();
    CHECK_THROWS_AS(curvature_at(*pl, 0.0), ApexSingularityError);
}

TEST_CASE("named profile factory") {
    CHECK(make_profile("cylinder(2.0)")->name() == "cylinder");
    CHECK(make_profile("cone(0.5)")->name() == "cone");
    CHECK(make_profile("sphere(1.0)")->name() == "sphere");
    CHECK(make_profile("plane")->name() == "plane");
    CHECK(make_profile("torus(0.5,2)")->name() == "torus");
    CHECK(make_profile("cylinder(2.0)")->radius(0.3) == doctest::Approx(2.0));
    CHECK_THROWS_AS(make_profile("moebius(1)"), std::invalid_argument);
    CHECK_THROWS_AS(make_profile("cylinder()"), std::invalid_argument);
}
