#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "shellrev/cylinder.hpp"
#include "shellrev/revolution.hpp"

using namespace shellrev;
using std::numbers::pi;

namespace {

double sample_inside(const MeridianProfile& p, double u) {
    auto [lo, hi] = p.s_domain();
    double margin = 0.08 * (hi - lo);
    return lo + margin + (hi - lo - 2 * margin) * u;
}

double max_abs(const StrainState& e) {
    double m = 0.0;
    for (double v : {e.eps_phi, e.eps_s, e.eps_phis, e.kap_phi, e.kap_s, e.kap_phis, e.kap_sphi})
        m = std::max(m, std::abs(v));
    return m;
}

// random 2pi-periodic trigonometric displacement field
DisplacementField random_trig_field(std::mt19937& rng) {
    std::uniform_int_distribution<int> m_dist(0, 3);
    std::uniform_real_distribution<double> amp(-1.0, 1.0), beta(-2.0, 2.0), delta(0.0, 2 * pi);
    auto comp = [&]() {
        Field f;
        for (int t = 0; t < 3; ++t) f += Field::harmonic(amp(rng), m_dist(rng), beta(rng), delta(rng));
        return f;
    };
    return {comp(), comp(), comp()};
}

DisplacementField combined_rigid(const ProfilePtr& p) {
    DisplacementField a = rigid_axial_translation(p, 0.7);
    DisplacementField b = rigid_transverse_translation(p, -0.4);
    DisplacementField c = rigid_axis_rotation(p, 0.3);
    DisplacementField d = rigid_transverse_rotation(p, 0.5);
    return {a.u_phi + b.u_phi + c.u_phi + d.u_phi, a.u_s + b.u_s + c.u_s + d.u_s,
            a.u_n + b.u_n + c.u_n + d.u_n};
}

}  // namespace

TEST_CASE("rigid motions produce zero strain") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (ProfilePtr p : {make_cylinder(1.3), make_cone(0.7), make_sphere(1.8)}) {
        std::vector<DisplacementField> family = {
            rigid_axial_translation(p, 1.0),   rigid_transverse_translation(p, 1.0),
            rigid_axis_rotation(p, 1.0),       rigid_transverse_rotation(p, 1.0),
            combined_rigid(p),
        };
        for (const auto& u : family) {
            StrainFields sf = strain_fields(p, u);
            for (int i = 0; i < 200; ++i) {
                double s = sample_inside(*p, uni(rng));
                double phi = 2 * pi * uni(rng);
                CHECK(max_abs(eval_at(sf, phi, s)) < 1e-11);
            }
        }
    }
}

TEST_CASE("displacement fields are 2pi-periodic in phi") {
    auto p = make_cone(0.6);
    std::mt19937 rng(77);
    DisplacementField u = random_trig_field(rng);
    for (double s : {1.0, 2.0, 5.0}) {
        CHECK(u.u_phi.value(0.0, s) == doctest::Approx(u.u_phi.value(2 * pi, s)).epsilon(1e-12));
        CHECK(u.u_s.value(0.0, s) == doctest::Approx(u.u_s.value(2 * pi, s)).epsilon(1e-12));
        CHECK(u.u_n.value(0.0, s) == doctest::Approx(u.u_n.value(2 * pi, s)).epsilon(1e-12));
    }
    (void)p;
}

TEST_CASE("uniform inflation of a cylinder") {
    double r0 = 1.6, c = 0.05;
    auto p = make_cylinder(r0);
    StrainState e = strains(p, uniform_inflation(c), 0.4, 0.2);
    CHECK(e.eps_phi == doctest::Approx(c / r0).epsilon(1e-13));
    CHECK(std::abs(e.eps_s) < 1e-15);
    CHECK(e.kap_phi == doctest::Approx(-c / (r0 * r0)).epsilon(1e-13));
    CHECK(std::abs(e.kap_s) < 1e-15);
}

TEST_CASE("kappa symmetry for kinematic strains") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (ProfilePtr p : {make_cylinder(1.1), make_cone(0.5), make_sphere(2.0)}) {
        for (int f = 0; f < 10; ++f) {
            DisplacementField u = random_trig_field(rng);
            StrainFields sf = strain_fields(p, u);
            for (int i = 0; i < 30; ++i) {
                double s = sample_inside(*p, uni(rng));
                double phi = 2 * pi * uni(rng);
                StrainState e = eval_at(sf, phi, s);
                double scale = std::max(1.0, max_abs(e));
                CHECK(std::abs(e.kap_phis - e.kap_sphi) < 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("shear forces") {
    SUBCASE("rigid body with moment loads: Q_phi = m_s, Q_s = -m_phi") {
        auto p = make_cone(0.8);
        double c = 0.9, d = -1.3;
        LoadField loads;
        loads.m_s = Field(c);
        loads.m_phi = Field(d);
        ElasticModuli m(1.0, 0.3, 0.05);
        auto [q_phi, q_s] = shear_forces(p, m, combined_rigid(p), loads, 1.0, 3.0);
        CHECK(q_phi == doctest::Approx(c).epsilon(1e-12));
        CHECK(q_s == doctest::Approx(-d).epsilon(1e-12));
    }
    SUBCASE("uniform inflation of a cylinder: Q = 0") {
        auto p = make_cylinder(1.0);
        ElasticModuli m(1.0, 0.3, 0.1);
        auto [q_phi, q_s] = shear_forces(p, m, uniform_inflation(0.01), LoadField{}, 0.3, 0.2);
        CHECK(std::abs(q_phi) < 1e-15);
        CHECK(std::abs(q_s) < 1e-15);
    }
    SUBCASE("harmonic solution: Q matches the algebraic amplitudes") {
        double r = 1.2, h = 0.08, mu = 2.0, nu = 0.3, p_mag = 1.0, kz = 1.4;
        int kp = 2;
        auto prof = make_cylinder(r);
        ElasticModuli m(mu, nu, h);
        HarmonicSolution sol =
            solve_harmonic(TheoryVariant::Eliseev, HarmonicProblem::from_pressure(r, h, mu, nu, kp, kz, p_mag));
        DisplacementField u = harmonic_displacement(sol.u_phi, sol.u_z, sol.u_n, kp, kz);

        // independent algebraic amplitudes on the cylinder (sin-phase strains)
        double e_phi = (sol.u_n - kp * sol.u_phi) / r;
        double k_phi_amp = -((kp * kp + 1) * sol.u_n - 2 * kp * sol.u_phi) / (r * r);
        double k_s_amp = -kz * kz * sol.u_n;
        double k_ps_amp = (-kp * kz * sol.u_n + kz * sol.u_phi) / r;
        (void)e_phi;
        double m_phi_amp = m.d1() * (k_phi_amp + k_s_amp) + m.d2() * k_phi_amp;
        double m_s_amp = m.d1() * (k_phi_amp + k_s_amp) + m.d2() * k_s_amp;
        double m_ps_amp = m.d2() * k_ps_amp;
        double q_phi_amp = -kp * m_phi_amp / r - kz * m_ps_amp;  // cos-phase
        double q_s_amp = -kp * m_ps_amp / r - kz * m_s_amp;

        for (auto [phi, s] : {std::pair{0.3, 0.5}, {1.7, -0.8}, {2.9, 1.9}}) {
            double theta = kp * phi + kz * s;
            auto [q_phi, q_s] = shear_forces(prof, m, u, LoadField{}, phi, s);
            CHECK(q_phi == doctest::Approx(q_phi_amp * std::cos(theta)).epsilon(1e-9));
            CHECK(q_s == doctest::Approx(q_s_amp * std::cos(theta)).epsilon(1e-9));
        }
    }
}

TEST_CASE("equilibrium residual") {
    ElasticModuli m(1.0, 0.3, 0.1);
    SUBCASE("zero displacement, zero load") {
        auto p = make_sphere(1.0);
        Residual3 r = equilibrium_residual(p, m, DisplacementField{}, LoadField{}, 0.5, 1.2);
        CHECK(r.value[0] == 0.0);
        CHECK(r.value[1] == 0.0);
        CHECK(r.value[2] == 0.0);
    }
    SUBCASE("rigid motions are force-free") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (ProfilePtr p : {make_cylinder(1.0), make_cone(0.9), make_sphere(1.4)}) {
            double r0 = p->radius(sample_inside(*p, 0.5));
            double tol = 1e-12 * m.c2() / r0;
            DisplacementField u = combined_rigid(p);
            EquilibriumFields f = equilibrium_residual_fields(p, m, u, LoadField{});
            for (int i = 0; i < 100; ++i) {
                double s = sample_inside(*p, uni(rng));
                double phi = 2 * pi * uni(rng);
                CHECK(std::abs(f.res_phi.value(phi, s)) < tol);
                CHECK(std::abs(f.res_s.value(phi, s)) < tol);
                CHECK(std::abs(f.res_n.value(phi, s)) < tol);
            }
        }
    }
    SUBCASE("harmonic closed-form solution satisfies equilibrium under its pressure") {
        double r = 1.0, h = 0.12, mu = 1.7, nu = 0.25, p_mag = 2.0, kz = 0.9;
        int kp = 1;
        auto prof = make_cylinder(r);
        ElasticModuli mm(mu, nu, h);
        HarmonicSolution sol =
            solve_harmonic(TheoryVariant::Eliseev, HarmonicProblem::from_pressure(r, h, mu, nu, kp, kz, p_mag));
        DisplacementField u = harmonic_displacement(sol.u_phi, sol.u_z, sol.u_n, kp, kz);
        LoadField loads = pressure_load(p_mag, kp, kz);
        EquilibriumFields f = equilibrium_residual_fields(prof, mm, u, loads);
        std::mt19937 rng(9);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            double s = -4.0 + 8.0 * uni(rng);
            double phi = 2 * pi * uni(rng);
            CHECK(std::abs(f.res_phi.value(phi, s)) < 1e-9 * p_mag);
            CHECK(std::abs(f.res_s.value(phi, s)) < 1e-9 * p_mag);
            CHECK(std::abs(f.res_n.value(phi, s)) < 1e-9 * p_mag);
        }
    }
}

TEST_CASE("consistency residual") {
    SUBCASE("zero strains") {
        auto p = make_cone(0.6);
        ConsistencyResidual r = consistency_residual(p, StrainFields{}, 0.3, 2.0);
        CHECK(r.value[0] == 0.0);
        CHECK(r.value[1] == 0.0);
        CHECK(r.value[2] == 0.0);
        CHECK(r.lambda_phi == 0.0);
        CHECK(r.lambda_s == 0.0);
    }
    SUBCASE("kinematic strains are compatible (50 random fields)") {
        std::mt19937 rng(13);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (ProfilePtr p : {make_cylinder(1.0), make_cone(0.7)}) {
            for (int f = 0; f < 25; ++f) {
                DisplacementField u = random_trig_field(rng);
                ConsistencyFields cf = consistency_residual_fields(p, strain_fields(p, u));
                for (int i = 0; i < 20; ++i) {
                    double s = sample_inside(*p, uni(rng));
                    double phi = 2 * pi * uni(rng);
                    for (const FieldSum* fs : {&cf.res_1, &cf.res_2, &cf.res_3}) {
                        double scale = std::max(fs->magnitude(phi, s), 1e-6);
                        CHECK(std::abs(fs->value(phi, s)) < 1e-9 * scale);
                    }
                }
            }
        }
    }
    SUBCASE("incompatible field eps_phi = s^2 on the unit cylinder") {
        // symbolic substitution: Lambda = (0, 2s), residual = (0, 2s, 2)
        auto p = make_cylinder(1.0);
        StrainFields e;
        e.eps_phi = Field::monomial(1.0, 0, 2);
        double s = 0.7, phi = 1.1;
        ConsistencyResidual r = consistency_residual(p, e, phi, s);
        CHECK(r.lambda_phi == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
        CHECK(r.lambda_s == doctest::Approx(2 * s).epsilon(1e-13));
        CHECK(r.value[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
        CHECK(r.value[1] == doctest::Approx(2 * s).epsilon(1e-13));
        CHECK(r.value[2] == doctest::Approx(2.0).epsilon(1e-13));
    }
}

TEST_CASE("concurrent evaluation is safe on shared immutable fields") {
    auto p = make_sphere(1.5);
    std::mt19937 rng(57);
    DisplacementField u = random_trig_field(rng);
    StrainFields sf = strain_fields(p, u);
    StrainState ref = eval_at(sf, 0.8, 2.1);
    std::vector<std::thread> pool;
    std::vector<double> results(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t]() {
            double acc = 0.0;
            for (int i = 0; i < 200; ++i) acc += eval_at(sf, 0.8, 2.1).eps_phi;
            results[t] = acc / 200;
        });
    for (auto& th : pool) th.join();
    for (double v : results) CHECK(v == doctest::Approx(ref.eps_phi).epsilon(1e-15));
}
