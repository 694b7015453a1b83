#include "shellrev/revolution.hpp"

#include <cmath>
#include <numbers>

namespace shellrev {

double FieldSum::value(double phi, double s) const {
    double acc = 0.0;
    for (const auto& t : terms_) acc += t.value(phi, s);
    return acc;
}

double FieldSum::magnitude(double phi, double s) const {
    double acc = 0.0;
    for (const auto& t : terms_) acc += std::abs(t.value(phi, s));
    return acc;
}

namespace {

struct ProfileQuantities {
    Field k, k1, sinpsi, cospsi, psi1, psi2;
};

ProfileQuantities quantities(const ProfilePtr& p) {
    return {Field::profile_curvature(p, 0), Field::profile_curvature(p, 1),
            Field::profile_radius(p, 1),    Field::profile_axial(p, 1),
            Field::profile_psi(p, 1),       Field::profile_psi(p, 2)};
}

}  // namespace

StrainFields strain_fields(const ProfilePtr& p, const DisplacementField& u) {
    auto q = quantities(p);
    StrainFields e;
    e.eps_phi = q.k * (u.u_phi.d_phi() + u.u_s * q.sinpsi + u.u_n * q.cospsi);
    e.eps_s = u.u_s.d_s() - u.u_n * q.psi1;
    e.eps_phis = 0.5 * (q.k * (u.u_s.d_phi() - u.u_phi * q.sinpsi) + u.u_phi.d_s());
    e.kap_phi = q.k * q.k *
                    (u.u_n.d_phi().d_phi() - 2.0 * u.u_phi.d_phi() * q.cospsi -
                     u.u_s * q.sinpsi * q.cospsi - u.u_n * q.cospsi * q.cospsi) +
                q.k * (u.u_n.d_s() * q.sinpsi + u.u_s * q.psi1 * q.sinpsi);
    e.kap_s = u.u_n.d_s().d_s() + 2.0 * u.u_s.d_s() * q.psi1 + u.u_s * q.psi2 - u.u_n * q.psi1 * q.psi1;
    e.kap_phis = q.k * q.k * (-u.u_n.d_phi() * q.sinpsi + u.u_phi * q.sinpsi * q.cospsi) +
                 q.k * (u.u_n.d_s().d_phi() + u.u_s.d_phi() * q.psi1 - u.u_phi.d_s() * q.cospsi);
    e.kap_sphi = q.k * (u.u_n.d_phi().d_s() - u.u_phi.d_s() * q.cospsi + u.u_s.d_phi() * q.psi1) +
                 q.k1 * (u.u_n.d_phi() - u.u_phi * q.cospsi);
    return e;
}

StressFields stress_fields(const ElasticModuli& m, const StrainFields& e) {
    StressFields st;
    Field tr_eps = e.eps_phi + e.eps_s;
    Field tr_kap = e.kap_phi + e.kap_s;
    st.tau_phi = m.c1() * tr_eps + m.c2() * e.eps_phi;
    st.tau_s = m.c1() * tr_eps + m.c2() * e.eps_s;
    st.tau_phis = m.c2() * e.eps_phis;
    st.mu_phi = m.d1() * tr_kap + m.d2() * e.kap_phi;
    st.mu_s = m.d1() * tr_kap + m.d2() * e.kap_s;
    st.mu_phis = m.d2() * e.kap_phis;
    st.mu_sphi = m.d2() * e.kap_sphi;
    return st;
}

ShearFields shear_force_fields(const ProfilePtr& p, const ElasticModuli& m, const DisplacementField& u,
                               const LoadField& loads) {
    auto q = quantities(p);
    StressFields st = stress_fields(m, strain_fields(p, u));
    ShearFields sh;
    sh.q_phi = -(q.k * (st.mu_phi.d_phi() + st.mu_phis * q.sinpsi + st.mu_sphi * q.sinpsi)) -
               st.mu_sphi.d_s() + loads.m_s;
    sh.q_s = -(q.k * (-(st.mu_phi * q.sinpsi) + st.mu_s * q.sinpsi + st.mu_phis.d_phi())) - st.mu_s.d_s() -
             loads.m_phi;
    return sh;
}

EquilibriumFields equilibrium_residual_fields(const ProfilePtr& p, const ElasticModuli& m,
                                              const DisplacementField& u, const LoadField& loads) {
    auto q = quantities(p);
    StressFields st = stress_fields(m, strain_fields(p, u));
    ShearFields sh = shear_force_fields(p, m, u, loads);
    Field k2 = q.k * q.k;

    EquilibriumFields out;
    out.res_phi = FieldSum({
        -(k2 * st.mu_phi.d_phi() * q.cospsi),
        -(k2 * st.mu_sphi * q.cospsi * q.sinpsi),
        q.k * st.tau_phi.d_phi(),
        2.0 * q.k * st.tau_phis * q.sinpsi,
        q.k * st.mu_phis * q.psi1 * q.sinpsi,
        -(q.k * st.mu_sphi.d_s() * q.cospsi),
        q.k * st.mu_sphi * q.psi1 * q.sinpsi,
        q.k * sh.q_phi * q.cospsi,
        st.tau_phis.d_s(),
        -(q.k1 * st.mu_sphi * q.cospsi),
        loads.f_phi,
    });
    out.res_s = FieldSum({
        k2 * st.mu_phi * q.cospsi * q.sinpsi,
        -(q.k * st.tau_phi * q.sinpsi),
        q.k * st.tau_s * q.sinpsi,
        q.k * st.tau_phis.d_phi(),
        q.k * st.mu_s * q.psi1 * q.sinpsi,
        q.k * st.mu_phis.d_phi() * q.psi1,
        st.tau_s.d_s(),
        st.mu_s.d_s() * q.psi1,
        st.mu_s * q.psi2,
        -(sh.q_s * q.psi1),
        loads.f_s,
    });
    out.res_n = FieldSum({
        k2 * st.mu_phi * q.cospsi * q.cospsi,
        -(q.k * st.tau_phi * q.cospsi),
        q.k * sh.q_phi.d_phi(),
        q.k * sh.q_s * q.sinpsi,
        st.tau_s * q.psi1,
        st.mu_s * q.psi1 * q.psi1,
        sh.q_s.d_s(),
        loads.f_n,
    });
    return out;
}

ConsistencyFields consistency_residual_fields(const ProfilePtr& p, const StrainFields& e) {
    auto q = quantities(p);
    ConsistencyFields out;
    out.lambda_phi = q.k * (e.eps_s.d_phi() - 2.0 * e.eps_phis * q.sinpsi) - e.eps_phis.d_s();
    out.lambda_s =
        q.k * (-(e.eps_s * q.sinpsi) + e.eps_phi * q.sinpsi - e.eps_phis.d_phi()) + e.eps_phi.d_s();

    // div(kappa* - b*.eps* + Lambda n) = 0 in components; the rotated tensor is
    //   T_pp = kap_s - psi' eps_s         T_ps = -kap_sphi + psi' eps_phis
    //   T_sp = -kap_phis - k cos(psi) eps_phis   T_ss = kap_phi + k cos(psi) eps_phi
    Field t_pp = e.kap_s - q.psi1 * e.eps_s;
    Field t_ps = -e.kap_sphi + q.psi1 * e.eps_phis;
    Field t_sp = -e.kap_phis - q.k * q.cospsi * e.eps_phis;
    Field t_ss = e.kap_phi + q.k * q.cospsi * e.eps_phi;

    out.res_1 = FieldSum({
        q.k * t_pp.d_phi(),
        q.k * (t_ps + t_sp) * q.sinpsi,
        q.k * out.lambda_phi * q.cospsi,
        t_sp.d_s(),
    });
    out.res_2 = FieldSum({
        q.k * t_ps.d_phi(),
        q.k * (t_ss - t_pp) * q.sinpsi,
        t_ss.d_s(),
        -(out.lambda_s * q.psi1),
    });
    out.res_3 = FieldSum({
        q.k * out.lambda_phi.d_phi(),
        q.k * out.lambda_s * q.sinpsi,
        -(q.k * t_pp * q.cospsi),
        out.lambda_s.d_s(),
        t_ss * q.psi1,
    });
    return out;
}

StrainState eval_at(const StrainFields& f, double phi, double s) {
    StrainState e;
    e.eps_phi = f.eps_phi.value(phi, s);
    e.eps_s = f.eps_s.value(phi, s);
    e.eps_phis = f.eps_phis.value(phi, s);
    e.kap_phi = f.kap_phi.value(phi, s);
    e.kap_s = f.kap_s.value(phi, s);
    e.kap_phis = f.kap_phis.value(phi, s);
    e.kap_sphi = f.kap_sphi.value(phi, s);
    return e;
}

StrainState strains(const ProfilePtr& p, const DisplacementField& u, double phi, double s) {
    validate_point(*p, s);
    return eval_at(strain_fields(p, u), phi, s);
}

std::pair<double, double> shear_forces(const ProfilePtr& p, const ElasticModuli& m, const DisplacementField& u,
                                       const LoadField& loads, double phi, double s) {
    validate_point(*p, s);
    ShearFields sh = shear_force_fields(p, m, u, loads);
    return {sh.q_phi.value(phi, s), sh.q_s.value(phi, s)};
}

Residual3 equilibrium_residual(const ProfilePtr& p, const ElasticModuli& m, const DisplacementField& u,
                               const LoadField& loads, double phi, double s) {
    validate_point(*p, s);
    EquilibriumFields f = equilibrium_residual_fields(p, m, u, loads);
    Residual3 r;
    const FieldSum* sums[3] = {&f.res_phi, &f.res_s, &f.res_n};
    for (int i = 0; i < 3; ++i) {
        r.value[i] = sums[i]->value(phi, s);
        r.scale[i] = sums[i]->magnitude(phi, s);
    }
    return r;
}

ConsistencyResidual consistency_residual(const ProfilePtr& p, const StrainFields& e, double phi, double s) {
    validate_point(*p, s);
    ConsistencyFields f = consistency_residual_fields(p, e);
    ConsistencyResidual r;
    const FieldSum* sums[3] = {&f.res_1, &f.res_2, &f.res_3};
    for (int i = 0; i < 3; ++i) {
        r.value[i] = sums[i]->value(phi, s);
        r.scale[i] = sums[i]->magnitude(phi, s);
    }
    r.lambda_phi = f.lambda_phi.value(phi, s);
    r.lambda_s = f.lambda_s.value(phi, s);
    return r;
}

// --- presets -------------------------------------------------------------

DisplacementField rigid_axial_translation(const ProfilePtr& p, double c) {
    DisplacementField u;
    u.u_s = c * Field::profile_axial(p, 1);    // c cos(psi)
    u.u_n = -c * Field::profile_radius(p, 1);  // -c sin(psi)
    return u;
}

DisplacementField rigid_transverse_translation(const ProfilePtr& p, double c) {
    const double half_pi = std::numbers::pi / 2;
    Field cosphi = Field::harmonic(1.0, 1.0, 0.0, 0.0);
    Field sinphi = Field::harmonic(1.0, 1.0, 0.0, -half_pi);
    DisplacementField u;
    u.u_phi = -c * sinphi;
    u.u_s = c * cosphi * Field::profile_radius(p, 1);
    u.u_n = c * cosphi * Field::profile_axial(p, 1);
    return u;
}

DisplacementField rigid_axis_rotation(const ProfilePtr& p, double omega) {
    DisplacementField u;
    u.u_phi = omega * Field::profile_radius(p, 0);
    return u;
}

DisplacementField rigid_transverse_rotation(const ProfilePtr& p, double omega) {
    const double half_pi = std::numbers::pi / 2;
    Field cosphi = Field::harmonic(1.0, 1.0, 0.0, 0.0);
    Field sinphi = Field::harmonic(1.0, 1.0, 0.0, -half_pi);
    Field r = Field::profile_radius(p, 0);
    Field x = Field::profile_axial(p, 0);
    Field sinpsi = Field::profile_radius(p, 1);
    Field cospsi = Field::profile_axial(p, 1);
    DisplacementField u;
    u.u_phi = -omega * x * sinphi;
    u.u_s = omega * cosphi * (x * sinpsi - r * cospsi);
    u.u_n = omega * cosphi * (x * cospsi + r * sinpsi);
    return u;
}

DisplacementField uniform_inflation(double c) {
    DisplacementField u;
    u.u_n = Field(c);
    return u;
}

DisplacementField harmonic_displacement(double amp_phi, double amp_z, double amp_n, double k_phi, double k_z) {
    const double half_pi = std::numbers::pi / 2;
    DisplacementField u;
    u.u_phi = Field::harmonic(amp_phi, k_phi, k_z, 0.0);
    u.u_s = Field::harmonic(amp_z, k_phi, k_z, 0.0);
    u.u_n = Field::harmonic(amp_n, k_phi, k_z, -half_pi);  // sin phase
    return u;
}

LoadField pressure_load(double p, double k_phi, double k_z) {
    const double half_pi = std::numbers::pi / 2;
    LoadField l;
    l.f_n = Field::harmonic(p, k_phi, k_z, -half_pi);
    return l;
}

}  // namespace shellrev
