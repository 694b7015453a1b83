#include "shellrev/elastic.hpp"

#include <cmath>
#include <stdexcept>

#include "shellrev/errors.hpp"

namespace shellrev {

ElasticModuli::ElasticModuli(double shear_modulus, double poisson_ratio, double thickness)
    : mu_(shear_modulus), nu_(poisson_ratio), h_(thickness) {
    if (!(mu_ > 0.0)) throw std::invalid_argument("ElasticModuli: shear modulus must be positive");
    if (!(h_ > 0.0)) throw std::invalid_argument("ElasticModuli: thickness must be positive");
    if (!(nu_ > -1.0 && nu_ < 0.5)) throw std::invalid_argument("ElasticModuli: nu must lie in (-1, 0.5)");
}

double ElasticModuli::b1() const {
    double den = c2() * (2.0 * c1() + c2());
    if (std::abs(2.0 * c1() + c2()) < 1e-300)
        throw DegenerateModuliError("2C1+C2 = 0: elastic law not invertible");
    return -c1() / den;
}
double ElasticModuli::b2() const { return 1.0 / c2(); }
double ElasticModuli::a1() const {
    double den = d2() * (2.0 * d1() + d2());
    if (std::abs(2.0 * d1() + d2()) < 1e-300)
        throw DegenerateModuliError("2D1+D2 = 0: elastic law not invertible");
    return -d1() / den;
}
double ElasticModuli::a2() const { return 1.0 / d2(); }

StressState stresses(const ElasticModuli& m, const StrainState& e) {
    StressState st;
    double tr_eps = e.eps_phi + e.eps_s;
    double tr_kap = e.kap_phi + e.kap_s;
    st.tau_phi = m.c1() * tr_eps + m.c2() * e.eps_phi;
    st.tau_s = m.c1() * tr_eps + m.c2() * e.eps_s;
    st.tau_phis = m.c2() * e.eps_phis;
    st.mu_phi = m.d1() * tr_kap + m.d2() * e.kap_phi;
    st.mu_s = m.d1() * tr_kap + m.d2() * e.kap_s;
    st.mu_phis = m.d2() * e.kap_phis;
    st.mu_sphi = m.d2() * e.kap_sphi;
    return st;
}

StrainState strains_from_stresses(const ElasticModuli& m, const StressState& st) {
    StrainState e;
    double b1 = m.b1(), b2 = m.b2(), a1 = m.a1(), a2 = m.a2();
    double tr_tau = st.tau_phi + st.tau_s;
    double tr_mu = st.mu_phi + st.mu_s;
    e.eps_phi = b1 * tr_tau + b2 * st.tau_phi;
    e.eps_s = b1 * tr_tau + b2 * st.tau_s;
    e.eps_phis = b2 * st.tau_phis;
    e.kap_phi = a1 * tr_mu + a2 * st.mu_phi;
    e.kap_s = a1 * tr_mu + a2 * st.mu_s;
    e.kap_phis = a2 * st.mu_phis;
    e.kap_sphi = a2 * st.mu_sphi;
    return e;
}

double strain_energy_density(const ElasticModuli& m, const StrainState& e) {
    double tr_eps = e.eps_phi + e.eps_s;
    double tr_kap = e.kap_phi + e.kap_s;
    double eps_dot = e.eps_phi * e.eps_phi + e.eps_s * e.eps_s + 2.0 * e.eps_phis * e.eps_phis;
    double kap_dot =
        e.kap_phi * e.kap_phi + e.kap_s * e.kap_s + e.kap_phis * e.kap_phis + e.kap_sphi * e.kap_sphi;
    return 0.5 * (m.c1() * tr_eps * tr_eps + m.c2() * eps_dot + m.d1() * tr_kap * tr_kap + m.d2() * kap_dot);
}

}  // namespace shellrev
