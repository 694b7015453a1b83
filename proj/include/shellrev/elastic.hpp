#pragma once

#include <optional>

namespace shellrev {

struct StrainState {
    double eps_phi = 0.0, eps_s = 0.0, eps_phis = 0.0;
    double kap_phi = 0.0, kap_s = 0.0, kap_phis = 0.0, kap_sphi = 0.0;
};

struct StressState {
    double tau_phi = 0.0, tau_s = 0.0, tau_phis = 0.0;
    double mu_phi = 0.0, mu_s = 0.0, mu_phis = 0.0, mu_sphi = 0.0;
    std::optional<double> q_phi, q_s;
};

/// Four-constant isotropic law, moduli taken as in the plate under plane
/// stress and bending:
///   C1 = 2*mu*nu*h/(1-nu), C2 = 2*mu*h, D1 = h^2/12 C1, D2 = h^2/12 C2,
/// inverse moduli B1 = -C1/(C2(2C1+C2)), B2 = 1/C2, A1 = -D1/(D2(2D1+D2)),
/// A2 = 1/D2.
class ElasticModuli {
public:
    ElasticModuli(double shear_modulus, double poisson_ratio, double thickness);

    double mu() const { return mu_; }
    double nu() const { return nu_; }
    double h() const { return h_; }

    double c1() const { return 2.0 * mu_ * nu_ * h_ / (1.0 - nu_); }
    double c2() const { return 2.0 * mu_ * h_; }
    double d1() const { return h_ * h_ / 12.0 * c1(); }
    double d2() const { return h_ * h_ / 12.0 * c2(); }

    double b1() const;
    double b2() const;
    double a1() const;
    double a2() const;

    double gamma(double r) const { return h_ * h_ / (12.0 * r * r); }

private:
    double mu_, nu_, h_;
};

/// tau = C1 tr(eps) a + C2 eps, mu = D1 tr(kap) a + D2 kap; Q left unset.
StressState stresses(const ElasticModuli& m, const StrainState& e);

/// Exact inverse via A1,A2,B1,B2. Throws DegenerateModuliError at nu = -1.
StrainState strains_from_stresses(const ElasticModuli& m, const StressState& st);

/// Pi = (C1 eps^2 + C2 eps:eps + D1 kap^2 + D2 kap:kap)/2.
double strain_energy_density(const ElasticModuli& m, const StrainState& e);

}  // namespace shellrev
