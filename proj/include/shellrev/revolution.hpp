#pragma once

#include <array>
#include <utility>
#include <vector>

#include "shellrev/elastic.hpp"
#include "shellrev/field.hpp"
#include "shellrev/profile.hpp"

namespace shellrev {

struct DisplacementField {
    Field u_phi, u_s, u_n;
};

/// Force load per unit area (f) and tangential moment load per unit area (m).
struct LoadField {
    Field f_phi, f_s, f_n;
    Field m_phi, m_s;
};

struct StrainFields {
    Field eps_phi, eps_s, eps_phis;
    Field kap_phi, kap_s, kap_phis, kap_sphi;
};

struct StressFields {
    Field tau_phi, tau_s, tau_phis;
    Field mu_phi, mu_s, mu_phis, mu_sphi;
};

struct ShearFields {
    Field q_phi, q_s;
};

/// A residual kept as its list of additive terms, so that a relative
/// magnitude (sum of |term|) is available alongside the value.
class FieldSum {
public:
    FieldSum() = default;
    explicit FieldSum(std::vector<Field> terms) : terms_(std::move(terms)) {}
    double value(double phi, double s) const;
    double magnitude(double phi, double s) const;
    const std::vector<Field>& terms() const { return terms_; }

private:
    std::vector<Field> terms_;
};

struct EquilibriumFields {
    FieldSum res_phi, res_s, res_n;
};

struct ConsistencyFields {
    FieldSum res_1, res_2, res_3;
    Field lambda_phi, lambda_s;
};

StrainFields strain_fields(const ProfilePtr& p, const DisplacementField& u);
StressFields stress_fields(const ElasticModuli& m, const StrainFields& e);
ShearFields shear_force_fields(const ProfilePtr& p, const ElasticModuli& m, const DisplacementField& u,
                               const LoadField& loads);
EquilibriumFields equilibrium_residual_fields(const ProfilePtr& p, const ElasticModuli& m,
                                              const DisplacementField& u, const LoadField& loads);
ConsistencyFields consistency_residual_fields(const ProfilePtr& p, const StrainFields& e);

StrainState eval_at(const StrainFields& f, double phi, double s);

StrainState strains(const ProfilePtr& p, const DisplacementField& u, double phi, double s);
std::pair<double, double> shear_forces(const ProfilePtr& p, const ElasticModuli& m, const DisplacementField& u,
                                       const LoadField& loads, double phi, double s);

struct Residual3 {
    std::array<double, 3> value{};
    std::array<double, 3> scale{};  // sum of |terms|, for relative checks
};

Residual3 equilibrium_residual(const ProfilePtr& p, const ElasticModuli& m, const DisplacementField& u,
                               const LoadField& loads, double phi, double s);

struct ConsistencyResidual {
    std::array<double, 3> value{};
    std::array<double, 3> scale{};
    double lambda_phi = 0.0;
    double lambda_s = 0.0;
};

ConsistencyResidual consistency_residual(const ProfilePtr& p, const StrainFields& e, double phi, double s);

// --- displacement / load presets ---------------------------------------

DisplacementField rigid_axial_translation(const ProfilePtr& p, double c);
/// translation along rho(0)
DisplacementField rigid_transverse_translation(const ProfilePtr& p, double c);
DisplacementField rigid_axis_rotation(const ProfilePtr& p, double omega);
/// small rotation about the transverse axis e_y = rho(pi/2)
DisplacementField rigid_transverse_rotation(const ProfilePtr& p, double omega);
/// u_n = c
DisplacementField uniform_inflation(double c);
/// u_phi = amp_phi cos(k_phi phi + k_z s), u_s = amp_z cos(.), u_n = amp_n sin(.)
DisplacementField harmonic_displacement(double amp_phi, double amp_z, double amp_n, double k_phi, double k_z);
/// f_n = p sin(k_phi phi + k_z s), other components zero
LoadField pressure_load(double p, double k_phi, double k_z);

}  // namespace shellrev
