#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shellrev {

enum class TubeLoadCase { Inner, Outer, Both };

std::string load_case_name(TubeLoadCase c);
std::optional<TubeLoadCase> parse_load_case(const std::string& name);

/// Thick-walled elastic tube under a harmonic surface load equivalent to the
/// shell's normal pressure p. Positive p pushes outward on both surfaces.
struct TubeProblem {
    double radius = 1.0;     // mid-surface radius
    double thickness = 0.1;  // 0 < h < 2R
    double nu = 0.3;
    double mu = 1.0;
    int k_phi = 0;
    double k_z = 0.0;
    TubeLoadCase load_case = TubeLoadCase::Both;
    double pressure = 0.0;

    double r_in() const { return radius - thickness / 2.0; }
    double r_out() const { return radius + thickness / 2.0; }
    double lambda() const { return 2.0 * mu * nu / (1.0 - 2.0 * nu); }
    void validate() const;
};

/// (p_in, p_out): surface loads statically equivalent to the mid-surface
/// pressure p for the chosen case.
std::pair<double, double> equivalent_pressures(const TubeProblem& problem);

/// Radial amplitude profiles of u = U(r) * harmonic(k_phi, k_z).
/// r is a uniform grid over [R_in, R_out] (mesh nodes plus collocation
/// midpoints).
struct RadialSolution {
    std::vector<double> r;
    std::vector<double> u_r, u_phi, u_z;
    std::vector<double> du_r, du_phi, du_z;  // d/dr amplitudes
    int mesh_size = 0;          // coarse-mesh interval count
    double error_estimate = 0;  // relative, from one mesh halving
};

/// Max residual of the traction boundary conditions at the two surfaces,
/// evaluated from the stored profiles (should be < 1e-8 * p).
double surface_traction_residual(const TubeProblem& problem, const RadialSolution& sol);

/// Closed-form plane-strain solution U_r = a r + b / r for k_phi = k_z = 0,
/// sampled on the same grid layout as the numeric solver.
RadialSolution lame_axisymmetric(const TubeProblem& problem, int mesh_size = 64);

/// Lobatto IIIA (order 4) collocation for the coupled radial amplitude
/// equations with traction boundary conditions. Throws NoConvergenceError /
/// IllPosedError per the interface contract.
RadialSolution solve_radial_bvp(const TubeProblem& problem, int mesh_size = 64);

/// (1/h) * integral of U_r over the wall (composite Simpson on the stored
/// grid).
double averaged_radial(const RadialSolution& sol);

}  // namespace shellrev
