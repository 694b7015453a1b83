#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shellrev/cylinder.hpp"
#include "shellrev/tube3d.hpp"

namespace shellrev {

/// A model entry in a sweep: either a shell theory variant or a 3D tube
/// load case ("tube3d:inner|outer|both").
struct ModelRef {
    bool is_tube = false;
    TheoryVariant variant = TheoryVariant::Eliseev;
    TubeLoadCase load_case = TubeLoadCase::Both;

    std::string id() const;
    static std::optional<ModelRef> parse(const std::string& name);
};

struct SweepSpec {
    double radius = 1.0;
    double mu = 1.0;
    double nu = 0.3;
    int k_phi = 0;
    double k_z = 1.0;
    double pressure = 1.0;
    int tube_mesh = 64;
};

struct SweepRow {
    double h = 0.0;
    std::string model;
    double u_n = 0.0;    // valid when flag empty
    double u_n_h = 0.0;  // u_n * h
    std::string flag;    // "", "singular", "error"
    std::string note;
};

/// Evaluate each model's normal-displacement intensity over the thickness
/// grid; singular thicknesses are flagged, not valued. Rows are ordered by
/// (h, model list order).
std::vector<SweepRow> sweep_curve(const std::vector<ModelRef>& models, const std::vector<double>& h_grid,
                                  const SweepSpec& spec);

}  // namespace shellrev
