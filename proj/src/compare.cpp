#include "shellrev/compare.hpp"

#include "shellrev/errors.hpp"

namespace shellrev {

std::string ModelRef::id() const {
    if (is_tube) return "tube3d:" + load_case_name(load_case);
    return variant_name(variant);
}

std::optional<ModelRef> ModelRef::parse(const std::string& name) {
    ModelRef m;
    if (name.rfind("tube3d:", 0) == 0) {
        auto c = parse_load_case(name.substr(7));
        if (!c) return std::nullopt;
        m.is_tube = true;
        m.load_case = *c;
        return m;
    }
    auto v = parse_variant(name);
    if (!v) return std::nullopt;
    m.variant = *v;
    return m;
}

std::vector<SweepRow> sweep_curve(const std::vector<ModelRef>& models, const std::vector<double>& h_grid,
                                  const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    rows.reserve(models.size() * h_grid.size());
    for (double h : h_grid) {
        for (const ModelRef& model : models) {
            SweepRow row;
            row.h = h;
            row.model = model.id();
            try {
                double u_n;
                if (model.is_tube) {
                    TubeProblem tp;
                    tp.radius = spec.radius;
                    tp.thickness = h;
                    tp.nu = spec.nu;
                    tp.mu = spec.mu;
                    tp.k_phi = spec.k_phi;
                    tp.k_z = spec.k_z;
                    tp.load_case = model.load_case;
                    tp.pressure = spec.pressure;
                    u_n = averaged_radial(solve_radial_bvp(tp, spec.tube_mesh));
                } else {
                    HarmonicProblem hp = HarmonicProblem::from_pressure(
                        spec.radius, h, spec.mu, spec.nu, spec.k_phi, spec.k_z, spec.pressure);
                    u_n = solve_harmonic(model.variant, hp).u_n;
                }
                row.u_n = u_n;
                row.u_n_h = u_n * h;
            } catch (const SingularSystemError& e) {
                row.flag = "singular";
                row.note = e.what();
            } catch (const ShellError& e) {
                row.flag = "error";
                row.note = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace shellrev
