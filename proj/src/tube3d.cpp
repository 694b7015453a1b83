#include "shellrev/tube3d.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <stdexcept>

#include "shellrev/errors.hpp"

namespace shellrev {

std::string load_case_name(TubeLoadCase c) {
    switch (c) {
        case TubeLoadCase::Inner: return "inner";
        case TubeLoadCase::Outer: return "outer";
        case TubeLoadCase::Both: return "both";
    }
    return "?";
}

std::optional<TubeLoadCase> parse_load_case(const std::string& name) {
    if (name == "inner") return TubeLoadCase::Inner;
    if (name == "outer") return TubeLoadCase::Outer;
    if (name == "both") return TubeLoadCase::Both;
    return std::nullopt;
}

void TubeProblem::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("TubeProblem: radius must be positive");
    if (!(thickness > 0.0 && thickness < 2.0 * radius))
        throw std::invalid_argument("TubeProblem: thickness must lie in (0, 2R)");
    if (!(mu > 0.0)) throw std::invalid_argument("TubeProblem: mu must be positive");
    if (!(nu > -1.0 && nu < 0.5)) throw std::invalid_argument("TubeProblem: nu must lie in (-1, 0.5)");
}

std::pair<double, double> equivalent_pressures(const TubeProblem& problem) {
    problem.validate();
    switch (problem.load_case) {
        case TubeLoadCase::Inner: return {problem.pressure * problem.radius / problem.r_in(), 0.0};
        case TubeLoadCase::Outer: return {0.0, problem.pressure * problem.radius / problem.r_out()};
        case TubeLoadCase::Both: return {problem.pressure / 2.0, problem.pressure / 2.0};
    }
    return {0.0, 0.0};
}

namespace {

// Lame coefficients for U_r = a r + b / r with sigma_rr(R_in) = -p_in and
// sigma_rr(R_out) = +p_out (both tractions push outward, like the shell's
// pressure).
std::pair<double, double> lame_coefficients(const TubeProblem& pr) {
    auto [p_in, p_out] = equivalent_pressures(pr);
    double lam = pr.lambda(), mu = pr.mu;
    double ri2 = pr.r_in() * pr.r_in(), ro2 = pr.r_out() * pr.r_out();
    double a = (p_in * ri2 + p_out * ro2) / (2.0 * (lam + mu) * (ro2 - ri2));
    double b = (p_in + p_out) * ri2 * ro2 / (2.0 * mu * (ro2 - ri2));
    return {a, b};
}

std::vector<double> uniform_grid(double lo, double hi, int n_points) {
    std::vector<double> g(n_points);
    for (int i = 0; i < n_points; ++i) g[i] = lo + (hi - lo) * i / (n_points - 1);
    g.back() = hi;
    return g;
}

}  // namespace

RadialSolution lame_axisymmetric(const TubeProblem& problem, int mesh_size) {
    problem.validate();
    if (problem.k_phi != 0 || problem.k_z != 0.0)
        throw std::invalid_argument("lame_axisymmetric: requires k_phi = k_z = 0");
    auto [a, b] = lame_coefficients(problem);
    RadialSolution sol;
    sol.mesh_size = mesh_size;
    sol.error_estimate = 0.0;
    sol.r = uniform_grid(problem.r_in(), problem.r_out(), 2 * mesh_size + 1);
    sol.u_r.resize(sol.r.size());
    sol.du_r.resize(sol.r.size());
    sol.u_phi.assign(sol.r.size(), 0.0);
    sol.u_z.assign(sol.r.size(), 0.0);
    sol.du_phi.assign(sol.r.size(), 0.0);
    sol.du_z.assign(sol.r.size(), 0.0);
    for (size_t i = 0; i < sol.r.size(); ++i) {
        sol.u_r[i] = a * sol.r[i] + b / sol.r[i];
        sol.du_r[i] = a - b / (sol.r[i] * sol.r[i]);
    }
    return sol;
}

namespace {

// First-order form of the radial amplitude equations. For k_phi = k_z = 0 the
// hoop and axial components decouple with zero data, so the state shrinks to
// (f, f'); otherwise y = (f, f', g, g', w, w') with
//   u_r = f(r) cos(theta), u_phi = -g(r) sin(theta), u_z = -w(r) sin(theta).
struct TubeOde {
    double lam, mu, kp, kz;
    int n;  // state dimension: 2 or 6

    Eigen::MatrixXd a_matrix(double r) const {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        double r2 = r * r;
        if (n == 2) {
            a(0, 1) = 1.0;
            a(1, 0) = 1.0 / r2;
            a(1, 1) = -1.0 / r;
            return a;
        }
        double lp2m = lam + 2.0 * mu;
        double lpm = lam + mu;
        a(0, 1) = 1.0;
        a(2, 3) = 1.0;
        a(4, 5) = 1.0;
        // f'' from the radial equation
        a(1, 0) = (lpm / r2 + mu * ((kp * kp + 1.0) / r2 + kz * kz)) / lp2m;
        a(1, 1) = -(lpm + mu) / (lp2m * r);
        a(1, 2) = -(lpm * kp / r2 + mu * 2.0 * kp / r2) / lp2m;
        a(1, 3) = lpm * kp / (lp2m * r);
        a(1, 5) = lpm * kz / lp2m;
        // g'' from the hoop equation: mu g'' = -lpm (kp/r) theta - mu(g'/r - ((kp^2+1)/r^2 + kz^2) g + 2 kp f / r^2)
        a(3, 0) = -(lpm * kp / (mu * r)) * (1.0 / r) - 2.0 * kp / r2;
        a(3, 1) = -lpm * kp / (mu * r);
        a(3, 2) = (kp * kp + 1.0) / r2 + kz * kz - (lpm * kp / (mu * r)) * (-kp / r);
        a(3, 3) = -1.0 / r;
        a(3, 4) = -(lpm * kp / (mu * r)) * (-kz);
        // w'' from the axial equation: mu w'' = -lpm kz theta - mu(w'/r - (kp^2/r^2 + kz^2) w)
        a(5, 0) = -(lpm * kz / mu) * (1.0 / r);
        a(5, 1) = -lpm * kz / mu;
        a(5, 2) = -(lpm * kz / mu) * (-kp / r);
        a(5, 4) = kp * kp / r2 + kz * kz - (lpm * kz / mu) * (-kz);
        a(5, 5) = -1.0 / r;
        return a;
    }

    // sigma_rr = lam * theta + 2 mu f', theta = f' + f/r - kp g / r - kz w
    Eigen::RowVectorXd sigma_rr_row(double r) const {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(n);
        row(0) = lam / r;
        row(1) = lam + 2.0 * mu;
        if (n == 6) {
            row(2) = -lam * kp / r;
            row(4) = -lam * kz;
        }
        return row;
    }
    // sigma_rphi / mu = g' - g/r + kp f / r
    Eigen::RowVectorXd sigma_rphi_row(double r) const {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(n);
        row(0) = kp / r;
        row(2) = -1.0 / r;
        row(3) = 1.0;
        return row;
    }
    // sigma_rz / mu = w' + kz f
    Eigen::RowVectorXd sigma_rz_row(double) const {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(n);
        row(0) = kz;
        row(5) = 1.0;
        return row;
    }
};

struct BvpResult {
    std::vector<double> r;  // nodes + midpoints, uniform, 2N+1 points
    Eigen::MatrixXd y;      // state at those points, (2N+1) x n
};

// One bvp4c-style Lobatto IIIA step couples y_i and y_{i+1}:
//   R_right y_{i+1} = R_left y_i with the midpoint value condensed out.
BvpResult solve_linear_bvp(const TubeOde& ode, double lo, double hi, int n_mesh,
                           const std::vector<std::pair<Eigen::RowVectorXd, double>>& bc_lo,
                           const std::vector<std::pair<Eigen::RowVectorXd, double>>& bc_hi) {
    const int n = ode.n;
    const int n_unknown = n * (n_mesh + 1);
    std::vector<double> nodes = uniform_grid(lo, hi, n_mesh + 1);
    double step = (hi - lo) / n_mesh;

    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_unknown);
    int row0 = 0;
    for (const auto& [row, val] : bc_lo) {
        for (int j = 0; j < n; ++j) trip.emplace_back(row0, j, row(j));
        rhs(row0) = val;
        ++row0;
    }
    Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
    std::vector<Eigen::MatrixXd> a_nodes(n_mesh + 1);
    for (int i = 0; i <= n_mesh; ++i) a_nodes[i] = ode.a_matrix(nodes[i]);
    for (int i = 0; i < n_mesh; ++i) {
        double rm = 0.5 * (nodes[i] + nodes[i + 1]);
        Eigen::MatrixXd am = ode.a_matrix(rm);
        const Eigen::MatrixXd& ai = a_nodes[i];
        const Eigen::MatrixXd& aj = a_nodes[i + 1];
        Eigen::MatrixXd left =
            eye + (step / 6.0) * ai + (step / 3.0) * am + (step * step / 12.0) * am * ai;
        Eigen::MatrixXd right =
            eye - (step / 6.0) * aj - (step / 3.0) * am + (step * step / 12.0) * am * aj;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                trip.emplace_back(row0 + r, i * n + c, left(r, c));
                trip.emplace_back(row0 + r, (i + 1) * n + c, -right(r, c));
            }
        row0 += n;
    }
    for (const auto& [row, val] : bc_hi) {
        for (int j = 0; j < n; ++j) trip.emplace_back(row0, n_mesh * n + j, row(j));
        rhs(row0) = val;
        ++row0;
    }

    Eigen::SparseMatrix<double> sys(n_unknown, n_unknown);
    sys.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(sys);
    if (lu.info() != Eigen::Success) throw IllPosedError("radial BVP: discrete system is singular");
    Eigen::VectorXd sol = lu.solve(rhs);
    if (lu.info() != Eigen::Success) throw IllPosedError("radial BVP: backsolve failed");
    double resid = (sys * sol - rhs).cwiseAbs().maxCoeff();
    double scale = rhs.cwiseAbs().maxCoeff() + sol.cwiseAbs().maxCoeff();
    if (!(resid <= 1e-7 * std::max(scale, 1.0)))
        throw IllPosedError("radial BVP: discrete system is numerically singular");

    BvpResult out;
    out.r = uniform_grid(lo, hi, 2 * n_mesh + 1);
    out.y.resize(2 * n_mesh + 1, n);
    for (int i = 0; i <= n_mesh; ++i) out.y.row(2 * i) = sol.segment(i * n, n).transpose();
    for (int i = 0; i < n_mesh; ++i) {
        Eigen::VectorXd yi = sol.segment(i * n, n);
        Eigen::VectorXd yj = sol.segment((i + 1) * n, n);
        Eigen::VectorXd ym =
            0.5 * (yi + yj) + (step / 8.0) * (a_nodes[i] * yi - a_nodes[i + 1] * yj);
        out.y.row(2 * i + 1) = ym.transpose();
    }
    return out;
}

RadialSolution pack_solution(const TubeProblem& pr, const BvpResult& res, int mesh_size) {
    RadialSolution sol;
    sol.mesh_size = mesh_size;
    sol.r = res.r;
    size_t np = res.r.size();
    sol.u_r.resize(np);
    sol.du_r.resize(np);
    sol.u_phi.assign(np, 0.0);
    sol.u_z.assign(np, 0.0);
    sol.du_phi.assign(np, 0.0);
    sol.du_z.assign(np, 0.0);
    bool full = res.y.cols() == 6;
    for (size_t i = 0; i < np; ++i) {
        sol.u_r[i] = res.y(i, 0);
        sol.du_r[i] = res.y(i, 1);
        if (full) {
            sol.u_phi[i] = res.y(i, 2);
            sol.du_phi[i] = res.y(i, 3);
            sol.u_z[i] = res.y(i, 4);
            sol.du_z[i] = res.y(i, 5);
        }
    }
    (void)pr;
    return sol;
}

BvpResult run_once(const TubeProblem& pr, int n_mesh) {
    auto [p_in, p_out] = equivalent_pressures(pr);
    bool axisym = pr.k_phi == 0 && pr.k_z == 0.0;
    TubeOde ode{pr.lambda(), pr.mu, static_cast<double>(pr.k_phi), pr.k_z, axisym ? 2 : 6};
    std::vector<std::pair<Eigen::RowVectorXd, double>> bc_lo, bc_hi;
    double a = pr.r_in(), b = pr.r_out();
    bc_lo.emplace_back(ode.sigma_rr_row(a), -p_in);
    bc_hi.emplace_back(ode.sigma_rr_row(b), p_out);
    if (!axisym) {
        bc_lo.emplace_back(ode.sigma_rphi_row(a), 0.0);
        bc_lo.emplace_back(ode.sigma_rz_row(a), 0.0);
        bc_hi.emplace_back(ode.sigma_rphi_row(b), 0.0);
        bc_hi.emplace_back(ode.sigma_rz_row(b), 0.0);
    }
    return solve_linear_bvp(ode, a, b, n_mesh, bc_lo, bc_hi);
}

}  // namespace

RadialSolution solve_radial_bvp(const TubeProblem& problem, int mesh_size) {
    problem.validate();
    if (mesh_size < 8) throw std::invalid_argument("solve_radial_bvp: mesh_size must be >= 8");

    BvpResult coarse = run_once(problem, mesh_size);
    BvpResult fine = run_once(problem, 2 * mesh_size);

    RadialSolution sol_c = pack_solution(problem, coarse, mesh_size);
    RadialSolution sol_f = pack_solution(problem, fine, 2 * mesh_size);

    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < sol_c.r.size(); ++i) {
        num = std::max(num, std::abs(sol_c.u_r[i] - sol_f.u_r[2 * i]));
        den = std::max(den, std::abs(sol_f.u_r[2 * i]));
    }
    double avg_c = averaged_radial(sol_c), avg_f = averaged_radial(sol_f);
    double rel = std::max(num, std::abs(avg_c - avg_f)) / std::max(den, 1e-300);
    if (problem.pressure != 0.0 && !(rel <= 1e-6))
        throw NoConvergenceError("radial BVP: refinements disagree by " + std::to_string(rel));

    sol_f.error_estimate = rel;
    sol_f.mesh_size = mesh_size;
    return sol_f;
}

double surface_traction_residual(const TubeProblem& problem, const RadialSolution& sol) {
    auto [p_in, p_out] = equivalent_pressures(problem);
    double lam = problem.lambda(), mu = problem.mu;
    double kp = problem.k_phi, kz = problem.k_z;
    auto residual_at = [&](size_t i, double target_rr) {
        double r = sol.r[i];
        double theta = sol.du_r[i] + sol.u_r[i] / r - kp * sol.u_phi[i] / r - kz * sol.u_z[i];
        double s_rr = lam * theta + 2.0 * mu * sol.du_r[i];
        double s_rphi = mu * (sol.du_phi[i] - sol.u_phi[i] / r + kp * sol.u_r[i] / r);
        double s_rz = mu * (sol.du_z[i] + kz * sol.u_r[i]);
        return std::max({std::abs(s_rr - target_rr), std::abs(s_rphi), std::abs(s_rz)});
    };
    return std::max(residual_at(0, -p_in), residual_at(sol.r.size() - 1, p_out));
}

double averaged_radial(const RadialSolution& sol) {
    // composite Simpson over nodes + midpoints
    size_t np = sol.r.size();
    if (np < 3 || np % 2 == 0) throw std::invalid_argument("averaged_radial: need 2N+1 sample points");
    double step = sol.r[2] - sol.r[0];
    double acc = 0.0;
    for (size_t i = 0; i + 2 < np; i += 2)
        acc += (step / 6.0) * (sol.u_r[i] + 4.0 * sol.u_r[i + 1] + sol.u_r[i + 2]);
    double h = sol.r.back() - sol.r.front();
    return acc / h;
}

}  // namespace shellrev
