#include "shellrev/profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "shellrev/errors.hpp"

namespace shellrev {

namespace {

constexpr double kApexRelTol = 1e-9;

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class CylinderProfile final : public MeridianProfile {
public:
    CylinderProfile(double r0, double half_len)
        : r0_(r0), half_len_(half_len > 0.0 ? half_len : 8.0 * r0) {
        if (r0 <= 0.0) throw std::invalid_argument("cylinder: radius must be positive");
    }
    double radius(double, int order) const override { return order == 0 ? r0_ : 0.0; }
    double axial(double s, int order) const override {
        if (order == 0) return s;
        return order == 1 ? 1.0 : 0.0;
    }
    std::pair<double, double> s_domain() const override { return {-half_len_, half_len_}; }
    std::string name() const override { return "cylinder"; }

private:
    double r0_, half_len_;
};

class ConeProfile final : public MeridianProfile {
public:
    ConeProfile(double alpha, double s_max) : sin_(std::sin(alpha)), cos_(std::cos(alpha)), s_max_(s_max) {
        if (sin_ <= 0.0) throw std::invalid_argument("cone: need sin(alpha) > 0");
    }
    double radius(double s, int order) const override {
        if (order == 0) return s * sin_;
        return order == 1 ? sin_ : 0.0;
    }
    double axial(double s, int order) const override {
        if (order == 0) return s * cos_;
        return order == 1 ? cos_ : 0.0;
    }
    std::pair<double, double> s_domain() const override { return {0.0, s_max_}; }
    std::string name() const override { return "cone"; }

private:
    double sin_, cos_, s_max_;
};

class SphereProfile final : public MeridianProfile {
public:
    explicit SphereProfile(double r0) : r0_(r0) {
        if (r0 <= 0.0) throw std::invalid_argument("sphere: radius must be positive");
    }
    // R(s) = R0 sin(s/R0), x(s) = -R0 cos(s/R0)
    double radius(double s, int order) const override {
        return std::pow(r0_, 1 - order) * std::sin(s / r0_ + order * std::numbers::pi / 2);
    }
    double axial(double s, int order) const override {
        return -std::pow(r0_, 1 - order) * std::cos(s / r0_ + order * std::numbers::pi / 2);
    }
    std::pair<double, double> s_domain() const override { return {0.0, std::numbers::pi * r0_}; }
    std::string name() const override { return "sphere"; }

private:
    double r0_;
};

class PlaneProfile final : public MeridianProfile {
public:
    explicit PlaneProfile(double s_max) : s_max_(s_max) {}
    double radius(double s, int order) const override {
        if (order == 0) return s;
        return order == 1 ? 1.0 : 0.0;
    }
    double axial(double, int) const override { return 0.0; }
    std::pair<double, double> s_domain() const override { return {0.0, s_max_}; }
    std::string name() const override { return "plane"; }

private:
    double s_max_;
};

class TorusSectionProfile final : public MeridianProfile {
public:
    TorusSectionProfile(double a, double c) : a_(a), c_(c) {
        if (a <= 0.0 || c <= a) throw std::invalid_argument("torus: need c > a > 0");
    }
    // R(s) = c + a sin(s/a), x(s) = -a cos(s/a)
    double radius(double s, int order) const override {
        if (order == 0) return c_ + a_ * std::sin(s / a_);
        return std::pow(a_, 1 - order) * std::sin(s / a_ + order * std::numbers::pi / 2);
    }
    double axial(double s, int order) const override {
        return -std::pow(a_, 1 - order) * std::cos(s / a_ + order * std::numbers::pi / 2);
    }
    std::pair<double, double> s_domain() const override { return {0.0, 2 * std::numbers::pi * a_}; }
    std::string name() const override { return "torus"; }

private:
    double a_, c_;
};

}  // namespace

ProfilePtr make_cylinder(double radius, double half_length) {
    return std::make_shared<CylinderProfile>(radius, half_length);
}
ProfilePtr make_cone(double alpha, double s_max) { return std::make_shared<ConeProfile>(alpha, s_max); }
ProfilePtr make_sphere(double radius) { return std::make_shared<SphereProfile>(radius); }
ProfilePtr make_plane(double s_max) { return std::make_shared<PlaneProfile>(s_max); }
ProfilePtr make_torus_section(double tube_radius, double center_radius) {
    return std::make_shared<TorusSectionProfile>(tube_radius, center_radius);
}

ProfilePtr make_profile(const std::string& spec) {
    auto open = spec.find('(');
    std::string name = spec.substr(0, open);
    std::vector<double> args;
    if (open != std::string::npos) {
        auto close = spec.find(')', open);
        if (close == std::string::npos) throw std::invalid_argument("profile: missing ')' in " + spec);
        std::stringstream ss(spec.substr(open + 1, close - open - 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) args.push_back(std::stod(tok));
        }
    }
    auto want = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("profile " + name + ": expected " + std::to_string(n) + " argument(s)");
    };
    if (name == "cylinder") { want(1); return make_cylinder(args[0]); }
    if (name == "cone") { want(1); return make_cone(args[0]); }
    if (name == "sphere") { want(1); return make_sphere(args[0]); }
    if (name == "plane") {
        if (args.empty()) return make_plane();
        want(1);
        return make_plane(args[0]);
    }
    if (name == "torus") { want(2); return make_torus_section(args[0], args[1]); }
    throw std::invalid_argument("unknown profile: " + spec);
}

void validate_point(const MeridianProfile& p, double s) {
    auto [lo, hi] = p.s_domain();
    if (!(s >= lo && s <= hi)) {
        throw OutOfDomainError("s = " + std::to_string(s) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] for " + p.name());
    }
    double tol = kApexRelTol * (hi - lo);
    if (p.radius(s) <= tol) {
        throw ApexSingularityError("R(s) vanishes near s = " + std::to_string(s) + " on " + p.name());
    }
}

double psi_value(const MeridianProfile& p, double s) { return std::atan2(p.radius(s, 1), p.axial(s, 1)); }

double psi_deriv(const MeridianProfile& p, double s, int order) {
    if (order == 0) return psi_value(p, s);
    // psi' = R'' x' - x'' R'; higher orders by Leibniz.
    int m = order - 1;
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) {
        double c = binom(m, j);
        acc += c * (p.radius(s, 2 + j) * p.axial(s, 1 + m - j) - p.axial(s, 2 + j) * p.radius(s, 1 + m - j));
    }
    return acc;
}

double inv_radius_deriv(const MeridianProfile& p, double s, int order) {
    // reciprocal of the truncated Taylor series of R about s
    std::vector<double> a(order + 1), b(order + 1);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        a[k] = p.radius(s, k) / fact;
    }
    b[0] = 1.0 / a[0];
    for (int k = 1; k <= order; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -acc / a[0];
    }
    fact = 1.0;
    for (int k = 1; k <= order; ++k) fact *= k;
    return b[order] * fact;
}

ProfileState profile_state(const MeridianProfile& p, double s) {
    validate_point(p, s);
    ProfileState st;
    st.psi = psi_value(p, s);
    st.psi1 = psi_deriv(p, s, 1);
    st.psi2 = psi_deriv(p, s, 2);
    st.k = 1.0 / p.radius(s);
    st.k1 = inv_radius_deriv(p, s, 1);
    return st;
}

SurfaceFrame frame_at(const MeridianProfile& p, double s, double phi) {
    validate_point(p, s);
    double sp = p.radius(s, 1);  // sin(psi)
    double cp = p.axial(s, 1);   // cos(psi)
    Vec3 rho{std::cos(phi), std::sin(phi), 0.0};
    Vec3 axis{0.0, 0.0, 1.0};
    SurfaceFrame f;
    f.e_phi = {-std::sin(phi), std::cos(phi), 0.0};
    f.t = cp * axis + sp * rho;
    f.n = cp * rho - sp * axis;
    return f;
}

CurvatureState curvature_at(const MeridianProfile& p, double s) {
    validate_point(p, s);
    CurvatureState c;
    c.b_phiphi = -p.axial(s, 1) / p.radius(s);
    c.b_ss = psi_deriv(p, s, 1);
    c.mean2h = c.b_phiphi + c.b_ss;
    return c;
}

}  // namespace shellrev
