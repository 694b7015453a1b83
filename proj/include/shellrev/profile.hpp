#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace shellrev {

/// Arc-length parametrized meridian of a shell of revolution: distance to
/// axis R(s) and axial coordinate x(s), both with exact derivatives in s.
/// Invariant: x'(s)^2 + R'(s)^2 = 1 inside the domain.
class MeridianProfile {
public:
    virtual ~MeridianProfile() = default;

    /// d^order R / ds^order at s.
    virtual double radius(double s, int order = 0) const = 0;
    /// d^order x / ds^order at s.
    virtual double axial(double s, int order = 0) const = 0;
    /// Closed interval of valid arc coordinates.
    virtual std::pair<double, double> s_domain() const = 0;
    virtual std::string name() const = 0;
};

using ProfilePtr = std::shared_ptr<const MeridianProfile>;

ProfilePtr make_cylinder(double radius, double half_length = 0.0);
ProfilePtr make_cone(double alpha, double s_max = 10.0);
ProfilePtr make_sphere(double radius);
ProfilePtr make_plane(double s_max = 10.0);
ProfilePtr make_torus_section(double tube_radius, double center_radius);

/// Parse "cylinder(R)", "cone(alpha)", "sphere(R0)", "plane",
/// "torus(a,c)". Throws std::invalid_argument on anything else.
ProfilePtr make_profile(const std::string& spec);

/// Throws OutOfDomainError / ApexSingularityError.
void validate_point(const MeridianProfile& p, double s);

/// Angle between the meridian tangent and the symmetry axis,
/// psi = atan2(R', x'), and its s-derivatives (any order >= 0).
double psi_value(const MeridianProfile& p, double s);
double psi_deriv(const MeridianProfile& p, double s, int order);
/// d^order (1/R) / ds^order.
double inv_radius_deriv(const MeridianProfile& p, double s, int order);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double c, Vec3 v) { return {c * v.x, c * v.y, c * v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

struct ProfileState {
    double psi;   // angle between meridian tangent and axis
    double psi1;  // d psi / ds
    double psi2;  // d^2 psi / ds^2
    double k;     // 1/R
    double k1;    // d(1/R)/ds = -R'/R^2
};

/// Frame vectors in the fixed Cartesian basis with the symmetry axis i
/// along +z and rho(0) along +x.
struct SurfaceFrame {
    Vec3 e_phi;
    Vec3 t;
    Vec3 n;
};

struct CurvatureState {
    double b_phiphi;  // -k cos(psi)
    double b_ss;      // psi'
    double mean2h;    // tr b
};

ProfileState profile_state(const MeridianProfile& p, double s);
SurfaceFrame frame_at(const MeridianProfile& p, double s, double phi);
CurvatureState curvature_at(const MeridianProfile& p, double s);

}  // namespace shellrev
