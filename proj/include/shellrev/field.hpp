#pragma once

#include <memory>

#include "shellrev/profile.hpp"

namespace shellrev {

namespace detail {
struct FieldNode;
using NodePtr = std::shared_ptr<const FieldNode>;
}  // namespace detail

/// Scalar field over (phi, s) with exact derivatives of any order, built
/// from closed-form primitives and closed under +, -, * and scaling.
/// Differentiation rewrites the expression; no numerical differencing
/// happens anywhere in a derivative query.
class Field {
public:
    Field();  // the zero field
    explicit Field(double constant);

    double value(double phi, double s) const;
    double operator()(double phi, double s) const { return value(phi, s); }
    /// Mixed partial d^{nphi+ns} f / dphi^nphi ds^ns evaluated at a point.
    double deriv(double phi, double s, int nphi, int ns) const;

    Field d_phi() const;
    Field d_s() const;

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(const Field& o);
    Field& operator*=(double c);

    /// amp * cos(alpha*phi + beta*s + delta)
    static Field harmonic(double amp, double alpha, double beta, double delta = 0.0);
    /// c * phi^i * s^j
    static Field monomial(double c, int pow_phi, int pow_s);
    /// amp * exp(a*phi + b*s)
    static Field exponential(double amp, double a, double b);

    // profile quantities (functions of s only)
    static Field profile_radius(ProfilePtr p, int order = 0);  // R^{(order)}(s)
    static Field profile_axial(ProfilePtr p, int order = 0);   // x^{(order)}(s)
    static Field profile_psi(ProfilePtr p, int order);         // psi^{(order)}(s)
    static Field profile_curvature(ProfilePtr p, int order = 0);  // (1/R)^{(order)}(s)

private:
    explicit Field(detail::NodePtr n);
    detail::NodePtr node_;
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator-(const Field& a);
Field operator*(const Field& a, const Field& b);
Field operator*(double c, const Field& f);
Field operator*(const Field& f, double c);

}  // namespace shellrev
