#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shellrev {

enum class TheoryVariant {
    Eliseev,
    Vlasov,
    GoldenveiserBiderman,
    Novichkov,
    Fluegge,
    Membrane,
};

const std::vector<TheoryVariant>& all_variants();
std::string variant_name(TheoryVariant v);
std::optional<TheoryVariant> parse_variant(const std::string& name);

/// Polynomial in the commuting symbols X = d_phi, Y = d_zeta.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;  // (i, j) for X^i Y^j

    BivariatePoly() = default;
    static BivariatePoly term(double c, int i, int j);
    static BivariatePoly constant(double c) { return term(c, 0, 0); }

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    BivariatePoly& operator*=(double c);

    bool empty() const { return terms_.empty(); }
    double coeff(int i, int j) const;
    const std::map<Key, double>& terms() const { return terms_; }
    int degree_x() const;
    int degree_y() const;

    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;
    /// Substitute X = xval; coefficients of the remaining polynomial in Y,
    /// ascending.
    std::vector<std::complex<double>> substitute_x(std::complex<double> xval) const;

    bool approx_equal(const BivariatePoly& o, double tol) const;
    /// JSON-ready triples [i, j, c], sorted by (i, j).
    std::vector<std::array<double, 3>> triples() const;

private:
    void prune();
    std::map<Key, double> terms_;
};

BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b);
BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b);
BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b);
BivariatePoly operator*(double c, BivariatePoly a);

/// Symmetric 3x3 operator of a cylindrical-shell theory, L = L0 + gamma*L1,
/// acting on (u_phi, u_s, u_n) over (phi, zeta = z/R).
struct DiffOpMatrix {
    std::array<std::array<BivariatePoly, 3>, 3> entry;
    TheoryVariant variant;
    double nu;
    double gamma;
    const BivariatePoly& operator()(int i, int j) const { return entry[i][j]; }
};

DiffOpMatrix make_operator(TheoryVariant v, double nu, double gamma);

/// Characteristic polynomial D(i m, k) of a variant, normalized so the
/// Eliseev coefficients match the closed-form display (determinant divided
/// by nu-1). Coefficients ascending in k.
struct CharPoly {
    std::vector<std::complex<double>> coeffs;
    TheoryVariant variant;
    int m = 0;
    double nu = 0.0;
    double gamma = 0.0;

    /// Index of the lowest coefficient above 1e-12 * max|c| (the exact
    /// multiplicity of the zero root).
    int valuation() const;
    /// Highest index above the same threshold.
    int degree() const;
    std::complex<double> eval(std::complex<double> k) const;
};

CharPoly char_poly(TheoryVariant v, int m, double nu, double gamma);

struct RootSet {
    int zero_multiplicity = 0;
    std::vector<std::complex<double>> nonzero;  // sorted by (re, im)
    int total() const { return zero_multiplicity + static_cast<int>(nonzero.size()); }
};

/// All roots; zero multiplicity from polynomial valuation, the rest from a
/// balanced companion matrix with Newton polishing. Throws
/// DegeneratePolynomialError when every coefficient is numerically zero.
RootSet char_roots(const CharPoly& p);

/// The closed-form root multisets printed per variant; nullopt where only the
/// zero roots are listed (Vlasov m=1, Novichkov m=1) or for Membrane.
std::optional<RootSet> reference_roots(TheoryVariant v, int m, double nu, double gamma);

int zero_root_count(TheoryVariant v, int m, double nu = 0.3, double gamma = 1e-4);

struct AsymptoticRoot {
    std::complex<double> leading;     // a in +-(gamma^{-1/4} a + gamma^{1/4} b)
    std::complex<double> correction;  // b
    std::complex<double> value;       // one signed branch evaluated at gamma
};

/// Two-term thin-shell expansions of the nonzero roots (all four signed
/// branches). nullopt where no expansion is listed.
std::optional<std::vector<AsymptoticRoot>> asymptotic_roots(TheoryVariant v, int m, double nu, double gamma);

/// Sinusoidal problem for an infinite cylinder; loads stored as the
/// dimensionless intensities of the operator system.
struct HarmonicProblem {
    double radius = 1.0;
    double thickness = 0.1;
    double mu = 1.0;
    double nu = 0.3;
    int k_phi = 0;
    double k_z = 0.0;
    double b_phi = 0.0, b_z = 0.0, b_n = 0.0;
    double pressure = 0.0;  // set when built from a pure normal pressure

    double gamma() const { return thickness * thickness / (12.0 * radius * radius); }
    void validate() const;

    static HarmonicProblem from_pressure(double radius, double thickness, double mu, double nu, int k_phi,
                                         double k_z, double p);
    static HarmonicProblem from_intensities(double radius, double thickness, double mu, double nu, int k_phi,
                                            double k_z, double b_phi, double b_z, double b_n);
};

struct LoadIntensities {
    double b_phi = 0.0, b_z = 0.0, b_n = 0.0;
};

/// Map physical load amplitudes to the dimensionless intensities:
/// f_phi, f_s, m_phi, m_s share the cos phase, f_n the sin phase.
LoadIntensities load_intensities(double radius, double thickness, double mu, double nu, int k_phi, double k_z,
                                 double f_phi, double f_s, double f_n, double m_phi, double m_s);

/// Real 3x3 system M * (U_phi, U_z, U_n)^T = rhs obtained with the phase
/// convention that u_n and the normal load carry a quarter-period shift.
struct HarmonicSystem {
    std::array<std::array<double, 3>, 3> m{};
    std::array<double, 3> rhs{};
    double det() const;
};

HarmonicSystem harmonic_system(TheoryVariant v, const HarmonicProblem& problem);

/// Real displacement intensities (the phase convention keeps them real).
struct HarmonicSolution {
    double u_phi = 0.0, u_z = 0.0, u_n = 0.0;
};

/// Throws SingularSystemError when |det| < 1e-12 * scale (a discontinuity
/// thickness).
HarmonicSolution solve_harmonic(TheoryVariant v, const HarmonicProblem& problem);

/// The closed-form pure-pressure solution of the base system, as printed
/// (denominator A); reference for cross-checks.
HarmonicSolution eliseev_reference_solution(double radius, double thickness, double mu, double nu, int k_phi,
                                            double k_z, double p);

/// det M as a polynomial in h, cleared of trailing h powers and normalized
/// to leading coefficient 1. Coefficients ascending (odd entries zero).
std::vector<double> denominator_in_h(TheoryVariant v, int k_phi, double k_z, double nu, double radius);

struct DiscontinuityResult {
    std::vector<double> in_range;      // ascending, inside (0, 2R)
    std::vector<double> out_of_range;  // positive real roots outside (0, 2R)
};

DiscontinuityResult discontinuity_thickness(TheoryVariant v, int k_phi, double k_z, double nu, double radius);

}  // namespace shellrev
