#include "shellrev/cylinder.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shellrev/errors.hpp"

namespace shellrev {

namespace {

using cplx = std::complex<double>;
using CPoly = std::vector<cplx>;  // ascending coefficients

constexpr double kValuationRelTol = 1e-12;

CPoly cpoly_add(const CPoly& a, const CPoly& b) {
    CPoly r(std::max(a.size(), b.size()), cplx(0.0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

CPoly cpoly_sub(const CPoly& a, const CPoly& b) {
    CPoly r(std::max(a.size(), b.size()), cplx(0.0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1, cplx(0.0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

const std::vector<TheoryVariant>& all_variants() {
    static const std::vector<TheoryVariant> v = {
        TheoryVariant::Eliseev,   TheoryVariant::Vlasov,  TheoryVariant::GoldenveiserBiderman,
        TheoryVariant::Novichkov, TheoryVariant::Fluegge, TheoryVariant::Membrane,
    };
    return v;
}

std::string variant_name(TheoryVariant v) {
    switch (v) {
        case TheoryVariant::Eliseev: return "eliseev";
        case TheoryVariant::Vlasov: return "vlasov";
        case TheoryVariant::GoldenveiserBiderman: return "goldenveiser-biderman";
        case TheoryVariant::Novichkov: return "novichkov";
        case TheoryVariant::Fluegge: return "fluegge";
        case TheoryVariant::Membrane: return "membrane";
    }
    return "?";
}

std::optional<TheoryVariant> parse_variant(const std::string& name) {
    for (TheoryVariant v : all_variants())
        if (variant_name(v) == name) return v;
    if (name == "gb") return TheoryVariant::GoldenveiserBiderman;
    if (name == "flugge") return TheoryVariant::Fluegge;
    return std::nullopt;
}

// --- BivariatePoly --------------------------------------------------------

BivariatePoly BivariatePoly::term(double c, int i, int j) {
    BivariatePoly p;
    if (c != 0.0) p.terms_[{i, j}] = c;
    return p;
}

void BivariatePoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0.0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) terms_[k] += c;
    prune();
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) terms_[k] -= c;
    prune();
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    std::map<Key, double> out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    terms_ = std::move(out);
    prune();
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(double c) {
    if (c == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

double BivariatePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0.0 : it->second;
}

int BivariatePoly::degree_x() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivariatePoly::degree_y() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

std::complex<double> BivariatePoly::eval(cplx x, cplx y) const {
    cplx acc(0.0);
    for (const auto& [k, c] : terms_) {
        cplx t(c);
        for (int i = 0; i < k.first; ++i) t *= x;
        for (int j = 0; j < k.second; ++j) t *= y;
        acc += t;
    }
    return acc;
}

std::vector<cplx> BivariatePoly::substitute_x(cplx xval) const {
    CPoly out(static_cast<size_t>(degree_y()) + 1, cplx(0.0));
    for (const auto& [k, c] : terms_) {
        cplx t(c);
        for (int i = 0; i < k.first; ++i) t *= xval;
        out[k.second] += t;
    }
    return out;
}

bool BivariatePoly::approx_equal(const BivariatePoly& o, double tol) const {
    double scale = 0.0;
    for (const auto& [k, c] : terms_) scale = std::max(scale, std::abs(c));
    for (const auto& [k, c] : o.terms_) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return true;
    auto check = [&](const BivariatePoly& a, const BivariatePoly& b) {
        for (const auto& [k, c] : a.terms_)
            if (std::abs(c - b.coeff(k.first, k.second)) > tol * scale) return false;
        return true;
    };
    return check(*this, o) && check(o, *this);
}

std::vector<std::array<double, 3>> BivariatePoly::triples() const {
    std::vector<std::array<double, 3>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.push_back({static_cast<double>(k.first), static_cast<double>(k.second), c});
    return out;
}

BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
BivariatePoly operator*(double c, BivariatePoly a) { return a *= c; }

// --- operator tables -------------------------------------------------------

namespace {

BivariatePoly bp(double c, int i, int j) { return BivariatePoly::term(c, i, j); }

BivariatePoly laplace_sq() {
    // (X^2 + Y^2)^2
    return bp(1, 4, 0) + bp(2, 2, 2) + bp(1, 0, 4);
}

void base_operator(std::array<std::array<BivariatePoly, 3>, 3>& e, double nu) {
    e[0][0] = bp(0.5 * (1.0 - nu), 0, 2) + bp(1.0, 2, 0);
    e[0][1] = bp(0.5 * (1.0 + nu), 1, 1);
    e[1][1] = bp(1.0, 0, 2) + bp(0.5 * (1.0 - nu), 2, 0);
    e[1][2] = bp(nu, 0, 1);
    e[2][2] = bp(1.0, 0, 0);
    e[0][2] = bp(1.0, 1, 0);
    e[1][0] = e[0][1];
    e[2][1] = e[1][2];
    e[2][0] = e[0][2];
}

void add_correction(std::array<std::array<BivariatePoly, 3>, 3>& e, TheoryVariant v, double nu, double gamma) {
    std::array<std::array<BivariatePoly, 3>, 3> l1;
    switch (v) {
        case TheoryVariant::Eliseev:
            l1[0][0] = bp(2.0 * (1.0 - nu), 0, 2) + bp(4.0, 2, 0);
            l1[2][2] = bp(1.0, 0, 0) + laplace_sq() - bp(2.0, 2, 0) - bp(2.0 * nu, 0, 2);
            l1[0][2] = bp(2.0, 1, 0) - bp(2.0, 3, 0) - bp(2.0, 1, 2);
            break;
        case TheoryVariant::Vlasov:
            l1[1][2] = bp(0.5 * (1.0 - nu), 2, 1) - bp(1.0, 0, 3);
            l1[2][2] = bp(1.0, 0, 0) + laplace_sq() + bp(2.0, 2, 0);
            l1[0][2] = bp(0.5 * (nu - 3.0), 1, 2);
            break;
        case TheoryVariant::GoldenveiserBiderman:
            l1[0][0] = bp(2.0 - 2.0 * nu, 0, 2) + bp(1.0, 2, 0);
            l1[2][2] = laplace_sq();
            l1[0][2] = bp(-2.0, 1, 2) - bp(1.0, 3, 0) + bp(nu, 1, 2);
            break;
        case TheoryVariant::Novichkov:
            l1[0][0] = bp(2.0 - 2.0 * nu, 0, 2) + bp(1.0, 2, 0);
            l1[2][2] = laplace_sq();
            l1[0][2] = bp(-2.0, 1, 2) - bp(1.0, 3, 0) + bp(2.0 * nu, 1, 2);
            break;
        case TheoryVariant::Fluegge:
            l1[0][0] = bp(1.5 * (nu - 1.0), 0, 2);
            l1[1][1] = bp(0.5 * (nu - 1.0), 2, 0);
            l1[1][2] = bp(-1.0, 0, 3) + bp(0.5 * (1.0 - nu), 2, 1);
            l1[2][2] = bp(1.0, 0, 0) + laplace_sq() + bp(2.0, 2, 0);
            l1[0][2] = bp(-0.5 * (3.0 - nu), 1, 2);
            break;
        case TheoryVariant::Membrane:
            return;
    }
    l1[2][0] = l1[0][2];
    l1[2][1] = l1[1][2];
    l1[1][0] = l1[0][1];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] += gamma * l1[i][j];
}

}  // namespace

DiffOpMatrix make_operator(TheoryVariant v, double nu, double gamma) {
    if (!(gamma >= 0.0)) throw std::invalid_argument("make_operator: gamma must be >= 0");
    if (!(nu > -1.0 && nu < 0.5)) throw std::invalid_argument("make_operator: nu must lie in (-1, 0.5)");
    DiffOpMatrix op;
    op.variant = v;
    op.nu = nu;
    op.gamma = v == TheoryVariant::Membrane ? 0.0 : gamma;
    base_operator(op.entry, nu);
    add_correction(op.entry, v, nu, op.gamma);
    return op;
}

// --- characteristic polynomial ---------------------------------------------

CharPoly char_poly(TheoryVariant v, int m, double nu, double gamma) {
    DiffOpMatrix op = make_operator(v, nu, gamma);
    cplx x(0.0, static_cast<double>(m));
    CPoly e[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] = op.entry[i][j].substitute_x(x);

    CPoly det = cpoly_sub(cpoly_mul(e[0][0], cpoly_sub(cpoly_mul(e[1][1], e[2][2]), cpoly_mul(e[1][2], e[2][1]))),
                          cpoly_mul(e[0][1], cpoly_sub(cpoly_mul(e[1][0], e[2][2]), cpoly_mul(e[1][2], e[2][0]))));
    det = cpoly_add(det, cpoly_mul(e[0][2], cpoly_sub(cpoly_mul(e[1][0], e[2][1]), cpoly_mul(e[1][1], e[2][0]))));

    CharPoly p;
    p.variant = v;
    p.m = m;
    p.nu = nu;
    p.gamma = gamma;
    p.coeffs = std::move(det);
    for (auto& c : p.coeffs) c /= (nu - 1.0);
    return p;
}

int CharPoly::valuation() const {
    double maxc = 0.0;
    for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
    if (maxc == 0.0) return static_cast<int>(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (std::abs(coeffs[i]) > kValuationRelTol * maxc) return static_cast<int>(i);
    return static_cast<int>(coeffs.size());
}

int CharPoly::degree() const {
    double maxc = 0.0;
    for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
    if (maxc == 0.0) return -1;
    for (size_t i = coeffs.size(); i-- > 0;)
        if (std::abs(coeffs[i]) > kValuationRelTol * maxc) return static_cast<int>(i);
    return -1;
}

std::complex<double> CharPoly::eval(cplx k) const {
    cplx acc(0.0);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * k + coeffs[i];
    return acc;
}

namespace {

std::vector<cplx> companion_roots(const CPoly& monic_input) {
    // monic_input: ascending, leading coefficient 1 implied by caller
    int d = static_cast<int>(monic_input.size()) - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -monic_input[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success)
        throw DegeneratePolynomialError("companion-matrix eigenvalue extraction failed");
    std::vector<cplx> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

void newton_polish(const CPoly& poly, cplx& root) {
    for (int it = 0; it < 3; ++it) {
        cplx p(0.0), dp(0.0);
        for (size_t i = poly.size(); i-- > 0;) {
            dp = dp * root + p;
            p = p * root + poly[i];
        }
        if (std::abs(dp) < 1e-300) break;
        cplx step = p / dp;
        root -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(root))) break;
    }
}

void sort_roots(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

}  // namespace

RootSet char_roots(const CharPoly& p) {
    double maxc = 0.0;
    for (const auto& c : p.coeffs) maxc = std::max(maxc, std::abs(c));
    if (maxc < 1e-300) throw DegeneratePolynomialError("characteristic polynomial is numerically zero");

    int val = p.valuation();
    int deg = p.degree();
    RootSet out;
    out.zero_multiplicity = val;
    if (deg <= val) return out;

    CPoly deflated(p.coeffs.begin() + val, p.coeffs.begin() + deg + 1);
    cplx lead = deflated.back();
    for (auto& c : deflated) c /= lead;
    out.nonzero = companion_roots(deflated);
    for (auto& r : out.nonzero) newton_polish(deflated, r);
    sort_roots(out.nonzero);
    return out;
}

// --- closed-form reference roots -------------------------------------------

namespace {

void push_pm(std::vector<cplx>& v, cplx r) {
    v.push_back(r);
    v.push_back(-r);
}

}  // namespace

std::optional<RootSet> reference_roots(TheoryVariant v, int m, double nu, double gamma) {
    if (m != 0 && m != 1) return std::nullopt;
    const cplx w = std::sqrt(cplx(nu * nu - 1.0, 0.0));
    RootSet out;
    std::vector<cplx>& roots = out.nonzero;
    switch (v) {
        case TheoryVariant::Eliseev:
            out.zero_multiplicity = 4;
            if (m == 0) {
                double r = std::sqrt(1.0 / gamma + 1.0);
                push_pm(roots, std::sqrt(nu + r * w));
                push_pm(roots, std::sqrt(nu - r * w));
            } else {
                cplx a = cplx(-1.0 / gamma - 5.0 - 4.0 * gamma + 9.0 * gamma * gamma + 4.0 * nu +
                                  22.0 * nu * gamma + 30.0 * nu * gamma * gamma + nu * nu / gamma +
                                  9.0 * nu * nu + 26.0 * nu * nu * gamma + 25.0 * nu * nu * gamma * gamma,
                              0.0);
                cplx sq = std::sqrt(a);
                double base = 2.0 + 5.0 * gamma + nu + 3.0 * nu * gamma;
                double den = 1.0 + 4.0 * gamma;
                push_pm(roots, std::sqrt((base + sq) / den));
                push_pm(roots, std::sqrt((base - sq) / den));
            }
            break;
        case TheoryVariant::Vlasov: {
            if (m == 1) return std::nullopt;
            out.zero_multiplicity = 4;
            cplx inner = std::sqrt(cplx(-1.0 + nu * nu + gamma * gamma, 0.0));
            double g14 = std::pow(gamma, -0.25);
            double sg = std::sqrt(gamma);
            push_pm(roots, g14 * std::sqrt((nu * sg + inner) / (gamma - 1.0)));
            push_pm(roots, g14 * std::sqrt((nu * sg - inner) / (gamma - 1.0)));
            break;
        }
        case TheoryVariant::GoldenveiserBiderman: {
            out.zero_multiplicity = 4;
            double g14 = std::pow(gamma, -0.25);
            if (m == 0) {
                push_pm(roots, g14 * std::sqrt(w));
                push_pm(roots, g14 * std::sqrt(-w));
            } else {
                cplx inner = std::sqrt(cplx(-1.0 + nu * nu + 4.0 * gamma * nu * nu, 0.0));
                double sg = std::sqrt(gamma);
                double fac = (1.0 + gamma) / (1.0 + 4.0 * gamma);
                push_pm(roots, g14 * std::sqrt(fac * (2.0 * sg + inner)));
                push_pm(roots, g14 * std::sqrt(fac * (2.0 * sg - inner)));
            }
            break;
        }
        case TheoryVariant::Novichkov: {
            if (m == 1) return std::nullopt;
            out.zero_multiplicity = 4;
            double g14 = std::pow(gamma, -0.25);
            push_pm(roots, g14 * std::sqrt(w));
            push_pm(roots, g14 * std::sqrt(-w));
            break;
        }
        case TheoryVariant::Fluegge: {
            out.zero_multiplicity = 4;
            if (m == 0) {
                cplx inner = std::sqrt(cplx(-1.0 + nu * nu + gamma * gamma, 0.0));
                double g14 = std::pow(gamma, -0.25);
                double sg = std::sqrt(gamma);
                push_pm(roots, g14 * std::sqrt((nu * sg + inner) / (gamma - 1.0)));
                push_pm(roots, g14 * std::sqrt((nu * sg - inner) / (gamma - 1.0)));
            } else {
                double a = 8.0 + 11.0 * gamma + 9.0 * gamma * gamma - 4.0 * nu - 15.0 * nu * gamma -
                           9.0 * nu * gamma * gamma;
                double b = a * gamma * a * gamma -
                           4.0 * gamma * (-2.0 - 4.0 * gamma + 6.0 * gamma * gamma) *
                               (-2.0 - 8.0 * gamma - 6.0 * gamma * gamma + 2.0 * nu * nu +
                                6.0 * gamma * nu * nu + 6.0 * nu * nu * gamma * gamma +
                                2.0 * nu * nu * gamma * gamma * gamma);
                cplx sqb = std::sqrt(cplx(b, 0.0));
                double den = gamma * (-1.0 - 2.0 * gamma + 3.0 * gamma * gamma);
                push_pm(roots, 0.5 * std::sqrt((-a * gamma + sqb) / den));
                push_pm(roots, 0.5 * std::sqrt((-a * gamma - sqb) / den));
            }
            break;
        }
        case TheoryVariant::Membrane:
            return std::nullopt;
    }
    sort_roots(roots);
    return out;
}

int zero_root_count(TheoryVariant v, int m, double nu, double gamma) {
    return char_poly(v, m, nu, gamma).valuation();
}

std::optional<std::vector<AsymptoticRoot>> asymptotic_roots(TheoryVariant v, int m, double nu, double gamma) {
    if (m != 0 && m != 1) return std::nullopt;
    double bnum = 0.0;  // numerator of the gamma^{1/4} coefficient over (2a)
    bool half = true;   // b = bnum/(2a) when true, bnum/a when false
    switch (v) {
        case TheoryVariant::Eliseev: bnum = m == 0 ? nu : 2.0 + nu; break;
        case TheoryVariant::Vlasov:
            if (m == 1) return std::nullopt;
            bnum = -nu;
            break;
        case TheoryVariant::GoldenveiserBiderman:
            if (m == 0)
                bnum = 0.0;
            else {
                bnum = 1.0;
                half = false;
            }
            break;
        case TheoryVariant::Novichkov:
            if (m == 1) return std::nullopt;
            bnum = 0.0;
            break;
        case TheoryVariant::Fluegge: bnum = m == 0 ? -nu : 2.0 - nu; break;
        case TheoryVariant::Membrane: return std::nullopt;
    }
    const cplx w = std::sqrt(cplx(nu * nu - 1.0, 0.0));
    std::vector<AsymptoticRoot> out;
    for (cplx a : {std::sqrt(w), std::sqrt(-w)}) {
        cplx b = bnum == 0.0 ? cplx(0.0) : (half ? cplx(bnum) / (2.0 * a) : cplx(bnum) / a);
        cplx val = std::pow(gamma, -0.25) * a + std::pow(gamma, 0.25) * b;
        out.push_back({a, b, val});
        out.push_back({-a, -b, -val});
    }
    return out;
}

// --- harmonic system --------------------------------------------------------

void HarmonicProblem::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("HarmonicProblem: radius must be positive");
    if (!(thickness > 0.0 && thickness < 2.0 * radius))
        throw std::invalid_argument("HarmonicProblem: thickness must lie in (0, 2R)");
    if (!(mu > 0.0)) throw std::invalid_argument("HarmonicProblem: mu must be positive");
    if (!(nu > -1.0 && nu < 0.5)) throw std::invalid_argument("HarmonicProblem: nu must lie in (-1, 0.5)");
}

HarmonicProblem HarmonicProblem::from_pressure(double radius, double thickness, double mu, double nu,
                                               int k_phi, double k_z, double p) {
    HarmonicProblem pr;
    pr.radius = radius;
    pr.thickness = thickness;
    pr.mu = mu;
    pr.nu = nu;
    pr.k_phi = k_phi;
    pr.k_z = k_z;
    pr.pressure = p;
    LoadIntensities li = load_intensities(radius, thickness, mu, nu, k_phi, k_z, 0.0, 0.0, p, 0.0, 0.0);
    pr.b_phi = li.b_phi;
    pr.b_z = li.b_z;
    pr.b_n = li.b_n;
    pr.validate();
    return pr;
}

HarmonicProblem HarmonicProblem::from_intensities(double radius, double thickness, double mu, double nu,
                                                  int k_phi, double k_z, double b_phi, double b_z,
                                                  double b_n) {
    HarmonicProblem pr;
    pr.radius = radius;
    pr.thickness = thickness;
    pr.mu = mu;
    pr.nu = nu;
    pr.k_phi = k_phi;
    pr.k_z = k_z;
    pr.b_phi = b_phi;
    pr.b_z = b_z;
    pr.b_n = b_n;
    pr.validate();
    return pr;
}

LoadIntensities load_intensities(double radius, double thickness, double mu, double nu, int k_phi, double k_z,
                                 double f_phi, double f_s, double f_n, double m_phi, double m_s) {
    double c = radius * (1.0 - nu) / (2.0 * thickness * mu);
    LoadIntensities li;
    li.b_phi = c * (radius * f_phi + m_s);
    li.b_z = c * radius * f_s;
    li.b_n = -c * (radius * f_n + k_z * radius * m_phi - k_phi * m_s);
    return li;
}

double HarmonicSystem::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

HarmonicSystem harmonic_system(TheoryVariant v, const HarmonicProblem& problem) {
    problem.validate();
    DiffOpMatrix op = make_operator(v, problem.nu, problem.gamma());
    cplx x(0.0, static_cast<double>(problem.k_phi));
    cplx y(0.0, problem.k_z * problem.radius);
    HarmonicSystem sys;
    for (int j = 0; j < 3; ++j) {
        cplx p0 = op.entry[0][j].eval(x, y);
        cplx p1 = op.entry[1][j].eval(x, y);
        cplx p2 = op.entry[2][j].eval(x, y);
        if (j < 2) {
            sys.m[0][j] = p0.real();
            sys.m[1][j] = p1.real();
            sys.m[2][j] = p2.imag();
        } else {
            sys.m[0][j] = p0.imag();
            sys.m[1][j] = p1.imag();
            sys.m[2][j] = -p2.real();
        }
    }
    sys.rhs = {-problem.b_phi, -problem.b_z, problem.b_n};
    return sys;
}

HarmonicSolution solve_harmonic(TheoryVariant v, const HarmonicProblem& problem) {
    HarmonicSystem sys = harmonic_system(v, problem);
    Eigen::Matrix3d m;
    Eigen::Vector3d rhs;
    for (int i = 0; i < 3; ++i) {
        rhs(i) = sys.rhs[i];
        for (int j = 0; j < 3; ++j) m(i, j) = sys.m[i][j];
    }
    double scale = 1.0;
    for (int i = 0; i < 3; ++i) scale *= m.row(i).norm();
    if (std::abs(m.determinant()) < 1e-12 * scale)
        throw SingularSystemError(problem.thickness, variant_name(v) +
                                                         ": harmonic system singular at h = " +
                                                         std::to_string(problem.thickness));
    Eigen::Vector3d u = m.fullPivLu().solve(rhs);
    return {u(0), u(1), u(2)};
}

HarmonicSolution eliseev_reference_solution(double radius, double thickness, double mu, double nu, int k_phi,
                                            double k_z, double p) {
    const double R = radius, h = thickness;
    const double R2 = R * R, R3 = R2 * R, R4 = R2 * R2, R6 = R4 * R2, R8 = R4 * R4;
    const double h2 = h * h, h4 = h2 * h2;
    const double kp = static_cast<double>(k_phi);
    const double kp2 = kp * kp, kp4 = kp2 * kp2, kp6 = kp4 * kp2, kp8 = kp4 * kp4;
    const double kz2 = k_z * k_z, kz4 = kz2 * kz2, kz6 = kz4 * kz2, kz8 = kz4 * kz4;
    const double nu2 = nu * nu;

    const double a =
        6 * h2 * kp4 - 72 * kz4 * R6 * nu2 - 24 * kz4 * R4 * h2 * nu2 + kz2 * h4 * kp2 -
        2 * kz2 * h4 * kp4 + kz2 * h4 * kp6 + 24 * kz2 * R2 * kp6 * h2 - kz2 * h4 * kp2 * nu +
        2 * kz4 * R2 * h4 * kp2 * nu - 2 * kz4 * R2 * h4 * kp4 * nu - 4 * kz4 * R2 * h4 * kp2 +
        4 * kz4 * R2 * h4 * kp4 + 24 * kz6 * R6 * kp2 * h2 + 5 * kz6 * R4 * h4 * kp2 +
        4 * kz6 * R4 * h4 * nu - kz6 * R4 * h4 * kp2 * nu + 72 * kz4 * R6 + 6 * kz8 * R8 * h2 +
        2 * kz8 * R6 * h4 + 6 * kp8 * h2 + 2 * kz4 * R2 * h4 + 12 * h2 * kp2 * R2 * kz2 * nu +
        36 * kz4 * R4 * kp4 * h2 - 2 * kz4 * R2 * h4 * kp2 * nu2 + 2 * kz2 * h4 * kp4 * nu -
        kz2 * h4 * kp6 * nu + 12 * kz6 * R6 * h2 * nu + 30 * h2 * R4 * kz4 + 24 * h2 * kp2 * R2 * kz2 -
        12 * h2 * kp6 - 12 * h2 * R2 * kp4 * kz2 * nu - 36 * h2 * R4 * kp2 * kz4 -
        48 * h2 * kp4 * R2 * kz2;

    HarmonicSolution sol;
    sol.u_phi = -(6 * R2 * kp * p / (h * mu * a)) *
                (-6 * R2 * kp2 + h2 * kp4 * nu - 12 * R4 * kz2 - 2 * h2 * R2 * kz2 + 6 * R4 * kz2 * nu +
                 6 * R4 * kz2 * nu2 - 3 * h2 * kp2 * R2 * kz2 + 6 * kp2 * R2 * nu + h2 * kp2 * nu -
                 2 * h2 * R4 * kz4 + h2 * kp2 * R2 * kz2 * nu - h2 * kp2 - h2 * kp4);
    sol.u_z = -(6 * p * k_z * R3 / (h * mu * a)) *
              (-3 * h2 * kp2 * nu - 6 * R4 * kz2 * nu + 6 * R4 * kz2 * nu2 + 6 * R2 * kp2 -
               6 * kp2 * R2 * nu - 2 * h2 * R2 * kz2 * nu + 2 * R2 * kz2 * nu2 * h2 + h2 * kp2 + h2 * kp4 +
               h2 * kp4 * nu + h2 * kp2 * R2 * kz2 + h2 * kp2 * R2 * kz2 * nu);
    sol.u_n = -(6 * R2 * p / (h * mu * a)) *
              (-2 * h2 * kp4 + 2 * h2 * kp4 * nu + 6 * kz4 * R6 * nu - 6 * kz4 * R6 + 2 * h2 * nu * R4 * kz4 -
               5 * h2 * kp2 * R2 * kz2 + 12 * kp2 * R4 * kz2 * nu - 12 * kp2 * R4 * kz2 + 6 * R2 * kp4 * nu -
               6 * kp4 * R2 - h2 * nu2 * R2 * kz2 * kp2 - 2 * h2 * R4 * kz4 + 2 * h2 * kp2 * R2 * kz2 * nu);
    return sol;
}

// --- denominator in h --------------------------------------------------------

namespace {

double det3(const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<std::array<double, 3>, 3> system_matrix(TheoryVariant v, double nu, double gamma, int k_phi,
                                                   double k_z, double radius) {
    DiffOpMatrix op = make_operator(v, nu, gamma);
    cplx x(0.0, static_cast<double>(k_phi));
    cplx y(0.0, k_z * radius);
    std::array<std::array<double, 3>, 3> m{};
    for (int j = 0; j < 3; ++j) {
        cplx p0 = op.entry[0][j].eval(x, y);
        cplx p1 = op.entry[1][j].eval(x, y);
        cplx p2 = op.entry[2][j].eval(x, y);
        if (j < 2) {
            m[0][j] = p0.real();
            m[1][j] = p1.real();
            m[2][j] = p2.imag();
        } else {
            m[0][j] = p0.imag();
            m[1][j] = p1.imag();
            m[2][j] = -p2.real();
        }
    }
    return m;
}

}  // namespace

std::vector<double> denominator_in_h(TheoryVariant v, int k_phi, double k_z, double nu, double radius) {
    // M(gamma) is affine: det(M0 + gamma M1) is cubic in gamma. Expand by
    // multilinearity over column choices.
    auto m0 = system_matrix(v, nu, 0.0, k_phi, k_z, radius);
    auto mg = system_matrix(v, nu, 1.0, k_phi, k_z, radius);
    std::array<std::array<double, 3>, 3> m1{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m1[i][j] = mg[i][j] - m0[i][j];

    std::array<double, 4> gamma_coeff{};
    for (int mask = 0; mask < 8; ++mask) {
        std::array<std::array<double, 3>, 3> m{};
        int ones = 0;
        for (int j = 0; j < 3; ++j) {
            bool from_m1 = (mask >> j) & 1;
            ones += from_m1 ? 1 : 0;
            for (int i = 0; i < 3; ++i) m[i][j] = from_m1 ? m1[i][j] : m0[i][j];
        }
        gamma_coeff[ones] += det3(m);
    }

    // gamma^k -> h^{2k} / (12 R^2)^k
    std::vector<double> coeff(7, 0.0);
    double denom = 1.0;
    for (int k = 0; k <= 3; ++k) {
        coeff[2 * k] = gamma_coeff[k] / denom;
        denom *= 12.0 * radius * radius;
    }

    double maxc = 0.0;
    for (double c : coeff) maxc = std::max(maxc, std::abs(c));
    if (maxc == 0.0) return {1.0};
    for (double& c : coeff)
        if (std::abs(c) <= 1e-14 * maxc) c = 0.0;

    size_t lo = 0;
    while (lo < coeff.size() && coeff[lo] == 0.0) ++lo;
    size_t hi = coeff.size();
    while (hi > lo && coeff[hi - 1] == 0.0) --hi;
    std::vector<double> cleared(coeff.begin() + lo, coeff.begin() + hi);
    if (cleared.empty()) return {1.0};
    double lead = cleared.back();
    for (double& c : cleared) c /= lead;
    return cleared;
}

DiscontinuityResult discontinuity_thickness(TheoryVariant v, int k_phi, double k_z, double nu,
                                            double radius) {
    std::vector<double> poly = denominator_in_h(v, k_phi, k_z, nu, radius);
    DiscontinuityResult out;
    if (poly.size() < 2) return out;

    // even polynomial in h: solve in y = h^2
    std::vector<cplx> ypoly;
    for (size_t i = 0; i < poly.size(); i += 2) ypoly.push_back(cplx(poly[i], 0.0));
    if (ypoly.size() < 2) return out;

    cplx lead = ypoly.back();
    for (auto& c : ypoly) c /= lead;
    std::vector<cplx> roots = companion_roots(ypoly);
    for (auto& r : roots) newton_polish(ypoly, r);

    std::vector<double> hs;
    for (const auto& y : roots) {
        if (std::abs(y.imag()) > 1e-9 * std::max(1.0, std::abs(y.real()))) continue;
        if (y.real() <= 0.0) continue;
        hs.push_back(std::sqrt(y.real()));
    }
    std::sort(hs.begin(), hs.end());
    std::vector<double> dedup;
    for (double h : hs) {
        if (!dedup.empty() && std::abs(h - dedup.back()) <= 1e-9 * std::abs(h)) continue;
        dedup.push_back(h);
    }
    for (double h : dedup) {
        if (h > 0.0 && h < 2.0 * radius)
            out.in_range.push_back(h);
        else
            out.out_of_range.push_back(h);
    }
    return out;
}

}  // namespace shellrev
