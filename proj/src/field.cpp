#include "shellrev/field.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace shellrev {
namespace detail {

struct FieldNode {
    virtual ~FieldNode() = default;
    virtual double value(double phi, double s) const = 0;
    virtual NodePtr dphi() const = 0;
    virtual NodePtr ds() const = 0;
};

namespace {

struct ConstNode final : FieldNode {
    explicit ConstNode(double v) : c(v) {}
    double value(double, double) const override { return c; }
    NodePtr dphi() const override;
    NodePtr ds() const override;
    double c;
};

NodePtr make_const(double c) { return std::make_shared<ConstNode>(c); }
const NodePtr& zero_node() {
    static const NodePtr z = make_const(0.0);
    return z;
}

bool is_const(const NodePtr& n, double* out = nullptr) {
    if (auto* c = dynamic_cast<const ConstNode*>(n.get())) {
        if (out) *out = c->c;
        return true;
    }
    return false;
}

NodePtr ConstNode::dphi() const { return zero_node(); }
NodePtr ConstNode::ds() const { return zero_node(); }

struct SumNode final : FieldNode {
    explicit SumNode(std::vector<NodePtr> ch) : children(std::move(ch)) {}
    double value(double phi, double s) const override {
        double acc = 0.0;
        for (const auto& c : children) acc += c->value(phi, s);
        return acc;
    }
    NodePtr dphi() const override;
    NodePtr ds() const override;
    std::vector<NodePtr> children;
};

NodePtr make_sum(std::vector<NodePtr> children) {
    std::vector<NodePtr> flat;
    double folded = 0.0;
    bool have_const = false;
    for (auto& c : children) {
        double v;
        if (is_const(c, &v)) {
            folded += v;
            have_const = true;
        } else if (auto* s = dynamic_cast<const SumNode*>(c.get())) {
            for (const auto& g : s->children) flat.push_back(g);
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (have_const && folded != 0.0) flat.push_back(make_const(folded));
    if (flat.empty()) return zero_node();
    if (flat.size() == 1) return flat.front();
    return std::make_shared<SumNode>(std::move(flat));
}

struct ProdNode final : FieldNode {
    ProdNode(NodePtr l, NodePtr r) : a(std::move(l)), b(std::move(r)) {}
    double value(double phi, double s) const override { return a->value(phi, s) * b->value(phi, s); }
    NodePtr dphi() const override;
    NodePtr ds() const override;
    NodePtr a, b;
};

NodePtr make_prod(NodePtr a, NodePtr b) {
    double va, vb;
    bool ca = is_const(a, &va), cb = is_const(b, &vb);
    if (ca && cb) return make_const(va * vb);
    if (ca) {
        if (va == 0.0) return zero_node();
        if (va == 1.0) return b;
    }
    if (cb) {
        if (vb == 0.0) return zero_node();
        if (vb == 1.0) return a;
    }
    return std::make_shared<ProdNode>(std::move(a), std::move(b));
}

NodePtr SumNode::dphi() const {
    std::vector<NodePtr> d;
    d.reserve(children.size());
    for (const auto& c : children) d.push_back(c->dphi());
    return make_sum(std::move(d));
}
NodePtr SumNode::ds() const {
    std::vector<NodePtr> d;
    d.reserve(children.size());
    for (const auto& c : children) d.push_back(c->ds());
    return make_sum(std::move(d));
}
NodePtr ProdNode::dphi() const { return make_sum({make_prod(a->dphi(), b), make_prod(a, b->dphi())}); }
NodePtr ProdNode::ds() const { return make_sum({make_prod(a->ds(), b), make_prod(a, b->ds())}); }

// amp * cos(alpha*phi + beta*s + delta)
struct HarmonicNode final : FieldNode {
    HarmonicNode(double amp_, double alpha_, double beta_, double delta_)
        : amp(amp_), alpha(alpha_), beta(beta_), delta(delta_) {}
    double value(double phi, double s) const override { return amp * std::cos(alpha * phi + beta * s + delta); }
    NodePtr dphi() const override {
        if (alpha == 0.0 || amp == 0.0) return zero_node();
        return std::make_shared<HarmonicNode>(amp * alpha, alpha, beta, delta + std::numbers::pi / 2);
    }
    NodePtr ds() const override {
        if (beta == 0.0 || amp == 0.0) return zero_node();
        return std::make_shared<HarmonicNode>(amp * beta, alpha, beta, delta + std::numbers::pi / 2);
    }
    double amp, alpha, beta, delta;
};

struct MonomialNode final : FieldNode {
    MonomialNode(double c_, int i_, int j_) : c(c_), i(i_), j(j_) {}
    static double ipow(double x, int n) {
        double r = 1.0;
        for (int k = 0; k < n; ++k) r *= x;
        return r;
    }
    double value(double phi, double s) const override { return c * ipow(phi, i) * ipow(s, j); }
    NodePtr dphi() const override {
        if (i == 0 || c == 0.0) return zero_node();
        return std::make_shared<MonomialNode>(c * i, i - 1, j);
    }
    NodePtr ds() const override {
        if (j == 0 || c == 0.0) return zero_node();
        return std::make_shared<MonomialNode>(c * j, i, j - 1);
    }
    double c;
    int i, j;
};

struct ExpNode final : FieldNode {
    ExpNode(double amp_, double a_, double b_) : amp(amp_), a(a_), b(b_) {}
    double value(double phi, double s) const override { return amp * std::exp(a * phi + b * s); }
    NodePtr dphi() const override {
        if (a == 0.0 || amp == 0.0) return zero_node();
        return std::make_shared<ExpNode>(amp * a, a, b);
    }
    NodePtr ds() const override {
        if (b == 0.0 || amp == 0.0) return zero_node();
        return std::make_shared<ExpNode>(amp * b, a, b);
    }
    double amp, a, b;
};

enum class ProfileKind { Radius, Axial, Psi, InvR };

struct ProfileNode final : FieldNode {
    ProfileNode(ProfilePtr p_, ProfileKind kind_, int order_) : p(std::move(p_)), kind(kind_), order(order_) {}
    double value(double, double s) const override {
        switch (kind) {
            case ProfileKind::Radius: return p->radius(s, order);
            case ProfileKind::Axial: return p->axial(s, order);
            case ProfileKind::Psi: return psi_deriv(*p, s, order);
            case ProfileKind::InvR: return inv_radius_deriv(*p, s, order);
        }
        return 0.0;
    }
    NodePtr dphi() const override { return zero_node(); }
    NodePtr ds() const override { return std::make_shared<ProfileNode>(p, kind, order + 1); }
    ProfilePtr p;
    ProfileKind kind;
    int order;
};

}  // namespace
}  // namespace detail

using detail::NodePtr;

Field::Field() : node_(detail::zero_node()) {}
Field::Field(double constant) : node_(detail::make_const(constant)) {}
Field::Field(NodePtr n) : node_(std::move(n)) {}

double Field::value(double phi, double s) const { return node_->value(phi, s); }

double Field::deriv(double phi, double s, int nphi, int ns) const {
    NodePtr n = node_;
    for (int i = 0; i < nphi; ++i) n = n->dphi();
    for (int j = 0; j < ns; ++j) n = n->ds();
    return n->value(phi, s);
}

Field Field::d_phi() const { return Field(node_->dphi()); }
Field Field::d_s() const { return Field(node_->ds()); }

Field& Field::operator+=(const Field& o) {
    node_ = detail::make_sum({node_, o.node_});
    return *this;
}
Field& Field::operator-=(const Field& o) {
    node_ = detail::make_sum({node_, detail::make_prod(detail::make_const(-1.0), o.node_)});
    return *this;
}
Field& Field::operator*=(const Field& o) {
    node_ = detail::make_prod(node_, o.node_);
    return *this;
}
Field& Field::operator*=(double c) {
    node_ = detail::make_prod(detail::make_const(c), node_);
    return *this;
}

Field Field::harmonic(double amp, double alpha, double beta, double delta) {
    return Field(NodePtr(std::make_shared<detail::HarmonicNode>(amp, alpha, beta, delta)));
}
Field Field::monomial(double c, int pow_phi, int pow_s) {
    return Field(NodePtr(std::make_shared<detail::MonomialNode>(c, pow_phi, pow_s)));
}
Field Field::exponential(double amp, double a, double b) {
    return Field(NodePtr(std::make_shared<detail::ExpNode>(amp, a, b)));
}
Field Field::profile_radius(ProfilePtr p, int order) {
    return Field(NodePtr(std::make_shared<detail::ProfileNode>(std::move(p), detail::ProfileKind::Radius, order)));
}
Field Field::profile_axial(ProfilePtr p, int order) {
    return Field(NodePtr(std::make_shared<detail::ProfileNode>(std::move(p), detail::ProfileKind::Axial, order)));
}
Field Field::profile_psi(ProfilePtr p, int order) {
    return Field(NodePtr(std::make_shared<detail::ProfileNode>(std::move(p), detail::ProfileKind::Psi, order)));
}
Field Field::profile_curvature(ProfilePtr p, int order) {
    return Field(NodePtr(std::make_shared<detail::ProfileNode>(std::move(p), detail::ProfileKind::InvR, order)));
}

Field operator+(const Field& a, const Field& b) {
    Field r = a;
    r += b;
    return r;
}
Field operator-(const Field& a, const Field& b) {
    Field r = a;
    r -= b;
    return r;
}
Field operator-(const Field& a) { return -1.0 * a; }
Field operator*(const Field& a, const Field& b) {
    Field r = a;
    r *= b;
    return r;
}
Field operator*(double c, const Field& f) {
    Field r = f;
    r *= c;
    return r;
}
Field operator*(const Field& f, double c) { return c * f; }

}  // namespace shellrev
