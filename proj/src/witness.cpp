#include "motive/witness.hpp"

#include "motive/error.hpp"

namespace motive {

ProductClass segre_chern_class(int d, int d2, int n, int i, const CoefficientRing& ring) {
    if (d < 1 || d2 < 1 || d >= n || d2 >= n)
        fail("ParameterRange", "invalid Grassmannian parameters for segre_chern");
    if (i < 0 || i > d * d2)
        fail("ParameterRange", "segre_chern needs 0 <= i <= d*d'");
    if (d2 == 1) {
        const GrassmannSpace x(d, n), y(1, n);
        ChowClass tau_total = invert_total_chern(chern_quotient(x, ring));
        ChowClass line_c1 = -named_generator(y, "H", ring);  // c1(tau_1) = -H
        return tensor_line_chern(tau_total, d, line_c1, i);
    }
    if (d == 1) return transpose(segre_chern_class(d2, 1, n, i, ring));
    fail("ParameterRange", "segre_chern is implemented for min(d, d') = 1");
}

struct RationalWitness::Impl {
    Node kind;
    std::vector<RationalWitness> children;
    // leaf / node parameters
    int d = 0, d2 = 0, n = 0, i = 0;                 // segre_chern
    CoefficientRing leaf_ring = CoefficientRing::integers();
    std::optional<GrassmannSpace> space;             // diagonal
    Int scale = 0;                                   // integer_scale
    Int modulus = 0;                                 // mod_adjust
    std::optional<ProductClass> adjustment;          // mod_adjust
    ProductClass conclusion;

    Impl(Node k, ProductClass c) : kind(k), conclusion(std::move(c)) {}
};

RationalWitness RationalWitness::segre_chern(int d, int d2, int n, int i,
                                             const CoefficientRing& ring) {
    auto impl = std::make_shared<Impl>(Node::segre_chern, segre_chern_class(d, d2, n, i, ring));
    impl->d = d;
    impl->d2 = d2;
    impl->n = n;
    impl->i = i;
    impl->leaf_ring = ring;
    return RationalWitness(impl);
}

RationalWitness RationalWitness::diagonal_leaf(const GrassmannSpace& space,
                                               const CoefficientRing& ring) {
    auto impl = std::make_shared<Impl>(Node::diagonal, diagonal(space, ring));
    impl->space = space;
    impl->leaf_ring = ring;
    return RationalWitness(impl);
}

RationalWitness RationalWitness::sum(const RationalWitness& a, const RationalWitness& b) {
    auto impl = std::make_shared<Impl>(Node::sum, a.conclusion() + b.conclusion());
    impl->children = {a, b};
    return RationalWitness(impl);
}

RationalWitness RationalWitness::integer_scale(const Int& k, const RationalWitness& w) {
    auto impl = std::make_shared<Impl>(Node::integer_scale, w.conclusion().scaled(Rat(k)));
    impl->children = {w};
    impl->scale = k;
    return RationalWitness(impl);
}

RationalWitness RationalWitness::intersection(const RationalWitness& a, const RationalWitness& b) {
    auto impl =
        std::make_shared<Impl>(Node::intersection, intersect(a.conclusion(), b.conclusion()));
    impl->children = {a, b};
    return RationalWitness(impl);
}

RationalWitness RationalWitness::composition(const RationalWitness& outer,
                                             const RationalWitness& inner) {
    auto impl =
        std::make_shared<Impl>(Node::composition, compose(outer.conclusion(), inner.conclusion()));
    impl->children = {outer, inner};
    return RationalWitness(impl);
}

RationalWitness RationalWitness::transposition(const RationalWitness& w) {
    auto impl = std::make_shared<Impl>(Node::transposition, transpose(w.conclusion()));
    impl->children = {w};
    return RationalWitness(impl);
}

RationalWitness RationalWitness::mod_adjust(const Int& m, const ProductClass& adjustment,
                                            const RationalWitness& w) {
    if (m < 2) fail("DomainError", "mod_adjust needs m >= 2");
    auto impl = std::make_shared<Impl>(Node::mod_adjust,
                                       w.conclusion() - adjustment.scaled(Rat(m)));
    impl->children = {w};
    impl->modulus = m;
    impl->adjustment = adjustment;
    return RationalWitness(impl);
}

RationalWitness::Node RationalWitness::kind() const { return impl_->kind; }
const ProductClass& RationalWitness::conclusion() const { return impl_->conclusion; }
const std::vector<RationalWitness>& RationalWitness::children() const { return impl_->children; }

ProductClass RationalWitness::replay() const {
    switch (impl_->kind) {
        case Node::segre_chern:
            return segre_chern_class(impl_->d, impl_->d2, impl_->n, impl_->i, impl_->leaf_ring);
        case Node::diagonal:
            return diagonal(*impl_->space, impl_->leaf_ring);
        case Node::sum:
            return impl_->children[0].replay() + impl_->children[1].replay();
        case Node::integer_scale:
            return impl_->children[0].replay().scaled(Rat(impl_->scale));
        case Node::intersection:
            return intersect(impl_->children[0].replay(), impl_->children[1].replay());
        case Node::composition:
            return compose(impl_->children[0].replay(), impl_->children[1].replay());
        case Node::transposition:
            return transpose(impl_->children[0].replay());
        case Node::mod_adjust:
            return impl_->children[0].replay() - impl_->adjustment->scaled(Rat(impl_->modulus));
    }
    fail("DomainError", "unreachable witness node");
}

bool RationalWitness::verify() const {
    try {
        return replay() == impl_->conclusion;
    } catch (const Error&) {
        return false;
    }
}

bool RationalWitness::is_integral_lineage() const {
    if (impl_->kind == Node::mod_adjust) return false;
    for (const auto& c : impl_->children)
        if (!c.is_integral_lineage()) return false;
    return true;
}

bool RationalWitness::leaves_are_generators() const {
    if (impl_->children.empty())
        return impl_->kind == Node::segre_chern || impl_->kind == Node::diagonal;
    for (const auto& c : impl_->children)
        if (!c.leaves_are_generators()) return false;
    return true;
}

RationalWitness RationalWitness::with_conclusion(const ProductClass& conclusion) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->conclusion = conclusion;
    return RationalWitness(impl);
}

namespace {

const char* node_name(RationalWitness::Node kind) {
    using Node = RationalWitness::Node;
    switch (kind) {
        case Node::segre_chern: return "SegreChern";
        case Node::diagonal: return "Diagonal";
        case Node::sum: return "Sum";
        case Node::integer_scale: return "IntegerScale";
        case Node::intersection: return "IntersectionProduct";
        case Node::composition: return "Compose";
        case Node::transposition: return "Transpose";
        case Node::mod_adjust: return "ModAdjust";
    }
    return "?";
}

}  // namespace

nlohmann::json RationalWitness::to_json() const {
    nlohmann::json j;
    j["node"] = node_name(impl_->kind);
    switch (impl_->kind) {
        case Node::segre_chern:
            j["parameters"] = {{"d", impl_->d},
                               {"d2", impl_->d2},
                               {"n", impl_->n},
                               {"i", impl_->i},
                               {"ring", impl_->leaf_ring.to_json()}};
            break;
        case Node::diagonal:
            j["parameters"] = {{"space", impl_->space->to_json()},
                               {"ring", impl_->leaf_ring.to_json()}};
            break;
        case Node::integer_scale:
            j["parameters"] = {{"scale", impl_->scale.str()}};
            break;
        case Node::mod_adjust:
            j["parameters"] = {{"modulus", impl_->modulus.str()},
                               {"adjustment", impl_->adjustment->to_json()}};
            break;
        default:
            break;
    }
    if (!impl_->children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : impl_->children) kids.push_back(c.to_json());
        j["children"] = kids;
    }
    j["conclusion"] = impl_->conclusion.to_json();
    return j;
}

}  // namespace motive
