#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "motive/product_class.hpp"

namespace motive {

/// Closed form of c_i(pr1* tau_d (x) pr2* tau_{d'}) on Gr(d,n) x Gr(d',n).
/// Implemented for min(d, d') = 1; other shapes raise ParameterRange.
ProductClass segre_chern_class(int d, int d2, int n, int i,
                               const CoefficientRing& ring = CoefficientRing::integers());

/// Derivation tree certifying a product class as rational: leaves are the
/// Segre-pullback Chern classes and diagonals, inner nodes the operations
/// that preserve rationality. A ModAdjust(m, z) node changes the conclusion
/// by -m*z and downgrades the certificate from integral to mod-m lineage.
class RationalWitness {
public:
    enum class Node {
        segre_chern,
        diagonal,
        sum,
        integer_scale,
        intersection,
        composition,
        transposition,
        mod_adjust,
    };

    static RationalWitness segre_chern(int d, int d2, int n, int i,
                                       const CoefficientRing& ring = CoefficientRing::integers());
    static RationalWitness diagonal_leaf(const GrassmannSpace& space,
                                         const CoefficientRing& ring = CoefficientRing::integers());
    static RationalWitness sum(const RationalWitness& a, const RationalWitness& b);
    static RationalWitness integer_scale(const Int& k, const RationalWitness& w);
    static RationalWitness intersection(const RationalWitness& a, const RationalWitness& b);
    /// composition(outer, inner) concludes compose(outer.conclusion(), inner.conclusion()).
    static RationalWitness composition(const RationalWitness& outer, const RationalWitness& inner);
    static RationalWitness transposition(const RationalWitness& w);
    static RationalWitness mod_adjust(const Int& m, const ProductClass& adjustment,
                                      const RationalWitness& w);

    Node kind() const;
    const ProductClass& conclusion() const;
    const std::vector<RationalWitness>& children() const;

    /// Replays the whole tree and compares with the stored conclusion.
    bool verify() const;
    /// True when no ModAdjust node occurs (certificate of integral rationality).
    bool is_integral_lineage() const;
    /// Leaves are only SegreChern and Diagonal by construction; exposed for tests.
    bool leaves_are_generators() const;

    /// Same tree with a replaced conclusion (for tamper tests; verify() fails).
    RationalWitness with_conclusion(const ProductClass& conclusion) const;

    nlohmann::json to_json() const;

private:
    struct Impl;
    explicit RationalWitness(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    ProductClass replay() const;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace motive
