#pragma once

#include <map>
#include <set>
#include <utility>

#include "motive/grassmannian.hpp"

namespace motive {

/// Class in CH(X x Y) for Grassmannians X, Y, in the tensor Schubert basis:
/// finitely supported map (lambda, mu) -> coefficient. Codimension of a term
/// is |lambda| + |mu|.
class ProductClass {
public:
    ProductClass(GrassmannSpace left, GrassmannSpace right, CoefficientRing ring);
    static ProductClass zero(const GrassmannSpace& left, const GrassmannSpace& right,
                             const CoefficientRing& ring);

    const GrassmannSpace& left() const { return left_; }
    const GrassmannSpace& right() const { return right_; }
    const CoefficientRing& ring() const { return ring_; }
    const std::map<std::pair<Partition, Partition>, Rat>& terms() const { return terms_; }
    Rat coefficient(const Partition& lambda, const Partition& mu) const;
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous(int* codim = nullptr) const;

    ProductClass operator+(const ProductClass& other) const;
    ProductClass operator-(const ProductClass& other) const;
    ProductClass operator-() const;
    ProductClass scaled(const Rat& c) const;
    ProductClass cast_to(const CoefficientRing& target) const;

    bool operator==(const ProductClass& other) const = default;

    std::string to_string() const;
    nlohmann::json to_json() const;
    static ProductClass from_json(const GrassmannSpace& left, const GrassmannSpace& right,
                                  const CoefficientRing& ring, const nlohmann::json& j);

    void add_term(const Partition& lambda, const Partition& mu, const Rat& coefficient);

private:
    GrassmannSpace left_, right_;
    CoefficientRing ring_;
    std::map<std::pair<Partition, Partition>, Rat> terms_;
};

ProductClass external_product(const ChowClass& x, const ChowClass& y);

/// Transposition of cycles: swaps the factors; an involution.
ProductClass transpose(const ProductClass& a);

/// Correspondence composition b o a for a on X x Y, b on Y x Z, by the
/// degree-pairing rule deg(g_a . f_b) (f_a x g_b) on basis terms.
ProductClass compose(const ProductClass& b, const ProductClass& a);

/// Intersection product in the ring CH(X x Y) = CH(X) (x) CH(Y).
ProductClass intersect(const ProductClass& a, const ProductClass& b);
ProductClass intersect_power(const ProductClass& a, int k);

/// Kuenneth diagonal: sum of Delta_lambda x Delta_{lambda^op}.
ProductClass diagonal(const GrassmannSpace& space,
                      const CoefficientRing& ring = CoefficientRing::integers());

/// p o p == p; requires an endo-correspondence (left == right).
bool is_projector(const ProductClass& p);

/// Twist frame for an isomorphism (X,p)(i) ~ (Y,q)(j): j1 lives in codim
/// dim(X) + i - j, j2 in codim dim(Y) + j - i.
struct TwistFrame {
    int source_twist = 0;
    int target_twist = 0;
};

/// Verifies q o j1 = j1 o p, p o j2 = j2 o q, j1 o j2 = q, j2 o j1 = p, with
/// the frame's codimension constraints on j1 and j2.
bool check_iso_pair(const ProductClass& j1, const ProductClass& j2,
                    const ProductClass& p, const ProductClass& q, const TwistFrame& frame);

/// Coefficientwise reduction of an integral class mod m (m >= 2).
ProductClass reduce_mod(const ProductClass& a, const Int& m);
bool eq_mod(const ProductClass& a, const ProductClass& b, const Int& m);

/// Exact coefficientwise division by a nonzero integer; throws NonDivisible.
ProductClass divide_exact(const ProductClass& a, const Int& k);

/// Primes dividing any reduced denominator of a rational-ring class.
std::set<Int> denominator_support(const ProductClass& a);

/// c_i(pr1* E (x) pr2* L) = sum_j C(rank-j, i-j) c_j(E) x c1(L)^{i-j} for a
/// rank-`rank` bundle E on X (given by its total Chern class) and a line
/// bundle L on Y given by its first Chern class.
ProductClass tensor_line_chern(const ChowClass& e_total, int rank, const ChowClass& l_c1, int i);

}  // namespace motive
