#pragma once

#include <map>
#include <string>
#include <vector>

#include "motive/partition.hpp"
#include "motive/ring.hpp"

namespace motive {

/// Split Grassmannian Gr(d, n) of d-planes in n-space. The Schubert basis is
/// indexed by partitions in the d x (n-d) box; dimension = d(n-d).
class GrassmannSpace {
public:
    GrassmannSpace(int d, int n);  // requires 1 <= d <= n-1

    int subspace_rank() const { return d_; }
    int ambient_rank() const { return n_; }
    int rows() const { return d_; }
    int cols() const { return n_ - d_; }
    int dimension() const { return d_ * (n_ - d_); }
    bool is_projective_space() const { return d_ == 1; }

    std::vector<Partition> basis() const { return partitions_in_box(rows(), cols()); }
    bool contains(const Partition& lambda) const { return lambda.fits_in_box(rows(), cols()); }
    Partition point_class() const;
    Partition complement(const Partition& lambda) const;

    bool operator==(const GrassmannSpace& other) const = default;
    auto operator<=>(const GrassmannSpace& other) const = default;

    std::string to_string() const;  // "Gr(2,5)"
    nlohmann::json to_json() const;
    static GrassmannSpace from_json(const nlohmann::json& j);

private:
    int d_, n_;
};

/// Name of a Schubert basis class in rendered output: classical aliases on
/// Gr(2,5), H-powers on projective space, S[...] literals elsewhere.
std::string basis_class_name(const GrassmannSpace& space, const Partition& lambda);

/// Finitely supported combination of Schubert classes of one Grassmannian
/// over one coefficient ring.
class ChowClass {
public:
    ChowClass(GrassmannSpace space, CoefficientRing ring);  // zero class
    static ChowClass zero(const GrassmannSpace& space, const CoefficientRing& ring);
    static ChowClass unit(const GrassmannSpace& space, const CoefficientRing& ring);
    static ChowClass basis_class(const GrassmannSpace& space, const CoefficientRing& ring,
                                 const Partition& lambda);

    const GrassmannSpace& space() const { return space_; }
    const CoefficientRing& ring() const { return ring_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    Rat coefficient(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }

    /// True when every term has the same codimension (vacuously for 0);
    /// reports it through `codim` when non-null.
    bool is_homogeneous(int* codim = nullptr) const;
    ChowClass component(int codim) const;

    ChowClass operator+(const ChowClass& other) const;
    ChowClass operator-(const ChowClass& other) const;
    ChowClass operator-() const;
    ChowClass operator*(const ChowClass& other) const;  // Littlewood-Richardson product
    ChowClass scaled(const Rat& c) const;

    ChowClass cast_to(const CoefficientRing& target) const;

    bool operator==(const ChowClass& other) const = default;

    std::string to_string() const;
    nlohmann::json to_json() const;
    static ChowClass from_json(const GrassmannSpace& space, const CoefficientRing& ring,
                               const nlohmann::json& j);

    void add_term(const Partition& lambda, const Rat& coefficient);

private:
    GrassmannSpace space_;
    CoefficientRing ring_;
    std::map<Partition, Rat> terms_;
};

/// Littlewood-Richardson coefficient c^outer_{inner, content} by lattice-word
/// skew-tableau enumeration.
Int lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content);

/// Classical generator names: sigma1..sigma3, g2..g5, h4, pt on Gr(2,5); "H" on
/// Gr(1,n); "1" anywhere. Throws UnknownName otherwise.
ChowClass named_generator(const GrassmannSpace& space, const std::string& name,
                          const CoefficientRing& ring = CoefficientRing::integers());

/// Pieri rule: Delta_lambda * sigma_m as the sum over horizontal strips in
/// the box. Independent of the LR product.
ChowClass pieri(const GrassmannSpace& space, const Partition& lambda, int m,
                const CoefficientRing& ring = CoefficientRing::integers());

/// Giambelli determinant det(sigma_{lambda_i + j - i}) expanded through
/// iterated pieri; equals the basis class and serves as the product oracle.
ChowClass giambelli_oracle(const GrassmannSpace& space, const Partition& lambda,
                           const CoefficientRing& ring = CoefficientRing::integers());

/// Coefficient of the point class. In strict mode a class that is not
/// homogeneous of top codimension (and not zero) is rejected.
Rat degree(const ChowClass& x, bool strict = false);

/// Total Chern class of the universal quotient bundle: 1 + sigma_1 + ... + sigma_{n-d}.
ChowClass chern_quotient(const GrassmannSpace& space,
                         const CoefficientRing& ring = CoefficientRing::integers());

/// Multiplicative inverse of a total Chern class (constant term 1), truncated
/// at the space dimension. Throws NotAUnit otherwise.
ChowClass invert_total_chern(const ChowClass& c);

}  // namespace motive
