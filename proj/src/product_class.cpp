#include "motive/product_class.hpp"

#include "motive/error.hpp"

namespace motive {

ProductClass::ProductClass(GrassmannSpace left, GrassmannSpace right, CoefficientRing ring)
    : left_(std::move(left)), right_(std::move(right)), ring_(std::move(ring)) {}

ProductClass ProductClass::zero(const GrassmannSpace& left, const GrassmannSpace& right,
                                const CoefficientRing& ring) {
    return ProductClass(left, right, ring);
}

void ProductClass::add_term(const Partition& lambda, const Partition& mu, const Rat& coefficient) {
    if (!left_.contains(lambda) || !right_.contains(mu))
        fail("DomainError", "(" + lambda.to_string() + ", " + mu.to_string() +
                                ") outside the boxes of " + left_.to_string() + " x " +
                                right_.to_string());
    auto key = std::make_pair(lambda, mu);
    auto it = terms_.find(key);
    Rat next = ring_.normalize((it == terms_.end() ? Rat(0) : it->second) + coefficient);
    if (next == 0)
        terms_.erase(key);
    else
        terms_[key] = next;
}

Rat ProductClass::coefficient(const Partition& lambda, const Partition& mu) const {
    auto it = terms_.find({lambda, mu});
    return it == terms_.end() ? Rat(0) : it->second;
}

bool ProductClass::is_homogeneous(int* codim) const {
    int c = -1;
    for (const auto& [key, v] : terms_) {
        const int w = key.first.weight() + key.second.weight();
        if (c < 0)
            c = w;
        else if (c != w)
            return false;
    }
    if (codim) *codim = c < 0 ? 0 : c;
    return true;
}

ProductClass ProductClass::operator+(const ProductClass& other) const {
    if (left_ != other.left_ || right_ != other.right_)
        fail("SpaceMismatch", "sum of classes on different products");
    require_same_ring(ring_, other.ring_);
    ProductClass out = *this;
    for (const auto& [key, v] : other.terms_) out.add_term(key.first, key.second, v);
    return out;
}

ProductClass ProductClass::operator-(const ProductClass& other) const {
    return *this + other.scaled(-1);
}

ProductClass ProductClass::operator-() const {
    return scaled(-1);
}

ProductClass ProductClass::scaled(const Rat& c) const {
    ProductClass out(left_, right_, ring_);
    if (c == 0) return out;
    for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v * c);
    return out;
}

ProductClass ProductClass::cast_to(const CoefficientRing& target) const {
    if (ring_ == target) return *this;
    if (!ring_.is_integers())
        fail("RingMismatch", "only casts from Z are defined, have " + ring_.to_string());
    ProductClass out(left_, right_, target);
    for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v);
    return out;
}

std::string ProductClass::to_string() const {
    if (terms_.empty()) return "0";
    // group by the right factor, ascending
    std::map<Partition, ChowClass> grouped;
    for (const auto& [key, v] : terms_) {
        auto it = grouped.find(key.second);
        if (it == grouped.end())
            it = grouped.emplace(key.second, ChowClass(left_, ring_)).first;
        it->second.add_term(key.first, v);
    }
    std::string out;
    for (const auto& [mu, cls] : grouped) {
        if (!out.empty()) out += " + ";
        const std::string left_text = cls.to_string();
        const bool needs_parens = cls.terms().size() > 1 || left_text.find('-') != std::string::npos;
        out += needs_parens ? "(" + left_text + ")" : left_text;
        out += " x " + basis_class_name(right_, mu);
    }
    return out;
}

nlohmann::json ProductClass::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, v] : terms_)
        arr.push_back({{"left_partition", key.first.to_json()},
                       {"right_partition", key.second.to_json()},
                       {"coefficient", rat_to_string(v)}});
    return arr;
}

ProductClass ProductClass::from_json(const GrassmannSpace& left, const GrassmannSpace& right,
                                     const CoefficientRing& ring, const nlohmann::json& j) {
    ProductClass out(left, right, ring);
    for (const auto& item : j)
        out.add_term(Partition::from_json(item.at("left_partition")),
                     Partition::from_json(item.at("right_partition")),
                     rat_from_string(item.at("coefficient").get<std::string>()));
    return out;
}

ProductClass external_product(const ChowClass& x, const ChowClass& y) {
    require_same_ring(x.ring(), y.ring());
    ProductClass out(x.space(), y.space(), x.ring());
    for (const auto& [lambda, a] : x.terms())
        for (const auto& [mu, b] : y.terms()) out.add_term(lambda, mu, a * b);
    return out;
}

ProductClass transpose(const ProductClass& a) {
    ProductClass out(a.right(), a.left(), a.ring());
    for (const auto& [key, v] : a.terms()) out.add_term(key.second, key.first, v);
    return out;
}

ProductClass compose(const ProductClass& b, const ProductClass& a) {
    if (a.right() != b.left())
        fail("SpaceMismatch", "compose: middle spaces differ, " + a.right().to_string() + " vs " +
                                  b.left().to_string());
    require_same_ring(a.ring(), b.ring());
    const GrassmannSpace& middle = a.right();
    ProductClass out(a.left(), b.right(), a.ring());
    for (const auto& [ka, ca] : a.terms()) {
        // deg(Delta_mu . Delta_nu) = 1 exactly when nu is the box complement of mu
        const Partition pairing = middle.complement(ka.second);
        for (const auto& [kb, cb] : b.terms()) {
            if (kb.first != pairing) continue;
            out.add_term(ka.first, kb.second, ca * cb);
        }
    }
    return out;
}

ProductClass intersect(const ProductClass& a, const ProductClass& b) {
    if (a.left() != b.left() || a.right() != b.right())
        fail("SpaceMismatch", "intersection product of classes on different products");
    require_same_ring(a.ring(), b.ring());
    ProductClass out(a.left(), a.right(), a.ring());
    for (const auto& [ka, ca] : a.terms()) {
        ChowClass la = ChowClass::basis_class(a.left(), a.ring(), ka.first);
        ChowClass ra = ChowClass::basis_class(a.right(), a.ring(), ka.second);
        for (const auto& [kb, cb] : b.terms()) {
            ChowClass lprod = la * ChowClass::basis_class(a.left(), a.ring(), kb.first);
            if (lprod.is_zero()) continue;
            ChowClass rprod = ra * ChowClass::basis_class(a.right(), a.ring(), kb.second);
            for (const auto& [ln, lc] : lprod.terms())
                for (const auto& [rn, rc] : rprod.terms())
                    out.add_term(ln, rn, ca * cb * lc * rc);
        }
    }
    return out;
}

ProductClass intersect_power(const ProductClass& a, int k) {
    if (k < 1) fail("DomainError", "intersect_power needs k >= 1");
    ProductClass out = a;
    for (int i = 1; i < k; ++i) out = intersect(out, a);
    return out;
}

ProductClass diagonal(const GrassmannSpace& space, const CoefficientRing& ring) {
    ProductClass out(space, space, ring);
    for (const Partition& lambda : space.basis()) out.add_term(lambda, space.complement(lambda), 1);
    return out;
}

bool is_projector(const ProductClass& p) {
    if (p.left() != p.right())
        fail("SpaceMismatch", "projector check needs an endo-correspondence");
    return compose(p, p) == p;
}

bool check_iso_pair(const ProductClass& j1, const ProductClass& j2, const ProductClass& p,
                    const ProductClass& q, const TwistFrame& frame) {
    if (p.left() != p.right() || q.left() != q.right())
        fail("SpaceMismatch", "p and q must be endo-correspondences");
    if (j1.left() != p.left() || j1.right() != q.left() || j2.left() != q.left() ||
        j2.right() != p.left())
        fail("SpaceMismatch", "j1 must live on X x Y and j2 on Y x X");
    int c1 = 0, c2 = 0;
    const int want1 = p.left().dimension() + frame.source_twist - frame.target_twist;
    const int want2 = q.left().dimension() + frame.target_twist - frame.source_twist;
    if (!j1.is_homogeneous(&c1) || (!j1.is_zero() && c1 != want1))
        fail("CodimMismatch", "j1 must be homogeneous of codimension " + std::to_string(want1));
    if (!j2.is_homogeneous(&c2) || (!j2.is_zero() && c2 != want2))
        fail("CodimMismatch", "j2 must be homogeneous of codimension " + std::to_string(want2));
    return compose(q, j1) == compose(j1, p) && compose(p, j2) == compose(j2, q) &&
           compose(j1, j2) == q && compose(j2, j1) == p;
}

ProductClass reduce_mod(const ProductClass& a, const Int& m) {
    if (!a.ring().is_integers()) fail("RingMismatch", "reduce_mod needs an integral class");
    ProductClass out(a.left(), a.right(), CoefficientRing::integers_mod(m));
    for (const auto& [key, v] : a.terms()) out.add_term(key.first, key.second, v);
    return out;
}

bool eq_mod(const ProductClass& a, const ProductClass& b, const Int& m) {
    return reduce_mod(a - b, m).is_zero();
}

ProductClass divide_exact(const ProductClass& a, const Int& k) {
    if (k == 0) fail("DomainError", "division by zero");
    ProductClass out(a.left(), a.right(), a.ring());
    for (const auto& [key, v] : a.terms()) {
        if (a.ring().is_integers() && rat_num(v) % k != 0)
            fail("NonDivisible", "coefficient " + rat_to_string(v) + " not divisible by " + k.str());
        out.add_term(key.first, key.second, v / Rat(k));
    }
    return out;
}

std::set<Int> denominator_support(const ProductClass& a) {
    if (!a.ring().is_rationals())
        fail("RingMismatch", "denominator_support needs a rational-ring class");
    std::set<Int> out;
    for (const auto& [key, v] : a.terms())
        for (const Int& p : prime_divisors(rat_den(v))) out.insert(p);
    return out;
}

ProductClass tensor_line_chern(const ChowClass& e_total, int rank, const ChowClass& l_c1, int i) {
    if (rank < 0 || i < 0 || i > rank)
        fail("RankOutOfRange", "tensor_line_chern needs 0 <= i <= rank");
    if (e_total.coefficient(Partition{}) != 1)
        fail("NotAUnit", "e_total must be a total Chern class with constant term 1");
    int c1codim = 0;
    if (!l_c1.is_homogeneous(&c1codim) || (!l_c1.is_zero() && c1codim != 1))
        fail("DomainError", "l_c1 must be homogeneous of codimension 1");
    require_same_ring(e_total.ring(), l_c1.ring());

    ProductClass out(e_total.space(), l_c1.space(), e_total.ring());
    for (int j = 0; j <= i; ++j) {
        ChowClass cj = e_total.component(j);
        if (cj.is_zero()) continue;
        ChowClass lpow = ChowClass::unit(l_c1.space(), l_c1.ring());
        for (int t = 0; t < i - j; ++t) lpow = lpow * l_c1;
        out = out + external_product(cj, lpow).scaled(Rat(binomial(rank - j, i - j)));
    }
    return out;
}

}  // namespace motive
