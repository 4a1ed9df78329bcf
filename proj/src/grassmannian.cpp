#include "motive/grassmannian.hpp"

#include <algorithm>
#include <numeric>

#include "motive/error.hpp"

namespace motive {

GrassmannSpace::GrassmannSpace(int d, int n) : d_(d), n_(n) {
    if (!(1 <= d && d <= n - 1))
        fail("DomainError", "Gr(d,n) needs 1 <= d <= n-1, got d=" + std::to_string(d) +
                                ", n=" + std::to_string(n));
}

Partition GrassmannSpace::point_class() const {
    return Partition(std::vector<int>(static_cast<std::size_t>(rows()), cols()));
}

Partition GrassmannSpace::complement(const Partition& lambda) const {
    return lambda.complement_in_box(rows(), cols());
}

std::string GrassmannSpace::to_string() const {
    return "Gr(" + std::to_string(d_) + "," + std::to_string(n_) + ")";
}

nlohmann::json GrassmannSpace::to_json() const {
    return nlohmann::json{{"d", d_}, {"n", n_}};
}

GrassmannSpace GrassmannSpace::from_json(const nlohmann::json& j) {
    return GrassmannSpace(j.at("d").get<int>(), j.at("n").get<int>());
}

std::string basis_class_name(const GrassmannSpace& space, const Partition& lambda) {
    if (lambda.empty()) return "1";
    if (space == GrassmannSpace(2, 5)) {
        static const std::map<Partition, std::string> names = {
            {{1}, "sigma1"}, {{2}, "sigma2"},    {{3}, "sigma3"},
            {{1, 1}, "g2"},  {{2, 1}, "g3"},     {{3, 1}, "h4"},
            {{2, 2}, "g4"},  {{3, 2}, "g5"},     {{3, 3}, "pt"}};
        return names.at(lambda);
    }
    if (space.is_projective_space()) {
        const int k = lambda.part(0);
        return k == 1 ? "H" : "H^" + std::to_string(k);
    }
    std::string out = "S[";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(lambda.part(i));
    }
    return out + "]";
}

ChowClass::ChowClass(GrassmannSpace space, CoefficientRing ring)
    : space_(std::move(space)), ring_(std::move(ring)) {}

ChowClass ChowClass::zero(const GrassmannSpace& space, const CoefficientRing& ring) {
    return ChowClass(space, ring);
}

ChowClass ChowClass::unit(const GrassmannSpace& space, const CoefficientRing& ring) {
    return basis_class(space, ring, Partition{});
}

ChowClass ChowClass::basis_class(const GrassmannSpace& space, const CoefficientRing& ring,
                                 const Partition& lambda) {
    if (!space.contains(lambda))
        fail("DomainError",
             lambda.to_string() + " is not in the Schubert basis of " + space.to_string());
    ChowClass c(space, ring);
    c.add_term(lambda, 1);
    return c;
}

void ChowClass::add_term(const Partition& lambda, const Rat& coefficient) {
    if (!space_.contains(lambda))
        fail("DomainError", lambda.to_string() + " outside the box of " + space_.to_string());
    auto it = terms_.find(lambda);
    Rat next = ring_.normalize((it == terms_.end() ? Rat(0) : it->second) + coefficient);
    if (next == 0)
        terms_.erase(lambda);
    else
        terms_[lambda] = next;
}

Rat ChowClass::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool ChowClass::is_homogeneous(int* codim) const {
    int c = -1;
    for (const auto& [lambda, v] : terms_) {
        if (c < 0)
            c = lambda.weight();
        else if (c != lambda.weight())
            return false;
    }
    if (codim) *codim = c < 0 ? 0 : c;
    return true;
}

ChowClass ChowClass::component(int codim) const {
    ChowClass out(space_, ring_);
    for (const auto& [lambda, v] : terms_)
        if (lambda.weight() == codim) out.add_term(lambda, v);
    return out;
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
    if (space_ != other.space_) fail("SpaceMismatch", "sum of classes on different Grassmannians");
    require_same_ring(ring_, other.ring_);
    ChowClass out = *this;
    for (const auto& [lambda, v] : other.terms_) out.add_term(lambda, v);
    return out;
}

ChowClass ChowClass::operator-(const ChowClass& other) const {
    return *this + other.scaled(-1);
}

ChowClass ChowClass::operator-() const {
    return scaled(-1);
}

ChowClass ChowClass::scaled(const Rat& c) const {
    ChowClass out(space_, ring_);
    if (c == 0) return out;
    for (const auto& [lambda, v] : terms_) out.add_term(lambda, v * c);
    return out;
}

ChowClass ChowClass::cast_to(const CoefficientRing& target) const {
    if (ring_ == target) return *this;
    if (!ring_.is_integers())
        fail("RingMismatch", "only casts from Z are defined, have " + ring_.to_string());
    ChowClass out(space_, target);
    for (const auto& [lambda, v] : terms_) out.add_term(lambda, v);
    return out;
}

ChowClass ChowClass::operator*(const ChowClass& other) const {
    if (space_ != other.space_)
        fail("SpaceMismatch", "product of classes on different Grassmannians");
    require_same_ring(ring_, other.ring_);
    ChowClass out(space_, ring_);
    for (const auto& [lambda, a] : terms_) {
        for (const auto& [mu, b] : other.terms_) {
            const int w = lambda.weight() + mu.weight();
            if (w > space_.dimension()) continue;
            for (const Partition& nu : partitions_in_box(space_.rows(), space_.cols())) {
                if (nu.weight() != w) continue;
                Int c = lr_coefficient(nu, lambda, mu);
                if (c != 0) out.add_term(nu, a * b * Rat(c));
            }
        }
    }
    return out;
}

std::string ChowClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lambda, v] : terms_) {
        const bool negative = v < 0;
        Rat mag = negative ? Rat(-v) : v;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string name = basis_class_name(space_, lambda);
        if (mag == 1 && name != "1")
            out += name;
        else if (name == "1")
            out += rat_to_string(mag);
        else
            out += rat_to_string(mag) + "*" + name;
    }
    return out;
}

nlohmann::json ChowClass::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [lambda, v] : terms_)
        arr.push_back({{"partition", lambda.to_json()}, {"coefficient", rat_to_string(v)}});
    return arr;
}

ChowClass ChowClass::from_json(const GrassmannSpace& space, const CoefficientRing& ring,
                               const nlohmann::json& j) {
    ChowClass out(space, ring);
    for (const auto& item : j)
        out.add_term(Partition::from_json(item.at("partition")),
                     rat_from_string(item.at("coefficient").get<std::string>()));
    return out;
}

Int lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content) {
    if (!outer.contains(inner)) return 0;
    if (outer.weight() - inner.weight() != content.weight()) return 0;
    const int values = content.length();

    // skew cells in reading order: rows top to bottom, right to left within a
    // row, so the ballot condition can be enforced as cells are filled
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < outer.length(); ++r)
        for (int c = outer.part(r) - 1; c >= inner.part(r); --c) cells.emplace_back(r, c);
    if (cells.empty()) return content.weight() == 0 ? 1 : 0;

    std::map<std::pair<int, int>, int> fill;
    std::vector<int> count(static_cast<std::size_t>(values) + 1, 0);
    Int total = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[k];
        for (int v = 1; v <= values; ++v) {
            if (count[static_cast<std::size_t>(v)] >= content.part(v - 1)) continue;
            if (v > 1 && count[static_cast<std::size_t>(v)] >= count[static_cast<std::size_t>(v - 1)])
                continue;  // lattice word
            auto right = fill.find({r, c + 1});
            if (right != fill.end() && v > right->second) continue;  // weakly increasing row
            // a cell above in the inner shape imposes no column constraint
            auto up = fill.find({r - 1, c});
            if (up != fill.end() && v <= up->second) continue;  // strictly increasing column
            fill[{r, c}] = v;
            ++count[static_cast<std::size_t>(v)];
            self(self, k + 1);
            fill.erase({r, c});
            --count[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 0);
    return total;
}

ChowClass named_generator(const GrassmannSpace& space, const std::string& name,
                          const CoefficientRing& ring) {
    if (name == "1") return ChowClass::unit(space, ring);
    if (space == GrassmannSpace(2, 5)) {
        static const std::map<std::string, Partition> aliases = {
            {"sigma1", {1}}, {"sigma2", {2}}, {"sigma3", {3}}, {"g2", {1, 1}}, {"g3", {2, 1}},
            {"h4", {3, 1}},  {"g4", {2, 2}},  {"g5", {3, 2}},  {"pt", {3, 3}}};
        auto it = aliases.find(name);
        if (it != aliases.end()) return ChowClass::basis_class(space, ring, it->second);
    }
    if (space.is_projective_space() && name == "H")
        return ChowClass::basis_class(space, ring, Partition{1});
    fail("UnknownName", "no generator named '" + name + "' on " + space.to_string());
}

ChowClass pieri(const GrassmannSpace& space, const Partition& lambda, int m,
                const CoefficientRing& ring) {
    if (!space.contains(lambda))
        fail("DomainError", lambda.to_string() + " outside the box of " + space.to_string());
    if (m < 0 || m > space.cols())
        fail("DomainError", "pieri needs 0 <= m <= " + std::to_string(space.cols()));
    ChowClass out(space, ring);
    // enumerate mu with cols >= mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... and |mu| = |lambda| + m
    const int rows = space.rows();
    std::vector<int> mu(static_cast<std::size_t>(rows));
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == rows) {
            if (remaining == 0) out.add_term(Partition(std::vector<int>(mu)), 1);
            return;
        }
        const int hi = std::min(i == 0 ? space.cols() : lambda.part(i - 1), lambda.part(i) + remaining);
        for (int v = lambda.part(i); v <= hi; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - (v - lambda.part(i)));
        }
    };
    rec(rec, 0, m);
    return out;
}

ChowClass giambelli_oracle(const GrassmannSpace& space, const Partition& lambda,
                           const CoefficientRing& ring) {
    if (!space.contains(lambda))
        fail("DomainError", lambda.to_string() + " outside the box of " + space.to_string());
    const int l = std::max(lambda.length(), 1);
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    ChowClass out(space, ring);
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        bool zero = false;
        ChowClass term = ChowClass::unit(space, ring);
        for (int i = 0; i < l && !zero; ++i) {
            const int m = lambda.part(i) + perm[static_cast<std::size_t>(i)] - i;
            if (m < 0 || m > space.cols()) {
                zero = true;
                break;
            }
            ChowClass next(space, ring);
            for (const auto& [nu, c] : term.terms()) {
                ChowClass strip = pieri(space, nu, m, ring);
                next = next + strip.scaled(c);
            }
            term = next;
        }
        if (!zero) out = out + term.scaled(inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Rat degree(const ChowClass& x, bool strict) {
    if (strict && !x.is_zero()) {
        int codim = 0;
        if (!x.is_homogeneous(&codim) || codim != x.space().dimension())
            fail("InhomogeneousInput", "strict degree needs a top-codimension class");
    }
    return x.coefficient(x.space().point_class());
}

ChowClass chern_quotient(const GrassmannSpace& space, const CoefficientRing& ring) {
    ChowClass out = ChowClass::unit(space, ring);
    for (int m = 1; m <= space.cols(); ++m) out.add_term(Partition{m}, 1);
    return out;
}

ChowClass invert_total_chern(const ChowClass& c) {
    if (c.coefficient(Partition{}) != 1)
        fail("NotAUnit", "total Chern class must have constant term 1");
    const GrassmannSpace& space = c.space();
    ChowClass inverse = ChowClass::unit(space, c.ring());
    for (int k = 1; k <= space.dimension(); ++k) {
        // b_k = -sum_{j=1..k} a_j b_{k-j}
        ChowClass bk(space, c.ring());
        for (int j = 1; j <= k; ++j) {
            ChowClass aj = c.component(j);
            if (aj.is_zero()) continue;
            bk = bk - (aj * inverse.component(k - j));
        }
        inverse = inverse + bk;
    }
    return inverse;
}

}  // namespace motive
