#include "motive/motive_expr.hpp"

#include <algorithm>
#include <numeric>

#include "motive/partition.hpp"

namespace motive {

std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::F4: return "F4";
        case Series::G2: return "G2";
    }
    return "?";
}

Series series_from_string(const std::string& name) {
    if (name == "A") return Series::A;
    if (name == "B") return Series::B;
    if (name == "C") return Series::C;
    if (name == "F4") return Series::F4;
    if (name == "G2") return Series::G2;
    fail("DomainError", "unknown series '" + name + "'");
}

GroupDescriptor::GroupDescriptor(Series s, int n, Int index)
    : series(s), rank(n), algebra_index(std::move(index)) {
    if (rank < 1) fail("DomainError", "rank must be >= 1");
    if (series == Series::G2 && rank != 2) fail("DomainError", "G2 has rank 2");
    if (series == Series::F4 && rank != 4) fail("DomainError", "F4 has rank 4");
    if (algebra_index < 1) fail("DomainError", "algebra index must be >= 1");
}

std::string GroupDescriptor::to_string() const {
    std::string out = series_name(series) + std::to_string(rank);
    if (series == Series::A || series == Series::C) out += "[ind=" + algebra_index.str() + "]";
    return out;
}

FlagDescriptor::FlagDescriptor(GroupDescriptor group, std::vector<int> dims)
    : group_(std::move(group)), dims_(std::move(dims)) {
    if (dims_.empty()) fail("DomainError", "a flag needs at least one dimension");
    for (std::size_t i = 0; i + 1 < dims_.size(); ++i)
        if (dims_[i] >= dims_[i + 1]) fail("DomainError", "flag dimensions must strictly increase");
    switch (group_.series) {
        case Series::A:
        case Series::B:
        case Series::C:
            if (dims_.front() < 1 || dims_.back() > group_.rank)
                fail("DomainError", "flag dimensions must lie in 1.." + std::to_string(group_.rank));
            break;
        case Series::F4:
            for (int d : dims_)
                if (d != 1 && d != 2 && d != 3 && d != 6)
                    fail("DomainError", "F4 flag dimensions must lie in {1,2,3,6}");
            break;
        case Series::G2:
            for (int d : dims_)
                if (d != 1 && d != 2) fail("DomainError", "G2 flag dimensions must lie in {1,2}");
            break;
    }
}

int FlagDescriptor::position_of(int dim_value) const {
    for (int i = 0; i < flag_length(); ++i)
        if (dims_[static_cast<std::size_t>(i)] == dim_value) return i + 1;
    fail("PositionNotAllowed",
         "dimension " + std::to_string(dim_value) + " is not part of " + to_string());
}

std::string FlagDescriptor::to_string() const {
    std::string out = "X(";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dims_[i]);
    }
    return out + ")";
}

std::string FlagDescriptor::render_base() const {
    if (dims_.size() == 1) {
        const int d = dims_.front();
        if ((group_.series == Series::A || group_.series == Series::C) && d == 1) return "SB(A)";
        if (group_.series == Series::A) return "SB_" + std::to_string(d) + "(A)";
    }
    return to_string();
}

BaseMotive::BaseMotive(FlagDescriptor flag) : flag_(std::move(flag)) {}
BaseMotive::BaseMotive(std::string atom) : atom_(std::move(atom)) {
    if (atom_.empty()) fail("DomainError", "empty atom name");
}

const FlagDescriptor& BaseMotive::flag() const {
    if (!flag_) fail("DomainError", "base motive is an atom, not a flag");
    return *flag_;
}

const std::string& BaseMotive::atom() const { return atom_; }

std::string BaseMotive::render() const { return flag_ ? flag_->render_base() : atom_; }

MotiveExpr MotiveExpr::single(const BaseMotive& base, int twist, const Int& multiplicity) {
    MotiveExpr e;
    e.add_term(base, twist, multiplicity);
    return e;
}

void MotiveExpr::add_term(const BaseMotive& base, int twist, const Int& multiplicity) {
    if (twist < 0) fail("DomainError", "negative twist");
    if (multiplicity < 1) fail("DomainError", "multiplicity must be positive");
    terms_[{base, twist}] += multiplicity;
}

Int MotiveExpr::term_count() const {
    Int total = 0;
    for (const auto& [key, m] : terms_) total += m;
    return total;
}

MotiveExpr MotiveExpr::twisted(int shift) const {
    MotiveExpr out;
    for (const auto& [key, m] : terms_) out.add_term(key.first, key.second + shift, m);
    return out;
}

MotiveExpr MotiveExpr::operator+(const MotiveExpr& other) const {
    MotiveExpr out = *this;
    for (const auto& [key, m] : other.terms_) out.add_term(key.first, key.second, m);
    return out;
}

std::string MotiveExpr::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, m] : terms_) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += m.str() + "*";
        out += key.first.render();
        if (key.second != 0) out += "(" + std::to_string(key.second) + ")";
    }
    return out;
}

nlohmann::json MotiveExpr::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, m] : terms_)
        arr.push_back({{"base", key.first.render()},
                       {"twist", key.second},
                       {"multiplicity", static_cast<long long>(m)}});
    return arr;
}

namespace {

/// Box rewrite shared by series A, B and F4: replace the flag by the one with
/// position m removed, summed over partitions in the delta_{m-1} x delta_m box
/// with twist delta_m*delta_{m-1} - |lambda|.
MotiveExpr box_rewrite(const FlagDescriptor& flag, int position, int delta_left, int delta_right) {
    std::vector<int> reduced = flag.dims();
    reduced.erase(reduced.begin() + (position - 1));
    const BaseMotive base{FlagDescriptor(flag.group(), reduced)};
    MotiveExpr out;
    for (const Partition& lambda : partitions_in_box(delta_left, delta_right))
        out.add_term(base, delta_left * delta_right - lambda.weight(), 1);
    return out;
}

void check_position(const FlagDescriptor& flag, int position) {
    if (flag.flag_length() < 2)
        fail("PositionNotAllowed", "cannot remove the only dimension of " + flag.to_string());
    if (position < 1 || position > flag.flag_length())
        fail("PositionNotAllowed", "position " + std::to_string(position) + " out of range for " +
                                       flag.to_string());
}

int delta_before(const FlagDescriptor& flag, int position) {
    const auto& d = flag.dims();
    const int prev = position >= 2 ? d[static_cast<std::size_t>(position - 2)] : 0;
    return d[static_cast<std::size_t>(position - 1)] - prev;
}

int delta_after(const FlagDescriptor& flag, int position, int d_top) {
    const auto& d = flag.dims();
    const int next = position < flag.flag_length() ? d[static_cast<std::size_t>(position)] : d_top;
    return next - d[static_cast<std::size_t>(position - 1)];
}

}  // namespace

MotiveExpr rewrite_A(const FlagDescriptor& flag, int position) {
    if (flag.group().series != Series::A) fail("NotApplicable", "rewrite_A needs series A");
    check_position(flag, position);
    Int g = flag.group().algebra_index;
    Int remaining_gcd = 0;
    for (int i = 1; i <= flag.flag_length(); ++i)
        if (i != position)
            remaining_gcd = boost::multiprecision::gcd(
                remaining_gcd, Int(flag.dims()[static_cast<std::size_t>(i - 1)]));
    g = boost::multiprecision::gcd(g, remaining_gcd == 0 ? g : remaining_gcd);
    if (g != 1)
        throw GcdError(g, "gcd(ind, remaining dims) = " + g.str() + " != 1 for " + flag.to_string() +
                              " removing position " + std::to_string(position));
    return box_rewrite(flag, position, delta_before(flag, position),
                       delta_after(flag, position, flag.group().rank + 1));
}

MotiveExpr rewrite_B(const FlagDescriptor& flag, int position) {
    if (flag.group().series != Series::B) fail("NotApplicable", "rewrite_B needs series B");
    check_position(flag, position);
    if (position == flag.flag_length())
        fail("PositionNotAllowed", "series B cannot remove the last flag dimension");
    return box_rewrite(flag, position, delta_before(flag, position), delta_after(flag, position, 0));
}

MotiveExpr rewrite_C(const FlagDescriptor& flag) {
    if (flag.group().series != Series::C) fail("NotApplicable", "rewrite_C needs series C");
    const auto& d = flag.dims();
    const int k = flag.flag_length();
    if (k < 2) fail("SideConditionFailed", "series C needs a flag of length >= 2");
    bool odd_before_last = false;
    for (int i = 0; i + 1 < k; ++i) odd_before_last |= d[static_cast<std::size_t>(i)] % 2 == 1;
    if (!odd_before_last)
        fail("SideConditionFailed", "no odd d_i with i < k in " + flag.to_string());
    if (d[static_cast<std::size_t>(k - 1)] - d[static_cast<std::size_t>(k - 2)] != 1)
        fail("SideConditionFailed", "series C needs d_k - d_{k-1} = 1 in " + flag.to_string());
    std::vector<int> reduced(d.begin(), d.end() - 1);
    const BaseMotive base{FlagDescriptor(flag.group(), reduced)};
    MotiveExpr out;
    const int top = 2 * flag.group().rank - 2 * d[static_cast<std::size_t>(k - 2)] - 1;
    for (int i = 0; i <= top; ++i) out.add_term(base, i, 1);
    return out;
}

MotiveExpr rewrite_G(const FlagDescriptor& flag) {
    if (flag.group().series != Series::G2) fail("NotApplicable", "rewrite_G needs series G2");
    if (flag.dims() != std::vector<int>{1, 2})
        fail("NotApplicable", "rewrite_G applies to X(1,2) only");
    const BaseMotive base{FlagDescriptor(flag.group(), {2})};
    MotiveExpr out;
    out.add_term(base, 0, 1);
    out.add_term(base, 1, 1);
    return out;
}

MotiveExpr rewrite_F(const FlagDescriptor& flag, int position) {
    if (flag.group().series != Series::F4) fail("NotApplicable", "rewrite_F needs series F4");
    check_position(flag, position);
    if (position == flag.flag_length())
        fail("PositionNotAllowed", "series F4 cannot remove the last flag dimension");
    const auto& d = flag.dims();
    const int dm = d[static_cast<std::size_t>(position - 1)];
    const int dnext = d[static_cast<std::size_t>(position)];
    if (!(dnext < 6 || dm == 1))
        fail("SideConditionFailed",
             "series F4 needs d_{m+1} < 6 or d_m = 1 in " + flag.to_string());
    return box_rewrite(flag, position, delta_before(flag, position), delta_after(flag, position, 0));
}

MotiveExpr rewrite_step(const FlagDescriptor& flag, int dim_value) {
    const int position = flag.position_of(dim_value);
    switch (flag.group().series) {
        case Series::A: return rewrite_A(flag, position);
        case Series::B: return rewrite_B(flag, position);
        case Series::C:
            if (position != flag.flag_length())
                fail("PositionNotAllowed", "series C removes the last dimension only");
            return rewrite_C(flag);
        case Series::G2:
            if (dim_value != 1) fail("NotApplicable", "the G2 rewrite removes dimension 1");
            return rewrite_G(flag);
        case Series::F4: return rewrite_F(flag, position);
    }
    fail("DomainError", "unreachable series");
}

MotiveExpr decompose_chain(const FlagDescriptor& flag, const std::vector<int>& removal_values) {
    MotiveExpr current = MotiveExpr::single(BaseMotive{flag});
    int step = 0;
    for (int value : removal_values) {
        ++step;
        MotiveExpr next;
        for (const auto& [key, mult] : current.terms()) {
            const auto& [base, twist] = key;
            if (!base.is_flag())
                throw ChainStepError(step, "NotApplicable",
                                     "cannot rewrite atom '" + base.atom() + "'");
            MotiveExpr sub;
            try {
                sub = rewrite_step(base.flag(), value);
            } catch (const Error& e) {
                throw ChainStepError(step, e.code(), e.what());
            }
            for (const auto& [skey, smult] : sub.terms())
                next.add_term(skey.first, skey.second + twist, smult * mult);
        }
        current = next;
    }
    return current;
}

PoincareTable PoincareTable::defaults_for(const GroupDescriptor& group) {
    PoincareTable t;
    switch (group.series) {
        case Series::A: {
            const int deg = group.rank + 1;
            for (int d = 1; d <= group.rank; ++d) {
                FlagDescriptor leaf(group, {d});
                t.set(leaf.render_base(), gaussian_binomial(deg, d));
            }
            if (group.rank == 4) t.set("F", z_bracket(5));  // P(F) = P(P^4)
            break;
        }
        case Series::B: {
            // odd quadric X(1) and the maximal orthogonal Grassmannian X(n)
            t.set(FlagDescriptor(group, {1}).to_string(), z_bracket(2 * group.rank));
            IntPolynomial max_og{Int(1)};
            for (int k = 1; k <= group.rank; ++k)
                max_og = max_og * (IntPolynomial(Int(1)) + IntPolynomial::monomial(k));
            t.set(FlagDescriptor(group, {group.rank}).to_string(), max_og);
            break;
        }
        case Series::C:
            t.set(FlagDescriptor(group, {1}).render_base(), z_bracket(2 * group.rank));
            break;
        case Series::F4:
        case Series::G2:
            break;  // entries beyond the corollaries are user-supplied
    }
    return t;
}

void PoincareTable::set(const std::string& base, const IntPolynomial& p) { entries_[base] = p; }

bool PoincareTable::has(const std::string& base) const { return entries_.count(base) > 0; }

const IntPolynomial& PoincareTable::get(const std::string& base) const {
    auto it = entries_.find(base);
    if (it == entries_.end()) fail("MissingBaseEntry", "no Poincare entry for '" + base + "'");
    return it->second;
}

IntPolynomial poincare_polynomial(const MotiveExpr& expr, const PoincareTable& table) {
    IntPolynomial out;
    for (const auto& [key, mult] : expr.terms()) {
        const auto& [base, twist] = key;
        out = out + (table.get(base.render()) * IntPolynomial::monomial(twist)).scaled(mult);
    }
    return out;
}

bool poincare_check(const MotiveExpr& a, const MotiveExpr& b, const PoincareTable& table) {
    return poincare_polynomial(a, table) == poincare_polynomial(b, table);
}

IntPolynomial flag_poincare_split(const FlagDescriptor& flag) {
    if (flag.group().series != Series::A)
        fail("DomainError", "split flag Poincare polynomial implemented for series A");
    const int n = flag.group().rank;
    IntPolynomial denominator{Int(1)};
    int prev = 0;
    for (int d : flag.dims()) {
        denominator = denominator * phi(std::max(d - prev, 1));
        prev = d;
    }
    denominator = denominator * phi(std::max(n + 1 - prev, 1));
    auto q = phi(n + 1).divide_exact(denominator);
    if (!q) fail("NonDivisible", "flag Poincare polynomial is not exact");
    return *q;
}

MotiveExpr gensb_expand(int n, int d) {
    IntPolynomial coeffs = gensb_polynomial(n, d);
    MotiveExpr out;
    const BaseMotive sb{std::string("SB(A)")};
    for (const auto& [twist, mult] : coeffs.terms()) out.add_term(sb, twist, mult);
    return out;
}

Int index_reduction_obstruction(const Int& ind, int d) {
    if (ind < 1 || d < 1) fail("DomainError", "index_reduction_obstruction needs ind, d >= 1");
    return ind / boost::multiprecision::gcd(ind, Int(d));
}

nlohmann::json gcd_guard_report(const Int& ind, int d) {
    const Int through_xd = index_reduction_obstruction(ind, d);
    const Int through_x1 = index_reduction_obstruction(ind, 1);
    nlohmann::json j;
    j["flag"] = "X(1," + std::to_string(d) + ")";
    j["index"] = ind.str();
    j["gcd"] = boost::multiprecision::gcd(ind, Int(d)).str();
    j["cokernel_through_X(d)"] = through_xd.str();
    j["cokernel_through_X(1)"] = through_x1.str();
    j["consistent"] = through_xd == through_x1;
    j["explanation"] =
        "removing the 1 from X(1," + std::to_string(d) + ") would force the 0-cycle cokernel to "
        "have order ind/gcd(ind," + std::to_string(d) + ") = " + through_xd.str() +
        ", while removing the " + std::to_string(d) + " forces order ind = " + through_x1.str() +
        "; with gcd(ind," + std::to_string(d) + ") > 1 these differ, so the rewrite guard is essential";
    return j;
}

namespace {

std::vector<std::string> leaf_multiset(const MotiveExpr& expr) {
    std::vector<std::string> out;
    for (const auto& [key, mult] : expr.terms())
        for (Int i = 0; i < mult; ++i)
            out.push_back(key.first.render() + "(" + std::to_string(key.second) + ")");
    return out;
}

}  // namespace

KrullSchmidtReport krull_schmidt_report(int n, const Int& index) {
    if (n < 3) fail("DomainError", "krull_schmidt_report needs rank >= 3");
    if (boost::multiprecision::gcd(index, Int(2)) != 1)
        fail("DomainError", "krull_schmidt_report needs gcd(ind, 2) = 1");
    const GroupDescriptor group(Series::A, n, index);
    const FlagDescriptor x12(group, {1, 2});

    KrullSchmidtReport report;
    report.path_sb = decompose_chain(x12, {2});
    report.path_sb2 = decompose_chain(x12, {1});

    // substitute SB_2(A) -> F(+)F(2) with the gensb multiplicities
    IntPolynomial shape = gensb_polynomial(n, 2);
    const BaseMotive f{std::string("F")};
    for (const auto& [key, mult] : report.path_sb2.terms()) {
        for (const auto& [twist, c] : shape.terms())
            report.path_f.add_term(f, key.second + twist, mult * c);
    }

    PoincareTable table = PoincareTable::defaults_for(group);
    if (!table.has("F")) table.set("F", gaussian_binomial(n + 1, 1));
    report.poincare_sb = poincare_polynomial(report.path_sb, table);
    report.poincare_f = poincare_polynomial(report.path_f, table);
    report.poincare_equal = report.poincare_sb == report.poincare_f;
    report.leaf_multiset_sb = leaf_multiset(report.path_sb);
    report.leaf_multiset_f = leaf_multiset(report.path_f);
    report.citations = {
        "Rost Nilpotence Theorem: rational projectors over the separable closure lift to the base field",
        "Karpenko: the integral motive of the Severi-Brauer variety of a division algebra is indecomposable",
    };
    return report;
}

nlohmann::json KrullSchmidtReport::to_json() const {
    nlohmann::json j;
    j["decomposition_sb"] = path_sb.to_json();
    j["decomposition_sb2"] = path_sb2.to_json();
    j["decomposition_f"] = path_f.to_json();
    j["leaf_multiset_sb"] = leaf_multiset_sb;
    j["leaf_multiset_f"] = leaf_multiset_f;
    j["poincare_sb"] = poincare_sb.to_json();
    j["poincare_f"] = poincare_f.to_json();
    j["poincare_equal"] = poincare_equal;
    j["hypothesis"] = "gcd(ind(A), 2) = 1";
    j["citations"] = citations;
    return j;
}

std::string KrullSchmidtReport::to_text() const {
    std::string out;
    out += "decomposition through X(1):   " + path_sb.render() + "\n";
    out += "decomposition through X(2):   " + path_sb2.render() + "\n";
    out += "after SB_2(A) = F + F(2):     " + path_f.render() + "\n";
    out += "Poincare polynomial (both):   " + poincare_sb.to_string() + "\n";
    out += std::string("Poincare polynomials equal:   ") + (poincare_equal ? "yes" : "NO") + "\n";
    out += "citations:\n";
    for (const auto& c : citations) out += "  - " + c + "\n";
    return out;
}

}  // namespace motive
