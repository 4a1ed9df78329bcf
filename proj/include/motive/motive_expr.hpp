#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motive/combinatorics.hpp"
#include "motive/error.hpp"
#include "motive/numeric.hpp"

namespace motive {

enum class Series { A, B, C, F4, G2 };

std::string series_name(Series s);
Series series_from_string(const std::string& name);

/// Adjoint simple group of inner type with non-branching Dynkin diagram.
/// algebra_index is ind(A) for series A and C; 1 otherwise.
struct GroupDescriptor {
    Series series = Series::A;
    int rank = 1;
    Int algebra_index = 1;

    GroupDescriptor() = default;
    GroupDescriptor(Series s, int n, Int index = 1);

    bool operator==(const GroupDescriptor&) const = default;
    std::strong_ordering operator<=>(const GroupDescriptor& other) const {
        if (auto c = series <=> other.series; c != 0) return c;
        if (auto c = rank <=> other.rank; c != 0) return c;
        return compare_int(algebra_index, other.algebra_index);
    }
    std::string to_string() const;
};

/// Twisted flag variety X(d_1, ..., d_k), dims strictly increasing and within
/// the series' admissible set ({1..n} for A/B/C, {1,2,3,6} for F4, {1,2} for G2).
class FlagDescriptor {
public:
    FlagDescriptor(GroupDescriptor group, std::vector<int> dims);

    const GroupDescriptor& group() const { return group_; }
    const std::vector<int>& dims() const { return dims_; }
    int flag_length() const { return static_cast<int>(dims_.size()); }
    /// 1-based position of a dimension value; throws PositionNotAllowed if absent.
    int position_of(int dim_value) const;

    bool operator==(const FlagDescriptor&) const = default;
    auto operator<=>(const FlagDescriptor&) const = default;

    std::string to_string() const;   // "X(1,2)"
    /// Leaf rendering: "SB(A)" for A/C-series X(1), "SB_d(A)" for A-series X(d),
    /// otherwise the X(...) form.
    std::string render_base() const;

private:
    GroupDescriptor group_;
    std::vector<int> dims_;
};

/// Base of a motive term: a flag variety or a named atom (SB(A), F, ...).
class BaseMotive {
public:
    explicit BaseMotive(FlagDescriptor flag);
    explicit BaseMotive(std::string atom);

    bool is_flag() const { return flag_.has_value(); }
    const FlagDescriptor& flag() const;
    const std::string& atom() const;

    std::string render() const;
    bool operator==(const BaseMotive&) const = default;
    std::strong_ordering operator<=>(const BaseMotive& other) const {
        if (auto c = flag_.has_value() <=> other.flag_.has_value(); c != 0) return c;
        if (flag_ && other.flag_)
            if (auto c = *flag_ <=> *other.flag_; c != 0) return c;
        return atom_ <=> other.atom_;
    }

private:
    std::optional<FlagDescriptor> flag_;
    std::string atom_;
};

/// Formal multiset of (base, twist, multiplicity) with twist >= 0 and
/// multiplicity >= 1; multiset equality is the map equality.
class MotiveExpr {
public:
    MotiveExpr() = default;
    static MotiveExpr single(const BaseMotive& base, int twist = 0, const Int& multiplicity = 1);

    void add_term(const BaseMotive& base, int twist, const Int& multiplicity);
    const std::map<std::pair<BaseMotive, int>, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    /// Total number of summands, counted with multiplicity.
    Int term_count() const;
    MotiveExpr twisted(int shift) const;
    MotiveExpr operator+(const MotiveExpr& other) const;

    bool operator==(const MotiveExpr& other) const = default;

    std::string render() const;  // "X(2) + X(2)(1)", "2*SB(A)(1)"
    nlohmann::json to_json() const;

private:
    std::map<std::pair<BaseMotive, int>, Int> terms_;
};

/// Thrown when the gcd side condition of the series-A rewrite fails; carries
/// the offending gcd.
class GcdError : public Error {
public:
    GcdError(Int gcd, const std::string& message)
        : Error("GcdConditionFailed", message), gcd_(std::move(gcd)) {}
    const Int& gcd() const { return gcd_; }

private:
    Int gcd_;
};

/// Thrown by decompose_chain; carries the 1-based index of the failing step.
class ChainStepError : public Error {
public:
    ChainStepError(int step, const std::string& inner_code, const std::string& message)
        : Error(inner_code, "step " + std::to_string(step) + ": " + message), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

// Box rewrites. `position` is 1-based into the flag's dims.
MotiveExpr rewrite_A(const FlagDescriptor& flag, int position);
MotiveExpr rewrite_B(const FlagDescriptor& flag, int position);
MotiveExpr rewrite_C(const FlagDescriptor& flag);
MotiveExpr rewrite_G(const FlagDescriptor& flag);
MotiveExpr rewrite_F(const FlagDescriptor& flag, int position);

/// One rewrite step removing the dimension with the given value, dispatched
/// on the series (C always removes the last dimension).
MotiveExpr rewrite_step(const FlagDescriptor& flag, int dim_value);

/// Folds rewrite steps over the removal values, distributing twists.
MotiveExpr decompose_chain(const FlagDescriptor& flag, const std::vector<int>& removal_values);

/// Poincare polynomials of base motives, keyed by rendered base name.
class PoincareTable {
public:
    static PoincareTable defaults_for(const GroupDescriptor& group);
    void set(const std::string& base, const IntPolynomial& p);
    bool has(const std::string& base) const;
    /// Throws MissingBaseEntry.
    const IntPolynomial& get(const std::string& base) const;

private:
    std::map<std::string, IntPolynomial> entries_;
};

IntPolynomial poincare_polynomial(const MotiveExpr& expr, const PoincareTable& table);
bool poincare_check(const MotiveExpr& a, const MotiveExpr& b, const PoincareTable& table);

/// Split-form Poincare polynomial of a series-A flag variety:
/// phi_{n+1} / prod_i phi_{delta_i}.
IntPolynomial flag_poincare_split(const FlagDescriptor& flag);

/// SB_d(A) expanded into SB(A) twists with multiplicities gensb_polynomial(n, d).
MotiveExpr gensb_expand(int n, int d);

/// ind / gcd(ind, d): order of the 0-cycle cokernel used by the guard report.
Int index_reduction_obstruction(const Int& ind, int d);

/// Why dropping the gcd guard on X(1,d) is inconsistent: the two removal
/// paths would force cokernels of different orders.
nlohmann::json gcd_guard_report(const Int& ind, int d);

/// Both decompositions of X(1,2) (degree n+1, index ind), the substitution
/// SB_2(A) -> F + F(2), the leaf multisets, and the Poincare cross-check.
struct KrullSchmidtReport {
    MotiveExpr path_sb;       // through removing the 2
    MotiveExpr path_sb2;      // through removing the 1
    MotiveExpr path_f;        // path_sb2 with SB_2(A) replaced by F + F(2)
    IntPolynomial poincare_sb;
    IntPolynomial poincare_f;
    bool poincare_equal = false;
    std::vector<std::string> leaf_multiset_sb;
    std::vector<std::string> leaf_multiset_f;
    std::vector<std::string> citations;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

KrullSchmidtReport krull_schmidt_report(int n = 4, const Int& index = 5);

}  // namespace motive
