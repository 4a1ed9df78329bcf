#include <algorithm>

#include "doctest.h"
#include "motive/motive_expr.hpp"

using namespace motive;

namespace {

FlagDescriptor flag_A(int rank, const Int& ind, std::vector<int> dims) {
    return FlagDescriptor(GroupDescriptor(Series::A, rank, ind), std::move(dims));
}

/// Twist-multiplicity polynomial of a single-base expression.
IntPolynomial twist_polynomial(const MotiveExpr& expr) {
    std::map<int, Int> coeffs;
    for (const auto& [key, mult] : expr.terms()) coeffs[key.second] += mult;
    return IntPolynomial::from_coefficients(coeffs);
}

MotiveExpr expected_terms(const BaseMotive& base, std::vector<int> twists) {
    MotiveExpr out;
    for (int t : twists) out.add_term(base, t, 1);
    return out;
}

}  // namespace

TEST_CASE("flag descriptor validation") {
    CHECK_THROWS_AS(flag_A(4, 5, {2, 1}), Error);
    CHECK_THROWS_AS(flag_A(4, 5, {0, 1}), Error);
    CHECK_THROWS_AS(flag_A(4, 5, {1, 5}), Error);
    CHECK_THROWS_AS(FlagDescriptor(GroupDescriptor(Series::F4, 4), {4}), Error);
    CHECK_THROWS_AS(FlagDescriptor(GroupDescriptor(Series::G2, 2), {3}), Error);
    CHECK_THROWS_AS(GroupDescriptor(Series::G2, 3), Error);
    CHECK(flag_A(4, 5, {1, 2}).to_string() == "X(1,2)");
    CHECK(flag_A(4, 5, {2}).render_base() == "SB_2(A)");
    CHECK(flag_A(4, 5, {1}).render_base() == "SB(A)");
}

TEST_CASE("rewrite_A on X(1,2)") {
    const FlagDescriptor x12 = flag_A(4, 5, {1, 2});
    const BaseMotive x2{flag_A(4, 5, {2})};
    const BaseMotive x1{flag_A(4, 5, {1})};

    CHECK(rewrite_A(x12, 1) == expected_terms(x2, {0, 1}));
    CHECK(rewrite_A(x12, 2) == expected_terms(x1, {0, 1, 2, 3}));

    // guard: gcd(ind, remaining dims) must be 1
    const FlagDescriptor bad = flag_A(4, 4, {1, 2});
    CHECK_THROWS_AS(rewrite_A(bad, 1), GcdError);
    try {
        rewrite_A(bad, 1);
    } catch (const GcdError& e) {
        CHECK(e.gcd() == 2);
        CHECK(e.code() == "GcdConditionFailed");
    }
    CHECK(rewrite_A(bad, 2) == expected_terms(BaseMotive{flag_A(4, 4, {1})}, {0, 1, 2, 3}));
}

TEST_CASE("rewrite_B") {
    const GroupDescriptor b3(Series::B, 3);
    const FlagDescriptor x123(b3, {1, 2, 3});
    const BaseMotive x23{FlagDescriptor(b3, {2, 3})};
    CHECK(rewrite_B(x123, 1) == expected_terms(x23, {0, 1}));
    CHECK_THROWS_AS(rewrite_B(x123, 3), Error);  // last position

    // full chain X(1,...,n) -> X(n) has twist polynomial phi_n
    for (int n = 3; n <= 5; ++n) {
        std::vector<int> dims(n), removals(n - 1);
        for (int i = 0; i < n; ++i) dims[i] = i + 1;
        for (int i = 0; i < n - 1; ++i) removals[i] = n - 1 - i;  // n-1, ..., 1
        const MotiveExpr leaf = decompose_chain(FlagDescriptor(GroupDescriptor(Series::B, n), dims),
                                                removals);
        CHECK(twist_polynomial(leaf) == phi(n));
    }
}

TEST_CASE("rewrite_C") {
    const GroupDescriptor c3(Series::C, 3, 2);
    CHECK(rewrite_C(FlagDescriptor(c3, {1, 2})) ==
          expected_terms(BaseMotive{FlagDescriptor(c3, {1})}, {0, 1, 2, 3}));
    CHECK_THROWS_AS(rewrite_C(FlagDescriptor(c3, {2, 3})), Error);  // no odd d_i with i < k
    CHECK_THROWS_AS(rewrite_C(FlagDescriptor(c3, {1, 3})), Error);  // d_k - d_{k-1} != 1

    // full chain X(1,...,n) -> SB(A) has twist polynomial psi_n
    for (int n = 3; n <= 5; ++n) {
        std::vector<int> dims(n), removals(n - 1);
        for (int i = 0; i < n; ++i) dims[i] = i + 1;
        for (int i = 0; i < n - 1; ++i) removals[i] = n - i;  // n, n-1, ..., 2
        const MotiveExpr leaf = decompose_chain(FlagDescriptor(GroupDescriptor(Series::C, n), dims),
                                                removals);
        CHECK(twist_polynomial(leaf) == psi(n));
    }
}

TEST_CASE("rewrite_G") {
    const GroupDescriptor g2(Series::G2, 2);
    CHECK(rewrite_G(FlagDescriptor(g2, {1, 2})) ==
          expected_terms(BaseMotive{FlagDescriptor(g2, {2})}, {0, 1}));
    CHECK_THROWS_AS(rewrite_G(FlagDescriptor(g2, {1})), Error);
    CHECK_THROWS_AS(rewrite_G(FlagDescriptor(g2, {2})), Error);
}

TEST_CASE("rewrite_F") {
    const GroupDescriptor f4(Series::F4, 4);
    CHECK(rewrite_F(FlagDescriptor(f4, {1, 2}), 1) ==
          expected_terms(BaseMotive{FlagDescriptor(f4, {2})}, {0, 1}));
    // box (2-0) x (3-2): partitions (), (1), (1,1) with twists 2, 1, 0
    CHECK(rewrite_F(FlagDescriptor(f4, {2, 3}), 1) ==
          expected_terms(BaseMotive{FlagDescriptor(f4, {3})}, {0, 1, 2}));
    CHECK_THROWS_AS(rewrite_F(FlagDescriptor(f4, {3, 6}), 1), Error);  // d2 = 6 and d1 != 1
    CHECK(rewrite_F(FlagDescriptor(f4, {1, 6}), 1) ==
          expected_terms(BaseMotive{FlagDescriptor(f4, {6})}, {0, 1, 2, 3, 4, 5}));
}

TEST_CASE("decompose_chain") {
    // full A4 flag collapses to SB(A) with multiplicities phi_4
    const MotiveExpr full = decompose_chain(flag_A(4, 5, {1, 2, 3, 4}), {4, 3, 2});
    CHECK(twist_polynomial(full) == phi(4));
    CHECK(full.term_count() == 24);

    // incidence variety X(1,n): removing n leaves SB(A)(0..n-1)
    const MotiveExpr incidence = decompose_chain(flag_A(4, 5, {1, 4}), {4});
    CHECK(incidence == expected_terms(BaseMotive{flag_A(4, 5, {1})}, {0, 1, 2, 3}));

    CHECK(decompose_chain(flag_A(4, 5, {1, 2}), {}) ==
          MotiveExpr::single(BaseMotive{flag_A(4, 5, {1, 2})}));

    try {
        decompose_chain(flag_A(4, 4, {1, 2, 4}), {2, 1});
        CHECK(false);
    } catch (const ChainStepError& e) {
        CHECK(e.step() == 2);  // removing the 1 from X(1,4) leaves gcd(4, 4) = 4
        CHECK(e.code() == "GcdConditionFailed");
    }
}

TEST_CASE("rewrite invariants: counts and palindromic twists") {
    const FlagDescriptor x12 = flag_A(4, 5, {1, 2});
    CHECK(rewrite_A(x12, 2).term_count() == binomial(1 + 3, 1));
    const GroupDescriptor f4(Series::F4, 4);
    CHECK(rewrite_F(FlagDescriptor(f4, {2, 3}), 1).term_count() == binomial(2 + 1, 2));
    CHECK(twist_polynomial(rewrite_A(x12, 2)).is_palindromic());
    CHECK(twist_polynomial(rewrite_F(FlagDescriptor(f4, {2, 3}), 1)).is_palindromic());
    const GroupDescriptor c3(Series::C, 3);
    CHECK(rewrite_C(FlagDescriptor(c3, {1, 2})).term_count() == 2 * (3 - 1));
}

TEST_CASE("poincare table and checks") {
    const GroupDescriptor a4(Series::A, 4, 5);
    const PoincareTable table = PoincareTable::defaults_for(a4);
    CHECK(table.get("SB(A)") == gaussian_binomial(5, 1));
    CHECK(table.get("SB_2(A)") == gaussian_binomial(5, 2));
    CHECK_THROWS_AS(table.get("nope"), Error);

    const FlagDescriptor x12 = flag_A(4, 5, {1, 2});
    const MotiveExpr path1 = decompose_chain(x12, {2});
    const MotiveExpr path2 = decompose_chain(x12, {1});
    CHECK(poincare_check(path1, path2, table));
    CHECK(poincare_check(path1, path1, table));
    CHECK(poincare_polynomial(path1, table) == flag_poincare_split(x12));

    MotiveExpr with_atom;
    with_atom.add_term(BaseMotive{std::string("mystery")}, 0, 1);
    CHECK_THROWS_AS(poincare_polynomial(with_atom, table), Error);
}

TEST_CASE("confluence over removal orders for series A") {
    // every removal order of the same flag yields the same Poincare polynomial
    const std::vector<std::pair<int, std::vector<int>>> flags = {
        {3, {1, 2}}, {4, {1, 2, 3}}, {5, {2, 3}}, {5, {1, 3, 5}}};
    for (const auto& [rank, dims] : flags) {
        const FlagDescriptor flag = flag_A(rank, 1, dims);  // ind 1: guards always pass
        const PoincareTable table = PoincareTable::defaults_for(flag.group());
        const IntPolynomial direct = flag_poincare_split(flag);
        std::vector<int> order = dims;
        std::sort(order.begin(), order.end());
        do {
            // remove all but the last value in this order
            std::vector<int> removals(order.begin(), order.end() - 1);
            const MotiveExpr expr = decompose_chain(flag, removals);
            CHECK(poincare_polynomial(expr, table) == direct);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("B_n and C_n full-flag polynomial identities") {
    for (int n = 2; n <= 8; ++n) {
        IntPolynomial weyl{Int(1)};
        for (int k = 1; k <= n; ++k) weyl = weyl * z_bracket(2 * k);
        IntPolynomial max_og{Int(1)};
        for (int k = 1; k <= n; ++k)
            max_og = max_og * (IntPolynomial(Int(1)) + IntPolynomial::monomial(k));
        CHECK(phi(n) * max_og == weyl);           // B_n
        CHECK(psi(n) * z_bracket(2 * n) == weyl);  // C_n
    }
}

TEST_CASE("gensb_expand") {
    const BaseMotive sb{std::string("SB(A)")};
    CHECK(gensb_expand(4, 2) == expected_terms(sb, {0, 2}));
    CHECK(gensb_expand(4, 3) == expected_terms(sb, {0, 2}));
    CHECK(twist_polynomial(gensb_expand(6, 2)) == gensb_polynomial(6, 2));
    CHECK_THROWS_AS(gensb_expand(5, 2), Error);
}

TEST_CASE("index reduction obstruction") {
    CHECK(index_reduction_obstruction(4, 2) == 2);
    CHECK(index_reduction_obstruction(5, 2) == 5);
    CHECK(index_reduction_obstruction(6, 6) == 1);
    const auto guard = gcd_guard_report(4, 2);
    CHECK(guard.at("cokernel_through_X(d)") == "2");
    CHECK(guard.at("cokernel_through_X(1)") == "4");
    CHECK(guard.at("consistent") == false);
}

TEST_CASE("krull-schmidt report") {
    const KrullSchmidtReport report = krull_schmidt_report(4, 5);
    CHECK(report.leaf_multiset_sb ==
          std::vector<std::string>{"SB(A)(0)", "SB(A)(1)", "SB(A)(2)", "SB(A)(3)"});
    CHECK(report.leaf_multiset_f == std::vector<std::string>{"F(0)", "F(1)", "F(2)", "F(3)"});
    CHECK(report.poincare_equal);
    CHECK(report.poincare_sb == z_bracket(4) * z_bracket(5));
    CHECK(report.path_sb2.render() == "SB_2(A) + SB_2(A)(1)");
    CHECK(!report.citations.empty());
    CHECK(report.to_json().contains("citations"));
    CHECK_THROWS_AS(krull_schmidt_report(4, 2), Error);  // needs gcd(ind, 2) = 1
}

TEST_CASE("motive expr rendering") {
    MotiveExpr e;
    e.add_term(BaseMotive{std::string("SB(A)")}, 1, 2);
    e.add_term(BaseMotive{std::string("F")}, 0, 1);
    CHECK(e.render() == "F + 2*SB(A)(1)");
    CHECK(e.twisted(2).render() == "F(2) + 2*SB(A)(3)");
    CHECK_THROWS_AS(e.add_term(BaseMotive{std::string("F")}, -1, 1), Error);
    CHECK_THROWS_AS(e.add_term(BaseMotive{std::string("F")}, 0, 0), Error);
}
