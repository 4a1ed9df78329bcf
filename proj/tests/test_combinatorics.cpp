#include "doctest.h"
#include "motive/combinatorics.hpp"
#include "motive/error.hpp"
#include "motive/partition.hpp"

using namespace motive;

namespace {

IntPolynomial box_generating_polynomial(int rows, int cols) {
    std::map<int, Int> coeffs;
    for (const Partition& p : partitions_in_box(rows, cols)) coeffs[p.weight()] += 1;
    return IntPolynomial::from_coefficients(coeffs);
}

}  // namespace

TEST_CASE("partitions_in_box enumeration") {
    CHECK(partitions_in_box(1, 1) == std::vector<Partition>{Partition{}, Partition{1}});
    CHECK(partitions_in_box(2, 3).size() == 10);
    CHECK(partitions_in_box(3, 0) == std::vector<Partition>{Partition{}});

    for (int rows = 0; rows <= 6; ++rows)
        for (int cols = 0; cols <= 6; ++cols)
            CHECK(Int(partitions_in_box(rows, cols).size()) == binomial(rows + cols, rows));

    // graded-lex order: weights ascend, lexicographic within a weight
    const auto box = partitions_in_box(2, 3);
    for (std::size_t i = 0; i + 1 < box.size(); ++i) CHECK(box[i] < box[i + 1]);
    CHECK(box[1] == Partition{1});
    CHECK(box[2] == Partition{1, 1});
    CHECK(box[3] == Partition{2});
}

TEST_CASE("complement in a box") {
    CHECK(Partition{1, 1}.complement_in_box(2, 3) == Partition{2, 2});
    CHECK(Partition{}.complement_in_box(3, 2) == Partition{2, 2, 2});
    CHECK(Partition{3, 2}.complement_in_box(2, 3) == Partition{1});
    CHECK_THROWS_AS(Partition{4}.complement_in_box(2, 3), Error);

    for (int rows = 0; rows <= 6; ++rows)
        for (int cols = 0; cols <= 6; ++cols)
            for (const Partition& p : partitions_in_box(rows, cols))
                CHECK(p.complement_in_box(rows, cols).complement_in_box(rows, cols) == p);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK_THROWS_AS(Partition({2, -1}), Error);
    CHECK(Partition({2, 1, 0, 0}) == Partition{2, 1});
    CHECK(Partition{}.weight() == 0);
}

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(2, 1) == IntPolynomial::from_coefficients({{0, 1}, {1, 1}}));
    // frozen from the box-enumeration oracle: partitions of 2x2 by weight 1,1,2,1,1
    CHECK(gaussian_binomial(4, 2) ==
          IntPolynomial::from_coefficients({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(gaussian_binomial(4, 2) == box_generating_polynomial(2, 2));
    CHECK(gaussian_binomial(5, 0) == IntPolynomial(Int(1)));
    CHECK_THROWS_AS(gaussian_binomial(2, 3), Error);
    CHECK_THROWS_AS(gaussian_binomial(-1, 0), Error);

    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= a; ++b) {
            const IntPolynomial g = gaussian_binomial(a, b);
            CHECK(g == box_generating_polynomial(b, a - b));
            CHECK(g.value_at_one() == binomial(a, b));
            CHECK(g.is_palindromic());
        }
}

TEST_CASE("box-twist palindromicity") {
    // the multiset of twists rc - |lambda| has the same generating polynomial
    // as the weights themselves
    for (int rows = 1; rows <= 5; ++rows)
        for (int cols = 1; cols <= 5; ++cols) {
            std::map<int, Int> twist;
            for (const Partition& p : partitions_in_box(rows, cols))
                twist[rows * cols - p.weight()] += 1;
            CHECK(IntPolynomial::from_coefficients(twist) == gaussian_binomial(rows + cols, rows));
        }
}

TEST_CASE("phi") {
    CHECK(phi(1) == IntPolynomial(Int(1)));
    CHECK(phi(2) == IntPolynomial::from_coefficients({{0, 1}, {1, 1}}));
    // (1+z)(1+z+z^2) expanded by hand
    CHECK(phi(3) == IntPolynomial::from_coefficients({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    CHECK_THROWS_AS(phi(0), Error);

    Int factorial = 1;
    for (int n = 1; n <= 8; ++n) {
        factorial *= n;
        CHECK(phi(n).degree() == n * (n - 1) / 2);
        CHECK(phi(n).value_at_one() == factorial);
    }
}

TEST_CASE("psi") {
    CHECK(psi(1) == IntPolynomial(Int(1)));
    CHECK(psi(2) == IntPolynomial::from_coefficients({{0, 1}, {1, 1}}));
    // (1+z)(1+z+z^2+z^3) expanded by hand
    CHECK(psi(3) == IntPolynomial::from_coefficients({{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}));
    CHECK_THROWS_AS(psi(0), Error);
    for (int n = 1; n <= 8; ++n) CHECK(psi(n).degree() == (n - 1) * (n - 1));
}

TEST_CASE("gensb polynomial") {
    const IntPolynomial one_z2 = IntPolynomial::from_coefficients({{0, 1}, {2, 1}});
    CHECK(gensb_polynomial(4, 2) == one_z2);
    CHECK(gensb_polynomial(4, 3) == one_z2);
    // phi_6/(phi_2 phi_5) = (z^6-1)/(z^2-1) by cancellation of q-factorials
    CHECK(gensb_polynomial(6, 2) == IntPolynomial::from_coefficients({{0, 1}, {2, 1}, {4, 1}}));
    CHECK_THROWS_AS(gensb_polynomial(5, 2), Error);  // genuinely non-polynomial quotient
    CHECK_THROWS_AS(gensb_polynomial(3, 3), Error);  // needs 1 < d < n

    // gaussian_binomial(n+1, d) = gensb(n, d) * (1 + z + ... + z^n) where defined
    for (auto [n, d] : {std::pair{4, 2}, {4, 3}, {6, 2}, {6, 3}, {6, 5}}) {
        const IntPolynomial q = gensb_polynomial(n, d);
        CHECK(q.all_coefficients_nonnegative());
        CHECK(gaussian_binomial(n + 1, d) == q * z_bracket(n + 1));
    }
}

TEST_CASE("proofgensb identity") {
    CHECK(proofgensb_identity(4, 2));
    CHECK(proofgensb_identity(5, 2));
    CHECK(proofgensb_identity(6, 3));
    CHECK_THROWS_AS(proofgensb_identity(4, 1), Error);
}

TEST_CASE("IntPolynomial basics") {
    const IntPolynomial p = IntPolynomial::from_coefficients({{0, 1}, {1, 2}, {3, 1}});
    CHECK(p.to_string() == "1 + 2z + z^3");
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(IntPolynomial::from_coefficients({{1, -1}, {2, 3}}).to_string() == "-z + 3z^2");
    CHECK(IntPolynomial::from_json(p.to_json()) == p);

    const IntPolynomial z2m1 = IntPolynomial::monomial(2) - IntPolynomial(Int(1));
    CHECK(!z2m1.divide_exact(IntPolynomial::from_coefficients({{0, 1}, {1, 1}, {2, 1}})).has_value());
    auto q = z2m1.divide_exact(IntPolynomial::from_coefficients({{0, -1}, {1, 1}}));
    REQUIRE(q.has_value());
    CHECK(*q == IntPolynomial::from_coefficients({{0, 1}, {1, 1}}));
}
