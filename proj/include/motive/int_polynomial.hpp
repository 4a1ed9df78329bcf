#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "motive/numeric.hpp"

namespace motive {

/// Polynomial in the formal twist variable z with exact integer coefficients,
/// stored sparsely with no zero entries.
class IntPolynomial {
public:
    IntPolynomial() = default;  // zero polynomial
    explicit IntPolynomial(const Int& constant);
    static IntPolynomial monomial(int degree, const Int& coefficient = 1);
    static IntPolynomial from_coefficients(const std::map<int, Int>& by_degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    Int coefficient(int k) const;
    const std::map<int, Int>& terms() const { return coeffs_; }

    Int value_at_one() const;
    bool is_palindromic() const;
    bool all_coefficients_nonnegative() const;

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial scaled(const Int& c) const;
    bool operator==(const IntPolynomial& other) const = default;

    /// Exact long division; nullopt when the remainder is nonzero or a
    /// leading-coefficient division fails over the integers.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

    /// "1 + 2z + z^3"; "0" for the zero polynomial.
    std::string to_string() const;
    /// {"0": 1, "1": 2, "3": 1}
    nlohmann::json to_json() const;
    static IntPolynomial from_json(const nlohmann::json& j);

private:
    void set(int degree, Int value);
    std::map<int, Int> coeffs_;
};

}  // namespace motive
