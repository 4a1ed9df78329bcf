#include "motive/combinatorics.hpp"

#include "motive/error.hpp"

namespace motive {

IntPolynomial z_bracket(int k) {
    if (k < 0) fail("DomainError", "z_bracket needs k >= 0");
    std::map<int, Int> c;
    for (int i = 0; i < k; ++i) c[i] = 1;
    return IntPolynomial::from_coefficients(c);
}

namespace {

IntPolynomial z_power_minus_one(int k) {
    return IntPolynomial::monomial(k) - IntPolynomial(Int(1));
}

IntPolynomial exact_quotient(const IntPolynomial& num, const IntPolynomial& den,
                             const std::string& what) {
    auto q = num.divide_exact(den);
    if (!q) fail("NonDivisible", what + " is not an exact polynomial quotient");
    return *q;
}

}  // namespace

IntPolynomial gaussian_binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) fail("DomainError", "gaussian_binomial needs 0 <= b <= a");
    IntPolynomial result{Int(1)};
    // prefix products are the Gaussian binomials [a-b+k, k], so every division is exact
    for (int k = 1; k <= b; ++k)
        result = exact_quotient(result * z_power_minus_one(a - b + k), z_power_minus_one(k),
                                "gaussian binomial step");
    return result;
}

IntPolynomial phi(int n) {
    if (n < 1) fail("DomainError", "phi needs n >= 1");
    IntPolynomial result{Int(1)};
    for (int k = 2; k <= n; ++k) result = result * z_bracket(k);
    return result;
}

IntPolynomial psi(int n) {
    if (n < 1) fail("DomainError", "psi needs n >= 1");
    IntPolynomial result{Int(1)};
    for (int k = 1; k <= n - 1; ++k) result = result * z_bracket(2 * k);
    return result;
}

IntPolynomial gensb_polynomial(int n, int d) {
    if (!(1 < d && d < n)) fail("DomainError", "gensb_polynomial needs 1 < d < n");
    return exact_quotient(phi(n), phi(d) * phi(n + 1 - d), "phi_n / (phi_d phi_{n+1-d})");
}

bool proofgensb_identity(int n, int d) {
    if (!(1 < d && d < n)) fail("DomainError", "proofgensb_identity needs 1 < d < n");
    auto lhs = phi(n).divide_exact(phi(d - 1) * phi(n + 1 - d));
    auto rhs = (z_bracket(d) * phi(n)).divide_exact(phi(d) * phi(n + 1 - d));
    return lhs && rhs && *lhs == *rhs;
}

}  // namespace motive
