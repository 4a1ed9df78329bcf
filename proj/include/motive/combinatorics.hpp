#pragma once

#include "motive/int_polynomial.hpp"

namespace motive {

/// (z^k - 1)/(z - 1) = 1 + z + ... + z^{k-1}; k >= 0.
IntPolynomial z_bracket(int k);

/// Gaussian binomial [a, b]_z = sum of z^|lambda| over partitions in the
/// b x (a-b) box, computed by the q-factorial product with exact division.
IntPolynomial gaussian_binomial(int a, int b);

/// phi_n(z) = prod_{k=2}^{n} (z^k - 1)/(z - 1); phi_1 = 1.
IntPolynomial phi(int n);

/// psi_n(z) = prod_{k=1}^{n-1} (z^{2k} - 1)/(z - 1); psi_1 = 1.
IntPolynomial psi(int n);

/// phi_n / (phi_d * phi_{n+1-d}), exact; throws NonDivisible when the
/// quotient is not a polynomial. Requires 1 < d < n.
IntPolynomial gensb_polynomial(int n, int d);

/// Checks phi_n/(phi_{d-1} phi_{n+1-d}) = ((z^d-1)/(z-1)) * phi_n/(phi_d phi_{n+1-d})
/// as exact polynomials (both sides computed by cross-multiplied exact division).
bool proofgensb_identity(int n, int d);

}  // namespace motive
