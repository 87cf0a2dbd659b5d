#pragma once

#include <map>
#include <vector>

#include "eispart/qseries.hpp"

namespace eispart {

// Vanishing order of an eta quotient at the cusp 1/c of Gamma_0(N), c | N:
//   (N / (24 gcd(c^2, N))) sum_{delta|N} gcd(c, delta)^2 r_delta / delta.
// The general gcd(c^2, N) form is kept even though it reduces to c for
// square-free N.
Rational eta_cusp_order(const EtaQuotient& e, long c);

struct CuspOrderTable {
  EtaQuotient quotient;
  std::map<long, Rational> orders;  // cusp label c -> order at 1/c
  Rational total;
};

// Orders at every cusp plus their sum, which is checked against the exact
// count (sum_delta r_delta / 24) prod_{p|N} (p+1); a mismatch throws
// verification_error.
CuspOrderTable total_cusp_order(const EtaQuotient& e);

// The i-th element of a triangular eta-quotient basis of the weight-2k cusp
// forms on Gamma_0(6), for 1 <= i <= 2k-3 and k >= 2:
//   eta(z)^(12k-5i-17) eta(2z)^(-6k+i+13) eta(3z)^(-4k-i+11) eta(6z)^(2k+5i-7).
// Element i has leading term q^i.
EtaQuotient s_basis_exponents(long k, long i);
QSeries s_basis_element(long k, long i, long precision);

// All 2k-3 basis elements at the given precision. Results are cached per
// (k, precision) behind a mutex; the returned copy is cheap next to the
// expansion cost.
std::vector<QSeries> s_basis(long k, long precision);

// Writes f, a weight-2k cusp series on Gamma_0(6) vanishing at infinity,
// as sum_i b_i S_i by forward substitution against the triangular basis.
// Needs precision >= 2k-2 to see every leading term; throws
// verification_error if a nonzero remainder survives, as it does for any f
// outside the span.
std::vector<Rational> decompose_cusp_level6(const QSeries& f, long k);

// g = eta(z)^2 / eta(2z) = 1 - 2q + 2q^4 - 2q^9 + ... (the theta series of
// the squares with alternating signs); phi(q) = g(-q) = 1 + 2q + 2q^4 + ...
QSeries g_series(long precision);
QSeries phi_series(long precision);

}  // namespace eispart
