#include "eispart/etaquot.hpp"

#include <mutex>
#include <numeric>

namespace eispart {

Rational eta_cusp_order(const EtaQuotient& e, long c) {
  const Level& level = e.level();
  if (!level.divides(c))
    throw std::invalid_argument("cusp label " + std::to_string(c) +
                                " does not divide the level " +
                                std::to_string(level.value()));
  long n = level.value();
  Rational sum(0);
  for (const auto& [delta, r] : e.exponents()) {
    if (r == 0) continue;
    long g = std::gcd(c, delta);
    sum += Rational(g * g * r, delta);
  }
  return Rational(n, 24 * std::gcd(c * c, n)) * sum;
}

CuspOrderTable total_cusp_order(const EtaQuotient& e) {
  CuspOrderTable table{e, {}, Rational(0)};
  for (long c : e.level().divisors()) {
    Rational v = eta_cusp_order(e, c);
    table.orders[c] = v;
    table.total += v;
  }
  Rational expected = Rational(e.exponent_sum(), 24);
  for (long p : e.level().primes()) expected *= Rational(p + 1);
  if (table.total != expected)
    throw verification_error("cusp orders sum to " + table.total.str() +
                             " but the weight forces " + expected.str());
  return table;
}

EtaQuotient s_basis_exponents(long k, long i) {
  if (k < 2)
    throw std::invalid_argument("cusp form basis needs weight 2k with k >= 2");
  if (i < 1 || i > 2 * k - 3)
    throw std::invalid_argument(
        "basis index i must satisfy 1 <= i <= 2k-3 (got i=" +
        std::to_string(i) + " for k=" + std::to_string(k) + ")");
  return EtaQuotient(make_level(6), {{1, 12 * k - 5 * i - 17},
                                     {2, -6 * k + i + 13},
                                     {3, -4 * k - i + 11},
                                     {6, 2 * k + 5 * i - 7}});
}

QSeries s_basis_element(long k, long i, long precision) {
  return eta_quotient_series(s_basis_exponents(k, i), precision);
}

std::vector<QSeries> s_basis(long k, long precision) {
  static std::map<std::pair<long, long>, std::vector<QSeries>> cache;
  static std::mutex mu;
  if (k < 2)
    throw std::invalid_argument("cusp form basis needs weight 2k with k >= 2");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, precision);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<QSeries> basis;
    for (long i = 1; i <= 2 * k - 3; ++i)
      basis.push_back(s_basis_element(k, i, precision));
    it = cache.emplace(key, std::move(basis)).first;
  }
  return it->second;
}

std::vector<Rational> decompose_cusp_level6(const QSeries& f, long k) {
  long nb = 2 * k - 3;
  if (nb < 1)
    throw std::invalid_argument("cusp form basis needs weight 2k with k >= 2");
  if (f.precision() < nb + 1)
    throw std::invalid_argument(
        "decomposition needs precision >= 2k-2 = " + std::to_string(nb + 1) +
        ", got " + std::to_string(f.precision()));
  std::vector<QSeries> basis = s_basis(k, f.precision());
  QSeries rem = f;
  std::vector<Rational> b;
  for (long i = 1; i <= nb; ++i) {
    // S_i = q^i + O(q^(i+1)), so coefficient i of the remainder is b_i.
    Rational bi = rem[i];
    b.push_back(bi);
    if (!bi.is_zero())
      rem = series_sub(rem, series_scale(bi, basis[static_cast<size_t>(i - 1)]));
  }
  if (!rem.is_zero())
    throw verification_error(
        "series is not in the span of the weight-" + std::to_string(2 * k) +
        " cusp basis: nonzero remainder at q^" +
        std::to_string(rem.valuation().value()));
  return b;
}

QSeries g_series(long precision) {
  return eta_quotient_series(EtaQuotient(make_level(2), {{1, 2}, {2, -1}}),
                             precision);
}

QSeries phi_series(long precision) { return half_shift(g_series(precision)); }

}  // namespace eispart
