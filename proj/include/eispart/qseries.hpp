#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eispart/arith.hpp"

namespace eispart {

// Truncated power series in q with exact rational coefficients. A series of
// precision T stores the coefficients of q^0 .. q^(T-1); everything from q^T
// on is unknown, not zero. Binary operations truncate to the smaller
// precision of the two operands.
class QSeries {
 public:
  // Zero series of the given precision (precision >= 1).
  explicit QSeries(long precision);
  explicit QSeries(std::vector<Rational> coeffs);

  long precision() const { return static_cast<long>(c_.size()); }
  const Rational& operator[](long n) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational& at(long n);

  bool is_zero() const;
  // Index of the first nonzero coefficient, or nullopt for the zero series.
  std::optional<long> valuation() const;

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const QSeries& s);

QSeries one_series(long precision);
QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_scale(const Rational& c, const QSeries& a);

// a(q) -> a(q^d) for d >= 1; coefficient of q^(dn) becomes a_n.
QSeries dilate(const QSeries& a, long d);

// a(q) -> a(-q): negates the odd-index coefficients. An involution.
QSeries half_shift(const QSeries& a);

// Multiply by q^s for s >= 0 (the low s coefficients become 0).
QSeries monomial_shift(const QSeries& a, long s);

// Non-negative power by repeated squaring.
QSeries series_pow(const QSeries& a, long e);

// Multiplicative inverse. Requires constant term +1 or -1; general unit
// inversion is deliberately not supported, so anything else throws.
QSeries series_invert(const QSeries& a);

// prod_{n>=1} (1 - q^n), expanded by the pentagonal number theorem:
// sum_{j in Z} (-1)^j q^(j(3j-1)/2).
QSeries euler_product(long precision);

// Formal eta quotient prod_{delta | N} eta(delta z)^(r_delta) on a
// square-free level N. Exponents may be negative; divisors absent from the
// map are treated as exponent 0, but at least one exponent must be nonzero.
class EtaQuotient {
 public:
  EtaQuotient(Level level, const std::map<long, long>& exponents);

  const Level& level() const { return level_; }
  // Complete map over all divisors of N (zeros filled in).
  const std::map<long, long>& exponents() const { return exps_; }
  long exponent_at(long delta) const;
  long exponent_sum() const;
  // Modular weight: (1/2) sum_delta r_delta.
  Rational weight() const;
  // Order at infinity before expansion: (1/24) sum_delta delta * r_delta.
  Rational prefactor_exponent() const;
  EtaQuotient negated() const;

 private:
  Level level_;
  std::map<long, long> exps_;
};

// q-expansion q^s prod_delta prod_{n>=1} (1 - q^(delta n))^(r_delta) with
// s = (1/24) sum delta r_delta. Throws std::invalid_argument unless s is a
// non-negative integer (otherwise the object has no power series in q).
QSeries eta_quotient_series(const EtaQuotient& e, long precision);

}  // namespace eispart
