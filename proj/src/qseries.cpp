#include "eispart/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace eispart {

QSeries::QSeries(long precision) {
  if (precision < 1)
    throw std::invalid_argument("series precision must be positive");
  c_.assign(static_cast<size_t>(precision), Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty())
    throw std::invalid_argument("series precision must be positive");
}

const Rational& QSeries::operator[](long n) const {
  if (n < 0 || n >= precision())
    throw std::out_of_range("series coefficient index " + std::to_string(n) +
                            " outside precision " + std::to_string(precision()));
  return c_[static_cast<size_t>(n)];
}

Rational& QSeries::at(long n) {
  if (n < 0 || n >= precision())
    throw std::out_of_range("series coefficient index " + std::to_string(n) +
                            " outside precision " + std::to_string(precision()));
  return c_[static_cast<size_t>(n)];
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

std::optional<long> QSeries::valuation() const {
  for (long n = 0; n < precision(); ++n)
    if (!c_[static_cast<size_t>(n)].is_zero()) return n;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
  os << "[";
  for (long n = 0; n < s.precision(); ++n) {
    if (n) os << ", ";
    os << s[n];
  }
  return os << "] + O(q^" << s.precision() << ")";
}

QSeries one_series(long precision) {
  QSeries s(precision);
  s.at(0) = Rational(1);
  return s;
}

QSeries series_add(const QSeries& a, const QSeries& b) {
  long t = std::min(a.precision(), b.precision());
  std::vector<Rational> c(static_cast<size_t>(t));
  for (long n = 0; n < t; ++n) c[static_cast<size_t>(n)] = a[n] + b[n];
  return QSeries(std::move(c));
}

QSeries series_sub(const QSeries& a, const QSeries& b) {
  long t = std::min(a.precision(), b.precision());
  std::vector<Rational> c(static_cast<size_t>(t));
  for (long n = 0; n < t; ++n) c[static_cast<size_t>(n)] = a[n] - b[n];
  return QSeries(std::move(c));
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  long t = std::min(a.precision(), b.precision());
  std::vector<Rational> c(static_cast<size_t>(t));
  for (long i = 0; i < t; ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; i + j < t; ++j) {
      if (b[j].is_zero()) continue;
      c[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
  }
  return QSeries(std::move(c));
}

QSeries series_scale(const Rational& c, const QSeries& a) {
  std::vector<Rational> out(static_cast<size_t>(a.precision()));
  for (long n = 0; n < a.precision(); ++n)
    out[static_cast<size_t>(n)] = c * a[n];
  return QSeries(std::move(out));
}

QSeries dilate(const QSeries& a, long d) {
  if (d < 1) throw std::invalid_argument("dilation factor must be positive");
  QSeries out(a.precision());
  for (long n = 0; n * d < a.precision(); ++n) out.at(n * d) = a[n];
  return out;
}

QSeries half_shift(const QSeries& a) {
  QSeries out(a.precision());
  for (long n = 0; n < a.precision(); ++n)
    out.at(n) = (n % 2 == 0) ? a[n] : -a[n];
  return out;
}

QSeries monomial_shift(const QSeries& a, long s) {
  if (s < 0) throw std::invalid_argument("monomial shift must be non-negative");
  QSeries out(a.precision());
  for (long n = 0; n + s < a.precision(); ++n) out.at(n + s) = a[n];
  return out;
}

QSeries series_pow(const QSeries& a, long e) {
  if (e < 0) throw std::invalid_argument("series power must be non-negative");
  QSeries acc = one_series(a.precision());
  QSeries base = a;
  while (e > 0) {
    if (e & 1) acc = series_mul(acc, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return acc;
}

QSeries series_invert(const QSeries& a) {
  const Rational& c0 = a[0];
  if (c0 != Rational(1) && c0 != Rational(-1))
    throw std::invalid_argument(
        "series inversion requires constant term +1 or -1, got " + c0.str());
  // b_0 = 1/c0 and  b_n = -(1/c0) sum_{i=1..n} a_i b_{n-i}.
  QSeries b(a.precision());
  b.at(0) = c0;  // c0 is its own inverse
  for (long n = 1; n < a.precision(); ++n) {
    Rational s(0);
    for (long i = 1; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      s += a[i] * b[n - i];
    }
    b.at(n) = -(c0 * s);
  }
  return b;
}

QSeries euler_product(long precision) {
  QSeries out(precision);
  if (0 < precision) out.at(0) = Rational(1);
  for (long j = 1;; ++j) {
    long e1 = j * (3 * j - 1) / 2;
    long e2 = j * (3 * j + 1) / 2;
    if (e1 >= precision) break;
    Rational sign((j % 2 == 0) ? 1 : -1);
    out.at(e1) = sign;
    if (e2 < precision) out.at(e2) = sign;
  }
  return out;
}

EtaQuotient::EtaQuotient(Level level, const std::map<long, long>& exponents)
    : level_(std::move(level)) {
  bool any = false;
  for (const auto& [delta, r] : exponents) {
    if (!level_.divides(delta))
      throw std::invalid_argument("eta quotient argument " +
                                  std::to_string(delta) +
                                  " does not divide the level " +
                                  std::to_string(level_.value()));
    if (r != 0) any = true;
  }
  if (!any)
    throw std::invalid_argument("eta quotient exponents must not all be zero");
  for (long d : level_.divisors()) {
    auto it = exponents.find(d);
    exps_[d] = (it == exponents.end()) ? 0 : it->second;
  }
}

long EtaQuotient::exponent_at(long delta) const {
  auto it = exps_.find(delta);
  if (it == exps_.end())
    throw std::invalid_argument(std::to_string(delta) +
                                " does not divide the level " +
                                std::to_string(level_.value()));
  return it->second;
}

long EtaQuotient::exponent_sum() const {
  long s = 0;
  for (const auto& [delta, r] : exps_) s += r;
  return s;
}

Rational EtaQuotient::weight() const { return Rational(exponent_sum(), 2); }

Rational EtaQuotient::prefactor_exponent() const {
  Rational s(0);
  for (const auto& [delta, r] : exps_) s += Rational(delta * r, 24);
  return s;
}

EtaQuotient EtaQuotient::negated() const {
  std::map<long, long> neg;
  for (const auto& [delta, r] : exps_) neg[delta] = -r;
  return EtaQuotient(level_, neg);
}

QSeries eta_quotient_series(const EtaQuotient& e, long precision) {
  Rational s = e.prefactor_exponent();
  if (!s.is_integer() || s.sign() < 0)
    throw std::invalid_argument(
        "eta quotient has no power series in q: leading exponent "
        "(1/24) sum delta*r_delta = " +
        s.str() + " is not a non-negative integer");
  QSeries acc = one_series(precision);
  QSeries euler = euler_product(precision);
  for (const auto& [delta, r] : e.exponents()) {
    if (r == 0) continue;
    QSeries base = dilate(euler, delta);
    if (r < 0) base = series_invert(base);
    acc = series_mul(acc, series_pow(base, std::labs(r)));
  }
  return monomial_shift(acc, s.numerator().get_si());
}

}  // namespace eispart
