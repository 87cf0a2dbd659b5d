#include "eispart/eisenstein.hpp"

#include <numeric>

namespace eispart {

namespace {

void require_weight(long k) {
  if (k < 2)
    throw std::invalid_argument(
        "weight 2k with k >= 2 required (weight 2 is excluded: E_2 is not "
        "modular)");
}

long require_divisor(const Level& level, long d, const char* what) {
  if (!level.divides(d) )
    throw std::invalid_argument(std::string(what) + " " + std::to_string(d) +
                                " does not divide the level " +
                                std::to_string(level.value()));
  return d;
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

// prod_{p|N} (p^(2k) - 1)
Int orthogonality_denominator(const Level& level, long k) {
  Int prod = 1;
  for (long p : level.primes())
    prod *= int_pow(p, static_cast<unsigned long>(2 * k)) - 1;
  return prod;
}

// Exact Gaussian elimination. Returns the rank; if solve is non-null the
// matrix must be square with rhs appended as the last column, and the
// solution is written there (throws verification_error if singular).
size_t eliminate(std::vector<std::vector<Rational>>& m,
                 std::vector<Rational>* solution) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t vars = solution ? cols - 1 : cols;
  size_t rank = 0;
  for (size_t col = 0; col < vars && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[rank][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  if (solution) {
    if (rank != vars)
      throw verification_error("cusp constant system is singular");
    solution->assign(vars, Rational(0));
    // After full (Gauss-Jordan) elimination each of the first `vars` rows has
    // a single pivot column.
    for (size_t r = 0; r < vars; ++r) {
      size_t col = 0;
      while (col < vars && m[r][col].is_zero()) ++col;
      (*solution)[col] = m[r][vars] / m[r][col];
    }
  }
  return rank;
}

}  // namespace

QSeries eisenstein_series(long k, long d, long precision) {
  require_weight(k);
  if (d < 1) throw std::invalid_argument("dilation factor must be positive");
  QSeries out(precision);
  out.at(0) = Rational(1);
  Rational factor = Rational(0) - Rational(4 * k) / bernoulli(2 * static_cast<unsigned long>(k));
  for (long n = 1; n * d < precision; ++n)
    out.at(n * d) = factor * Rational(sigma(2 * k - 1, n));
  return out;
}

Rational eisenstein_cusp_constant(long k, long c, long d) {
  require_weight(k);
  if (c < 1 || d < 1)
    throw std::invalid_argument("cusp label and dilation factor must be positive");
  return Rational(std::gcd(c, d), d).pow(static_cast<unsigned long>(2 * k));
}

Rational orthogonality_sum(long c, long d, const Level& level, long k) {
  require_weight(k);
  require_divisor(level, c, "cusp label");
  require_divisor(level, d, "divisor");
  long n = level.value();
  Rational total(0);
  for (long t : level.divisors()) {
    Rational term = Rational(n * std::gcd(c, t), t).pow(static_cast<unsigned long>(2 * k)) *
                    eisenstein_cusp_constant(k, t, d);
    total += Rational(parity_sign(omega(t) + omega(c))) * term;
  }
  return total;
}

EisCombo::EisCombo(Level level, long k, const std::map<long, Rational>& coeffs)
    : level_(std::move(level)), k_(k) {
  require_weight(k_);
  for (const auto& [d, a] : coeffs) {
    (void)a;
    require_divisor(level_, d, "combination index");
  }
  for (long d : level_.divisors()) {
    auto it = coeffs.find(d);
    a_[d] = (it == coeffs.end()) ? Rational(0) : it->second;
  }
}

const Rational& EisCombo::at(long d) const {
  require_divisor(level_, d, "combination index");
  return a_.at(d);
}

CuspConstants::CuspConstants(Level level, long k,
                             const std::map<long, Rational>& values)
    : level_(std::move(level)), k_(k) {
  require_weight(k_);
  for (const auto& [c, v] : values) {
    (void)v;
    require_divisor(level_, c, "cusp label");
  }
  for (long c : level_.divisors()) {
    auto it = values.find(c);
    v_[c] = (it == values.end()) ? Rational(0) : it->second;
  }
}

const Rational& CuspConstants::at(long c) const {
  require_divisor(level_, c, "cusp label");
  return v_.at(c);
}

CuspConstants cusp_constants_of(const EisCombo& combo) {
  std::map<long, Rational> values;
  for (long c : combo.level().divisors()) {
    Rational v(0);
    for (const auto& [d, a] : combo.coeffs()) {
      if (a.is_zero()) continue;
      v += a * eisenstein_cusp_constant(combo.k(), c, d);
    }
    values[c] = v;
  }
  return CuspConstants(combo.level(), combo.k(), values);
}

EisCombo project_eisenstein(const CuspConstants& constants) {
  const Level& level = constants.level();
  long k = constants.k();
  long n = level.value();
  Rational denom{orthogonality_denominator(level, k)};
  std::map<long, Rational> a;
  for (long d : level.divisors()) {
    Rational num(0);
    for (long c : level.divisors()) {
      const Rational& v = constants.at(c);
      if (v.is_zero()) continue;
      num += Rational(parity_sign(omega(d) + omega(c))) *
             Rational(n * std::gcd(c, d), c).pow(static_cast<unsigned long>(2 * k)) * v;
    }
    a[d] = num / denom;
  }
  return EisCombo(level, k, a);
}

EisCombo solve_constant_system(const CuspConstants& constants) {
  const Level& level = constants.level();
  long k = constants.k();
  const auto& divs = level.divisors();
  size_t nd = divs.size();
  std::vector<std::vector<Rational>> m(nd, std::vector<Rational>(nd + 1));
  for (size_t i = 0; i < nd; ++i) {
    for (size_t j = 0; j < nd; ++j)
      m[i][j] = eisenstein_cusp_constant(k, divs[i], divs[j]);
    m[i][nd] = constants.at(divs[i]);
  }
  std::vector<Rational> sol;
  eliminate(m, &sol);
  std::map<long, Rational> a;
  for (size_t j = 0; j < nd; ++j) a[divs[j]] = sol[j];
  return EisCombo(level, k, a);
}

QSeries eis_combo_series(const EisCombo& combo, long precision) {
  QSeries acc(precision);
  for (const auto& [d, a] : combo.coeffs()) {
    if (a.is_zero()) continue;
    acc = series_add(acc, series_scale(a, eisenstein_series(combo.k(), d, precision)));
  }
  return acc;
}

Rational eis_coefficient(const EisCombo& combo, long n) {
  if (n < 1)
    throw std::invalid_argument(
        "eis_coefficient handles n >= 1; the constant term is the sum of the "
        "combination coefficients");
  long k = combo.k();
  Rational factor = Rational(0) - Rational(4 * k) / bernoulli(2 * static_cast<unsigned long>(k));
  Rational total(0);
  for (const auto& [d, a] : combo.coeffs()) {
    if (a.is_zero()) continue;
    Int s = sigma(2 * k - 1, n, d);
    if (sgn(s) != 0) total += a * Rational(s);
  }
  return factor * total;
}

QSeries cusp_residual(const QSeries& f, const EisCombo& combo) {
  QSeries r = series_sub(f, eis_combo_series(combo, f.precision()));
  if (!r[0].is_zero())
    throw verification_error(
        "residual has nonzero constant term " + r[0].str() +
        "; the combination does not match the form at infinity");
  return r;
}

bool eis_injectivity_check(const Level& level, long k) {
  require_weight(k);
  const auto& divs = level.divisors();
  size_t nd = divs.size();
  long bound = (level.value() == 1) ? 0 : level.value() / level.smallest_prime();
  std::vector<std::vector<Rational>> m;
  for (long n = 0; n <= bound; ++n) {
    std::vector<Rational> row(nd);
    for (size_t j = 0; j < nd; ++j)
      row[j] = (n == 0) ? Rational(1) : Rational(sigma(2 * k - 1, n, divs[j]));
    m.push_back(std::move(row));
  }
  return eliminate(m, nullptr) == nd;
}

}  // namespace eispart
