#include "eispart/applications.hpp"

#include <functional>
#include <numeric>

namespace eispart {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

Int eis_denominator(const Level& level, long k) {
  Int prod = 1;
  for (long p : level.primes())
    prod *= int_pow(p, static_cast<unsigned long>(2 * k)) - 1;
  return prod;
}

Rational eis_prefactor(long k) {
  // 4k / B_{2k}
  return Rational(4 * k) / bernoulli(2 * static_cast<unsigned long>(k));
}

}  // namespace

ConvSpec::ConvSpec(long a, long b, long l, long m)
    : ConvSpec(a, b, l, m, make_level(std::lcm(std::max<long>(a, 1), std::max<long>(b, 1)))) {}

ConvSpec::ConvSpec(long a, long b, long l, long m, Level level)
    : a_(a), b_(b), l_(l), m_(m), level_(std::move(level)) {
  if (a_ < 1 || b_ < 1)
    throw std::invalid_argument("dilation factors a, b must be positive");
  if (l_ < 2 || m_ < 2)
    throw std::invalid_argument(
        "convolution weights need l >= 2 and m >= 2 (weight-2 factors are "
        "excluded)");
  if (!level_.divides(a_) || !level_.divides(b_) ||
      level_.value() % std::lcm(a_, b_) != 0)
    throw std::invalid_argument("level must be a square-free multiple of lcm(a,b)");
}

Int conv_sum_bruteforce(const ConvSpec& spec, long n) {
  if (n < 1) throw std::invalid_argument("convolution sums are indexed by n >= 1");
  Int total = 0;
  for (long r = 1; spec.a() * r < n; ++r) {
    long rest = n - spec.a() * r;
    if (rest % spec.b() != 0) continue;
    total += sigma(2 * spec.l() - 1, r) * sigma(2 * spec.m() - 1, rest / spec.b());
  }
  return total;
}

std::vector<Int> conv_sum_bruteforce_table(const ConvSpec& spec, long nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
  std::vector<Int> sl = sigma_table(2 * spec.l() - 1, nmax / spec.a());
  std::vector<Int> sm = sigma_table(2 * spec.m() - 1, nmax / spec.b());
  std::vector<Int> w(static_cast<size_t>(nmax) + 1, Int(0));
  for (long r = 1; r * spec.a() <= nmax; ++r)
    for (long s = 1; r * spec.a() + s * spec.b() <= nmax; ++s)
      w[static_cast<size_t>(r * spec.a() + s * spec.b())] +=
          sl[static_cast<size_t>(r)] * sm[static_cast<size_t>(s)];
  return w;
}

EisCombo conv_eis_combo(const ConvSpec& spec) {
  const Level& level = spec.level();
  long n = level.value();
  long k = spec.k();
  Rational denom{eis_denominator(level, k)};
  std::map<long, Rational> a;
  for (long d : level.divisors()) {
    Rational num(0);
    for (long c : level.divisors()) {
      Rational term =
          Rational(n * std::gcd(c, d), c).pow(static_cast<unsigned long>(2 * k)) *
          Rational(std::gcd(spec.a(), c), spec.a()).pow(static_cast<unsigned long>(2 * spec.l())) *
          Rational(std::gcd(spec.b(), c), spec.b()).pow(static_cast<unsigned long>(2 * spec.m()));
      num += Rational(parity_sign(omega(d) + omega(c))) * term;
    }
    a[d] = num / denom;
  }
  return EisCombo(level, k, a);
}

std::pair<EisCombo, QSeries> product_decomposition(const ConvSpec& spec,
                                                   long precision) {
  QSeries f = series_mul(eisenstein_series(spec.l(), spec.a(), precision),
                         eisenstein_series(spec.m(), spec.b(), precision));
  EisCombo combo = conv_eis_combo(spec);
  QSeries residual = cusp_residual(f, combo);
  return {combo, residual};
}

Rational conv_sum_formula(const ConvSpec& spec, long n, const Rational& cusp) {
  if (n < 1) throw std::invalid_argument("convolution sums are indexed by n >= 1");
  long l = spec.l(), m = spec.m(), k = spec.k();
  Rational bl = bernoulli(2 * static_cast<unsigned long>(l));
  Rational bm = bernoulli(2 * static_cast<unsigned long>(m));
  Rational bk = bernoulli(2 * static_cast<unsigned long>(k));
  EisCombo combo = conv_eis_combo(spec);
  Rational eis(0);
  for (const auto& [d, ad] : combo.coeffs()) {
    if (ad.is_zero()) continue;
    eis += ad * Rational(sigma(2 * k - 1, n, d));
  }
  Rational w = Rational(0) - Rational(k) * bl * bm / (Rational(4 * l * m) * bk) * eis;
  w += bl / Rational(4 * l) * Rational(sigma(2 * m - 1, n, spec.b()));
  w += bm / Rational(4 * m) * Rational(sigma(2 * l - 1, n, spec.a()));
  w += bl * bm / Rational(16 * l * m) * cusp;
  return w;
}

std::vector<Rational> conv_b_coefficients(const ConvSpec& spec) {
  if (6 % std::lcm(spec.a(), spec.b()) != 0)
    throw std::invalid_argument(
        "the level-6 cusp basis needs lcm(a,b) dividing 6");
  long l = spec.l(), m = spec.m(), k = spec.k();
  long nb = 2 * k - 3;
  // The combination is always taken at level 6, whatever lcm(a,b) is.
  ConvSpec spec6(spec.a(), spec.b(), l, m, make_level(6));
  EisCombo combo = conv_eis_combo(spec6);
  std::vector<QSeries> basis = s_basis(k, nb + 1);
  Rational pref = eis_prefactor(k);
  Rational cl = Rational(4 * l) / bernoulli(2 * static_cast<unsigned long>(l));
  Rational cm = Rational(4 * m) / bernoulli(2 * static_cast<unsigned long>(m));
  std::vector<Rational> b;
  for (long i = 1; i <= nb; ++i) {
    Rational eis(0);
    for (const auto& [d, ad] : combo.coeffs()) {
      if (ad.is_zero()) continue;
      eis += ad * Rational(sigma(2 * k - 1, i, d));
    }
    Rational bi = pref * eis;
    bi -= cm * Rational(sigma(2 * m - 1, i, spec.b()));
    bi -= cl * Rational(sigma(2 * l - 1, i, spec.a()));
    bi += cl * cm * Rational(conv_sum_bruteforce(spec6, i));
    for (long j = 1; j < i; ++j)
      bi -= b[static_cast<size_t>(j - 1)] * basis[static_cast<size_t>(j - 1)][i];
    b.push_back(bi);
  }
  return b;
}

namespace {

// Validates before the 2N level is formed, so an even N reports the real
// problem instead of "2N is not square-free".
Level doubled_level(const Level& level) {
  if (level.value() % 2 == 0)
    throw std::invalid_argument("quadratic form level must be odd");
  return make_level(2 * level.value());
}

}  // namespace

QuadFormSpec::QuadFormSpec(Level level, const std::map<long, long>& exponents)
    : level_(std::move(level)), level2_(doubled_level(level_)) {
  long total = 0;
  for (const auto& [delta, r] : exponents) {
    if (!level_.divides(delta))
      throw std::invalid_argument("form coefficient " + std::to_string(delta) +
                                  " does not divide the level " +
                                  std::to_string(level_.value()));
    if (r < 0)
      throw std::invalid_argument("block multiplicities must be non-negative");
    total += r;
  }
  if (total < 1)
    throw std::invalid_argument("at least one block multiplicity must be positive");
  for (long d : level_.divisors()) {
    auto it = exponents.find(d);
    exps_[d] = (it == exponents.end()) ? 0 : it->second;
  }
}

long QuadFormSpec::exponent_at(long delta) const {
  auto it = exps_.find(delta);
  if (it == exps_.end())
    throw std::invalid_argument(std::to_string(delta) +
                                " does not divide the level " +
                                std::to_string(level_.value()));
  return it->second;
}

long QuadFormSpec::r_sum() const {
  long s = 0;
  for (const auto& [delta, r] : exps_) s += r;
  return s;
}

Int repcount_bruteforce(const std::vector<std::pair<long, long>>& blocks,
                        long n) {
  if (n < 0) throw std::invalid_argument("representation counts need n >= 0");
  std::vector<long> coeff;
  for (const auto& [a, r] : blocks) {
    if (a < 1) throw std::invalid_argument("form coefficients must be positive");
    if (r < 0) throw std::invalid_argument("block multiplicities must be non-negative");
    coeff.insert(coeff.end(), static_cast<size_t>(r), a);
  }
  if (coeff.empty())
    throw std::invalid_argument("the form must have at least one variable");
  // memo[v][rem] = ways for variables v.. to sum to rem; -1 marks unset.
  std::vector<std::vector<Int>> memo(
      coeff.size(), std::vector<Int>(static_cast<size_t>(n) + 1, Int(-1)));
  std::function<Int(size_t, long)> count = [&](size_t v, long rem) -> Int {
    if (v == coeff.size()) return rem == 0 ? 1 : 0;
    Int& slot = memo[v][static_cast<size_t>(rem)];
    if (sgn(slot) >= 0) return slot;
    Int total = 0;
    long a = coeff[v];
    for (long x = 0; a * x * x <= rem; ++x)
      total += (x == 0 ? 1 : 2) * count(v + 1, rem - a * x * x);
    slot = total;
    return total;
  };
  return count(0, n);
}

QSeries g_power_product(const QuadFormSpec& spec, long precision) {
  QSeries g = g_series(precision);
  QSeries acc = one_series(precision);
  for (const auto& [delta, r] : spec.exponents()) {
    if (r == 0) continue;
    acc = series_mul(acc, series_pow(dilate(g, delta), 8 * r));
  }
  return acc;
}

QSeries repcount_series(const QuadFormSpec& spec, long precision) {
  QSeries phi = phi_series(precision);
  QSeries acc = one_series(precision);
  for (const auto& [delta, r] : spec.exponents()) {
    if (r == 0) continue;
    acc = series_mul(acc, series_pow(dilate(phi, delta), 8 * r));
  }
  return acc;
}

EisCombo quad_eis_combo(const QuadFormSpec& spec) {
  const Level& level = spec.level();
  const Level& level2 = spec.extended_level();
  long n = level.value();
  long k = spec.k();
  Rational denom{eis_denominator(level2, k)};
  std::map<long, Rational> a;
  for (long e : level2.divisors()) {
    Rational num(0);
    for (long c : level.divisors()) {
      Rational term =
          Rational(n * std::gcd(2 * c, e), c).pow(static_cast<unsigned long>(2 * k));
      for (const auto& [delta, r] : spec.exponents()) {
        if (r == 0) continue;
        term *= Rational(std::gcd(2 * c, delta), delta)
                    .pow(static_cast<unsigned long>(4 * r));
      }
      num += Rational(parity_sign(omega(e) + omega(2 * c))) * term;
    }
    a[e] = num / denom;
  }
  return EisCombo(level2, k, a);
}

std::pair<EisCombo, QSeries> quad_product_decomposition(
    const QuadFormSpec& spec, long precision) {
  QSeries f = g_power_product(spec, precision);
  EisCombo combo = quad_eis_combo(spec);
  QSeries residual = cusp_residual(f, combo);
  return {combo, residual};
}

Rational repcount_formula(const QuadFormSpec& spec, long n,
                          const Rational& cusp) {
  if (n < 1) throw std::invalid_argument("representation formula needs n >= 1");
  const Level& level = spec.level();
  long nn = level.value();
  long k = spec.k();
  Rational denom{eis_denominator(spec.extended_level(), k)};
  long nsign = (n % 2 == 0) ? 1 : -1;
  Rational eis(0);
  for (long d : level.divisors()) {
    Int s2d = sigma(2 * k - 1, n, 2 * d);
    Int sd = sigma(2 * k - 1, n, d);
    if (sgn(s2d) == 0 && sgn(sd) == 0) continue;
    for (long c : level.divisors()) {
      Rational factor(1);
      for (const auto& [delta, r] : spec.exponents()) {
        if (r == 0) continue;
        factor *= Rational(std::gcd(2 * c, delta), delta)
                      .pow(static_cast<unsigned long>(4 * r));
      }
      int sign = parity_sign(omega(d) + omega(c));
      Rational block(0);
      if (sgn(s2d) != 0)
        block -= Rational(2 * nn * std::gcd(c, d), c)
                     .pow(static_cast<unsigned long>(2 * k)) *
                 Rational(s2d);
      if (sgn(sd) != 0)
        block += Rational(nn * std::gcd(c, d), c)
                     .pow(static_cast<unsigned long>(2 * k)) *
                 Rational(nsign) * Rational(sd);
      eis += Rational(sign) * factor * block;
    }
  }
  return eis_prefactor(k) * eis / denom + Rational(nsign) * cusp;
}

Rational repcount_two_prime(long p, long r1, long rp, long n,
                            const Rational& cusp) {
  if (p < 3 || p % 2 == 0 || !is_squarefree(p) || omega(p) != 1)
    throw std::invalid_argument("p must be an odd prime");
  if (r1 < 0 || rp < 0 || r1 + rp < 1)
    throw std::invalid_argument(
        "block multiplicities must be non-negative and not both zero");
  if (n < 1) throw std::invalid_argument("representation formula needs n >= 1");
  long k = 2 * (r1 + rp);
  unsigned long kk = static_cast<unsigned long>(2 * k);
  Rational denom{(int_pow(2L, kk) - 1) * (int_pow(p, kk) - 1)};
  Int a = int_pow(p, static_cast<unsigned long>(4 * r1)) - 1;
  Int b = int_pow(p, kk) - int_pow(p, static_cast<unsigned long>(4 * r1));
  Int two2k = int_pow(2L, kk);
  long nsign = (n % 2 == 0) ? 1 : -1;
  Rational eis(0);
  eis += Rational(nsign * a) * Rational(sigma(2 * k - 1, n));
  eis -= Rational(two2k * a) * Rational(sigma(2 * k - 1, n, 2));
  eis += Rational(nsign * b) * Rational(sigma(2 * k - 1, n, p));
  eis -= Rational(two2k * b) * Rational(sigma(2 * k - 1, n, 2 * p));
  return eis_prefactor(k) * eis / denom + Rational(nsign) * cusp;
}

std::vector<Rational> quad_b_coefficients(long r1, long r3) {
  if (r1 < 0 || r3 < 0 || r1 + r3 < 1)
    throw std::invalid_argument(
        "block multiplicities must be non-negative and not both zero");
  long k = 2 * (r1 + r3);
  long nb = 2 * k - 3;
  unsigned long kk = static_cast<unsigned long>(2 * k);
  std::vector<QSeries> basis = s_basis(k, nb + 1);
  Rational denom{(int_pow(2L, kk) - 1) * (int_pow(3L, kk) - 1)};
  Int p4r1 = int_pow(3L, static_cast<unsigned long>(4 * r1));
  Int p2k = int_pow(3L, kk);
  Int two2k = int_pow(2L, kk);
  Rational pref = eis_prefactor(k);
  std::vector<std::pair<long, long>> blocks{{1, 8 * r1}, {3, 8 * r3}};
  std::vector<Rational> b;
  for (long i = 1; i <= nb; ++i) {
    Rational bi = Rational(i % 2 == 0 ? 1 : -1) *
                  Rational(repcount_bruteforce(blocks, i));
    Rational eis(0);
    eis += Rational(1 - p4r1) * Rational(sigma(2 * k - 1, i));
    eis += Rational(two2k * (p4r1 - 1)) * Rational(sigma(2 * k - 1, i, 2));
    eis += Rational(p4r1 - p2k) * Rational(sigma(2 * k - 1, i, 3));
    eis += Rational(two2k * (p2k - p4r1)) * Rational(sigma(2 * k - 1, i, 6));
    bi += pref * eis / denom;
    for (long j = 1; j < i; ++j)
      bi -= b[static_cast<size_t>(j - 1)] * basis[static_cast<size_t>(j - 1)][i];
    b.push_back(bi);
  }
  return b;
}

bool ramanujan_mordell_check(long k, long n) {
  if (k < 1) throw std::invalid_argument("number of squares 8k needs k >= 1");
  if (n < 1) throw std::invalid_argument("representation formula needs n >= 1");
  QuadFormSpec spec(make_level(3), {{1, k}, {3, 0}});
  long precision = n + 1;
  auto [combo, residual] = quad_product_decomposition(spec, precision);
  Rational formula = repcount_two_prime(3, k, 0, n, residual[n]);
  QSeries theta = repcount_series(spec, precision);
  return formula == theta[n];
}

std::vector<TableRow> conv_table(const ConvSpec& spec, long nmax) {
  if (nmax < 1) throw std::invalid_argument("table needs nmax >= 1");
  auto [combo, residual] = product_decomposition(spec, nmax + 1);
  (void)combo;
  std::vector<Int> brute = conv_sum_bruteforce_table(spec, nmax);
  std::vector<TableRow> rows;
  for (long n = 1; n <= nmax; ++n) {
    TableRow row{n, brute[static_cast<size_t>(n)],
                 conv_sum_formula(spec, n, residual[n]), residual[n], false};
    row.match = Rational(row.brute_force) == row.formula;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> quad_table(const QuadFormSpec& spec, long nmax) {
  if (nmax < 1) throw std::invalid_argument("table needs nmax >= 1");
  auto [combo, residual] = quad_product_decomposition(spec, nmax + 1);
  (void)combo;
  std::vector<std::pair<long, long>> blocks;
  for (const auto& [delta, r] : spec.exponents())
    if (r > 0) blocks.emplace_back(delta, 8 * r);
  std::vector<TableRow> rows;
  for (long n = 1; n <= nmax; ++n) {
    TableRow row{n, repcount_bruteforce(blocks, n),
                 repcount_formula(spec, n, residual[n]), residual[n], false};
    row.match = Rational(row.brute_force) == row.formula;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eispart
