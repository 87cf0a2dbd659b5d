#include "eispart/arith.hpp"

#include <algorithm>
#include <mutex>

namespace eispart {

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational denominator is zero");
  mpz_set(mpq_numref(v_.get_mpq_t()), num.get_mpz_t());
  mpz_set(mpq_denref(v_.get_mpq_t()), den.get_mpz_t());
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (num.empty() || den.empty() || den.find('/') != std::string::npos)
    throw std::invalid_argument("malformed rational literal: " + s);
  return Rational(Int(num), Int(den));  // Int(string) rejects non-digits
}

Rational Rational::pow(unsigned long e) const {
  // gcd(n,d) = 1 implies gcd(n^e, d^e) = 1, so the result is canonical.
  Rational r;
  mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational bernoulli(unsigned long m) {
  static std::vector<Rational> table{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= m) {
    // B_mm = -1/(mm+1) * sum_{j<mm} C(mm+1, j) B_j
    unsigned long mm = table.size();
    Rational s(0);
    for (unsigned long j = 0; j < mm; ++j)
      s += Rational(binomial(mm + 1, j)) * table[j];
    table.push_back(Rational(0) - s / Rational(static_cast<long>(mm) + 1));
  }
  return table[m];
}

Int sigma(long k, long n, long d) {
  if (k < 0) throw std::invalid_argument("sigma: exponent k must be non-negative");
  if (d < 1) throw std::invalid_argument("sigma: divisor argument d must be positive");
  if (n < 1 || n % d != 0) return 0;
  long m = n / d;
  Int total = 0, t;
  for (long i = 1; i * i <= m; ++i) {
    if (m % i != 0) continue;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(k));
    total += t;
    long j = m / i;
    if (j != i) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(j),
                    static_cast<unsigned long>(k));
      total += t;
    }
  }
  return total;
}

std::vector<Int> sigma_table(long k, long nmax) {
  if (k < 0) throw std::invalid_argument("sigma_table: exponent k must be non-negative");
  if (nmax < 0) throw std::invalid_argument("sigma_table: nmax must be non-negative");
  std::vector<Int> t(static_cast<size_t>(nmax) + 1, Int(0));
  Int p;
  for (long d = 1; d <= nmax; ++d) {
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(k));
    for (long m = d; m <= nmax; m += d) t[static_cast<size_t>(m)] += p;
  }
  return t;
}

int omega(long n) {
  if (n < 1) throw std::invalid_argument("omega: argument must be positive");
  int count = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  if (n > 1) ++count;
  return count;
}

bool is_squarefree(long n) {
  if (n < 1) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

Level::Level(long n) : n_(n) {
  if (n < 1) throw std::invalid_argument("level must be a positive integer");
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0)
      throw std::invalid_argument("level " + std::to_string(n) +
                                  " is not square-free (divisible by " +
                                  std::to_string(p) + "^2)");
    primes_.push_back(p);
  }
  if (rest > 1) primes_.push_back(rest);
  // Divisors of a square-free number are the subset products of its primes.
  divisors_.push_back(1);
  for (long p : primes_) {
    size_t sz = divisors_.size();
    for (size_t i = 0; i < sz; ++i) divisors_.push_back(divisors_[i] * p);
  }
  std::sort(divisors_.begin(), divisors_.end());
}

bool Level::divides(long d) const {
  return d >= 1 && n_ % d == 0;
}

long Level::smallest_prime() const {
  if (primes_.empty())
    throw std::invalid_argument("level 1 has no prime divisors");
  return primes_.front();
}

Level make_level(long n) { return Level(n); }

}  // namespace eispart
