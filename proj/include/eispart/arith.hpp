#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace eispart {

// Arbitrary-precision integer. GMP is the backing store for every number in
// the library; there is no floating point anywhere.
using Int = mpz_class;

// Thrown when an exact identity that must hold by construction fails to hold
// (inconsistent inputs or an implementation bug), as opposed to a bad
// argument, which throws std::invalid_argument.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}      // NOLINT(google-explicit-constructor)
  Rational(const Int& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);

  // Parses "p/q" or "p" with optional sign. Throws std::invalid_argument.
  static Rational from_string(const std::string& s);

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Non-negative integer power.
  Rational pow(unsigned long e) const;

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_), canonical_t{});
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), canonical_t{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), canonical_t{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), canonical_t{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_), canonical_t{});
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
  }

 private:
  // Tagged so that this never competes with the converting constructors
  // above: gmp expression templates convert to mpz_class and mpq_class alike.
  struct canonical_t {};
  // Assumes v is already canonical (all mpq_class arithmetic preserves this).
  Rational(const mpq_class& v, canonical_t) : v_(v) {}
  mpq_class v_;
};

Int int_pow(const Int& base, unsigned long e);
Int int_pow(long base, unsigned long e);
Int binomial(unsigned long n, unsigned long k);

// Bernoulli number B_m under the x/(e^x-1) convention, so B_1 = -1/2.
// Computed once by the recurrence sum_{j<=m} C(m+1,j) B_j = 0 and memoized;
// the shared table is mutex-guarded.
Rational bernoulli(unsigned long m);

// sigma_k(n/d): sum of k-th powers of the positive divisors of n/d, or 0
// whenever n/d is not a positive integer (d must be >= 1).
Int sigma(long k, long n, long d = 1);

// Sieved table of sigma_k(n) for n = 0..nmax (entry 0 is 0).
std::vector<Int> sigma_table(long k, long nmax);

// Number of distinct prime divisors of n >= 1.
int omega(long n);

bool is_squarefree(long n);

// A square-free positive level N with its primes and full divisor list.
// For square-free N the divisors double as cusp labels: c | N names the
// cusp 1/c, with c = N playing the role of the cusp at infinity.
class Level {
 public:
  explicit Level(long n);
  long value() const { return n_; }
  const std::vector<long>& primes() const { return primes_; }
  const std::vector<long>& divisors() const { return divisors_; }
  bool divides(long d) const;
  // Smallest prime divisor; throws for N = 1.
  long smallest_prime() const;

  friend bool operator==(const Level& a, const Level& b) { return a.n_ == b.n_; }

 private:
  long n_;
  std::vector<long> primes_;
  std::vector<long> divisors_;
};

// Validates square-freeness; rejects N divisible by any p^2.
Level make_level(long n);

}  // namespace eispart
