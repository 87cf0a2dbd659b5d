#pragma once

#include <utility>
#include <vector>

#include "eispart/eisenstein.hpp"
#include "eispart/etaquot.hpp"

namespace eispart {

// Parameters of a convolution sum
//   W(n) = sum_{a r + b s = n, r,s >= 1} sigma_{2l-1}(r) sigma_{2m-1}(s),
// attached to the product E_{2l}(az) E_{2m}(bz) of weight 2k = 2(l+m) on
// Gamma_0(N) with lcm(a,b) | N and N square-free. l, m >= 2.
class ConvSpec {
 public:
  ConvSpec(long a, long b, long l, long m);  // level defaults to lcm(a, b)
  ConvSpec(long a, long b, long l, long m, Level level);

  long a() const { return a_; }
  long b() const { return b_; }
  long l() const { return l_; }
  long m() const { return m_; }
  long k() const { return l_ + m_; }
  const Level& level() const { return level_; }

 private:
  long a_, b_, l_, m_;
  Level level_;
};

// W(n) summed literally over the lattice points of a r + b s = n.
Int conv_sum_bruteforce(const ConvSpec& spec, long n);
// Same values for n = 0..nmax (entry 0 is 0), using sieved divisor sums.
std::vector<Int> conv_sum_bruteforce_table(const ConvSpec& spec, long nmax);

// The Eisenstein part of E_{2l}(az) E_{2m}(bz) in closed form:
//   A_d = sum_{c|N} (-1)^(omega(d)+omega(c)) (N gcd(c,d)/c)^(2k)
//           (gcd(a,c)/a)^(2l) (gcd(b,c)/b)^(2m)  /  prod_{p|N} (p^(2k)-1).
EisCombo conv_eis_combo(const ConvSpec& spec);

// E_{2l}(az) E_{2m}(bz) = sum_d A_d E_{2k}(dz) + C(z); returns the
// combination and the cusp residual C expanded to the given precision.
std::pair<EisCombo, QSeries> product_decomposition(const ConvSpec& spec,
                                                   long precision);

// Closed form for W(n), n >= 1, given the coefficient of q^n in the cusp
// residual:
//   W(n) = -(k B_{2l} B_{2m} / (4 l m B_{2k})) sum_{d|N} A_d sigma_{2k-1}(n/d)
//          + (B_{2l}/(4l)) sigma_{2m-1}(n/b) + (B_{2m}/(4m)) sigma_{2l-1}(n/a)
//          + (B_{2l} B_{2m} / (16 l m)) * cusp.
Rational conv_sum_formula(const ConvSpec& spec, long n, const Rational& cusp);

// Coefficients of the residual of E_{2l}(az) E_{2m}(bz) in the triangular
// weight-2k cusp basis on Gamma_0(6), computed by the self-contained
// recursion (brute-force W values plus divisor sums, no series subtraction):
//   b_i = (4k/B_{2k}) sum_d A_d sigma_{2k-1}(i/d)
//         - (4m/B_{2m}) sigma_{2m-1}(i/b) - (4l/B_{2l}) sigma_{2l-1}(i/a)
//         + (16 l m / (B_{2l} B_{2m})) W(i) - sum_{j<i} b_j [q^i] S_j.
// Requires lcm(a,b) | 6; the combination is taken at level 6.
std::vector<Rational> conv_b_coefficients(const ConvSpec& spec);

// A diagonal quadratic form sum_delta delta (x_1^2 + ... + x_{8 r_delta}^2)
// over the divisors delta of an odd square-free N, with all r_delta >= 0 and
// not all zero. Its theta series has weight 2k = 2 sum r_delta and lives on
// Gamma_0(2N), so the Eisenstein part is a combination at level 2N.
class QuadFormSpec {
 public:
  QuadFormSpec(Level level, const std::map<long, long>& exponents);

  const Level& level() const { return level_; }        // N (odd)
  const Level& extended_level() const { return level2_; }  // 2N
  const std::map<long, long>& exponents() const { return exps_; }
  long exponent_at(long delta) const;
  long r_sum() const;
  long k() const { return 2 * r_sum(); }

 private:
  Level level_;
  Level level2_;
  std::map<long, long> exps_;
};

// Number of representations n = sum_i a_i x_i^2 over integer vectors, where
// the form has blocks (a_i, multiplicity r_i). Counted by direct recursion
// over the variables with per-variable bound floor(sqrt(n/a_i)), memoized on
// (variable, remainder). n >= 0; at least one variable.
Int repcount_bruteforce(const std::vector<std::pair<long, long>>& blocks,
                        long n);

// prod_delta g(q^delta)^(8 r_delta) with g = eta(z)^2/eta(2z); the signed
// generating function whose q -> -q twist counts representations.
QSeries g_power_product(const QuadFormSpec& spec, long precision);

// prod_delta phi(q^delta)^(8 r_delta): the actual theta series, coefficient
// of q^n equal to the representation count of n.
QSeries repcount_series(const QuadFormSpec& spec, long precision);

// Eisenstein part of the signed product on Gamma_0(2N):
//   A_e = sum_{c|N} (-1)^(omega(e)+omega(2c)) (N gcd(2c,e)/c)^(2k)
//           prod_delta (gcd(2c,delta)/delta)^(4 r_delta)
//         / prod_{p|2N} (p^(2k)-1),   for e | 2N.
EisCombo quad_eis_combo(const QuadFormSpec& spec);

// Signed product = sum_{e|2N} A_e E_{2k}(ez) + C(z); returns the combination
// and the (untwisted) residual C.
std::pair<EisCombo, QSeries> quad_product_decomposition(
    const QuadFormSpec& spec, long precision);

// Closed form for the representation count of n >= 1. `cusp` is the
// coefficient of q^n in the untwisted residual C; the q -> -q twist that
// turns the signed product into the theta series is applied internally:
//   r(n) = (4k/B_{2k}) sum_{d|N} sum_{c|N} prod_delta (gcd(2c,delta)/delta)^(4 r_delta)
//            * [ (-1)^(omega(d)+omega(c)+1) (2N gcd(c,d)/c)^(2k) sigma_{2k-1}(n/2d)
//              + (-1)^(omega(d)+omega(c)) (N gcd(c,d)/c)^(2k) (-1)^n sigma_{2k-1}(n/d) ]
//            / prod_{p|2N} (p^(2k)-1)
//          + (-1)^n * cusp.
Rational repcount_formula(const QuadFormSpec& spec, long n,
                          const Rational& cusp);

// Specialization to N = p an odd prime and exponent blocks (1^(8 r1), p^(8 rp)),
// weight 2k = 4(r1+rp). With A = p^(4 r1) - 1 and B = p^(2k) - p^(4 r1):
//   r(n) = (4k/B_{2k}) [ (-1)^n A sigma_{2k-1}(n) - 2^(2k) A sigma_{2k-1}(n/2)
//          + (-1)^n B sigma_{2k-1}(n/p) - 2^(2k) B sigma_{2k-1}(n/2p) ]
//          / ((2^(2k)-1)(p^(2k)-1))
//        + (-1)^n * cusp.
Rational repcount_two_prime(long p, long r1, long rp, long n,
                            const Rational& cusp);

// Coefficients of the untwisted residual of the (1^(8 r1), 3^(8 r3)) form in
// the weight-2k level-6 cusp basis, by the self-contained recursion
//   b_i = (-1)^i r(i) + (4k/B_{2k}) [ (1 - 3^(4 r1)) sigma_{2k-1}(i)
//         + 2^(2k)(3^(4 r1) - 1) sigma_{2k-1}(i/2)
//         + (3^(4 r1) - 3^(2k)) sigma_{2k-1}(i/3)
//         + 2^(2k)(3^(2k) - 3^(4 r1)) sigma_{2k-1}(i/6) ]
//         / ((2^(2k)-1)(3^(2k)-1))
//         - sum_{j<i} b_j [q^i] S_j,
// with r(i) the true representation count (lattice enumeration).
std::vector<Rational> quad_b_coefficients(long r1, long r3);

// Sum-of-8k-squares check at one n: the two-prime closed form with
// (p, r1, rp) = (3, k, 0) against the coefficient of q^n in phi(q)^(8k).
bool ramanujan_mordell_check(long k, long n);

// One row of a comparison table: brute force against closed formula, with
// the cusp coefficient that feeds the formula.
struct TableRow {
  long n;
  Int brute_force;
  Rational formula;
  Rational cusp_coefficient;
  bool match;
};

std::vector<TableRow> conv_table(const ConvSpec& spec, long nmax);
std::vector<TableRow> quad_table(const QuadFormSpec& spec, long nmax);

}  // namespace eispart
