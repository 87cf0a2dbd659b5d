#pragma once

#include <map>
#include <utility>

#include "eispart/qseries.hpp"

namespace eispart {

// E_{2k}(q^d) = 1 - (4k/B_{2k}) sum_{n>=1} sigma_{2k-1}(n) q^(dn),
// for k >= 2 and d >= 1. Weight 2 (k = 1) is not handled anywhere in this
// library: E_2 is not modular and the formulas below all assume 2k >= 4.
QSeries eisenstein_series(long k, long d, long precision);

// Constant term of E_{2k}(dz) at the cusp 1/c of Gamma_0(N), for c | N and
// d | N and N square-free: (gcd(c,d)/d)^(2k). Depends on N only through the
// requirement that c and d divide it.
Rational eisenstein_cusp_constant(long k, long c, long d);

// T(c,d) = sum_{t|N} (-1)^(omega(t)+omega(c)) (N gcd(c,t)/t)^(2k)
//                    (gcd(t,d)/d)^(2k),
// which equals prod_{p|N} (p^(2k)-1) when c = d and 0 otherwise. This is the
// inversion identity behind project_eisenstein.
Rational orthogonality_sum(long c, long d, const Level& level, long k);

// A formal combination sum_{d|N} a_d E_{2k}(dz). Divisors missing from the
// coefficient map get coefficient 0.
class EisCombo {
 public:
  EisCombo(Level level, long k, const std::map<long, Rational>& coeffs);

  const Level& level() const { return level_; }
  long k() const { return k_; }
  const std::map<long, Rational>& coeffs() const { return a_; }
  const Rational& at(long d) const;

  friend bool operator==(const EisCombo& x, const EisCombo& y) {
    return x.level_.value() == y.level_.value() && x.k_ == y.k_ && x.a_ == y.a_;
  }

 private:
  Level level_;
  long k_;
  std::map<long, Rational> a_;
};

// The constant terms [0]_c f of a weight-2k form at the cusps 1/c, c | N.
// Missing cusps get value 0.
class CuspConstants {
 public:
  CuspConstants(Level level, long k, const std::map<long, Rational>& values);

  const Level& level() const { return level_; }
  long k() const { return k_; }
  const std::map<long, Rational>& values() const { return v_; }
  const Rational& at(long c) const;

  friend bool operator==(const CuspConstants& x, const CuspConstants& y) {
    return x.level_.value() == y.level_.value() && x.k_ == y.k_ && x.v_ == y.v_;
  }

 private:
  Level level_;
  long k_;
  std::map<long, Rational> v_;
};

// Forward map: the cusp constants of a combination, via
// [0]_c sum_d a_d E_{2k}(dz) = sum_d a_d (gcd(c,d)/d)^(2k).
CuspConstants cusp_constants_of(const EisCombo& combo);

// Closed-form inversion: recovers the unique combination with the given cusp
// constants,
//   a_d = sum_{c|N} (-1)^(omega(d)+omega(c)) (N gcd(c,d)/c)^(2k) [0]_c f
//         / prod_{p|N} (p^(2k)-1).
EisCombo project_eisenstein(const CuspConstants& constants);

// Same inversion done the pedestrian way: exact Gaussian elimination on the
// linear system (gcd(c,d)/d)^(2k) a_d = [0]_c f. Serves as an independent
// cross-check of project_eisenstein.
EisCombo solve_constant_system(const CuspConstants& constants);

QSeries eis_combo_series(const EisCombo& combo, long precision);

// Coefficient of q^n (n >= 1) of the combination without expanding a series:
// -(4k/B_{2k}) sum_{d|N} a_d sigma_{2k-1}(n/d).
Rational eis_coefficient(const EisCombo& combo, long n);

// f minus the expansion of the combination. Throws verification_error if the
// residual has a nonzero constant term (the combination then cannot be the
// Eisenstein part of f).
QSeries cusp_residual(const QSeries& f, const EisCombo& combo);

// Checks that a combination is determined by its first floor(N/p1)+1
// coefficients at infinity (p1 the smallest prime of N; for N = 1 the
// constant term alone): the matrix with row 0 all ones and row n >= 1 given
// by sigma_{2k-1}(n/d), columns indexed by d | N, must have full column rank.
bool eis_injectivity_check(const Level& level, long k);

}  // namespace eispart
