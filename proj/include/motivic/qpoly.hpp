#pragma once

#include <string>
#include <vector>

#include "motivic/common.hpp"

namespace motivic {

struct QPolyDivMod;

/// Dense univariate polynomial in q over the integers. Coefficient i is the
/// coefficient of q^i; trailing zeros are stripped, and the zero polynomial
/// has an empty coefficient list (degree() reports -1 for it).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(Int constant);
  explicit QPolynomial(std::vector<Int> coeffs);

  static QPolynomial monomial(Int coeff, int degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree, with -1 standing in for the degree of the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  QPolynomial operator-() const;
  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return c_ != o.c_; }

  /// Classical long division over the integers. Each elimination step must
  /// divide exactly; signals INEXACT_DIVISION otherwise. Always exact when
  /// the divisor is monic.
  QPolyDivMod divmod(const QPolynomial& divisor) const;

  Int eval(const Int& q) const;

  bool is_palindromic() const;

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Int> c_;
};

struct QPolyDivMod {
  QPolynomial quotient;
  QPolynomial remainder;
};

/// The q-integer [n]_q = 1 + q + ... + q^{n-1}.
QPolynomial q_integer(int n);

/// Gaussian binomial coefficient as an exact integer polynomial in q.
/// Zero when d > n or d < 0. Computed by the q-Pascal recurrence
///   binom(n+1, d) = binom(n, d) q^d + binom(n, d-1)
/// with memoization, so no rational intermediates arise.
QPolynomial gaussian_binomial(int n, int d);

struct QPascalTriple {
  QPolynomial whole;    // binom(n+1, d)
  QPolynomial scaled;   // binom(n, d), to be multiplied by q^d
  QPolynomial lowered;  // binom(n, d-1)
};

/// The three polynomials of the q-Pascal identity, with
/// whole = scaled * q^d + lowered. Requires 1 <= d <= n.
QPascalTriple q_pascal_step(int n, int d);

/// The exact quotient binom(n+r, r)_q / [n+1]_q, defined when gcd(r, n+1) = 1.
/// Signals NON_COPRIME otherwise, and INEXACT_DIVISION if the division leaves
/// a remainder (which would be a bug, not a property of the inputs).
QPolynomial g_quotient(int r, int n);

}  // namespace motivic
