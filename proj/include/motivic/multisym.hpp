#pragma once

#include <map>
#include <string>
#include <vector>

#include "motivic/common.hpp"

namespace motivic {

/// Exponent matrix of a monomial in d vector variables of n coordinates:
/// entry (i, j) is the exponent of x[i+1][j+1]. The symmetric group acts by
/// permuting rows.
struct ExponentMatrix {
  unsigned d = 0;
  unsigned n = 0;
  std::vector<unsigned> e;  // row-major, size d*n

  ExponentMatrix() = default;
  ExponentMatrix(unsigned d_, unsigned n_) : d(d_), n(n_), e(d_ * n_, 0) {}

  unsigned& at(unsigned row, unsigned col) { return e[row * n + col]; }
  unsigned at(unsigned row, unsigned col) const { return e[row * n + col]; }

  unsigned total_degree() const;
  unsigned row_degree(unsigned row) const;
  std::vector<unsigned> column_degrees() const;

  ExponentMatrix plus(const ExponentMatrix& o) const;
  ExponentMatrix with_rows_swapped(unsigned a, unsigned b) const;
  /// The maximal element of the row-permutation orbit: rows sorted by degree
  /// descending, then lexicographically descending.
  ExponentMatrix orbit_max() const;

  /// Monomial order: total degree, then the row-degree vector
  /// lexicographically, then the entries in row-major order. Returns <0,0,>0.
  static int compare(const ExponentMatrix& a, const ExponentMatrix& b);

  bool operator==(const ExponentMatrix& o) const {
    return d == o.d && n == o.n && e == o.e;
  }
};

struct ExponentMatrixOrder {
  bool operator()(const ExponentMatrix& a, const ExponentMatrix& b) const {
    return ExponentMatrix::compare(a, b) < 0;
  }
};

/// Exact rational-coefficient polynomial in d vector variables of n
/// coordinates each. Canonical form: no zero coefficients, terms keyed by
/// exponent matrix under a fixed monomial order.
class VectorVariablePoly {
 public:
  VectorVariablePoly() = default;
  VectorVariablePoly(unsigned d, unsigned n) : d_(d), n_(n) {}

  static VectorVariablePoly constant(unsigned d, unsigned n, const Rational& c);
  static VectorVariablePoly monomial(ExponentMatrix m, const Rational& c);

  unsigned vars() const { return d_; }
  unsigned coords() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<ExponentMatrix, Rational, ExponentMatrixOrder>& terms() const {
    return t_;
  }
  Rational coeff(const ExponentMatrix& m) const;

  VectorVariablePoly operator-() const;
  VectorVariablePoly operator+(const VectorVariablePoly& o) const;
  VectorVariablePoly operator-(const VectorVariablePoly& o) const;
  VectorVariablePoly operator*(const VectorVariablePoly& o) const;
  VectorVariablePoly scaled(const Rational& c) const;
  bool operator==(const VectorVariablePoly& o) const;

  /// Text format: terms `c * x[i][j]^e * ...` (1-based indices, rational c as
  /// `num/den`) separated by + or -.
  static VectorVariablePoly parse(const std::string& text, unsigned d = 0,
                                  unsigned n = 0);
  std::string to_string() const;

 private:
  void add_term(const ExponentMatrix& m, const Rational& c);
  unsigned d_ = 0;
  unsigned n_ = 0;
  std::map<ExponentMatrix, Rational, ExponentMatrixOrder> t_;
};

/// Index (k_1, ..., k_n) of an elementary multisymmetric polynomial; valid
/// when 1 <= sum k_i <= d.
struct ElementaryIndex {
  std::vector<unsigned> k;

  unsigned total() const;
  /// Order used for listings and product keys: total ascending, then
  /// lexicographically descending (so (1,0) precedes (0,1)).
  static int compare(const ElementaryIndex& a, const ElementaryIndex& b);
  bool operator==(const ElementaryIndex& o) const { return k == o.k; }
  bool operator<(const ElementaryIndex& o) const { return compare(*this, o) < 0; }
  std::string to_string() const;
};

/// All valid indices for (d, n) in their canonical order.
std::vector<ElementaryIndex> elementary_indices(unsigned d, unsigned n);

/// The elementary multisymmetric polynomial e_k: the coefficient of
/// t_1^{k_1}...t_n^{k_n} in prod_i (1 + x[i][1] t_1 + ... + x[i][n] t_n).
/// Signals INVALID_INDEX when sum k_i is outside 1..d.
VectorVariablePoly elementary_multisym(const ElementaryIndex& k, unsigned d, unsigned n);

/// Whether p is fixed by the row-permutation action (checked on the adjacent
/// transpositions, which generate).
bool is_invariant(const VectorVariablePoly& p);

/// Polynomial with rational coefficients in the e_k: each term is a multiset
/// of indices (a product of elementary polynomials) with a coefficient.
class EPolynomial {
 public:
  using Product = std::vector<ElementaryIndex>;  // sorted under ElementaryIndex order

  bool is_zero() const { return t_.empty(); }
  const std::map<Product, Rational>& terms() const { return t_; }

  void add(const Product& product, const Rational& c);
  EPolynomial& operator+=(const EPolynomial& o);
  EPolynomial scaled(const Rational& c) const;

  VectorVariablePoly expand(unsigned d, unsigned n) const;
  std::string to_string() const;

 private:
  std::map<Product, Rational> t_;
};

/// Writes an invariant polynomial as a polynomial in the elementary
/// multisymmetric polynomials; the round trip through expand() is exact.
/// Strategy: leading-term elimination against products of elementary
/// polynomials where the leading exponent matrix matches one, with an exact
/// linear solve over the matching multidegree when no product's leading term
/// lines up (such invariants exist already for d = n = 2). Signals
/// NOT_INVARIANT for non-invariant input.
EPolynomial decompose_invariant(const VectorVariablePoly& p);

/// Evaluation of every elementary multisymmetric polynomial at a multiset of
/// d points with n rational coordinates, in canonical index order. Invariant
/// under permuting the points, and distinct multisets give distinct tuples.
std::vector<Rational> chow_coordinates(const std::vector<std::vector<Rational>>& points,
                                       unsigned n);

/// Number of valid elementary indices for (d, n): C(n+d, d) - 1. This is also
/// the tangent-space dimension at the small diagonal of the d-th symmetric
/// power of a smooth n-fold, less one.
Int elementary_count(unsigned d, unsigned n);

}  // namespace motivic
