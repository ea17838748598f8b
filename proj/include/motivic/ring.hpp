#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "motivic/common.hpp"
#include "motivic/qpoly.hpp"

namespace motivic {

/// Name of the Lefschetz class (the class of the affine line). Reserved: it
/// cannot be used as a user symbol name.
inline const std::string kLefschetz = "L";

/// Variable order used everywhere: symbol names lexicographically, with L
/// sorted after every named class symbol.
struct SymbolLast {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a == b) return false;
    if (a == kLefschetz) return false;
    if (b == kLefschetz) return true;
    return a < b;
  }
};

/// Power product of class symbols and L. Zero exponents are never stored, so
/// two monomials are equal exactly when their exponent maps are.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(const std::string& name, unsigned exp = 1);

  bool is_one() const { return e_.empty(); }
  unsigned degree() const;
  unsigned exponent(const std::string& name) const;
  const std::map<std::string, unsigned, SymbolLast>& exponents() const { return e_; }

  Monomial times(const Monomial& o) const;

  /// Graded order: total degree first, then (for display) the monomial with
  /// the higher exponent on the earliest variable in SymbolLast order comes
  /// first. Returns <0, 0, >0.
  static int compare(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

 private:
  std::map<std::string, unsigned, SymbolLast> e_;
};

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

/// Element of the free commutative ring Z[L, s_1, ..., s_m]: an exact
/// integer-coefficient polynomial in the Lefschetz class and finitely many
/// abstract class symbols. Canonical form is maintained by every operation:
/// no zero coefficients, terms ordered by MonomialOrder. Values are immutable
/// in spirit; all operations return fresh elements, so instances may be shared
/// freely across threads.
class RingElement {
 public:
  RingElement() = default;
  RingElement(int v) : RingElement(Int(v)) {}  // NOLINT: deliberate implicit
  RingElement(Int v);

  /// A named class symbol, e.g. "B". The reserved name "L" and the empty
  /// string are rejected.
  static RingElement symbol(const std::string& name);
  /// The Lefschetz class L.
  static RingElement lefschetz(unsigned power = 1);

  static RingElement parse(const std::string& text);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  Int constant_value() const;  // requires is_constant()

  const std::map<Monomial, Int, MonomialOrder>& terms() const { return t_; }
  std::set<std::string> free_symbols() const;  // excludes L
  bool is_l_polynomial() const { return free_symbols().empty(); }

  RingElement operator-() const;
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  RingElement pow(unsigned e) const;
  bool operator==(const RingElement& o) const { return t_ == o.t_; }
  bool operator!=(const RingElement& o) const { return t_ != o.t_; }

  /// Ring homomorphism determined by the (possibly partial) bindings.
  /// Unbound variables pass through unchanged; "L" is a valid key.
  RingElement substitute(const std::map<std::string, RingElement>& bindings) const;

  /// Image under L -> 0, i.e. reduction modulo the ideal (L).
  RingElement reduce_mod_L() const;

  /// Conversion to a univariate polynomial in L; signals SYMBOLIC_COEFFICIENTS
  /// when a class symbol is present.
  QPolynomial to_qpoly() const;
  static RingElement from_qpoly(const QPolynomial& p);

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_term(const Monomial& m, const Int& c);
  std::map<Monomial, Int, MonomialOrder> t_;
};

// ---- catalog of class identities -------------------------------------------

/// [P^n] = 1 + L + ... + L^n.
RingElement projective_class(int n);

/// Class of the blow-up of x along a center of class y and codimension d:
/// x + y * ([P^{d-1}] - 1). Rejects codim < 1.
RingElement blowup_class(const RingElement& x, const RingElement& y, int codim);

/// Class of a Severi-Brauer variety of dimension rn-1 in terms of its minimal
/// twisted linear subvariety: b_min * (1 + L^n + ... + L^{(r-1)n}).
RingElement sb_minimal_decomposition(const RingElement& b_min, int n, int r);

/// [B^d] = b * [P^n]^{d-1}; with d = 2 this is also [B x B^op].
RingElement sb_product_class(const RingElement& b, int n, int d);

/// [Sym^2(B)] = b + gr1b * L^2. Intended for even-dimensional classes; the
/// dimension is not encoded in a RingElement, so callers must guarantee it.
RingElement sb_sym2_class(const RingElement& b, const RingElement& gr1b);

/// [Sym^d(P^n)] as the Gaussian binomial binom(n+d, d) evaluated at L.
RingElement sym_power_projective_class(int d, int n);

/// g_{r,n}(L) * b, defined when gcd(r, n+1) = 1 (signals NON_COPRIME).
RingElement sym_power_sb_class(const RingElement& b, int n, int r);

/// Explicit rewrite step s^2 -> s * [P^n] applied exhaustively to every power
/// of the named symbol. This relation is never imposed globally; callers
/// invoke it where the identity [B]^2 = [B] * [P^n] is known to apply.
RingElement sb_square_rewrite(const RingElement& a, const std::string& symbol, int n);

}  // namespace motivic
