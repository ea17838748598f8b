#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivic/ring.hpp"

namespace motivic {

/// Polynomial in t with RingElement coefficients, index = power of t.
using TPoly = std::vector<RingElement>;

TPoly tpoly_mul(const TPoly& a, const TPoly& b);
TPoly tpoly_trim(TPoly p);

/// Formal power series in t over RingElement, truncated at a fixed order.
/// coefficients[i] is the coefficient of t^i and the list always has length
/// order+1; nothing is ever claimed about coefficients beyond the order.
struct TruncatedSeries {
  std::vector<RingElement> coefficients;

  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<RingElement> c) : coefficients(std::move(c)) {}

  static TruncatedSeries constant(const RingElement& value, int order);

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  const RingElement& coeff(int i) const { return coefficients[static_cast<size_t>(i)]; }

  TruncatedSeries substitute(const std::map<std::string, RingElement>& bindings) const;
  TruncatedSeries reduce_mod_L() const;
};

/// Ratio of two t-polynomials over RingElement. The denominator must have
/// constant term 1 so the ratio has a unique power-series expansion.
struct RationalSeries {
  TPoly num;
  TPoly den;
};

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b, int order);

/// Cauchy product truncated at the smaller operand order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse up to the truncation order. Signals NON_UNIT when
/// the constant term is not 1.
TruncatedSeries series_invert(const TruncatedSeries& a);

/// t -> factor * t: coefficient i is multiplied by factor^i.
TruncatedSeries series_scale_t(const TruncatedSeries& a, const RingElement& factor);

/// Power-series expansion of num/den to the given order (NON_UNIT if the
/// denominator constant term is not 1).
TruncatedSeries expand_rational(const RationalSeries& r, int order);

struct VerifyResult {
  bool ok;
  int first_mismatch;  // -1 when ok
};

/// Checks den * s = num coefficientwise up to s's order.
VerifyResult verify_rational(const TruncatedSeries& s, const RationalSeries& r);

// ---- zeta catalog -----------------------------------------------------------

/// Zeta series of a point: 1/(1-t).
TruncatedSeries zeta_point(int order);

/// Zeta series of affine n-space: 1/(1 - L^n t).
TruncatedSeries zeta_affine(int n, int order);

/// Zeta series of P^n; coefficient of t^d is the Gaussian binomial
/// binom(n+d, d) at L.
TruncatedSeries zeta_projective(int n, int order);

/// The product form 1/((1-t)(1-Lt)...(1-L^n t)).
RationalSeries zeta_projective_rational(int n);

struct ConicZeta {
  RationalSeries rational;  // (1 + c t + L t^2) / ((1-t^2)(1-L^2 t^2))
  TruncatedSeries series;
};

/// Zeta of a dimension-1 Severi-Brauer variety (a conic) with class c. Even
/// coefficients are [P^{2k}], odd ones c*(1 + L^2 + ... + L^{2k}).
ConicZeta zeta_conic(const RingElement& c, int order);

/// Zeta of a Severi-Brauer variety assembled from its minimal subvariety:
/// the product of z_min with t scaled by L^{in} for i = 0..r-1.
TruncatedSeries zeta_from_minimal(const TruncatedSeries& z_min, int n, int r);

struct SurfaceZeta {
  RationalSeries rational_part;  // t*b*(1+(1+L^2)t+(L^2+L^4)t^3+L^4 t^4) / ...
  TruncatedSeries series;        // expansion plus the supplied t^{3i} terms
};

/// Partial zeta of a Severi-Brauer surface with class b. The coefficients of
/// t^{3i} are not determined by the closed formula and must be supplied by
/// the caller (sym3_terms[i] = class of the 3i-th symmetric power, with
/// sym3_terms[0] = 1); the remaining coefficients come from the rational part
///   t*b*(1+(1+L^2)t+(L^2+L^4)t^3+L^4 t^4) / ((1-t^3)(1-L^3 t^3)(1-L^6 t^3)).
SurfaceZeta zeta_sb_surface_partial(const RingElement& b,
                                    const std::vector<RingElement>& sym3_terms,
                                    int order);

/// Zeta of a Severi-Brauer variety of index n in the quotient ring modulo L:
/// (sum_{i<n} <Sym^{gcd(i,n)}(B)> t^i) / (1 - t^n), with the i = 0 term equal
/// to 1 and symbols named "B" (gcd 1) or "Sym<g>B" (gcd g > 1). Coefficients
/// contain no L.
RationalSeries zeta_mod_L_severi_brauer(int index_n);

/// Zeta transform under blowing up a point with residue-scheme zeta z_point:
/// z_v * (z_point with t scaled by L).
TruncatedSeries blowup_zeta_transform(const TruncatedSeries& z_v,
                                      const TruncatedSeries& z_point);

/// Reconstructs a rational form f/g, g(0) = 1, with g*s = f to s's order and
/// numerator degree below the denominator degree. Denominator degrees are
/// tried in increasing order up to the bound, so the result is minimal by
/// construction. Requires coefficients that are polynomials in L alone
/// (SYMBOLIC_COEFFICIENTS otherwise) and s.order >= 2*max_den_degree + 2.
/// Returns nullopt when no recurrence of any tried order fits.
std::optional<RationalSeries> find_rational_form(const TruncatedSeries& s,
                                                 int max_den_degree);

}  // namespace motivic
