#include "motivic/series.hpp"

#include <algorithm>
#include <numeric>

#include "motivic/linalg.hpp"

namespace motivic {

TPoly tpoly_trim(TPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return tpoly_trim(std::move(r));
}

TruncatedSeries TruncatedSeries::constant(const RingElement& value, int order) {
  if (order < 0) fail("INVALID_ARGUMENT", "truncation order must be >= 0");
  std::vector<RingElement> c(static_cast<size_t>(order) + 1);
  c[0] = value;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::substitute(
    const std::map<std::string, RingElement>& bindings) const {
  TruncatedSeries r = *this;
  for (auto& c : r.coefficients) c = c.substitute(bindings);
  return r;
}

TruncatedSeries TruncatedSeries::reduce_mod_L() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coefficients) c = c.reduce_mod_L();
  return r;
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  int n = std::min({order, a.order(), b.order()});
  for (int i = 0; i <= n; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  int order = std::min(a.order(), b.order());
  std::vector<RingElement> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= i; ++j) c[static_cast<size_t>(i)] += a.coeff(j) * b.coeff(i - j);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
  if (a.order() < 0 || !(a.coeff(0) == RingElement(1)))
    fail("NON_UNIT", "series inversion requires constant term 1");
  std::vector<RingElement> b(a.coefficients.size());
  b[0] = RingElement(1);
  for (int i = 1; i <= a.order(); ++i) {
    RingElement acc;
    for (int j = 1; j <= i; ++j) acc += a.coeff(j) * b[static_cast<size_t>(i - j)];
    b[static_cast<size_t>(i)] = -acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries series_scale_t(const TruncatedSeries& a, const RingElement& factor) {
  TruncatedSeries r = a;
  RingElement power(1);
  for (int i = 1; i <= r.order(); ++i) {
    power *= factor;
    r.coefficients[static_cast<size_t>(i)] *= power;
  }
  return r;
}

TruncatedSeries expand_rational(const RationalSeries& r, int order) {
  if (order < 0) fail("INVALID_ARGUMENT", "truncation order must be >= 0");
  if (r.den.empty() || !(r.den[0] == RingElement(1)))
    fail("NON_UNIT", "denominator constant term must be 1");
  std::vector<RingElement> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    RingElement acc = i < static_cast<int>(r.num.size()) ? r.num[static_cast<size_t>(i)]
                                                         : RingElement();
    int dmax = std::min<int>(i, static_cast<int>(r.den.size()) - 1);
    for (int j = 1; j <= dmax; ++j)
      acc -= r.den[static_cast<size_t>(j)] * c[static_cast<size_t>(i - j)];
    c[static_cast<size_t>(i)] = acc;
  }
  return TruncatedSeries(std::move(c));
}

VerifyResult verify_rational(const TruncatedSeries& s, const RationalSeries& r) {
  for (int i = 0; i <= s.order(); ++i) {
    RingElement lhs;
    int dmax = std::min<int>(i, static_cast<int>(r.den.size()) - 1);
    for (int j = 0; j <= dmax; ++j) lhs += r.den[static_cast<size_t>(j)] * s.coeff(i - j);
    RingElement rhs = i < static_cast<int>(r.num.size()) ? r.num[static_cast<size_t>(i)]
                                                         : RingElement();
    if (lhs != rhs) return {false, i};
  }
  return {true, -1};
}

// ---- zeta catalog -----------------------------------------------------------

TruncatedSeries zeta_point(int order) {
  return TruncatedSeries(
      std::vector<RingElement>(static_cast<size_t>(order) + 1, RingElement(1)));
}

TruncatedSeries zeta_affine(int n, int order) {
  if (n < 0) fail("INVALID_ARGUMENT", "zeta_affine needs n >= 0");
  return series_scale_t(zeta_point(order), RingElement::lefschetz(static_cast<unsigned>(n)));
}

TruncatedSeries zeta_projective(int n, int order) {
  if (n < 0) fail("INVALID_ARGUMENT", "zeta_projective needs n >= 0");
  std::vector<RingElement> c(static_cast<size_t>(order) + 1);
  for (int d = 0; d <= order; ++d)
    c[static_cast<size_t>(d)] = sym_power_projective_class(d, n);
  return TruncatedSeries(std::move(c));
}

RationalSeries zeta_projective_rational(int n) {
  if (n < 0) fail("INVALID_ARGUMENT", "zeta_projective_rational needs n >= 0");
  TPoly den{RingElement(1)};
  for (int i = 0; i <= n; ++i) {
    TPoly factor{RingElement(1), -RingElement::lefschetz(static_cast<unsigned>(i))};
    den = tpoly_mul(den, factor);
  }
  return {{RingElement(1)}, den};
}

ConicZeta zeta_conic(const RingElement& c, int order) {
  RingElement l = RingElement::lefschetz();
  RingElement l2 = RingElement::lefschetz(2);
  RationalSeries r;
  r.num = {RingElement(1), c, l};
  // (1 - t^2)(1 - L^2 t^2) = 1 - (1 + L^2) t^2 + L^2 t^4
  r.den = {RingElement(1), RingElement(), -(RingElement(1) + l2), RingElement(), l2};
  return {r, expand_rational(r, order)};
}

TruncatedSeries zeta_from_minimal(const TruncatedSeries& z_min, int n, int r) {
  if (r < 1 || n < 1) fail("INVALID_ARGUMENT", "zeta_from_minimal needs r >= 1 and n >= 1");
  TruncatedSeries result = z_min;
  for (int i = 1; i < r; ++i)
    result = series_mul(
        result, series_scale_t(z_min, RingElement::lefschetz(static_cast<unsigned>(i * n))));
  return result;
}

SurfaceZeta zeta_sb_surface_partial(const RingElement& b,
                                    const std::vector<RingElement>& sym3_terms,
                                    int order) {
  if (order < 0) fail("INVALID_ARGUMENT", "truncation order must be >= 0");
  size_t needed = static_cast<size_t>(order / 3) + 1;
  if (sym3_terms.size() < needed)
    fail("INVALID_ARGUMENT", "need " + std::to_string(needed) +
                                 " t^{3i} coefficients up to the requested order");
  if (!(sym3_terms[0] == RingElement(1)))
    fail("INVALID_ARGUMENT", "the degree-0 symmetric power must be 1");

  RingElement one(1), l2 = RingElement::lefschetz(2), l4 = RingElement::lefschetz(4);
  RationalSeries r;
  // t * b * (1 + (1+L^2) t + (L^2+L^4) t^3 + L^4 t^4)
  r.num = {RingElement(), b, b * (one + l2), RingElement(), b * (l2 + l4), b * l4};
  TPoly den{RingElement(1)};
  for (unsigned e : {0u, 3u, 6u}) {
    TPoly factor{RingElement(1), RingElement(), RingElement(),
                 -RingElement::lefschetz(e)};
    den = tpoly_mul(den, factor);
  }
  r.den = den;

  TruncatedSeries series = expand_rational(r, order);
  for (int i = 0; 3 * i <= order; ++i)
    series.coefficients[static_cast<size_t>(3 * i)] += sym3_terms[static_cast<size_t>(i)];
  return {r, series};
}

RationalSeries zeta_mod_L_severi_brauer(int index_n) {
  if (index_n < 1) fail("INVALID_ARGUMENT", "index must be >= 1");
  RationalSeries r;
  r.num.resize(static_cast<size_t>(index_n));
  r.num[0] = RingElement(1);
  for (int i = 1; i < index_n; ++i) {
    int g = std::gcd(i, index_n);
    r.num[static_cast<size_t>(i)] = RingElement::symbol(
        g == 1 ? std::string("B") : "Sym" + std::to_string(g) + "B");
  }
  r.den.assign(static_cast<size_t>(index_n) + 1, RingElement());
  r.den[0] = RingElement(1);
  r.den[static_cast<size_t>(index_n)] = RingElement(-1);
  return r;
}

TruncatedSeries blowup_zeta_transform(const TruncatedSeries& z_v,
                                      const TruncatedSeries& z_point) {
  return series_mul(z_v, series_scale_t(z_point, RingElement::lefschetz()));
}

// ---- rational reconstruction --------------------------------------------------

namespace {

Int int_content(const QPolynomial& p) {
  Int c = 0;
  for (const auto& x : p.coeffs()) c = gcd(c, x);
  return c == 0 ? Int(1) : c;
}

QPolynomial divide_by_int(const QPolynomial& p, const Int& d) {
  std::vector<Int> c = p.coeffs();
  for (auto& x : c) x /= d;
  return QPolynomial(std::move(c));
}

QPolynomial scale_by_int(const QPolynomial& p, const Int& d) {
  std::vector<Int> c = p.coeffs();
  for (auto& x : c) x *= d;
  return QPolynomial(std::move(c));
}

// Pseudo-remainder: repeatedly cancels the leading term of a against b after
// scaling a by the leading coefficient of b. Degree strictly decreases.
QPolynomial pseudo_rem(QPolynomial a, const QPolynomial& b) {
  const Int lead = b.coeff(b.degree());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    QPolynomial shift = QPolynomial::monomial(a.coeff(a.degree()), a.degree() - b.degree());
    a = scale_by_int(a, lead) - shift * b;
  }
  return a;
}

QPolynomial positive_lead(QPolynomial p) {
  if (!p.is_zero() && p.coeff(p.degree()) < 0) p = -p;
  return p;
}

QPolynomial poly_gcd(QPolynomial a, QPolynomial b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  Int ca = int_content(a), cb = int_content(b);
  a = divide_by_int(a, ca);
  b = divide_by_int(b, cb);
  while (!b.is_zero()) {
    QPolynomial r = pseudo_rem(a, b);
    a = b;
    b = r.is_zero() ? r : divide_by_int(r, int_content(r));
  }
  return positive_lead(scale_by_int(a, gcd(ca, cb)));
}

// Element of the fraction field of Z[L], kept reduced with a positive-lead
// denominator.
struct LFrac {
  QPolynomial num;
  QPolynomial den{Int(1)};

  LFrac() = default;
  LFrac(int v) : num(Int(v)) {}  // NOLINT
  explicit LFrac(QPolynomial n) : num(std::move(n)) {}

  void reduce() {
    if (num.is_zero()) {
      den = QPolynomial(Int(1));
      return;
    }
    QPolynomial g = poly_gcd(num, den);
    if (g.degree() > 0 || g.coeff(0) != 1) {
      num = num.divmod(g).quotient;
      den = den.divmod(g).quotient;
    }
    if (den.coeff(den.degree()) < 0) {
      num = -num;
      den = -den;
    }
  }

  LFrac operator+(const LFrac& o) const {
    LFrac r;
    r.num = num * o.den + o.num * den;
    r.den = den * o.den;
    r.reduce();
    return r;
  }
  LFrac operator-(const LFrac& o) const {
    LFrac r;
    r.num = num * o.den - o.num * den;
    r.den = den * o.den;
    r.reduce();
    return r;
  }
  LFrac operator*(const LFrac& o) const {
    LFrac r;
    r.num = num * o.num;
    r.den = den * o.den;
    r.reduce();
    return r;
  }
  LFrac operator/(const LFrac& o) const {
    if (o.num.is_zero()) fail("INVALID_ARGUMENT", "division by zero");
    LFrac r;
    r.num = num * o.den;
    r.den = den * o.num;
    r.reduce();
    return r;
  }
  bool operator==(const LFrac& o) const { return num == o.num && den == o.den; }

  bool is_integral() const { return den.degree() == 0 && den.coeff(0) == 1; }
};

}  // namespace

std::optional<RationalSeries> find_rational_form(const TruncatedSeries& s,
                                                 int max_den_degree) {
  if (max_den_degree < 1)
    fail("INVALID_ARGUMENT", "denominator degree bound must be >= 1");
  const int order = s.order();
  if (order < 2 * max_den_degree + 2)
    fail("INVALID_ARGUMENT",
         "need series order >= " + std::to_string(2 * max_den_degree + 2));

  std::vector<QPolynomial> a(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) a[static_cast<size_t>(i)] = s.coeff(i).to_qpoly();

  // Denominator degrees ascending, then numerator cutoffs ascending within
  // each: the first hit has minimal denominator degree, with the smallest
  // numerator that degree allows. The evidence window i = cutoff+1..order
  // always holds at least m+1 equations for the m unknowns.
  auto window_solvable = [&](int m, int cutoff) {
    std::vector<std::vector<LFrac>> mat;
    std::vector<LFrac> rhs;
    for (int i = cutoff + 1; i <= order; ++i) {
      std::vector<LFrac> row;
      row.reserve(static_cast<size_t>(m));
      for (int j = 1; j <= m; ++j) row.emplace_back(a[static_cast<size_t>(i - j)]);
      mat.push_back(std::move(row));
      rhs.emplace_back(-a[static_cast<size_t>(i)]);
    }
    return solve_linear_system(std::move(mat), std::move(rhs));
  };
  for (int m = 1; m <= max_den_degree; ++m) {
    // The largest cutoff imposes the fewest equations; if even that window is
    // inconsistent, every smaller cutoff (a superset of equations) is too.
    if (!window_solvable(m, order - m - 1)) continue;
    for (int cutoff = m - 1; cutoff <= order - m - 1; ++cutoff) {
      // Unknowns g_1..g_m with g_0 = 1; the recurrence sum_j g_j a_{i-j} = 0
      // must hold for every window past the numerator cutoff.
      auto sol = window_solvable(m, cutoff);
      if (!sol) continue;

      std::vector<LFrac> g(static_cast<size_t>(m) + 1);
      g[0] = LFrac(1);
      bool integral = true;
      for (int j = 1; j <= m; ++j) {
        g[static_cast<size_t>(j)] = (*sol)[static_cast<size_t>(j - 1)];
        integral = integral && g[static_cast<size_t>(j)].is_integral();
      }
      std::vector<LFrac> f(static_cast<size_t>(cutoff) + 1);
      for (int i = 0; i <= cutoff; ++i) {
        LFrac acc;
        for (int j = 0; j <= std::min(i, m); ++j)
          acc = acc + g[static_cast<size_t>(j)] * LFrac(a[static_cast<size_t>(i - j)]);
        f[static_cast<size_t>(i)] = acc;
        integral = integral && acc.is_integral();
      }
      // Only integer-polynomial forms are representable; a fractional
      // solution here may still clear at another degree.
      if (!integral) continue;

      RationalSeries r;
      for (auto& fi : f) r.num.push_back(RingElement::from_qpoly(fi.num));
      for (auto& gi : g) r.den.push_back(RingElement::from_qpoly(gi.num));
      r.num = tpoly_trim(std::move(r.num));
      r.den = tpoly_trim(std::move(r.den));
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace motivic
