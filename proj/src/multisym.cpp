#include "motivic/multisym.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "motivic/linalg.hpp"

namespace motivic {

// ---- ExponentMatrix -----------------------------------------------------------

unsigned ExponentMatrix::total_degree() const {
  unsigned t = 0;
  for (unsigned x : e) t += x;
  return t;
}

unsigned ExponentMatrix::row_degree(unsigned row) const {
  unsigned t = 0;
  for (unsigned j = 0; j < n; ++j) t += at(row, j);
  return t;
}

std::vector<unsigned> ExponentMatrix::column_degrees() const {
  std::vector<unsigned> c(n, 0);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < n; ++j) c[j] += at(i, j);
  return c;
}

ExponentMatrix ExponentMatrix::plus(const ExponentMatrix& o) const {
  ExponentMatrix r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

ExponentMatrix ExponentMatrix::with_rows_swapped(unsigned a, unsigned b) const {
  ExponentMatrix r = *this;
  for (unsigned j = 0; j < n; ++j) std::swap(r.at(a, j), r.at(b, j));
  return r;
}

ExponentMatrix ExponentMatrix::orbit_max() const {
  std::vector<std::vector<unsigned>> rows(d);
  for (unsigned i = 0; i < d; ++i)
    rows[i].assign(e.begin() + i * n, e.begin() + (i + 1) * n);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;  // lexicographically descending
  });
  ExponentMatrix r(d, n);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < n; ++j) r.at(i, j) = rows[i][j];
  return r;
}

int ExponentMatrix::compare(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (a.d != b.d) return a.d < b.d ? -1 : 1;
  if (a.n != b.n) return a.n < b.n ? -1 : 1;
  unsigned ta = a.total_degree(), tb = b.total_degree();
  if (ta != tb) return ta < tb ? -1 : 1;
  for (unsigned i = 0; i < a.d; ++i) {
    unsigned ra = a.row_degree(i), rb = b.row_degree(i);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

// ---- VectorVariablePoly ---------------------------------------------------------

VectorVariablePoly VectorVariablePoly::constant(unsigned d, unsigned n,
                                                const Rational& c) {
  VectorVariablePoly p(d, n);
  if (c != 0) p.t_.emplace(ExponentMatrix(d, n), c);
  return p;
}

VectorVariablePoly VectorVariablePoly::monomial(ExponentMatrix m, const Rational& c) {
  VectorVariablePoly p(m.d, m.n);
  if (c != 0) p.t_.emplace(std::move(m), c);
  return p;
}

Rational VectorVariablePoly::coeff(const ExponentMatrix& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void VectorVariablePoly::add_term(const ExponentMatrix& m, const Rational& c) {
  auto it = t_.find(m);
  if (it == t_.end()) {
    if (c != 0) t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

namespace {

void require_same_shape(const VectorVariablePoly& a, const VectorVariablePoly& b) {
  if ((a.vars() != b.vars() || a.coords() != b.coords()) && !a.is_zero() && !b.is_zero())
    fail("DIMENSION_MISMATCH", "polynomials live in different variable spaces");
}

}  // namespace

VectorVariablePoly VectorVariablePoly::operator-() const {
  VectorVariablePoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

VectorVariablePoly VectorVariablePoly::operator+(const VectorVariablePoly& o) const {
  require_same_shape(*this, o);
  VectorVariablePoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

VectorVariablePoly VectorVariablePoly::operator-(const VectorVariablePoly& o) const {
  return *this + (-o);
}

VectorVariablePoly VectorVariablePoly::operator*(const VectorVariablePoly& o) const {
  require_same_shape(*this, o);
  VectorVariablePoly r(d_, n_);
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(ma.plus(mb), ca * cb);
  return r;
}

VectorVariablePoly VectorVariablePoly::scaled(const Rational& c) const {
  VectorVariablePoly r(d_, n_);
  if (c == 0) return r;
  r.t_ = t_;
  for (auto& [m, coeff] : r.t_) coeff *= c;
  return r;
}

bool VectorVariablePoly::operator==(const VectorVariablePoly& o) const {
  return t_ == o.t_;
}

std::string VectorVariablePoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first reads more naturally for polynomials.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::ostringstream body;
    bool firstvar = true;
    for (unsigned i = 0; i < m.d; ++i)
      for (unsigned j = 0; j < m.n; ++j) {
        unsigned exp = m.at(i, j);
        if (exp == 0) continue;
        if (!firstvar) body << "*";
        body << "x[" << i + 1 << "][" << j + 1 << "]";
        if (exp > 1) body << "^" << exp;
        firstvar = false;
      }
    std::string vars = body.str();
    if (vars.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << vars;
    }
    first = false;
  }
  return out.str();
}

// ---- parsing ------------------------------------------------------------------

namespace {

struct ParsedTerm {
  Rational coeff;
  std::vector<std::pair<std::pair<unsigned, unsigned>, unsigned>> factors;  // ((i,j),e)
};

ParsedTerm parse_poly_term(const std::string& text) {
  ParsedTerm term;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail("PARSE_ERROR", "empty term");
  size_t pos = 0;
  auto read_uint = [&]() -> unsigned long {
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      digits += s[pos++];
    if (digits.empty()) fail("PARSE_ERROR", "expected number in '" + text + "'");
    return std::stoul(digits);
  };
  // coefficient: [-]num[/den], optional when the term starts with a variable
  Int num = 1, den = 1;
  bool neg = false;
  if (s[pos] == '-' || s[pos] == '+') neg = s[pos++] == '-';
  if (pos >= s.size()) fail("PARSE_ERROR", "dangling sign in '" + text + "'");
  if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
    num = Int(std::to_string(read_uint()));
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = Int(std::to_string(read_uint()));
    }
  }
  if (den == 0) fail("PARSE_ERROR", "zero denominator in '" + text + "'");
  term.coeff = Rational(num, den);
  if (neg) term.coeff = -term.coeff;
  while (pos < s.size()) {
    if (s[pos] == '*') {
      ++pos;
      continue;
    }
    if (s[pos] != 'x') fail("PARSE_ERROR", "expected variable in '" + text + "'");
    ++pos;
    if (pos >= s.size() || s[pos] != '[') fail("PARSE_ERROR", "expected 'x[i][j]'");
    ++pos;
    unsigned long i = read_uint();
    if (pos >= s.size() || s[pos] != ']') fail("PARSE_ERROR", "expected ']'");
    ++pos;
    if (pos >= s.size() || s[pos] != '[') fail("PARSE_ERROR", "expected second index");
    ++pos;
    unsigned long j = read_uint();
    if (pos >= s.size() || s[pos] != ']') fail("PARSE_ERROR", "expected ']'");
    ++pos;
    unsigned long e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = read_uint();
    }
    if (i == 0 || j == 0) fail("PARSE_ERROR", "variable indices are 1-based");
    term.factors.push_back({{static_cast<unsigned>(i - 1), static_cast<unsigned>(j - 1)},
                            static_cast<unsigned>(e)});
  }
  return term;
}

}  // namespace

VectorVariablePoly VectorVariablePoly::parse(const std::string& text, unsigned d,
                                             unsigned n) {
  // Split into signed terms.
  std::vector<std::string> pieces;
  std::string current;
  for (char c : text) {
    if ((c == '+' || c == '-') && !current.empty() &&
        current.find_first_not_of(" \t\r\n") != std::string::npos) {
      pieces.push_back(current);
      current.clear();
    }
    current += c;
  }
  if (current.find_first_not_of(" \t\r\n") != std::string::npos)
    pieces.push_back(current);
  if (pieces.empty()) fail("PARSE_ERROR", "empty polynomial");

  std::vector<ParsedTerm> terms;
  unsigned max_i = 0, max_j = 0;
  for (const auto& piece : pieces) {
    terms.push_back(parse_poly_term(piece));
    for (const auto& [var, e] : terms.back().factors) {
      max_i = std::max(max_i, var.first + 1);
      max_j = std::max(max_j, var.second + 1);
    }
  }
  if (d == 0) d = std::max(max_i, 1u);
  if (n == 0) n = std::max(max_j, 1u);
  if (max_i > d || max_j > n)
    fail("DIMENSION_MISMATCH", "variable indices exceed the declared shape");

  VectorVariablePoly p(d, n);
  for (const auto& term : terms) {
    ExponentMatrix m(d, n);
    for (const auto& [var, e] : term.factors) m.at(var.first, var.second) += e;
    p.add_term(m, term.coeff);
  }
  return p;
}

// ---- ElementaryIndex ------------------------------------------------------------

unsigned ElementaryIndex::total() const {
  return std::accumulate(k.begin(), k.end(), 0u);
}

int ElementaryIndex::compare(const ElementaryIndex& a, const ElementaryIndex& b) {
  unsigned ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb ? -1 : 1;
  if (a.k.size() != b.k.size()) return a.k.size() < b.k.size() ? -1 : 1;
  for (size_t i = 0; i < a.k.size(); ++i)
    if (a.k[i] != b.k[i]) return a.k[i] > b.k[i] ? -1 : 1;  // lex descending
  return 0;
}

std::string ElementaryIndex::to_string() const {
  std::ostringstream out;
  out << "e(";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) out << ",";
    out << k[i];
  }
  out << ")";
  return out.str();
}

std::vector<ElementaryIndex> elementary_indices(unsigned d, unsigned n) {
  if (d == 0 || n == 0) fail("INVALID_ARGUMENT", "need d >= 1 and n >= 1");
  std::vector<ElementaryIndex> out;
  std::vector<unsigned> k(n, 0);
  // Enumerate all vectors with 1 <= sum <= d, then sort canonically.
  auto rec = [&](auto&& self, unsigned pos, unsigned used) -> void {
    if (pos == n) {
      if (used >= 1) out.push_back(ElementaryIndex{k});
      return;
    }
    for (unsigned v = 0; used + v <= d; ++v) {
      k[pos] = v;
      self(self, pos + 1, used + v);
    }
    k[pos] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

VectorVariablePoly elementary_multisym(const ElementaryIndex& k, unsigned d,
                                       unsigned n) {
  if (k.k.size() != n)
    fail("INVALID_INDEX", "index has " + std::to_string(k.k.size()) +
                              " entries, expected " + std::to_string(n));
  unsigned total = k.total();
  if (total < 1 || total > d)
    fail("INVALID_INDEX", "index weight " + std::to_string(total) +
                              " outside 1.." + std::to_string(d));
  VectorVariablePoly p(d, n);
  ExponentMatrix m(d, n);
  std::vector<unsigned> remaining = k.k;
  // Each row contributes at most one variable; rows claiming column j must
  // number exactly k_j.
  auto rec = [&](auto&& self, unsigned row, unsigned left) -> void {
    if (left > d - row) return;  // not enough rows remain
    if (row == d) {
      p = p + VectorVariablePoly::monomial(m, Rational(1));
      return;
    }
    self(self, row + 1, left);  // row contributes nothing
    for (unsigned j = 0; j < n; ++j) {
      if (remaining[j] == 0) continue;
      --remaining[j];
      m.at(row, j) = 1;
      self(self, row + 1, left - 1);
      m.at(row, j) = 0;
      ++remaining[j];
    }
  };
  rec(rec, 0, total);
  return p;
}

bool is_invariant(const VectorVariablePoly& p) {
  for (unsigned i = 0; i + 1 < p.vars(); ++i) {
    for (const auto& [m, c] : p.terms())
      if (p.coeff(m.with_rows_swapped(i, i + 1)) != c) return false;
  }
  return true;
}

// ---- EPolynomial ------------------------------------------------------------------

void EPolynomial::add(const Product& product, const Rational& c) {
  Product key = product;
  std::sort(key.begin(), key.end());
  auto it = t_.find(key);
  if (it == t_.end()) {
    if (c != 0) t_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

EPolynomial& EPolynomial::operator+=(const EPolynomial& o) {
  for (const auto& [prod, c] : o.t_) add(prod, c);
  return *this;
}

EPolynomial EPolynomial::scaled(const Rational& c) const {
  EPolynomial r;
  if (c == 0) return r;
  r.t_ = t_;
  for (auto& [prod, coeff] : r.t_) coeff *= c;
  return r;
}

VectorVariablePoly EPolynomial::expand(unsigned d, unsigned n) const {
  VectorVariablePoly acc(d, n);
  for (const auto& [prod, c] : t_) {
    VectorVariablePoly term = VectorVariablePoly::constant(d, n, Rational(1));
    for (const auto& idx : prod) term = term * elementary_multisym(idx, d, n);
    acc = acc + term.scaled(c);
  }
  return acc;
}

std::string EPolynomial::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [prod, c] : t_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (prod.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      // Group repeated factors as powers.
      for (size_t i = 0; i < prod.size();) {
        size_t j = i;
        while (j < prod.size() && prod[j] == prod[i]) ++j;
        if (i) out << "*";
        out << prod[i].to_string();
        if (j - i > 1) out << "^" << (j - i);
        i = j;
      }
    }
    first = false;
  }
  return out.str();
}

// ---- decomposition ------------------------------------------------------------------

namespace {

// Leading exponent matrix of e_k: k_1 unit rows in column 1, then k_2 in
// column 2, and so on, padded with zero rows.
ExponentMatrix staircase_matrix(const ElementaryIndex& k, unsigned d, unsigned n) {
  ExponentMatrix m(d, n);
  unsigned row = 0;
  for (unsigned j = 0; j < n; ++j)
    for (unsigned c = 0; c < k.k[j]; ++c) m.at(row++, j) = 1;
  return m;
}

// Tries to write a row-sorted matrix as a sum of staircase matrices; the
// conjugate of the row-degree sequence fixes the piece sizes, and column
// values are assigned greedily so they never decrease down a piece. Failure
// here is not a contradiction: some invariants (already for d = n = 2) have
// leading matrices no product of elementary polynomials attains.
std::optional<EPolynomial::Product> staircase_match(const ExponentMatrix& m) {
  const unsigned d = m.d, n = m.n;
  std::vector<unsigned> rdeg(d);
  for (unsigned i = 0; i < d; ++i) rdeg[i] = m.row_degree(i);
  for (unsigned i = 0; i + 1 < d; ++i)
    if (rdeg[i] < rdeg[i + 1]) return std::nullopt;
  const unsigned pieces = d == 0 ? 0 : rdeg[0];
  std::vector<std::vector<unsigned>> piece_values(pieces);
  std::vector<unsigned> last(pieces, 0);
  for (unsigned i = 0; i < d && rdeg[i] > 0; ++i) {
    std::vector<unsigned> values;
    for (unsigned j = 0; j < n; ++j)
      for (unsigned c = 0; c < m.at(i, j); ++c) values.push_back(j + 1);
    // values ascending; pieces 0..rdeg[i]-1 have ascending lower bounds
    for (unsigned t = 0; t < rdeg[i]; ++t) {
      if (values[t] < last[t]) return std::nullopt;
      piece_values[t].push_back(values[t]);
      last[t] = values[t];
    }
  }
  EPolynomial::Product prod;
  ExponentMatrix recovered(d, n);
  for (const auto& vals : piece_values) {
    ElementaryIndex idx;
    idx.k.assign(n, 0);
    for (unsigned v : vals) ++idx.k[v - 1];
    recovered = recovered.plus(staircase_matrix(idx, d, n));
    prod.push_back(idx);
  }
  if (!(recovered == m)) return std::nullopt;  // guards the filling logic
  std::sort(prod.begin(), prod.end());
  return prod;
}

VectorVariablePoly orbit_sum(const ExponentMatrix& m) {
  std::vector<unsigned> perm(m.d);
  std::iota(perm.begin(), perm.end(), 0u);
  std::set<ExponentMatrix, ExponentMatrixOrder> seen;
  std::sort(perm.begin(), perm.end());
  do {
    ExponentMatrix image(m.d, m.n);
    for (unsigned i = 0; i < m.d; ++i)
      for (unsigned j = 0; j < m.n; ++j) image.at(i, j) = m.at(perm[i], j);
    seen.insert(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  VectorVariablePoly p(m.d, m.n);
  for (const auto& mat : seen) p = p + VectorVariablePoly::monomial(mat, Rational(1));
  return p;
}

// All multisets of valid indices whose componentwise sum equals `target`.
void enumerate_products(const std::vector<ElementaryIndex>& indices, size_t pos,
                        std::vector<unsigned>& remaining, EPolynomial::Product& current,
                        std::vector<EPolynomial::Product>& out) {
  bool done = std::all_of(remaining.begin(), remaining.end(),
                          [](unsigned v) { return v == 0; });
  if (done) {
    out.push_back(current);
    return;
  }
  if (pos == indices.size()) return;
  const auto& k = indices[pos].k;
  unsigned max_count = 0;
  for (bool fits = true; fits;) {
    ++max_count;
    for (size_t j = 0; j < k.size(); ++j)
      if (k[j] * max_count > remaining[j]) fits = false;
  }
  --max_count;  // last tried count did not fit
  for (unsigned count = 0; count <= max_count; ++count) {
    if (count > 0) {
      for (size_t j = 0; j < k.size(); ++j) remaining[j] -= k[j];
      current.push_back(indices[pos]);
    }
    enumerate_products(indices, pos + 1, remaining, current, out);
  }
  for (unsigned count = 0; count < max_count; ++count) current.pop_back();
  for (size_t j = 0; j < k.size(); ++j) remaining[j] += k[j] * max_count;
}

// Expresses the invariant `target` exactly as a rational combination of
// products of elementary polynomials with the same column multidegree.
std::optional<EPolynomial> solve_in_products(const VectorVariablePoly& target) {
  const unsigned d = target.vars(), n = target.coords();
  std::vector<unsigned> cdeg = target.terms().begin()->first.column_degrees();

  auto indices = elementary_indices(d, n);
  std::vector<EPolynomial::Product> products;
  {
    std::vector<unsigned> remaining = cdeg;
    EPolynomial::Product current;
    enumerate_products(indices, 0, remaining, current, products);
  }
  if (products.empty()) return std::nullopt;

  // Both target and every product are invariant, so vectorize on orbit
  // representatives (row-sorted matrices) to keep the system small.
  std::map<ExponentMatrix, size_t, ExponentMatrixOrder> orbit_of;
  auto orbit_key = [&](const ExponentMatrix& m) { return m.orbit_max(); };
  std::vector<std::map<size_t, Rational>> columns;
  for (const auto& prod : products) {
    EPolynomial e;
    e.add(prod, Rational(1));
    VectorVariablePoly expansion = e.expand(d, n);
    std::map<size_t, Rational> column;
    for (const auto& [m, c] : expansion.terms()) {
      auto key = orbit_key(m);
      auto [it, inserted] = orbit_of.emplace(key, orbit_of.size());
      column[it->second] += c;
    }
    columns.push_back(std::move(column));
  }
  std::map<size_t, Rational> rhs_column;
  for (const auto& [m, c] : target.terms()) {
    auto key = orbit_key(m);
    auto [it, inserted] = orbit_of.emplace(key, orbit_of.size());
    rhs_column[it->second] += c;
  }

  const size_t rows = orbit_of.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(products.size()));
  std::vector<Rational> b(rows);
  for (size_t col = 0; col < columns.size(); ++col)
    for (const auto& [row, c] : columns[col]) a[row][col] = c;
  for (const auto& [row, c] : rhs_column) b[row] = c;

  auto sol = solve_linear_system(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  EPolynomial result;
  for (size_t i = 0; i < products.size(); ++i)
    if ((*sol)[i] != 0) result.add(products[i], (*sol)[i]);
  return result;
}

}  // namespace

EPolynomial decompose_invariant(const VectorVariablePoly& p) {
  if (p.vars() == 0) fail("INVALID_ARGUMENT", "need at least one vector variable");
  if (!is_invariant(p)) fail("NOT_INVARIANT", "polynomial is not symmetric");
  EPolynomial result;
  VectorVariablePoly work = p;
  while (!work.is_zero()) {
    const auto [lead, coeff] = *work.terms().rbegin();
    if (lead.total_degree() == 0) {
      result.add({}, coeff);
      work = work - VectorVariablePoly::constant(p.vars(), p.coords(), coeff);
      continue;
    }
    if (auto prod = staircase_match(lead)) {
      EPolynomial step;
      step.add(*prod, coeff);
      result.add(*prod, coeff);
      work = work - step.expand(p.vars(), p.coords());
      continue;
    }
    // No product has this leading matrix; eliminate its whole orbit by an
    // exact solve over the matching multidegree.
    VectorVariablePoly orbit = orbit_sum(lead);
    auto rep = solve_in_products(orbit);
    if (!rep)
      fail("NO_DECOMPOSITION",
           "internal error: orbit is not a combination of elementary products");
    result += rep->scaled(coeff);
    work = work - orbit.scaled(coeff);
  }
  return result;
}

// ---- Chow coordinates ------------------------------------------------------------

std::vector<Rational> chow_coordinates(const std::vector<std::vector<Rational>>& points,
                                       unsigned n) {
  if (points.empty()) fail("INVALID_ARGUMENT", "need at least one point");
  if (n == 0) fail("INVALID_ARGUMENT", "points need at least one coordinate");
  const unsigned d = static_cast<unsigned>(points.size());
  for (const auto& pt : points)
    if (pt.size() != n)
      fail("DIMENSION_MISMATCH", "every point needs exactly " + std::to_string(n) +
                                     " coordinates");
  // Coefficients of prod_i (1 + p_{i1} t_1 + ... + p_{in} t_n), keyed by the
  // exponent vector of t.
  std::map<std::vector<unsigned>, Rational> poly;
  poly[std::vector<unsigned>(n, 0)] = 1;
  for (const auto& pt : points) {
    std::map<std::vector<unsigned>, Rational> next;
    for (const auto& [mono, c] : poly) {
      next[mono] += c;
      for (unsigned j = 0; j < n; ++j) {
        if (pt[j] == 0) continue;
        std::vector<unsigned> up = mono;
        ++up[j];
        next[up] += c * pt[j];
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    poly = std::move(next);
  }
  std::vector<Rational> out;
  for (const auto& idx : elementary_indices(d, n)) {
    auto it = poly.find(idx.k);
    out.push_back(it == poly.end() ? Rational(0) : it->second);
  }
  return out;
}

Int elementary_count(unsigned d, unsigned n) {
  if (d < 1 || n < 1) fail("INVALID_ARGUMENT", "need d >= 1 and n >= 1");
  Int num = 1, den = 1;
  for (unsigned i = 1; i <= d; ++i) {
    num *= Int(n + i);
    den *= Int(i);
  }
  return num / den - 1;
}

}  // namespace motivic
