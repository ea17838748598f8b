#include "motivic/varieties.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace motivic {

ProjectiveVarietySpec ProjectiveVarietySpec::projective_space(unsigned m, unsigned p) {
  ProjectiveVarietySpec spec;
  spec.ambient_dim = m;
  spec.base_prime = p;
  spec.validate();
  return spec;
}

void ProjectiveVarietySpec::validate() const {
  if (!is_prime(base_prime))
    fail("PARSE_ERROR", "base prime " + std::to_string(base_prime) + " is not prime");
  for (const auto& eq : equations) {
    if (eq.empty()) fail("PARSE_ERROR", "empty equation");
    long long degree = -1;
    for (const auto& term : eq) {
      if (term.exponents.size() != ambient_dim + 1)
        fail("PARSE_ERROR", "term has wrong variable count");
      long long d = 0;
      for (unsigned e : term.exponents) d += e;
      if (degree == -1) degree = d;
      if (d != degree) fail("PARSE_ERROR", "equation is not homogeneous");
    }
  }
}

namespace {

VarietyTerm parse_term(const std::string& text, unsigned m) {
  VarietyTerm term;
  term.exponents.assign(m + 1, 0);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail("PARSE_ERROR", "empty term");
  size_t pos = 0;
  // coefficient (optional sign, optional digits; bare 'x...' means 1)
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    digits += s[pos++];
  term.coeff = digits.empty() ? 1 : std::stoll(digits);
  if (negative) term.coeff = -term.coeff;
  while (pos < s.size()) {
    if (s[pos] == '*') {
      ++pos;
      continue;
    }
    if (s[pos] != 'x') fail("PARSE_ERROR", "expected variable in term '" + text + "'");
    ++pos;
    std::string idx;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      idx += s[pos++];
    if (idx.empty()) fail("PARSE_ERROR", "missing variable index in '" + text + "'");
    unsigned long var = std::stoul(idx);
    if (var > m)
      fail("PARSE_ERROR", "variable x" + idx + " outside ambient P^" + std::to_string(m));
    unsigned long exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::string e;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        e += s[pos++];
      if (e.empty()) fail("PARSE_ERROR", "missing exponent in '" + text + "'");
      exp = std::stoul(e);
    }
    term.exponents[var] += static_cast<unsigned>(exp);
  }
  return term;
}

std::vector<VarietyTerm> parse_equation(const std::string& line, unsigned m) {
  std::vector<VarietyTerm> eq;
  // Terms are '+'-separated; a '-' inside a term is its coefficient sign.
  std::string current;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '+') {
      if (!current.empty()) eq.push_back(parse_term(current, m));
      current.clear();
    } else {
      current += line[i];
    }
  }
  if (!current.empty()) eq.push_back(parse_term(current, m));
  if (eq.empty()) fail("PARSE_ERROR", "empty equation line");
  return eq;
}

}  // namespace

ProjectiveVarietySpec ProjectiveVarietySpec::parse(const std::string& text) {
  ProjectiveVarietySpec spec;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!header_seen) {
      std::istringstream head(line);
      long long p = 0, m = -1;
      if (!(head >> p >> m) || p < 2 || m < 0)
        fail("PARSE_ERROR", "expected header line 'p m'");
      spec.base_prime = static_cast<unsigned>(p);
      spec.ambient_dim = static_cast<unsigned>(m);
      header_seen = true;
      continue;
    }
    spec.equations.push_back(parse_equation(line, spec.ambient_dim));
  }
  if (!header_seen) fail("PARSE_ERROR", "missing header line 'p m'");
  spec.validate();
  return spec;
}

ProjectiveVarietySpec ProjectiveVarietySpec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("PARSE_ERROR", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

namespace {

struct CompiledEquation {
  std::vector<GaloisField::Elem> coeffs;
  std::vector<std::vector<unsigned>> exponents;
};

std::vector<CompiledEquation> compile_equations(const ProjectiveVarietySpec& x,
                                                const GaloisField& field) {
  std::vector<CompiledEquation> out;
  for (const auto& eq : x.equations) {
    CompiledEquation c;
    for (const auto& term : eq) {
      GaloisField::Elem coeff = field.from_integer(term.coeff);
      if (coeff == 0) continue;
      c.coeffs.push_back(coeff);
      c.exponents.push_back(term.exponents);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool point_on_variety(const std::vector<GaloisField::Elem>& coords,
                      const std::vector<CompiledEquation>& eqs, const GaloisField& f) {
  for (const auto& eq : eqs) {
    GaloisField::Elem value = 0;
    for (size_t t = 0; t < eq.coeffs.size(); ++t) {
      GaloisField::Elem term = eq.coeffs[t];
      const auto& exps = eq.exponents[t];
      for (size_t v = 0; v < coords.size() && term != 0; ++v)
        if (exps[v] > 0) term = f.mul(term, f.pow(coords[v], exps[v]));
      value = f.add(value, term);
    }
    if (value != 0) return false;
  }
  return true;
}

void check_budget_and_field(const ProjectiveVarietySpec& x, const GaloisField& field,
                            std::uint64_t budget) {
  if (field.p() != x.base_prime)
    fail("INVALID_ARGUMENT", "field characteristic " + std::to_string(field.p()) +
                                 " does not match the variety's prime " +
                                 std::to_string(x.base_prime));
  Int tuples = Int(field.size());
  for (unsigned i = 0; i < x.ambient_dim; ++i) tuples *= Int(field.size());
  if (tuples > Int(budget))
    fail("BUDGET_EXCEEDED", "search space " + tuples.str() + " exceeds budget " +
                                Int(budget).str());
}

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Decodes combo index `idx` into the free coordinates after a leading 1 at
// position `lead`, then tests the point.
bool representative_on_variety(std::uint64_t idx, unsigned lead, unsigned m,
                               std::uint64_t q, const std::vector<CompiledEquation>& eqs,
                               const GaloisField& f) {
  std::vector<GaloisField::Elem> coords(m + 1, 0);
  coords[lead] = f.one();
  std::uint64_t rest = idx;
  for (unsigned v = lead + 1; v <= m; ++v) {
    coords[v] = static_cast<GaloisField::Elem>(rest % q);
    rest /= q;
  }
  return point_on_variety(coords, eqs, f);
}

}  // namespace

std::uint64_t enumerate_points_serial(const ProjectiveVarietySpec& x,
                                      const GaloisField& field, std::uint64_t budget) {
  check_budget_and_field(x, field, budget);
  const auto eqs = compile_equations(x, field);
  const unsigned m = x.ambient_dim;
  const std::uint64_t q = field.size();
  std::uint64_t count = 0;
  for (unsigned lead = 0; lead <= m; ++lead) {
    const std::uint64_t combos = pow_u64(q, m - lead);
    for (std::uint64_t idx = 0; idx < combos; ++idx)
      if (representative_on_variety(idx, lead, m, q, eqs, field)) ++count;
  }
  return count;
}

std::uint64_t enumerate_points_parallel(const ProjectiveVarietySpec& x,
                                        const GaloisField& field, int jobs,
                                        std::uint64_t budget) {
  check_budget_and_field(x, field, budget);
  const auto eqs = compile_equations(x, field);
  const unsigned m = x.ambient_dim;
  const std::uint64_t q = field.size();
  std::uint64_t count = 0;
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#endif
  for (unsigned lead = 0; lead <= m; ++lead) {
    const std::int64_t combos = static_cast<std::int64_t>(pow_u64(q, m - lead));
    std::uint64_t partial = 0;
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(static) reduction(+ : partial)
#endif
    for (std::int64_t idx = 0; idx < combos; ++idx)
      if (representative_on_variety(static_cast<std::uint64_t>(idx), lead, m, q, eqs,
                                    field))
        ++partial;
    count += partial;
  }
  return count;
}

std::uint64_t enumerate_points(const ProjectiveVarietySpec& x, const GaloisField& field,
                               int jobs, std::uint64_t budget) {
  if (jobs == 1) return enumerate_points_serial(x, field, budget);
  return enumerate_points_parallel(x, field, jobs, budget);
}

PointCensus closed_point_census(const std::vector<Int>& n_counts) {
  if (n_counts.empty()) fail("INVALID_ARGUMENT", "census needs at least one count");
  PointCensus census;
  census.n_counts = n_counts;
  const int depth = static_cast<int>(n_counts.size());
  census.closed_counts.resize(n_counts.size());
  for (int d = 1; d <= depth; ++d) {
    Int acc = 0;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) acc += Int(mobius(d / e)) * n_counts[static_cast<size_t>(e - 1)];
    if (acc % d != 0)
      fail("NON_INTEGRAL", "Moebius inversion is non-integral at degree " +
                               std::to_string(d) + "; input counts are inconsistent");
    Int a = acc / d;
    if (a < 0)
      fail("NON_INTEGRAL", "negative closed-point count at degree " + std::to_string(d));
    census.closed_counts[static_cast<size_t>(d - 1)] = a;
  }
  return census;
}

PointCensus census_of(const ProjectiveVarietySpec& x, unsigned k, int depth, int jobs,
                      std::uint64_t budget) {
  if (depth < 1) fail("INVALID_ARGUMENT", "census depth must be >= 1");
  std::vector<Int> counts;
  for (int e = 1; e <= depth; ++e) {
    GaloisField field(x.base_prime, k * static_cast<unsigned>(e));
    counts.emplace_back(enumerate_points(x, field, jobs, budget));
  }
  return closed_point_census(counts);
}

namespace {

// Binomial C(a + j - 1, j): number of degree-j multisets from a classes.
Int multiset_binomial(const Int& a, int j) {
  Int num = 1, den = 1;
  for (int i = 1; i <= j; ++i) {
    num *= a + (i - 1);
    den *= i;
  }
  return num / den;
}

}  // namespace

Int sym_power_count(const PointCensus& census, int n) {
  if (n < 0) fail("INVALID_ARGUMENT", "symmetric power degree must be >= 0");
  if (n == 0) return 1;
  if (census.depth() < n)
    fail("INSUFFICIENT_CENSUS", "census depth " + std::to_string(census.depth()) +
                                    " < requested degree " + std::to_string(n));
  // Coefficient of t^n in prod_d (1 - t^d)^{-a_d}.
  std::vector<Int> series(static_cast<size_t>(n) + 1, Int(0));
  series[0] = 1;
  for (int d = 1; d <= n; ++d) {
    const Int& a = census.closed_counts[static_cast<size_t>(d - 1)];
    if (a == 0) continue;
    std::vector<Int> next(series.size(), Int(0));
    for (int j = 0; d * j <= n; ++j) {
      Int binom = multiset_binomial(a, j);
      for (int i = 0; i + d * j <= n; ++i)
        next[static_cast<size_t>(i + d * j)] += series[static_cast<size_t>(i)] * binom;
    }
    series = std::move(next);
  }
  return series[static_cast<size_t>(n)];
}

std::vector<Int> hasse_weil_series(const PointCensus& census, int order) {
  std::vector<Int> out;
  for (int n = 0; n <= order; ++n) out.push_back(sym_power_count(census, n));
  return out;
}

CompareResult compare_specialization(const TruncatedSeries& s, const PointCensus& census,
                                     const Int& q,
                                     const std::map<std::string, Int>& symbol_values) {
  std::map<std::string, RingElement> bindings;
  bindings[kLefschetz] = RingElement(q);
  for (const auto& [name, value] : symbol_values) bindings[name] = RingElement(value);
  for (int i = 0; i <= s.order(); ++i) {
    RingElement value = s.coeff(i).substitute(bindings);
    if (!value.is_constant()) {
      auto syms = value.free_symbols();
      fail("UNBOUND_SYMBOL", "coefficient of t^" + std::to_string(i) +
                                 " has unbound symbol [" + *syms.begin() + "]");
    }
    if (value.constant_value() != sym_power_count(census, i)) return {false, i};
  }
  return {true, -1};
}

}  // namespace motivic
