#include "motivic/ring.hpp"

#include <cctype>
#include <sstream>

namespace motivic {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(const std::string& name, unsigned exp) {
  Monomial m;
  if (exp > 0) m.e_[name] = exp;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [name, e] : e_) d += e;
  return d;
}

unsigned Monomial::exponent(const std::string& name) const {
  auto it = e_.find(name);
  return it == e_.end() ? 0u : it->second;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [name, e] : o.e_) r.e_[name] += e;
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.e_.begin(), ib = b.e_.begin();
  SymbolLast before;
  while (ia != a.e_.end() && ib != b.e_.end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
      ++ia;
      ++ib;
    } else {
      // The monomial holding the earlier variable has a positive exponent
      // where the other has zero; it sorts first.
      return before(ia->first, ib->first) ? -1 : 1;
    }
  }
  if (ia == a.e_.end() && ib == b.e_.end()) return 0;
  // Equal total degree with one map a strict prefix of the other cannot
  // happen; treat the longer map as larger for a total order regardless.
  return ia == a.e_.end() ? -1 : 1;
}

// ---- RingElement ------------------------------------------------------------

RingElement::RingElement(Int v) {
  if (v != 0) t_[Monomial()] = std::move(v);
}

RingElement RingElement::symbol(const std::string& name) {
  if (name.empty()) fail("INVALID_ARGUMENT", "class symbol name must be nonempty");
  if (name == kLefschetz)
    fail("INVALID_ARGUMENT", "\"L\" is reserved for the Lefschetz class");
  RingElement r;
  r.t_[Monomial::variable(name)] = 1;
  return r;
}

RingElement RingElement::lefschetz(unsigned power) {
  RingElement r;
  r.t_[Monomial::variable(kLefschetz, power)] = 1;
  return r;
}

bool RingElement::is_one() const {
  return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
}

bool RingElement::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Int RingElement::constant_value() const {
  if (t_.empty()) return 0;
  if (!is_constant())
    fail("SYMBOLIC_COEFFICIENTS", "element is not a constant: " + to_string());
  return t_.begin()->second;
}

std::set<std::string> RingElement::free_symbols() const {
  std::set<std::string> s;
  for (const auto& [m, c] : t_)
    for (const auto& [name, e] : m.exponents())
      if (name != kLefschetz) s.insert(name);
  return s;
}

void RingElement::add_term(const Monomial& m, const Int& c) {
  auto it = t_.find(m);
  if (it == t_.end()) {
    if (c != 0) t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  RingElement r;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

RingElement RingElement::pow(unsigned e) const {
  RingElement acc(1);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return acc;
}

namespace {

RingElement raw_substitute(const RingElement& a,
                           const std::map<std::string, RingElement>& bindings);

}  // namespace

RingElement RingElement::substitute(
    const std::map<std::string, RingElement>& bindings) const {
  // Binding values may themselves mention bound variables (e.g. B -> [P^2]
  // together with L -> 3); resolve them through the map once so the value
  // lands in the target ring.
  std::map<std::string, RingElement> resolved;
  for (const auto& [name, value] : bindings)
    resolved[name] = raw_substitute(value, bindings);
  return raw_substitute(*this, resolved);
}

namespace {

RingElement raw_substitute(const RingElement& a,
                           const std::map<std::string, RingElement>& bindings) {
  RingElement result;
  for (const auto& [m, c] : a.terms()) {
    RingElement term(c);
    for (const auto& [name, e] : m.exponents()) {
      auto it = bindings.find(name);
      if (it != bindings.end()) {
        term *= it->second.pow(e);
      } else if (name == kLefschetz) {
        term *= RingElement::lefschetz(e);
      } else {
        term *= RingElement::symbol(name).pow(e);
      }
    }
    result += term;
  }
  return result;
}

}  // namespace

RingElement RingElement::reduce_mod_L() const {
  RingElement r;
  for (const auto& [m, c] : t_)
    if (m.exponent(kLefschetz) == 0) r.t_.emplace(m, c);
  return r;
}

QPolynomial RingElement::to_qpoly() const {
  std::vector<Int> coeffs;
  for (const auto& [m, c] : t_) {
    unsigned le = m.exponent(kLefschetz);
    if (m.degree() != le)
      fail("SYMBOLIC_COEFFICIENTS",
           "element is not a polynomial in L: " + to_string());
    if (coeffs.size() <= le) coeffs.resize(le + 1, Int(0));
    coeffs[le] = c;
  }
  return QPolynomial(std::move(coeffs));
}

RingElement RingElement::from_qpoly(const QPolynomial& p) {
  RingElement r;
  for (int i = 0; i <= p.degree(); ++i) {
    Int c = p.coeff(i);
    if (c != 0)
      r.t_.emplace(Monomial::variable(kLefschetz, static_cast<unsigned>(i)),
                   std::move(c));
  }
  return r;
}

namespace {

void append_term(std::ostringstream& out, bool first, const Int& coeff,
                 const std::string& body) {
  if (first) {
    if (coeff < 0) out << "-";
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  Int mag = abs(coeff);
  if (body.empty()) {
    out << mag.str();
  } else {
    if (mag != 1) out << mag.str() << "*";
    out << body;
  }
}

}  // namespace

std::string RingElement::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : t_) {
    std::ostringstream body;
    bool firstvar = true;
    for (const auto& [name, e] : m.exponents()) {
      if (!firstvar) body << "*";
      if (name == kLefschetz)
        body << kLefschetz;
      else
        body << "[" << name << "]";
      if (e > 1) body << "^" << e;
      firstvar = false;
    }
    append_term(out, first, c, body.str());
    first = false;
  }
  return out.str();
}

namespace {

std::string latex_exponent(unsigned e) {
  if (e < 10) return "^" + std::to_string(e);
  return "^{" + std::to_string(e) + "}";
}

std::string latex_symbol(const std::string& name) {
  std::string safe;
  for (char ch : name) {
    if (ch == '_' || ch == '^' || ch == '{' || ch == '}' || ch == '\\' ||
        ch == '#' || ch == '%' || ch == '&')
      safe += '\\';
    safe += ch;
  }
  return "[\\mathrm{" + safe + "}]";
}

}  // namespace

std::string RingElement::to_latex() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int mag = abs(c);
    if (m.is_one()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      for (const auto& [name, e] : m.exponents()) {
        out << (name == kLefschetz ? std::string("\\mathbb{L}") : latex_symbol(name));
        if (e > 1) out << latex_exponent(e);
      }
    }
    first = false;
  }
  return out.str();
}

// ---- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RingElement parse() {
    RingElement r = expression();
    skip_ws();
    if (pos_ != s_.size())
      fail("PARSE_ERROR", "unexpected input at position " + std::to_string(pos_) +
                              ": '" + s_.substr(pos_) + "'");
    return r;
  }

 private:
  RingElement expression() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = get() == '-';
    RingElement acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      RingElement t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  RingElement term() {
    RingElement acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc *= factor();
    }
    return acc;
  }

  RingElement factor() {
    RingElement base = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("PARSE_ERROR", "expected exponent after '^'");
      if (digits.size() > 6) fail("PARSE_ERROR", "exponent too large: " + digits);
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  RingElement atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      RingElement r = expression();
      skip_ws();
      if (get() != ')') fail("PARSE_ERROR", "expected ')'");
      return r;
    }
    if (c == '[') {
      get();
      std::string name;
      while (pos_ < s_.size() && s_[pos_] != ']') name += s_[pos_++];
      if (pos_ == s_.size()) fail("PARSE_ERROR", "unterminated symbol '[" + name + "'");
      get();  // ']'
      return RingElement::symbol(name);
    }
    if (c == 'L') {
      get();
      return RingElement::lefschetz();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RingElement(Int(read_digits()));
    }
    fail("PARSE_ERROR", std::string("unexpected character '") + c + "'");
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      d += s_[pos_++];
    return d;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RingElement RingElement::parse(const std::string& text) { return Parser(text).parse(); }

// ---- catalog ----------------------------------------------------------------

RingElement projective_class(int n) {
  if (n < 0) fail("INVALID_ARGUMENT", "projective_class needs n >= 0");
  RingElement r;
  for (int i = 0; i <= n; ++i) r += RingElement::lefschetz(static_cast<unsigned>(i));
  return r;
}

RingElement blowup_class(const RingElement& x, const RingElement& y, int codim) {
  if (codim < 1) fail("INVALID_ARGUMENT", "blow-up codimension must be >= 1");
  return x + y * (projective_class(codim - 1) - RingElement(1));
}

RingElement sb_minimal_decomposition(const RingElement& b_min, int n, int r) {
  if (n < 1 || r < 1)
    fail("INVALID_ARGUMENT", "sb_minimal_decomposition needs n >= 1 and r >= 1");
  RingElement geom;
  for (int i = 0; i < r; ++i)
    geom += RingElement::lefschetz(static_cast<unsigned>(i * n));
  return b_min * geom;
}

RingElement sb_product_class(const RingElement& b, int n, int d) {
  if (d < 1) fail("INVALID_ARGUMENT", "sb_product_class needs d >= 1");
  if (n < 0) fail("INVALID_ARGUMENT", "sb_product_class needs n >= 0");
  return b * projective_class(n).pow(static_cast<unsigned>(d - 1));
}

RingElement sb_sym2_class(const RingElement& b, const RingElement& gr1b) {
  return b + gr1b * RingElement::lefschetz(2);
}

RingElement sym_power_projective_class(int d, int n) {
  if (d < 0 || n < 0)
    fail("INVALID_ARGUMENT", "sym_power_projective_class needs d, n >= 0");
  return RingElement::from_qpoly(gaussian_binomial(n + d, d));
}

RingElement sym_power_sb_class(const RingElement& b, int n, int r) {
  return RingElement::from_qpoly(g_quotient(r, n)) * b;
}

RingElement sb_square_rewrite(const RingElement& a, const std::string& symbol, int n) {
  if (n < 0) fail("INVALID_ARGUMENT", "sb_square_rewrite needs n >= 0");
  RingElement pn = projective_class(n);
  RingElement result;
  for (const auto& [m, c] : a.terms()) {
    unsigned e = m.exponent(symbol);
    if (e < 2) {
      RingElement t(c);
      RingElement mono;
      mono = RingElement(1);
      for (const auto& [name, exp] : m.exponents())
        mono *= (name == kLefschetz ? RingElement::lefschetz(exp)
                                    : RingElement::symbol(name).pow(exp));
      result += t * mono;
      continue;
    }
    // s^e = s * [P^n]^{e-1}
    RingElement rest(c);
    for (const auto& [name, exp] : m.exponents()) {
      if (name == symbol) continue;
      rest *= (name == kLefschetz ? RingElement::lefschetz(exp)
                                  : RingElement::symbol(name).pow(exp));
    }
    result += rest * RingElement::symbol(symbol) * pn.pow(e - 1);
  }
  return result;
}

}  // namespace motivic
