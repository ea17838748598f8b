#include "motivic/qpoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace motivic {

QPolynomial::QPolynomial(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(Int coeff, int degree) {
  QPolynomial p;
  if (coeff != 0) {
    p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

Int QPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[static_cast<size_t>(i)];
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return QPolynomial();
  QPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

QPolyDivMod QPolynomial::divmod(const QPolynomial& divisor) const {
  if (divisor.is_zero()) fail("INVALID_ARGUMENT", "polynomial division by zero");
  QPolynomial rem = *this;
  QPolynomial quot;
  const int dd = divisor.degree();
  const Int& lead = divisor.c_.back();
  if (rem.degree() >= dd)
    quot.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, Int(0));
  while (rem.degree() >= dd) {
    const Int& top = rem.c_.back();
    if (top % lead != 0)
      fail("INEXACT_DIVISION", "leading coefficient " + lead.str() +
                                   " does not divide " + top.str());
    Int factor = top / lead;
    int shift = rem.degree() - dd;
    quot.c_[static_cast<size_t>(shift)] = factor;
    for (int i = 0; i <= dd; ++i)
      rem.c_[static_cast<size_t>(i + shift)] -= factor * divisor.c_[static_cast<size_t>(i)];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Int QPolynomial::eval(const Int& q) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

bool QPolynomial::is_palindromic() const {
  for (size_t i = 0, j = c_.size(); i < j; ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (i == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

QPolynomial q_integer(int n) {
  if (n <= 0) return QPolynomial();
  return QPolynomial(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

namespace {

std::map<std::pair<int, int>, QPolynomial> g_binom_cache;
std::mutex g_binom_mutex;

}  // namespace

QPolynomial gaussian_binomial(int n, int d) {
  if (d < 0 || d > n || n < 0) return QPolynomial();
  if (d == 0 || d == n) return QPolynomial(Int(1));
  std::lock_guard<std::mutex> lock(g_binom_mutex);
  // Fill the Pascal table row by row; entries for smaller n come for free.
  for (int m = 1; m <= n; ++m) {
    for (int e = 1; e < m; ++e) {
      auto key = std::make_pair(m, e);
      if (g_binom_cache.count(key)) continue;
      auto upper = [&](int nn, int ee) -> QPolynomial {
        if (ee <= 0 || ee >= nn) return QPolynomial(Int(1));
        return g_binom_cache.at(std::make_pair(nn, ee));
      };
      g_binom_cache[key] =
          upper(m - 1, e) * QPolynomial::monomial(Int(1), e) + upper(m - 1, e - 1);
    }
  }
  return g_binom_cache.at(std::make_pair(n, d));
}

QPascalTriple q_pascal_step(int n, int d) {
  if (d < 1 || d > n)
    fail("INVALID_ARGUMENT", "q-Pascal step needs 1 <= d <= n");
  return {gaussian_binomial(n + 1, d), gaussian_binomial(n, d),
          gaussian_binomial(n, d - 1)};
}

QPolynomial g_quotient(int r, int n) {
  if (r < 1 || n < 1) fail("INVALID_ARGUMENT", "g_quotient needs r, n >= 1");
  if (std::gcd(r, n + 1) != 1)
    fail("NON_COPRIME", "g_quotient undefined: gcd(" + std::to_string(r) + ", " +
                            std::to_string(n + 1) + ") != 1");
  auto dm = gaussian_binomial(n + r, r).divmod(q_integer(n + 1));
  if (!dm.remainder.is_zero())
    fail("INEXACT_DIVISION", "division of binom(n+r, r)_q by [n+1]_q left a remainder");
  return dm.quotient;
}

}  // namespace motivic
