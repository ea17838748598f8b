#include "motivic/galois.hpp"

#include <algorithm>
#include <string>

namespace motivic {

namespace {

using Poly = std::vector<unsigned>;  // dense, constant term first, may have lead zeros

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mobius(int n) {
  if (n < 1) fail("INVALID_ARGUMENT", "mobius needs n >= 1");
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

namespace {

// Divides a by b over F_p (b monic); returns true when the remainder is zero.
bool divides_exactly(const Poly& b, Poly a, unsigned p) {
  int db = poly_degree(b);
  int da = poly_degree(a);
  while (da >= db) {
    unsigned factor = a[static_cast<size_t>(da)];
    for (int j = 0; j <= db; ++j) {
      unsigned sub = factor * b[static_cast<size_t>(j)] % p;
      unsigned& c = a[static_cast<size_t>(da - db + j)];
      c = (c + p - sub) % p;
    }
    da = poly_degree(a);
  }
  return da < 0;
}

bool is_irreducible(const Poly& candidate, unsigned p, unsigned k) {
  if (candidate[0] == 0 && k > 1) return false;  // divisible by x
  // Trial division by every monic polynomial of degree 1..k/2.
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      std::uint64_t rest = idx;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      div[d] = 1;
      if (divides_exactly(div, candidate, p)) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) fail("INVALID_ARGUMENT", std::to_string(p) + " is not prime");
  if (k < 1) fail("INVALID_ARGUMENT", "extension degree must be >= 1");
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q_ > (std::uint64_t(1) << 40) / p) fail("BUDGET_EXCEEDED", "field too large");
    q_ *= p;
  }
  one_ = 1;

  // Lexicographically smallest monic irreducible, comparing the non-leading
  // coefficient sequence (a_0, ..., a_{k-1}) with a_0 most significant.
  std::uint64_t combos = q_;
  bool found = false;
  for (std::uint64_t idx = 0; idx < combos && !found; ++idx) {
    Poly cand(k + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < k; ++i) {
      unsigned digit = static_cast<unsigned>(rest % p);
      rest /= p;
      cand[k - 1 - i] = digit;  // last coefficient varies fastest
    }
    cand[k] = 1;
    if (is_irreducible(cand, p, k)) {
      modulus_.assign(cand.begin(), cand.end());
      found = true;
    }
  }
  if (!found) fail("INVALID_ARGUMENT", "no irreducible modulus found");  // unreachable

  if (q_ <= kTableLimit) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_direct(static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table_[a * q_ + b] = mul_direct(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    tabled_ = true;
  }
  if (q_ <= (1u << 16)) check_cyclic();
}

GaloisField::Elem GaloisField::from_integer(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<unsigned> GaloisField::poly_of(Elem a) const {
  std::vector<unsigned> out(k_, 0);
  std::uint64_t rest = a;
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = static_cast<unsigned>(rest % p_);
    rest /= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::add_direct(Elem a, Elem b) const {
  Elem out = 0;
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned da = static_cast<unsigned>((a / mult) % p_);
    unsigned db = static_cast<unsigned>((b / mult) % p_);
    out += static_cast<Elem>(((da + db) % p_) * mult);
    mult *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  Elem out = 0;
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned da = static_cast<unsigned>((a / mult) % p_);
    out += static_cast<Elem>(((p_ - da) % p_) * mult);
    mult *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::mul_direct(Elem a, Elem b) const {
  // Schoolbook product followed by reduction modulo the modulus.
  std::vector<unsigned> prod(2 * k_, 0);
  std::vector<unsigned> pa = poly_of(a), pb = poly_of(b);
  for (unsigned i = 0; i < k_; ++i) {
    if (pa[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
  }
  for (int i = static_cast<int>(2 * k_) - 1; i >= static_cast<int>(k_); --i) {
    unsigned factor = prod[static_cast<size_t>(i)];
    if (factor == 0) continue;
    prod[static_cast<size_t>(i)] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      unsigned sub = factor * modulus_[j] % p_;
      unsigned& c = prod[static_cast<size_t>(i) - k_ + j];
      c = (c + p_ - sub) % p_;
    }
  }
  Elem out = 0;
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += static_cast<Elem>(prod[i] * mult);
    mult *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  return tabled_ ? add_table_[std::uint64_t(a) * q_ + b] : add_direct(a, b);
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  return tabled_ ? mul_table_[std::uint64_t(a) * q_ + b] : mul_direct(a, b);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  Elem acc = one_;
  Elem base = a;
  while (e > 0) {
    if (e & 1u) acc = mul(acc, base);
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) fail("INVALID_ARGUMENT", "zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

void GaloisField::check_cyclic() const {
  // Spot check: some element generates the full multiplicative group.
  std::uint64_t group = q_ - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = group;
  for (std::uint64_t d = 2; d * d <= rest; ++d)
    if (rest % d == 0) {
      prime_factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  if (rest > 1) prime_factors.push_back(rest);
  for (Elem g = 1; g < q_; ++g) {
    bool generator = pow(g, group) == one_;
    for (std::uint64_t f : prime_factors)
      generator = generator && pow(g, group / f) != one_;
    if (generator) return;
  }
  fail("INVALID_ARGUMENT", "multiplicative group is not cyclic; bad modulus");
}

}  // namespace motivic
