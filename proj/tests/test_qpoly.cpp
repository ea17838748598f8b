#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "motivic/qpoly.hpp"

using namespace motivic;

namespace {

QPolynomial qp(std::vector<long long> coeffs) {
  std::vector<Int> c;
  for (long long v : coeffs) c.emplace_back(v);
  return QPolynomial(std::move(c));
}

// Independent route: evaluate the defining ratio
//   prod_i (q^n - q^i) / prod_i (q^d - q^i),  i = 0..d-1
// by exact polynomial division, without the Pascal recurrence.
QPolynomial binomial_by_ratio(int n, int d) {
  QPolynomial num(Int(1)), den(Int(1));
  for (int i = 0; i < d; ++i) {
    num = num * (QPolynomial::monomial(Int(1), n) - QPolynomial::monomial(Int(1), i));
    den = den * (QPolynomial::monomial(Int(1), d) - QPolynomial::monomial(Int(1), i));
  }
  auto dm = num.divmod(den);
  REQUIRE(dm.remainder.is_zero());
  return dm.quotient;
}

// Brute-force count of d-dimensional subspaces of F_q^n: enumerate spans of
// d-tuples of vectors and deduplicate by the span's full point set.
long long count_subspaces(int q, int n, int d) {
  const int total = [&] {
    int t = 1;
    for (int i = 0; i < n; ++i) t *= q;
    return t;
  }();
  auto add_vec = [&](int a, int b) {
    int out = 0, mult = 1;
    for (int i = 0; i < n; ++i) {
      out += ((a / mult) % q + (b / mult) % q) % q * mult;
      mult *= q;
    }
    return out;
  };
  auto scale_vec = [&](int s, int a) {
    int out = 0, mult = 1;
    for (int i = 0; i < n; ++i) {
      out += ((a / mult) % q * s) % q * mult;
      mult *= q;
    }
    return out;
  };
  if (d == 0 || d == n) return 1;
  std::set<std::set<int>> spans;
  std::vector<int> gens(static_cast<size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == d) {
      std::set<int> span{0};
      for (int g : gens) {
        std::set<int> next;
        for (int v : span)
          for (int s = 0; s < q; ++s) next.insert(add_vec(v, scale_vec(s, g)));
        span = std::move(next);
      }
      size_t expected = 1;
      for (int i = 0; i < d; ++i) expected *= static_cast<size_t>(q);
      if (span.size() == expected) spans.insert(span);  // generators independent
      return;
    }
    for (int v = from; v < total; ++v) {
      gens[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return static_cast<long long>(spans.size());
}

}  // namespace

TEST_CASE("q-integers and basic arithmetic") {
  CHECK(q_integer(3) == qp({1, 1, 1}));
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(0).degree() == -1);
  CHECK((qp({1, 2}) * qp({1, -2})) == qp({1, 0, -4}));
  CHECK(qp({1, 1}).eval(4) == 5);
}

TEST_CASE("gaussian binomial examples") {
  CHECK(gaussian_binomial(3, 1) == qp({1, 1, 1}));
  CHECK(gaussian_binomial(4, 2) == qp({1, 1, 2, 1, 1}));
  CHECK(gaussian_binomial(4, 2).eval(2) == 35);
  CHECK(gaussian_binomial(5, 7).is_zero());
  CHECK(gaussian_binomial(6, 0) == QPolynomial(Int(1)));
}

TEST_CASE("gaussian binomial agrees with the defining ratio") {
  for (int n = 0; n <= 8; ++n)
    for (int d = 0; d <= n; ++d) CHECK(gaussian_binomial(n, d) == binomial_by_ratio(n, d));
}

TEST_CASE("q-Pascal identity") {
  auto [whole, scaled, lowered] = q_pascal_step(2, 1);
  CHECK(whole == qp({1, 1, 1}));
  CHECK(scaled == qp({1, 1}));
  CHECK(lowered == QPolynomial(Int(1)));
  CHECK(whole == scaled * QPolynomial::monomial(Int(1), 1) + lowered);

  auto t = q_pascal_step(3, 2);
  CHECK(t.whole == qp({1, 1, 2, 1, 1}));
  CHECK(t.whole == t.scaled * QPolynomial::monomial(Int(1), 2) + t.lowered);

  auto u = q_pascal_step(1, 1);
  CHECK(u.whole == qp({1, 1}));
  CHECK(u.scaled == QPolynomial(Int(1)));
  CHECK(u.lowered == QPolynomial(Int(1)));

  for (int n = 1; n <= 12; ++n)
    for (int d = 1; d <= n; ++d) {
      auto s = q_pascal_step(n, d);
      CHECK(s.whole == s.scaled * QPolynomial::monomial(Int(1), d) + s.lowered);
    }
  CHECK_THROWS_AS(q_pascal_step(3, 4), Error);
}

TEST_CASE("specialization at q = 1 gives binomial coefficients") {
  for (int n = 0; n <= 12; ++n) {
    Int binom = 1;
    for (int d = 0; d <= n; ++d) {
      CHECK(gaussian_binomial(n, d).eval(1) == binom);
      binom = binom * (n - d) / (d + 1);
    }
  }
}

TEST_CASE("gaussian binomials are palindromic with nonnegative coefficients") {
  for (int n = 0; n <= 12; ++n)
    for (int d = 0; d <= n; ++d) {
      QPolynomial b = gaussian_binomial(n, d);
      CHECK(b.is_palindromic());
      CHECK(b.degree() == (d == 0 || d == n ? 0 : d * (n - d)));
      for (const auto& c : b.coeffs()) CHECK(c >= 0);
    }
}

TEST_CASE("subspace-count oracle") {
  for (int q : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= n; ++d)
        CHECK(gaussian_binomial(n, d).eval(q) == count_subspaces(q, n, d));
}

TEST_CASE("g-quotient") {
  CHECK(g_quotient(1, 2) == QPolynomial(Int(1)));
  CHECK(g_quotient(2, 2) == qp({1, 0, 1}));
  QPolynomial g42 = g_quotient(4, 2);
  CHECK(g42 == qp({1, 0, 1, 1, 1, 0, 1}));
  CHECK(g42.eval(2) == 93);  // 651 / 7
  CHECK(gaussian_binomial(6, 4).eval(2) == 651);

  for (int r = 1; r <= 12; ++r)
    for (int n = 1; n <= 12; ++n) {
      if (std::gcd(r, n + 1) != 1) continue;
      CHECK(g_quotient(r, n) * q_integer(n + 1) == gaussian_binomial(n + r, r));
    }

  CHECK_THROWS_AS(g_quotient(2, 3), Error);
  bool threw = false;
  try {
    g_quotient(3, 2);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == "NON_COPRIME");
  }
  CHECK(threw);
}

TEST_CASE("division is exact only when it divides") {
  auto dm = qp({1, 0, -1}).divmod(qp({1, 1}));  // (1-q^2)/(1+q) = 1-q
  CHECK(dm.quotient == qp({1, -1}));
  CHECK(dm.remainder.is_zero());
  CHECK_THROWS_AS(qp({1, 0, 1}).divmod(qp({0, 2})), Error);  // 1+q^2 by 2q
}

TEST_CASE("to_string") {
  CHECK(qp({1, 0, 1}).to_string() == "1 + q^2");
  CHECK(qp({0}).to_string() == "0");
  CHECK(qp({-1, 2}).to_string() == "-1 + 2*q");
  CHECK(qp({1, 0, 1}).to_string("L") == "1 + L^2");
}
