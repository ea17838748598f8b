#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <map>
#include <set>

#include "motivic/varieties.hpp"

using namespace motivic;

namespace {

ProjectiveVarietySpec quadric_p3(unsigned p) {
  // x0 x1 - x2 x3 = 0 in P^3: the split quadric surface.
  return ProjectiveVarietySpec::parse(std::to_string(p) +
                                      " 3\n1*x0*x1 + -1*x2*x3\n");
}

Int closed_form_projective(unsigned m, const Int& q) {
  Int num = 1;
  for (unsigned i = 0; i <= m; ++i) num *= q;
  return (num - 1) / (q - 1);
}

// Frobenius orbits of the F_{q^e}-points of P^m, computed directly from the
// point set: an independent route to closed-point counts that never touches
// Moebius inversion.
std::map<int, long long> orbit_degree_counts(unsigned m, unsigned p, unsigned e_max) {
  GaloisField field(p, e_max);
  const std::uint64_t q = field.size();
  std::set<std::vector<GaloisField::Elem>> seen;
  std::map<int, long long> orbits;
  std::vector<GaloisField::Elem> coords(m + 1, 0);
  auto frobenius = [&](std::vector<GaloisField::Elem> pt) {
    for (auto& c : pt) c = field.pow(c, p);
    return pt;  // normalized points stay normalized: 0 and 1 are fixed
  };
  auto visit = [&](std::vector<GaloisField::Elem> pt) {
    if (seen.count(pt)) return;
    std::vector<GaloisField::Elem> cur = pt;
    int len = 0;
    do {
      seen.insert(cur);
      cur = frobenius(cur);
      ++len;
    } while (cur != pt);
    ++orbits[len];
  };
  for (unsigned lead = 0; lead <= m; ++lead) {
    std::fill(coords.begin(), coords.end(), 0);
    coords[lead] = field.one();
    std::uint64_t combos = 1;
    for (unsigned i = lead + 1; i <= m; ++i) combos *= q;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned v = lead + 1; v <= m; ++v) {
        coords[v] = static_cast<GaloisField::Elem>(rest % q);
        rest /= q;
      }
      visit(coords);
    }
  }
  return orbits;
}

// Degree-n effective zero-cycle count assembled by direct enumeration of
// multiplicity patterns over the orbit classes, not by the Euler product.
Int cycles_by_enumeration(const std::map<int, long long>& orbit_counts, int n) {
  Int total = 0;
  std::vector<std::pair<int, long long>> classes(orbit_counts.begin(),
                                                 orbit_counts.end());
  auto multichoose = [](long long a, int j) {
    Int num = 1, den = 1;
    for (int i = 1; i <= j; ++i) {
      num *= Int(a + i - 1);
      den *= i;
    }
    return num / den;
  };
  auto rec = [&](auto&& self, size_t pos, int remaining, Int ways) -> void {
    if (remaining == 0) {
      total += ways;
      return;
    }
    if (pos == classes.size()) return;
    auto [degree, count] = classes[pos];
    for (int copies = 0; copies * degree <= remaining; ++copies)
      self(self, pos + 1, remaining - copies * degree,
           ways * multichoose(count, copies));
  };
  rec(rec, 0, n, Int(1));
  return total;
}

std::string write_temp(const std::string& contents) {
  char name[] = "/tmp/motivic-spec-XXXXXX";
  int fd = mkstemp(name);
  REQUIRE(fd >= 0);
  close(fd);
  std::string path = std::string(name) + ".spec";
  std::ofstream out(path);
  out << contents;
  std::remove(name);
  return path;
}

}  // namespace

TEST_CASE("enumerate_points on projective spaces") {
  GaloisField f2(2, 1);
  CHECK(enumerate_points(ProjectiveVarietySpec::projective_space(1, 2), f2) == 3);
  CHECK(enumerate_points(ProjectiveVarietySpec::projective_space(2, 2), f2) == 7);
  GaloisField f3(3, 1);
  CHECK(enumerate_points(ProjectiveVarietySpec::projective_space(3, 3), f3) == 40);
}

TEST_CASE("split quadric has (q+1)^2 points") {
  GaloisField f3(3, 1);
  CHECK(enumerate_points(quadric_p3(3), f3) == 16);
  GaloisField f5(5, 1);
  CHECK(enumerate_points(quadric_p3(5), f5) == 36);
}

TEST_CASE("serial and parallel kernels agree") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 3}, {5, 2}}) {
    GaloisField f(p, 1);
    auto space = ProjectiveVarietySpec::projective_space(m, p);
    CHECK(enumerate_points_serial(space, f) == enumerate_points_parallel(space, f, 4));
  }
  GaloisField f3(3, 1);
  CHECK(enumerate_points_serial(quadric_p3(3), f3) ==
        enumerate_points_parallel(quadric_p3(3), f3, 3));
  GaloisField f9(3, 2);
  CHECK(enumerate_points_serial(quadric_p3(3), f9) ==
        enumerate_points_parallel(quadric_p3(3), f9, 2));
}

TEST_CASE("budget and field checks") {
  GaloisField f2(2, 1);
  auto big = ProjectiveVarietySpec::projective_space(30, 2);
  CHECK_THROWS_AS(enumerate_points(big, f2), Error);
  bool threw = false;
  try {
    enumerate_points(big, f2);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == "BUDGET_EXCEEDED");
  }
  CHECK(threw);
  GaloisField f3(3, 1);
  CHECK_THROWS_AS(enumerate_points(ProjectiveVarietySpec::projective_space(1, 2), f3),
                  Error);
}

TEST_CASE("closed point census examples") {
  PointCensus line = closed_point_census({Int(3), Int(5)});
  CHECK(line.closed_counts == std::vector<Int>{Int(3), Int(1)});
  PointCensus plane = closed_point_census({Int(7), Int(21)});
  CHECK(plane.closed_counts == std::vector<Int>{Int(7), Int(7)});
  PointCensus point = closed_point_census({Int(1), Int(1)});
  CHECK(point.closed_counts == std::vector<Int>{Int(1), Int(0)});
  CHECK_THROWS_AS(closed_point_census({Int(3), Int(4)}), Error);  // (4-3)/2 not integral
  CHECK_THROWS_AS(closed_point_census({Int(3), Int(1)}), Error);  // negative a_2
}

TEST_CASE("census satisfies the Moebius identity") {
  PointCensus census = census_of(ProjectiveVarietySpec::projective_space(2, 2), 1, 6);
  for (int d = 1; d <= 6; ++d) {
    Int acc = 0;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) acc += Int(e) * census.closed_counts[static_cast<size_t>(e - 1)];
    CHECK(acc == census.n_counts[static_cast<size_t>(d - 1)]);
  }
}

TEST_CASE("Frobenius consistency against the closed form") {
  for (unsigned m = 0; m <= 2; ++m)
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
      Int q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
      PointCensus census =
          census_of(ProjectiveVarietySpec::projective_space(m, p), k, 3);
      for (int e = 1; e <= 3; ++e) {
        Int qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        CHECK(census.n_counts[static_cast<size_t>(e - 1)] ==
              closed_form_projective(m, qe));
      }
    }
}

TEST_CASE("symmetric power counts") {
  PointCensus line = census_of(ProjectiveVarietySpec::projective_space(1, 2), 1, 3);
  CHECK(sym_power_count(line, 0) == 1);
  CHECK(sym_power_count(line, 2) == 7);
  PointCensus plane = census_of(ProjectiveVarietySpec::projective_space(2, 2), 1, 3);
  CHECK(sym_power_count(plane, 2) == 35);
  CHECK_THROWS_AS(sym_power_count(plane, 5), Error);
}

TEST_CASE("Hasse-Weil series examples") {
  PointCensus line = census_of(ProjectiveVarietySpec::projective_space(1, 2), 1, 2);
  CHECK(hasse_weil_series(line, 2) == std::vector<Int>{Int(1), Int(3), Int(7)});
  PointCensus point = closed_point_census({Int(1), Int(1), Int(1)});
  CHECK(hasse_weil_series(point, 3) ==
        std::vector<Int>{Int(1), Int(1), Int(1), Int(1)});
  PointCensus plane3 = census_of(ProjectiveVarietySpec::projective_space(2, 3), 1, 2);
  CHECK(hasse_weil_series(plane3, 2) == std::vector<Int>{Int(1), Int(13), Int(130)});
}

TEST_CASE("generating function identity against direct orbit enumeration") {
  for (unsigned m : {1u, 2u}) {
    PointCensus census = census_of(ProjectiveVarietySpec::projective_space(m, 2), 1, 3);
    // Orbits inside the degree-6 extension have lengths dividing 6; lengths
    // 1, 2, 3 give exactly the closed points of those degrees.
    auto orbits = orbit_degree_counts(m, 2, 6);
    std::map<int, long long> small;
    for (int dgr = 1; dgr <= 3; ++dgr)
      if (orbits.count(dgr)) small[dgr] = orbits[dgr];
    for (int dgr = 1; dgr <= 3; ++dgr)
      CHECK(census.closed_counts[static_cast<size_t>(dgr - 1)] ==
            Int(small.count(dgr) ? small[dgr] : 0));
    for (int n = 0; n <= 3; ++n)
      CHECK(sym_power_count(census, n) == cycles_by_enumeration(small, n));
  }
}

TEST_CASE("compare_specialization") {
  PointCensus plane = census_of(ProjectiveVarietySpec::projective_space(2, 2), 1, 6);
  CHECK(compare_specialization(zeta_projective(2, 6), plane, 2, {}).ok);

  auto wrong = compare_specialization(zeta_projective(1, 6), plane, 2, {});
  CHECK_FALSE(wrong.ok);
  CHECK(wrong.first_mismatch == 1);

  PointCensus line = census_of(ProjectiveVarietySpec::projective_space(1, 2), 1, 6);
  ConicZeta conic = zeta_conic(RingElement::symbol("C"), 6);
  CHECK(compare_specialization(conic.series, line, 2, {{"C", Int(3)}}).ok);
  CHECK_THROWS_AS(compare_specialization(conic.series, line, 2, {}), Error);
}

TEST_CASE("spec file parsing") {
  std::string path = write_temp("# split quadric\n3 3\n1*x0*x1 + -1*x2*x3\n");
  ProjectiveVarietySpec spec = ProjectiveVarietySpec::parse_file(path);
  CHECK(spec.ambient_dim == 3);
  CHECK(spec.base_prime == 3);
  CHECK(spec.equations.size() == 1);
  GaloisField f3(3, 1);
  CHECK(enumerate_points(spec, f3) == 16);
  std::remove(path.c_str());

  CHECK_THROWS_AS(ProjectiveVarietySpec::parse("2 2\nx0 + x1^2\n"), Error);  // inhomogeneous
  CHECK_THROWS_AS(ProjectiveVarietySpec::parse("4 2\nx0\n"), Error);         // 4 not prime
  CHECK_THROWS_AS(ProjectiveVarietySpec::parse("2 1\nx0*x5\n"), Error);      // bad index
  CHECK_THROWS_AS(ProjectiveVarietySpec::parse(""), Error);
  CHECK_THROWS_AS(ProjectiveVarietySpec::parse_file("/nonexistent/x.spec"), Error);

  // Coefficients reduce mod p: 3*x0^2 vanishes over F_3, so the equation
  // becomes trivial and the count is that of the ambient line.
  ProjectiveVarietySpec trivial = ProjectiveVarietySpec::parse("3 1\n3*x0^2\n");
  CHECK(enumerate_points(trivial, f3) == 4);
}
