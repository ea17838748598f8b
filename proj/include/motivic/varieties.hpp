#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motivic/galois.hpp"
#include "motivic/series.hpp"

namespace motivic {

constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t(1) << 24;

/// One monomial of a defining equation: coeff * x0^e0 * ... * xm^em.
struct VarietyTerm {
  long long coeff = 0;
  std::vector<unsigned> exponents;  // length ambient_dim + 1
};

/// A projective variety given by homogeneous equations with integer
/// coefficients over a prime field. An empty equation list describes the
/// ambient projective space itself.
struct ProjectiveVarietySpec {
  unsigned ambient_dim = 0;  // ambient P^m
  unsigned base_prime = 0;
  std::vector<std::vector<VarietyTerm>> equations;

  static ProjectiveVarietySpec projective_space(unsigned m, unsigned p);

  /// Text format: first non-comment line `p m`, then one equation per line as
  /// `+`-separated terms `c*x0^e0*...*xm^em`. Blank lines and lines starting
  /// with '#' are skipped. Homogeneity is validated here.
  static ProjectiveVarietySpec parse(const std::string& text);
  static ProjectiveVarietySpec parse_file(const std::string& path);

  void validate() const;
};

/// Number of projective points of the variety over the given field, by brute
/// force over normalized representatives (first nonzero coordinate = 1).
/// The field must extend the spec's prime field; the search space
/// q^{ambient_dim+1} must stay within the budget (BUDGET_EXCEEDED).
/// jobs > 1 partitions the representative space across OpenMP workers.
std::uint64_t enumerate_points(const ProjectiveVarietySpec& x, const GaloisField& field,
                               int jobs = 1,
                               std::uint64_t budget = kDefaultEnumerationBudget);

/// Serial reference implementation, kept independent of the parallel kernel.
std::uint64_t enumerate_points_serial(const ProjectiveVarietySpec& x,
                                      const GaloisField& field,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

/// OpenMP kernel; equals the serial count on every input.
std::uint64_t enumerate_points_parallel(const ProjectiveVarietySpec& x,
                                        const GaloisField& field, int jobs,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Point counts N_e = |X(F_{q^e})| together with the closed-point counts a_d
/// recovered from them; index i holds the value for degree i+1.
struct PointCensus {
  std::vector<Int> n_counts;
  std::vector<Int> closed_counts;

  int depth() const { return static_cast<int>(n_counts.size()); }
};

/// Moebius inversion a_d = (1/d) sum_{e|d} mu(d/e) N_e, with the consistency
/// check sum_{e|d} e a_e = N_d. Signals NON_INTEGRAL when the counts are not
/// the point counts of any variety (non-integer or negative a_d).
PointCensus closed_point_census(const std::vector<Int>& n_counts);

/// Builds a census for the variety over F_{p^k}: N_e is computed over the
/// single field F_{p^{ke}} for e = 1..depth.
PointCensus census_of(const ProjectiveVarietySpec& x, unsigned k, int depth,
                      int jobs = 1, std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of effective zero-cycles of degree n, i.e. |Sym^n(X)(F_q)|: the
/// coefficient of t^n in prod_d (1 - t^d)^{-a_d}. Needs census depth >= n
/// (INSUFFICIENT_CENSUS).
Int sym_power_count(const PointCensus& census, int n);

/// Hasse-Weil zeta coefficients: sum_n |Sym^n(X)(F_q)| t^n up to the order.
std::vector<Int> hasse_weil_series(const PointCensus& census, int order);

struct CompareResult {
  bool ok;
  int first_mismatch;  // -1 when ok
};

/// Checks that specializing every coefficient of s at L -> q (plus the given
/// symbol values) reproduces the census' symmetric-power counts. Every free
/// symbol of s must be bound (UNBOUND_SYMBOL).
CompareResult compare_specialization(const TruncatedSeries& s, const PointCensus& census,
                                     const Int& q,
                                     const std::map<std::string, Int>& symbol_values);

}  // namespace motivic
