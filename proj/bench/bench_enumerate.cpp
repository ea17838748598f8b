// Compares the serial reference point-enumeration kernel against the OpenMP
// one on a few progressively larger varieties, verifying that the counts
// agree before reporting timings.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "motivic/varieties.hpp"

using namespace motivic;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Case {
  std::string name;
  ProjectiveVarietySpec spec;
  unsigned p;
  unsigned k;
};

}  // namespace

int main(int argc, char** argv) {
  int jobs = 0;  // 0 = OpenMP default
  if (argc > 1) jobs = std::stoi(argv[1]);
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  int threads = 1;
#endif

  std::vector<Case> cases;
  cases.push_back({"P^3 / F_25", ProjectiveVarietySpec::projective_space(3, 5), 5, 2});
  cases.push_back({"quadric in P^3 / F_49",
                   ProjectiveVarietySpec::parse("7 3\n1*x0*x1 + -1*x2*x3\n"), 7, 2});
  cases.push_back({"P^4 / F_27", ProjectiveVarietySpec::projective_space(4, 3), 3, 3});
  cases.push_back(
      {"cubic threefold in P^4 / F_16",
       ProjectiveVarietySpec::parse("2 4\nx0^3 + x1^3 + x2^3 + x3^3 + x0*x1*x4\n"), 2,
       4});

  const std::uint64_t budget = std::uint64_t(1) << 28;
  std::cout << "threads: " << threads << "\n";
  std::cout << std::left << std::setw(32) << "case" << std::setw(12) << "points"
            << std::setw(12) << "serial(s)" << std::setw(12) << "parallel(s)"
            << "speedup\n";
  for (const auto& c : cases) {
    GaloisField field(c.p, c.k);
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t serial = enumerate_points_serial(c.spec, field, budget);
    double ts = seconds_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    std::uint64_t parallel = enumerate_points_parallel(c.spec, field, jobs, budget);
    double tp = seconds_since(t1);
    if (serial != parallel) {
      std::cerr << "MISMATCH on " << c.name << ": serial " << serial << " parallel "
                << parallel << "\n";
      return 1;
    }
    std::cout << std::left << std::setw(32) << c.name << std::setw(12) << serial
              << std::setw(12) << std::fixed << std::setprecision(3) << ts
              << std::setw(12) << tp << std::setprecision(2) << (tp > 0 ? ts / tp : 0)
              << "\n";
  }
  return 0;
}
