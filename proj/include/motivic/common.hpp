#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace motivic {

// All arithmetic in this library is exact. Counts and coefficients routinely
// exceed 64 bits (Gaussian binomials, symmetric-power counts), so the integer
// and rational types are arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Domain error with a stable machine-readable code. The CLI maps these to
/// `ERROR <CODE>: message` lines and exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace motivic
