#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace edginj {

/// Exact nonnegative result of a counting operation.
using Count = boost::multiprecision::cpp_int;

/// Canonical arbitrary-precision rational (reduced, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle was asked for more work than its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A counting identity produced a value it must never produce
/// (non-integral quotient, inconsistent system, digit overflow).
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

/// Enumeration caps for the brute-force oracles.
///
/// Defaults can be overridden process-wide through the environment:
/// EDGINJ_MAX_PATTERN_VERTICES, EDGINJ_MAX_SUBSET_EDGES,
/// EDGINJ_MAX_PARTITION_VERTICES, EDGINJ_MAX_ISO_VERTICES,
/// EDGINJ_MAX_PM_VERTICES, EDGINJ_MAX_COVER_VERTICES, EDGINJ_MAX_STEPS.
struct Caps {
  int max_pattern_vertices = 8;     // hom / emb / edginj enumeration
  int max_subset_edges = 24;        // 2^|E| subset enumeration
  int max_partition_vertices = 8;   // Bell-number partition sums
  int max_iso_vertices = 16;        // isomorphism search
  int max_pm_vertices = 200;        // perfect-matching branching
  int max_cover_vertices = 40;      // exhaustive vertex-cover search
  int max_small_cover = 4;          // cover size accepted by eihom-poly
  std::uint64_t max_steps = 4'000'000'000ULL;  // search-tree nodes

  static Caps from_environment() {
    Caps caps;
    read_env("EDGINJ_MAX_PATTERN_VERTICES", caps.max_pattern_vertices);
    read_env("EDGINJ_MAX_SUBSET_EDGES", caps.max_subset_edges);
    read_env("EDGINJ_MAX_PARTITION_VERTICES", caps.max_partition_vertices);
    read_env("EDGINJ_MAX_ISO_VERTICES", caps.max_iso_vertices);
    read_env("EDGINJ_MAX_PM_VERTICES", caps.max_pm_vertices);
    read_env("EDGINJ_MAX_COVER_VERTICES", caps.max_cover_vertices);
    read_env("EDGINJ_MAX_SMALL_COVER", caps.max_small_cover);
    read_env("EDGINJ_MAX_STEPS", caps.max_steps);
    return caps;
  }

  /// Caps used by the reduction pipelines, whose queried patterns are
  /// larger than the interactive oracle defaults (C_{6k}, SS_{k+1}, ...).
  static Caps for_pipelines() {
    Caps caps = from_environment();
    if (caps.max_pattern_vertices < 32) caps.max_pattern_vertices = 32;
    return caps;
  }

 private:
  template <class T>
  static void read_env(const char* name, T& slot) {
    if (const char* text = std::getenv(name)) {
      try {
        slot = static_cast<T>(std::stoull(text));
      } catch (const std::exception&) {
        throw ParseError(std::string("invalid integer in ") + name);
      }
    }
  }
};

inline const Caps& default_caps() {
  static const Caps caps = Caps::from_environment();
  return caps;
}

/// Decimal representation of an exact count.
inline std::string to_string(const Count& value) { return value.str(); }

inline Count factorial(int n) {
  Count result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

/// Binomial coefficient; zero outside 0 <= k <= n.
inline Count binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline Count power(const Count& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Exact quotient; throws IdentityViolation when `divisor` does not divide.
inline Count exact_div(const Count& value, const Count& divisor, const char* what) {
  if (divisor == 0) throw IdentityViolation(std::string(what) + ": division by zero");
  Count quotient, remainder;
  boost::multiprecision::divide_qr(value, divisor, quotient, remainder);
  if (remainder != 0) {
    throw IdentityViolation(std::string(what) + ": " + value.str() + " is not divisible by " +
                            divisor.str());
  }
  return quotient;
}

}  // namespace edginj
