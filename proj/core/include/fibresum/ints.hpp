#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibresum {

// Exact arithmetic everywhere; no floating point in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Malformed or inconsistent input data (bad manifest, wrong dimensions, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition of an operation is violated.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// gcd with the conventions gcd(0,x) = |x|, gcd(0,0) = 0.
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int gcd_all(std::span<const Int> xs) {
  Int g = 0;
  for (const Int& x : xs) g = gcd(g, x);
  return g;
}

inline IntVec zero_vec(std::size_t n) { return IntVec(n, 0); }

inline IntMat zero_mat(std::size_t rows, std::size_t cols) {
  return IntMat(rows, IntVec(cols, 0));
}

}  // namespace fibresum
