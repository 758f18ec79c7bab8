#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace langerlab {

// All divisor-class coefficients are exact rationals; no floating point
// appears anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline BigInt to_bigint(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("expected an integer, got " + r.str());
  return numerator(r);
}

inline int64_t to_i64(const Rat& r) { return to_bigint(r).convert_to<int64_t>(); }

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace langerlab
