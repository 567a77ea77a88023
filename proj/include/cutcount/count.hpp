#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cutcount {

/// Exact non-negative subgraph count of unbounded size.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count pow2(unsigned exponent) {
  Count c = 1;
  c <<= exponent;
  return c;
}

inline Count binomial2(long long n) { return n < 2 ? Count(0) : Count(n) * (n - 1) / 2; }

}  // namespace cutcount
