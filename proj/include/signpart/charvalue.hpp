#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace signpart {

// Exact signed integer character value. Arbitrary precision: values can
// exceed 64 bits for large n, and silent wraparound is forbidden.
using CharValue = boost::multiprecision::cpp_int;

inline std::string to_string(const CharValue& v) { return v.str(); }

inline bool fits_int64(const CharValue& v) {
  return v >= std::numeric_limits<long long>::min() &&
         v <= std::numeric_limits<long long>::max();
}

}  // namespace signpart
