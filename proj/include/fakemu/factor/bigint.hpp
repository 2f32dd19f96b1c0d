#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fakemu {

using BigInt = boost::multiprecision::cpp_int;

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace fakemu
