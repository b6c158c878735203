#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dioclimb {

// All equation arithmetic is exact; fixed-width overflow is never acceptable
// because it would silently corrupt heuristic values.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, std::uint32_t exponent) {
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace dioclimb
