#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chowpow {

// Exact arbitrary-precision integer. Everything combinatorial in this
// library counts with these; overflow is impossible by construction.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace chowpow
