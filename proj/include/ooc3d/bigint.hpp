#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ooc3d {

// Counting values and bounds are exact and can exceed 64 bits.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace ooc3d
