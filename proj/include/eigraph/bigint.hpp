#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eigraph {

using BigInt = boost::multiprecision::cpp_int;

} // namespace eigraph
