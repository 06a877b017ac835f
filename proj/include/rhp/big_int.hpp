#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace rhp {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace rhp
