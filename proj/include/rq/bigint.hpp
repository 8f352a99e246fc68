#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rq {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

} // namespace rq
