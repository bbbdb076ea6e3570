#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fixatic {

/// Exact non-negative integer of unbounded size.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace fixatic
