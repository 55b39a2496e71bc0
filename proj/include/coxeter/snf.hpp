#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cox {

using SnfInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<SnfInt>>;  // row-major, rectangular

// Invariant factors d1 | d2 | ... (positive, one per nonzero diagonal entry of
// the Smith normal form). The rank over Q is the number of invariants.
std::vector<SnfInt> smith_invariants(IntMatrix a);

}  // namespace cox
