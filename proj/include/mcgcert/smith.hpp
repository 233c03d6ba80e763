#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcgcert {

using IntMatrix = std::vector<std::vector<boost::multiprecision::cpp_int>>;

// Diagonal of the Smith normal form: nonnegative entries, each dividing the
// next, zeros trailing. Input is copied; any rectangular shape allowed.
std::vector<boost::multiprecision::cpp_int> smith_diagonal(IntMatrix m);

}  // namespace mcgcert
