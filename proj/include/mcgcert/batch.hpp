#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace mcgcert {

// Runs pred over [0, n) and returns the indices where it came back false,
// in increasing order. Uses OpenMP when available; the serial variant is the
// reference implementation and both must agree exactly.
std::vector<std::size_t> failing_indices(
    std::size_t n, const std::function<bool(std::size_t)>& pred);

std::vector<std::size_t> failing_indices_serial(
    std::size_t n, const std::function<bool(std::size_t)>& pred);

bool batch_all(std::size_t n, const std::function<bool(std::size_t)>& pred);

}  // namespace mcgcert
