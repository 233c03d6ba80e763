#include "mcgcert/batch.hpp"

#include <algorithm>

#ifdef MCGCERT_HAVE_OPENMP
#include <omp.h>
#endif

namespace mcgcert {

std::vector<std::size_t> failing_indices_serial(
    std::size_t n, const std::function<bool(std::size_t)>& pred) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < n; ++i)
    if (!pred(i)) bad.push_back(i);
  return bad;
}

std::vector<std::size_t> failing_indices(
    std::size_t n, const std::function<bool(std::size_t)>& pred) {
#ifdef MCGCERT_HAVE_OPENMP
  std::vector<std::size_t> bad;
#pragma omp parallel
  {
    std::vector<std::size_t> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      if (!pred(static_cast<std::size_t>(i)))
        local.push_back(static_cast<std::size_t>(i));
#pragma omp critical
    bad.insert(bad.end(), local.begin(), local.end());
  }
  std::sort(bad.begin(), bad.end());
  return bad;
#else
  return failing_indices_serial(n, pred);
#endif
}

bool batch_all(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  return failing_indices(n, pred).empty();
}

}  // namespace mcgcert
