#include <omp.h>

#include <limits>

#include "wittmod/sweeps.hpp"

namespace wittmod {

SweepResult run_parallel(std::size_t count, const CaseCheck& check) {
  const auto total = static_cast<long long>(count);
  long long failures = 0;
  long long first = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) reduction(min : first)
  for (long long i = 0; i < total; ++i) {
    bool ok = false;
    try {
      ok = check(static_cast<std::size_t>(i));
    } catch (...) {
      // exceptions may not leave the parallel region
    }
    if (!ok) {
      ++failures;
      if (i < first) first = i;
    }
  }
  SweepResult r;
  r.checked = count;
  r.failures = static_cast<std::size_t>(failures);
  if (failures > 0) r.first_failure = static_cast<std::size_t>(first);
  return r;
}

}  // namespace wittmod
