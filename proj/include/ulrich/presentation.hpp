#pragma once

#include <vector>

#include "ulrich/divisor.hpp"

namespace ulrich {

// A two-term presentation 0 -> (+)O(A_i) -> (+)O(B_j) -> E -> 0 of a rank-2
// bundle by line bundles; |targets| - |sources| = 2.
struct ResolutionPresentation {
  std::vector<DivisorClass> sources;  // the A_i
  std::vector<DivisorClass> targets;  // the B_j

  void check_rank2() const {
    if (targets.size() != sources.size() + 2)
      throw std::invalid_argument("presentation does not have rank 2");
  }
};

}  // namespace ulrich
