#pragma once

#include <vector>

#include "cycpres/words.hpp"

namespace cycpres {

// invariant_factors are the diagonal entries > 1 in divisibility-chain order
// (each divides the next); free_rank = columns minus rank.
struct SNFResult {
  std::vector<Int> invariant_factors;
  long long free_rank = 0;
  bool operator==(const SNFResult&) const = default;
};

// Row/column reduction with smallest-|pivot| selection at each corner.
SNFResult snf(std::vector<std::vector<Int>> m, long long ncols);

// Relator exponent-sum matrix of the presentation.
SNFResult abelianization(const FinitePresentation& pres);

}  // namespace cycpres
