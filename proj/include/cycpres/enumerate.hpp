#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycpres/words.hpp"

namespace cycpres {

// Coset table over the presentation's generators. Columns come in pairs:
// generator g acts by column 2g, its inverse by column 2g+1. When Closed the
// table is compacted (cosets renumbered by age), every entry is defined, and
// every generator column is a permutation; identical inputs yield an identical
// table, byte for byte.
struct CosetTable {
  enum class Status { Closed, Overflow };
  Status status = Status::Overflow;
  long long ngens = 0;
  long long live = 0;           // row count when Closed
  long long total_created = 0;  // includes cosets later identified away
  std::vector<int32_t> table;

  int32_t at(long long row, long long col) const {
    return table[static_cast<size_t>(row) * 2 * static_cast<size_t>(ngens) +
                 static_cast<size_t>(col)];
  }
};

// Enumerates cosets of <subgroup> in the presented group by scanning every
// coset against every relator, with immediate coincidence processing. The
// table never holds more than max_cosets rows at once: on hitting the cap the
// enumeration flushes implied collapses with definition-free lookahead passes,
// compacts, and resumes, reporting Overflow only when that frees almost
// nothing. total_created counts definitions over the whole run.
CosetTable todd_coxeter(const FinitePresentation& pres,
                        const std::vector<Word>& subgroup, long long max_cosets);

std::optional<long long> subgroup_index(const FinitePresentation& pres,
                                        const std::vector<Word>& subgroup,
                                        long long max_cosets);
std::optional<long long> group_order(const FinitePresentation& pres,
                                     long long max_cosets);

}  // namespace cycpres
