#pragma once

#include <vector>

#include "cycpres/arith.hpp"
#include "cycpres/enumerate.hpp"

namespace cycpres {

// Right action of the presentation's generators on {0..degree-1}.
struct PermGroup {
  long long degree = 1;
  std::vector<std::vector<int32_t>> gens;
};

// The enumeration over the trivial subgroup acts regularly: cosets are the
// group elements and the generator columns are the right translations.
PermGroup regular_rep(const CosetTable& t);

// Length of the derived series computed inside the regular action (0 for the
// trivial group, 1 for nontrivial abelian, ...); -1 if the series stalls on a
// nontrivial perfect subgroup.
int derived_length(const PermGroup& pg);

// True iff x^l is the identity for every element of the (regular) group.
bool element_orders_divide(const PermGroup& pg, const Int& l);

}  // namespace cycpres
