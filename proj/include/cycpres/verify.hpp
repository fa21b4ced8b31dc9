#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycpres/classify.hpp"
#include "cycpres/enumerate.hpp"
#include "cycpres/metacyclic.hpp"

namespace cycpres {

// Resource limits for the enumeration-backed checks.
struct Caps {
  long long max_cosets = 200000;
  long long element_cap = 20000;  // largest group put through the regular action
};

enum class CheckStatus { Pass, Fail, Skip };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool any_fail() const;
  bool all_skipped() const;
  int exit_code() const;  // 1 if any check failed, 3 if nothing was checkable, else 0
};

// Number of cosets of <t> in the shift extension fixed by right multiplication
// by t^j; equals the fixed-point count of the j-th shift power on the cyclically
// presented group. nullopt when the enumeration overflows.
std::optional<long long> fixed_cosets(const ParamsM& p, long long j,
                                      long long max_cosets);

// All n fixed-coset counts (j = 0..n-1) from a single enumeration.
std::optional<std::vector<long long>> fixed_cosets_all(const ParamsM& p,
                                                       long long max_cosets);

// Presentation of a finite-index subgroup rewritten off a closed coset table.
// Generator k of pres crosses the table edge edges[k]: from coset edges[k].first
// along parent generator edges[k].second, against the spanning tree grown from
// coset 0 in column order.
struct SchreierPresentation {
  FinitePresentation pres;
  std::vector<std::pair<long long, int>> edges;
};

// Rewrites every parent relator at every coset of the table into words in the
// non-tree edge generators. Generators of the parent whose index equals
// eliminate_gen may be cancelled out: any rewritten relator that reduces to a
// single occurrence of such an edge generator removes it everywhere (repeated
// to a fixed point); pass -1 to keep every edge generator. Empty relators are
// dropped. The table must be closed over the parent's generators.
SchreierPresentation rs_presentation(const FinitePresentation& parent,
                                     const CosetTable& t, int eliminate_gen);

// Same count from the cyclic model of the finite group: the group is Z_mu' with
// mu' = |r^n - s^n| and the shift acts as multiplication by a unit beta, so the
// count is (beta^j - 1, mu'). Pre: (r,s) = (n,A) = 1 and mu != 0.
Int shift_model_fix_order(const ParamsM& p, long long j);

// Runs every independent cross-check that fits within the caps: coset
// enumerations against the predicted orders, the free product decomposition
// against enumerated and abelianized invariants, three-way fixed-point counts,
// and element-order bounds on the regular action.
VerificationReport cross_verify(const ParamsM& p, const Caps& caps);

const char* check_status_name(CheckStatus s);

}  // namespace cycpres
