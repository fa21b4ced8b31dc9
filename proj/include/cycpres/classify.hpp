#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycpres/words.hpp"

namespace cycpres {

// m = n/(n,A), alpha = A/(n,A), g = (r,s), rho = r/g, sigma = s/g (rho = sigma = 0
// when g = 0), mu = |rho^m - sigma^m|.
struct DerivedParams {
  long long m = 1, alpha = 0, g = 0, rho = 0, sigma = 0;
  Int mu = 0;
  bool operator==(const DerivedParams&) const = default;
};

DerivedParams derive(const ParamsM& p);

// chi(E) = 1/n - 1/m + 1/(m*mu) - 1/mu + 1/(g*mu), with 1/inf = 0 when mu = 0.
Rat euler_characteristic(const ParamsM& p);
// chi(G) = n * chi(E).
Rat euler_characteristic_g(const ParamsM& p);

enum class Kind {
  Finite,
  VirtuallyInfiniteCyclic,
  VirtuallyNonabelianFree,
  EqualPowers,  // r^m = s^m with (r,s) != (0,0)
};

enum class Torsion { TorsionFree, InfiniteDihedral };
enum class Tits { Large, VirtuallyAbelian };

// Properties that hold across the whole parameter family.
struct CertifiedFlags {
  bool coherent = true;
  bool subgroup_separable = true;
  bool finite_subgroups_metacyclic = true;
  bool geom_dim_le_2_finite_index = true;
};

struct Classification {
  Kind kind = Kind::Finite;
  Int order_G = 0;  // set when kind == Finite
  Int order_E = 0;
  bool cyclic_E = false;  // E collapses to its cyclic subgroup <t> (G trivial)
  std::optional<long long> gamma_free_rank;  // EqualPowers, free branch
  bool two_dimensional = false;              // EqualPowers, aspherical branch
  std::optional<Torsion> torsion;            // EqualPowers only
  Tits tits = Tits::VirtuallyAbelian;
  Rat euler_E, euler_G;
  CertifiedFlags flags;
  std::vector<std::string> warnings;
};

// Total over valid parameter tuples. Throws std::logic_error if the internal
// finiteness routes ever disagree (they must not).
Classification classify(const ParamsM& p);

// Torsion in the r^m = s^m regime. Pre: mu = 0 and g != 0.
Torsion two_dim_torsion(const ParamsM& p);

// (n,A)(n,gf) = n(n,A,gf); holds automatically when f = 0.
bool cyclic_condition(const ParamsM& p);

// Every finite subgroup of the cyclically presented group embeds in Z_l with
// l = g*mu*(n,f)/n. Pre: cyclic_condition. Returns 0 exactly when that group is
// torsion-free (mu = 0 case).
Int finite_subgroup_bound(const ParamsM& p);

Tits tits_alternative(const ParamsM& p);

// |Fix(theta^j)| = |r^(n,j) - s^(n,j)| on the finite nontrivial groups.
Int fix_order(const ParamsM& p, long long j);
bool fixed_point_free(const ParamsM& p, long long j);

const char* kind_name(Kind k);
const char* torsion_name(Torsion t);
const char* tits_name(Tits t);

}  // namespace cycpres
