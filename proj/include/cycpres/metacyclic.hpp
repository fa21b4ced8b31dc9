#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycpres/classify.hpp"
#include "cycpres/words.hpp"

namespace cycpres {

// B(M,N,R,lambda) = < a,b | a^M, b a b^-1 a^-R, b^N a^-(lambda*M/(M,R-1)) >,
// metacyclic of order M*N; requires M >= 1 and R^N = 1 mod M.
struct MetacyclicParams {
  Int M = 1;
  long long N = 1;
  Int R = 0;  // reduced mod M
  int lambda = 0;
  bool operator==(const MetacyclicParams&) const = default;
};

bool b_params_ok(const MetacyclicParams& b);
FinitePresentation b_presentation(const MetacyclicParams& b);
Int b_order(const MetacyclicParams& b);  // M*N

// Structure of M(p) = < u,v | v^m, u^rho v^alpha u^-sigma v^-alpha >, the middle
// amalgam factor; split metacyclic Z_mu x| Z_m when mu != 0.
enum class MShape { Metacyclic, ZxZm, ZsemiZm };
struct MGroupResult {
  MShape shape = MShape::Metacyclic;
  std::optional<MetacyclicParams> b;  // set when shape == Metacyclic
  long long m = 1;
  Int order = 0;  // m*mu when finite, else 0
};
MGroupResult m_group_params(const ParamsM& p);  // pre: (r,s) != (0,0)

// G = (free product of `copies` copies of the factor) * F_{free_rank}.
// Pre: (r,s) = 1 and mu != 0.
struct FreeProductDecomposition {
  long long copies = 1;
  MetacyclicParams factor;
  long long free_rank = 0;
  bool cyclic_factor = false;  // factor's N = 1, i.e. it is Z_M
};
FreeProductDecomposition gbar_params(const ParamsM& p);

enum class Family { P, R, F, H, F4 };
Family family_from_name(const std::string& name);
const char* family_name(Family f);
// Argument order: P(r,n,l,s,f), R(r,n,k,h), F(r,n,k), H(r,n,s), F4(r,n,k,s).
struct FamilyResult {
  Family family = Family::P;
  std::vector<long long> args;
  ParamsM params;
  MetacyclicParams b;
  Int order = 0;
};
// Throws std::invalid_argument naming the violated hypothesis.
FamilyResult family_params(Family f, const std::vector<long long>& args);

// Words x_0 x_k x_l on three distinct subscripts (up to the stated degeneracies).
struct GnklParams {
  long long n = 1, k = 0, l = 0;  // k, l reduced mod n
  bool condA = false;             // 3 | n and 3 | k+l
  bool condC = false;             // n | 3k or n | 3l or n | 3(l-k)
};
GnklParams gnkl_params(long long n, long long k, long long l);

enum class GnklCase { MetacyclicB, Cyclic, CyclicTimesF2 };
struct GnklReport {
  GnklCase kind = GnklCase::Cyclic;
  ParamsM normalized;  // two-block parameters of an isomorphic group
  FreeProductDecomposition dec;
  std::string note;
};
// Pre: (n,k,l) = 1 and condC. Throws std::invalid_argument otherwise.
GnklReport gnkl_analyze(const GnklParams& q);

// < t,y | t^n, y^(m-k) t^3 y^k t^2 >.
FinitePresentation j_presentation(long long n, long long m, long long k);

// (2k-1) * (2^(2k-1) - (-1)^((k+1)(k+2)/2) 2^k + 1), k >= 1.
Int h242_order(long long k);

}  // namespace cycpres
