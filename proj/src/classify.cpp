#include "cycpres/classify.hpp"

#include <sstream>

namespace cycpres {

namespace {

Rat frac(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

long long abs_ll(long long v) { return v < 0 ? -v : v; }

// Virtual-freeness trichotomy in the mu != 0 regime. The three cases are
// mutually exclusive; precedence below is immaterial.
Kind trichotomy_kind(const ParamsM& p, const DerivedParams& d) {
  long long nA = gcd_ll(p.n, p.A);
  bool copr = nA == 1;
  bool rs0 = p.r == 0 || p.s == 0;
  bool A0 = p.A == 0;
  long long dr = abs_ll(p.r - p.s);
  // 1/n + 1/c = 1 over positive integers forces n = c = 2;
  // 1/n + 1/c < 1 is n + c < n*c.
  bool a_i = (p.n == 2 && d.g == 2) && (copr || rs0);
  bool a_ii = (p.n == 2 && dr == 2) && A0;
  // When s = -r the blocks are inverse powers: mu = 2 (never >= 3), and
  // chi(E) = (2-(n,A))/(2n) + (1-g)/(2g), which vanishes exactly when
  // g = 1 and (n,A) = 2. There t^A inverts y, forcing y^2 = 1, and E is an
  // amalgam of two finite groups over an index-2 subgroup, hence two-ended.
  bool a_iii = !A0 && p.r == 1 && p.s == -1 && nA == 2;
  bool b_i = (p.n + d.g < p.n * d.g) && (copr || rs0);
  bool b_ii = dr != 0 && (p.n + dr < p.n * dr) && A0;
  bool b_iii = !A0 && p.r != 0 && p.s != 0 && nA >= 2 && !a_iii;
  if (a_i || a_ii || a_iii) return Kind::VirtuallyInfiniteCyclic;
  if (b_i || b_ii || b_iii) return Kind::VirtuallyNonabelianFree;
  return Kind::Finite;
}

}  // namespace

DerivedParams derive(const ParamsM& p) {
  DerivedParams d;
  long long nA = gcd_ll(p.n, p.A);
  d.m = p.n / nA;
  d.alpha = p.A / nA;
  d.g = gcd_ll(p.r, p.s);
  if (d.g != 0) {
    d.rho = p.r / d.g;
    d.sigma = p.s / d.g;
  }
  d.mu = abs(Int(int_pow(d.rho, d.m) - int_pow(d.sigma, d.m)));
  return d;
}

Rat euler_characteristic(const ParamsM& p) {
  DerivedParams d = derive(p);
  if (d.g == 0) return frac(to_int(1 - p.n), to_int(p.n));  // E = Z_n * Z
  Rat chi = frac(1, to_int(p.n)) - frac(1, to_int(d.m));
  if (d.mu != 0) {
    chi += frac(1, to_int(d.m) * d.mu);
    chi -= frac(1, d.mu);
    chi += frac(1, to_int(d.g) * d.mu);
  }
  return chi;
}

Rat euler_characteristic_g(const ParamsM& p) {
  return Rat(to_int(p.n)) * euler_characteristic(p);
}

Torsion two_dim_torsion(const ParamsM& p) {
  DerivedParams d = derive(p);
  if (d.g == 0 || d.mu != 0)
    throw std::invalid_argument(
        "two_dim_torsion: requires r^m = s^m with (r,s) != (0,0)");
  if (p.r == p.s) return Torsion::TorsionFree;
  // Here rho = -sigma = +-1, so r = -s != 0 and g = r. Torsion occurs exactly
  // when m is even, g f = n/2 mod n, and t^{n/2} is an odd power of t^{(n,A)}.
  if (d.m % 2 != 0) return Torsion::TorsionFree;
  long long half = p.n / 2;  // m even forces n even
  long long nA = gcd_ll(p.n, p.A);
  bool dihedral = mod_ll(d.g * p.f, p.n) == half && half % nA == 0 &&
                  (half / nA) % 2 == 1;
  return dihedral ? Torsion::InfiniteDihedral : Torsion::TorsionFree;
}

bool cyclic_condition(const ParamsM& p) {
  DerivedParams d = derive(p);
  long long gf = d.g * p.f;
  return gcd_ll(p.n, p.A) * gcd_ll(p.n, gf) == p.n * gcd3_ll(p.n, p.A, gf);
}

Int finite_subgroup_bound(const ParamsM& p) {
  if (!cyclic_condition(p))
    throw std::invalid_argument(
        "finite_subgroup_bound: cyclic-subgroup condition does not hold");
  DerivedParams d = derive(p);
  Int num = to_int(d.g) * d.mu * to_int(gcd_ll(p.n, p.f));
  if (num % to_int(p.n) != 0)
    throw std::logic_error("finite_subgroup_bound: g*mu*(n,f) not divisible by n");
  return num / to_int(p.n);
}

Tits tits_alternative(const ParamsM& p) {
  DerivedParams d = derive(p);
  bool A0 = p.A == 0;
  bool rs0 = p.r == 0 || p.s == 0;
  if (A0 || rs0) {
    // E = Z_n * Z_c (c = 0 meaning the infinite factor Z).
    long long c;
    if (p.r == 0 && p.s == 0)
      c = 0;
    else if (p.r == 0)
      c = abs_ll(p.s);
    else if (p.s == 0)
      c = p.r;
    else
      c = abs_ll(p.r - p.s);
    if (c == 0) return p.n >= 2 ? Tits::Large : Tits::VirtuallyAbelian;
    bool large = p.n >= 2 && c >= 2 && !(p.n == 2 && c == 2);
    return large ? Tits::Large : Tits::VirtuallyAbelian;
  }
  if (d.mu != 0) {
    return trichotomy_kind(p, d) == Kind::VirtuallyNonabelianFree
               ? Tits::Large
               : Tits::VirtuallyAbelian;
  }
  // mu = 0 with r s != 0 and A != 0 mod n.
  if (d.g == 1) return gcd_ll(p.n, p.A) >= 2 ? Tits::Large : Tits::VirtuallyAbelian;
  return (p.n == 2 && d.g == 2) ? Tits::VirtuallyAbelian : Tits::Large;
}

Classification classify(const ParamsM& p) {
  DerivedParams d = derive(p);
  Classification c;
  c.euler_E = euler_characteristic(p);
  c.euler_G = Rat(to_int(p.n)) * c.euler_E;
  c.tits = tits_alternative(p);
  if (type_m_word(p).empty())
    c.warnings.push_back("defining relator freely reduces to the empty word");

  if (p.r == 0 && p.s == 0) {
    // E = Z_n * Z, G free of rank n; chi(E) = (1-n)/n decides the flavor.
    c.kind = p.n == 1 ? Kind::VirtuallyInfiniteCyclic
                      : Kind::VirtuallyNonabelianFree;
    return c;
  }

  if (d.mu == 0) {
    c.kind = Kind::EqualPowers;
    long long nA = gcd_ll(p.n, p.A);
    if (nA * d.g + p.n > p.n * d.g)
      c.gamma_free_rank = nA;
    else
      c.two_dimensional = true;
    c.torsion = two_dim_torsion(p);
    return c;
  }

  long long nA = gcd_ll(p.n, p.A);
  long long dr = abs_ll(p.r - p.s);
  bool rs0 = p.r == 0 || p.s == 0;
  bool A0 = p.A == 0;
  bool route_i = nA == 1 && d.g == 1;
  bool route_ii = dr == 1 && (rs0 || A0);

  c.kind = trichotomy_kind(p, d);
  if (c.kind == Kind::Finite) {
    if (p.n == 1) {
      // E = <y | y^(r-s)> = Z_{g*mu}; the coprime-route order formula below
      // presumes <t> nontrivial of order n >= 2.
      c.order_E = to_int(dr);
      c.order_G = c.order_E;
    } else {
      if (!(route_i || route_ii))
        throw std::logic_error("classify: finite by trichotomy but no order route");
      c.order_G = route_i ? Int(abs(Int(int_pow(p.r, p.n) - int_pow(p.s, p.n)))) : Int(1);
      if (route_ii && c.order_G != 1)
        throw std::logic_error("classify: order routes disagree");
      c.order_E = to_int(p.n) * c.order_G;
    }
    c.cyclic_E = c.order_E == to_int(p.n);
  }

  // The explicit finiteness criterion and the trichotomy must agree (n >= 2).
  if (p.n >= 2 && (c.kind == Kind::Finite) != (route_i || route_ii))
    throw std::logic_error("classify: finiteness routes disagree");

  int sg = sgn(c.euler_E);
  bool sign_ok = (c.kind == Kind::Finite && sg > 0) ||
                 (c.kind == Kind::VirtuallyInfiniteCyclic && sg == 0) ||
                 (c.kind == Kind::VirtuallyNonabelianFree && sg < 0);
  if (!sign_ok)
    throw std::logic_error("classify: Euler characteristic sign mismatch");
  return c;
}

Int fix_order(const ParamsM& p, long long j) {
  Classification c = classify(p);
  if (c.kind != Kind::Finite || c.order_G <= 1)
    throw std::invalid_argument("fix_order: needs a finite group with |G| >= 2");
  long long e = gcd_ll(p.n, j);
  return abs(Int(int_pow(p.r, e) - int_pow(p.s, e)));
}

bool fixed_point_free(const ParamsM& p, long long j) {
  Classification c = classify(p);
  if (c.kind != Kind::Finite || c.order_G <= 1)
    throw std::invalid_argument("fixed_point_free: needs a finite group with |G| >= 2");
  long long dr = p.r - p.s;
  return gcd_ll(p.n, j) == 1 && (dr == 1 || dr == -1);
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Finite: return "finite";
    case Kind::VirtuallyInfiniteCyclic: return "virtually-infinite-cyclic";
    case Kind::VirtuallyNonabelianFree: return "virtually-nonabelian-free";
    case Kind::EqualPowers: return "equal-powers";
  }
  return "?";
}

const char* torsion_name(Torsion t) {
  return t == Torsion::TorsionFree ? "torsion-free" : "infinite-dihedral";
}

const char* tits_name(Tits t) {
  return t == Tits::Large ? "large" : "virtually-abelian";
}

}  // namespace cycpres
