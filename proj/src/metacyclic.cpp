#include "cycpres/metacyclic.hpp"

#include <sstream>

namespace cycpres {

namespace {

[[noreturn]] void hyp_fail(const char* fam, const std::string& msg) {
  throw std::invalid_argument(std::string("family ") + fam +
                              " hypothesis failed: " + msg);
}

Int exact_div(const Int& num, const Int& den, const char* what) {
  if (den == 0 || num % den != 0)
    throw std::logic_error(std::string(what) + ": expected exact division");
  return num / den;
}

}  // namespace

bool b_params_ok(const MetacyclicParams& b) {
  if (b.M < 1 || b.N < 1) return false;
  if (b.R < 0 || b.R >= b.M) return false;
  if (b.lambda != 0 && b.lambda != 1) return false;
  return powmod_int(b.R, to_int(b.N), b.M) == mod_int(1, b.M);
}

Int b_order(const MetacyclicParams& b) { return b.M * to_int(b.N); }

FinitePresentation b_presentation(const MetacyclicParams& b) {
  if (!b_params_ok(b))
    throw std::invalid_argument("b_presentation: needs M,N >= 1 and R^N = 1 mod M");
  FinitePresentation out;
  out.generators = {"a", "b"};
  long long M = to_ll(b.M);
  long long R = to_ll(b.R);
  Int d = gcd_int(b.M, abs(Int(b.R - 1)));
  long long e = to_ll(Int(b.lambda) * exact_div(b.M, d, "b_presentation"));
  out.relators.push_back(letter_word(0, M));
  Word conj = concat(letter_word(1, 1), letter_word(0, 1));
  conj = concat(conj, letter_word(1, -1));
  conj = concat(conj, letter_word(0, -R));
  out.relators.push_back(conj);
  out.relators.push_back(concat(letter_word(1, b.N), letter_word(0, -e)));
  return out;
}

MGroupResult m_group_params(const ParamsM& p) {
  DerivedParams d = derive(p);
  if (d.g == 0)
    throw std::invalid_argument("m_group_params: requires (r,s) != (0,0)");
  MGroupResult out;
  out.m = d.m;
  if (d.mu == 0) {
    // rho^m = sigma^m with (rho,sigma) = 1: either rho = sigma = +-1 (direct
    // product with Z) or rho = -sigma = +-1 with m even (semidirect).
    out.shape = d.rho == d.sigma ? MShape::ZxZm : MShape::ZsemiZm;
    out.order = 0;
    return out;
  }
  MetacyclicParams b;
  b.M = d.mu;
  b.N = d.m;
  auto sigma_hat = modinv_int(mod_int(to_int(d.sigma), d.mu), d.mu);
  if (!sigma_hat)
    throw std::logic_error("m_group_params: sigma not invertible mod mu");
  b.R = mod_int(to_int(d.rho) * *sigma_hat, d.mu);
  b.lambda = 0;
  if (!b_params_ok(b))
    throw std::logic_error("m_group_params: produced inconsistent parameters");
  out.shape = MShape::Metacyclic;
  out.b = b;
  out.order = d.mu * to_int(d.m);
  return out;
}

FreeProductDecomposition gbar_params(const ParamsM& p) {
  DerivedParams d = derive(p);
  if (d.g != 1)
    throw std::invalid_argument("gbar_params: requires (r,s) = 1");
  if (d.mu == 0)
    throw std::invalid_argument("gbar_params: requires r^m != s^m");
  long long nA = gcd_ll(p.n, p.A);
  long long nf = gcd_ll(p.n, p.f);
  long long nAf = gcd3_ll(p.n, p.A, p.f);
  FreeProductDecomposition out;
  out.copies = nAf;
  out.free_rank = nA - nAf;

  MetacyclicParams b;
  b.M = exact_div(to_int(nf) * d.mu, to_int(p.n), "gbar_params M");
  if ((p.n * nAf) % (nA * nf) != 0)
    throw std::logic_error("gbar_params: N not integral");
  b.N = (p.n * nAf) / (nA * nf);
  auto rhat = modinv_int(mod_int(to_int(p.r), d.mu), d.mu);
  if (!rhat) throw std::logic_error("gbar_params: r not invertible mod mu");
  Int base = mod_int(to_int(p.s) * *rhat, b.M);
  auto alpha_bar = modinv_int(to_int(mod_ll(d.alpha, d.m)), to_int(d.m));
  if (!alpha_bar) throw std::logic_error("gbar_params: alpha not invertible mod m");
  if (p.f % nAf != 0) throw std::logic_error("gbar_params: (n,A,f) does not divide f");
  Int e = to_int(p.f / nAf) * *alpha_bar;
  b.R = powmod_int(base, e, b.M);
  b.lambda = 1;
  if (!b_params_ok(b))
    throw std::logic_error("gbar_params: produced inconsistent parameters");
  out.factor = b;
  out.cyclic_factor = b.N == 1;
  return out;
}

Family family_from_name(const std::string& name) {
  if (name == "P") return Family::P;
  if (name == "R") return Family::R;
  if (name == "F") return Family::F;
  if (name == "H") return Family::H;
  if (name == "F4") return Family::F4;
  throw std::invalid_argument("unknown family '" + name + "' (P, R, F, H, F4)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::R: return "R";
    case Family::F: return "F";
    case Family::H: return "H";
    case Family::F4: return "F4";
  }
  return "?";
}

namespace {

FamilyResult family_p(long long r, long long n, long long l, long long s, long long f) {
  std::ostringstream os;
  if (n < 1) hyp_fail("P", "n >= 1");
  if (r < 1) hyp_fail("P", "r >= 1 (positive block length)");
  if (s < 1) hyp_fail("P", "s >= 1 (positive block length)");
  if (gcd_ll(n, l - 1) != 1) {
    os << "(n, l-1) = (" << n << ", " << l - 1 << ") = " << gcd_ll(n, l - 1)
       << ", expected 1";
    hyp_fail("P", os.str());
  }
  if (gcd_ll(r, s) != 1) {
    os << "(r, s) = (" << r << ", " << s << ") = " << gcd_ll(r, s) << ", expected 1";
    hyp_fail("P", os.str());
  }
  if (r == s) hyp_fail("P", "r != s");
  if (mod_ll(f * (r - s), n) != 0) {
    os << "f(r-s) = " << mod_ll(f * (r - s), n) << " (mod " << n << "), expected 0";
    hyp_fail("P", os.str());
  }
  FamilyResult out;
  out.family = Family::P;
  out.args = {r, n, l, s, f};
  out.params = params_m(r, n, s, f, l - 1);
  Int mu = abs(Int(int_pow(r, n) - int_pow(s, n)));
  long long nf = gcd_ll(n, f);
  MetacyclicParams b;
  b.M = exact_div(to_int(nf) * mu, to_int(n), "family P M");
  b.N = n / nf;
  auto rhat = modinv_int(mod_int(to_int(r), mu), mu);
  if (!rhat) throw std::logic_error("family P: r not invertible mod |r^n - s^n|");
  auto Abar = modinv_int(to_int(mod_ll(l - 1, n)), to_int(n));
  if (!Abar) throw std::logic_error("family P: l-1 not invertible mod n");
  Int base = mod_int(to_int(s) * *rhat, b.M);
  Int e = to_int(mod_ll(f, n)) * *Abar;
  b.R = powmod_int(base, e, b.M);
  b.lambda = 1;
  if (!b_params_ok(b))
    throw std::logic_error("family P: produced inconsistent parameters");
  out.b = b;
  out.order = mu;
  return out;
}

}  // namespace

FamilyResult family_params(Family f, const std::vector<long long>& a) {
  std::ostringstream os;
  auto arity = [&](size_t want, const char* names) {
    if (a.size() != want) {
      std::ostringstream m;
      m << "family " << family_name(f) << " expects " << want << " arguments ("
        << names << "), got " << a.size();
      throw std::invalid_argument(m.str());
    }
  };
  switch (f) {
    case Family::P:
      arity(5, "r, n, l, s, f");
      return family_p(a[0], a[1], a[2], a[3], a[4]);
    case Family::R: {
      arity(4, "r, n, k, h");
      long long r = a[0], n = a[1], k = a[2], h = a[3];
      if (r <= 1) hyp_fail("R", "r > 1");
      if (n < 1) hyp_fail("R", "n >= 1");
      if (gcd_ll(n, k) != 1) {
        os << "(n, k) = (" << n << ", " << k << ") = " << gcd_ll(n, k) << ", expected 1";
        hyp_fail("R", os.str());
      }
      if (mod_ll(h * (r - 1), n) != 0) {
        os << "h(r-1) = " << mod_ll(h * (r - 1), n) << " (mod " << n << "), expected 0";
        hyp_fail("R", os.str());
      }
      FamilyResult out = family_p(r, n, (r - 1) * h + k + 1, 1, h);
      out.family = Family::R;
      out.args = {r, n, k, h};
      return out;
    }
    case Family::F: {
      arity(3, "r, n, k");
      long long r = a[0], n = a[1], k = a[2];
      if (r <= 1) hyp_fail("F", "r > 1");
      if (n < 1) hyp_fail("F", "n >= 1");
      if (gcd_ll(n, k) != 1) {
        os << "(n, k) = (" << n << ", " << k << ") = " << gcd_ll(n, k) << ", expected 1";
        hyp_fail("F", os.str());
      }
      if (mod_ll(r - 1, n) != 0) {
        os << "r = " << r << " is not 1 mod n = " << n;
        hyp_fail("F", os.str());
      }
      FamilyResult out = family_p(r, n, r + k, 1, 1);
      out.family = Family::F;
      out.args = {r, n, k};
      return out;
    }
    case Family::H: {
      arity(3, "r, n, s");
      long long r = a[0], n = a[1], s = a[2];
      if (n < 1) hyp_fail("H", "n >= 1");
      if (gcd_ll(n, r) != 1) {
        os << "(n, r) = (" << n << ", " << r << ") = " << gcd_ll(n, r) << ", expected 1";
        hyp_fail("H", os.str());
      }
      if (gcd_ll(r, s) != 1) {
        os << "(r, s) = (" << r << ", " << s << ") = " << gcd_ll(r, s) << ", expected 1";
        hyp_fail("H", os.str());
      }
      if (r == s) hyp_fail("H", "r != s");
      if (mod_ll(r - s, n) != 0) {
        os << "r = " << r << " is not congruent to s = " << s << " mod n = " << n;
        hyp_fail("H", os.str());
      }
      FamilyResult out = family_p(r, n, r + 1, s, 1);
      out.family = Family::H;
      out.args = {r, n, s};
      return out;
    }
    case Family::F4: {
      arity(4, "r, n, k, s");
      long long r = a[0], n = a[1], k = a[2], s = a[3];
      if (n < 1) hyp_fail("F4", "n >= 1");
      if (gcd_ll(n, r + k - 1) != 1) {
        os << "(n, r+k-1) = (" << n << ", " << r + k - 1 << ") = "
           << gcd_ll(n, r + k - 1) << ", expected 1";
        hyp_fail("F4", os.str());
      }
      if (gcd_ll(r, s) != 1) {
        os << "(r, s) = (" << r << ", " << s << ") = " << gcd_ll(r, s) << ", expected 1";
        hyp_fail("F4", os.str());
      }
      if (r == s) hyp_fail("F4", "r != s");
      if (mod_ll(r - s, n) != 0) {
        os << "r = " << r << " is not congruent to s = " << s << " mod n = " << n;
        hyp_fail("F4", os.str());
      }
      FamilyResult out = family_p(r, n, r + k, s, 1);
      out.family = Family::F4;
      out.args = {r, n, k, s};
      return out;
    }
  }
  throw std::invalid_argument("family_params: unknown family");
}

GnklParams gnkl_params(long long n, long long k, long long l) {
  if (n < 1) throw std::invalid_argument("gnkl_params: n must be positive");
  GnklParams q;
  q.n = n;
  q.k = mod_ll(k, n);
  q.l = mod_ll(l, n);
  q.condA = n % 3 == 0 && (q.k + q.l) % 3 == 0;
  q.condC = (3 * q.k) % n == 0 || (3 * q.l) % n == 0 ||
            mod_ll(3 * (q.l - q.k), n) == 0;
  return q;
}

GnklReport gnkl_analyze(const GnklParams& q) {
  if (gcd3_ll(q.n, q.k, q.l) != 1)
    throw std::invalid_argument("gnkl_analyze: requires (n,k,l) = 1");
  if (!q.condC)
    throw std::invalid_argument(
        "gnkl_analyze: none of 3k, 3l, 3(l-k) vanishes mod n; no two-block model "
        "via this route");
  GnklReport rep;
  if (q.k == 0 || q.l == 0 || q.k == q.l) {
    rep.kind = GnklCase::Cyclic;
    rep.normalized = params_m(2, q.n, -1, 0, 1);
    rep.note = "repeated subscript; isomorphic to the group of x0^2 x1";
  } else if (q.condA) {
    if (q.n % 3 != 0) throw std::logic_error("gnkl_analyze: expected 3 | n");
    long long m = q.n / 3;
    long long eps = (m + 1) % 3 == 0 ? 1 : -1;
    if ((m + eps) % 3 != 0)
      throw std::logic_error("gnkl_analyze: no admissible sign (3 | m impossible here)");
    rep.kind = GnklCase::CyclicTimesF2;
    rep.normalized = params_m(2, q.n, -1, m, m + eps);
    rep.note = "isomorphic to the group of x0 x_m x_e with m = n/3; free product "
               "of a cyclic group with a rank-two free group";
  } else {
    if (q.n % 3 != 0)
      throw std::logic_error("gnkl_analyze: expected 3 | n in the nondegenerate case");
    rep.kind = GnklCase::MetacyclicB;
    rep.normalized = params_m(2, q.n, -1, q.n / 3, 1);
    rep.note = "isomorphic to the group of x0 x_(n/3) x_(1+2n/3)";
  }
  rep.dec = gbar_params(rep.normalized);
  bool shape_ok = rep.dec.copies == 1 &&
                  ((rep.kind == GnklCase::Cyclic && rep.dec.free_rank == 0 &&
                    rep.dec.factor.N == 1) ||
                   (rep.kind == GnklCase::MetacyclicB && rep.dec.free_rank == 0 &&
                    rep.dec.factor.N == 3) ||
                   (rep.kind == GnklCase::CyclicTimesF2 && rep.dec.free_rank == 2 &&
                    rep.dec.factor.N == 1));
  if (!shape_ok)
    throw std::logic_error("gnkl_analyze: decomposition shape mismatch");
  return rep;
}

FinitePresentation j_presentation(long long n, long long m, long long k) {
  if (n < 1) throw std::invalid_argument("j_presentation: n must be positive");
  FinitePresentation out;
  out.generators = {"t", "y"};
  out.relators.push_back(letter_word(0, n));
  Word rel = concat(letter_word(1, m - k), letter_word(0, 3));
  rel = concat(rel, letter_word(1, k));
  rel = concat(rel, letter_word(0, 2));
  out.relators.push_back(rel);
  return out;
}

Int h242_order(long long k) {
  if (k < 1) throw std::invalid_argument("h242_order: k must be >= 1");
  long long e = ((k + 1) * (k + 2) / 2) % 2;
  Int mid = e == 0 ? int_pow(2, k) : Int(-int_pow(2, k));
  return to_int(2 * k - 1) * (int_pow(2, 2 * k - 1) - mid + 1);
}

}  // namespace cycpres
