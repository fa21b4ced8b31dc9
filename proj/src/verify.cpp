#include "cycpres/verify.hpp"

#include <stdexcept>
#include <utility>

#include "cycpres/group_model.hpp"
#include "cycpres/snf.hpp"

namespace cycpres {

namespace {

std::string istr(const Int& v) { return v.get_str(); }

std::string snf_str(const SNFResult& r) {
  std::string out = "[";
  for (size_t i = 0; i < r.invariant_factors.size(); ++i) {
    if (i) out += ",";
    out += istr(r.invariant_factors[i]);
  }
  out += "]";
  if (r.free_rank > 0) out += " + Z^" + std::to_string(r.free_rank);
  return out;
}

template <typename F>
void run_check(std::vector<Check>& out, const char* name, F&& body) {
  Check c;
  c.name = name;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = CheckStatus::Fail;
    c.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(c));
}

// Exponent-sum rows of `copies` disjoint copies of B(M,N,R,lambda), plus
// untouched free columns; matches abelianization(b_presentation(b)) per copy.
SNFResult metacyclic_ab(const MetacyclicParams& b, long long copies,
                        long long extra_rank) {
  Int e = b.lambda == 0 ? Int(0) : Int(b.lambda) * (b.M / gcd_int(b.M, b.R - 1));
  std::vector<std::vector<Int>> rows;
  long long cols = 2 * copies + extra_rank;
  for (long long k = 0; k < copies; ++k) {
    std::vector<Int> r1(cols, 0), r2(cols, 0), r3(cols, 0);
    r1[2 * k] = b.M;
    r2[2 * k] = 1 - b.R;
    r3[2 * k] = -e;
    r3[2 * k + 1] = to_int(b.N);
    rows.push_back(std::move(r1));
    rows.push_back(std::move(r2));
    rows.push_back(std::move(r3));
  }
  return snf(std::move(rows), cols);
}

// < u,v | v^m, u^rho v^alpha u^-sigma v^-alpha >: the middle amalgam factor.
FinitePresentation amalgam_presentation(const DerivedParams& d) {
  FinitePresentation pres;
  pres.generators = {"u", "v"};
  pres.relators.push_back(letter_word(1, d.m));
  Word w = concat(letter_word(0, d.rho), letter_word(1, d.alpha));
  w = concat(w, letter_word(0, -d.sigma));
  w = concat(w, letter_word(1, -d.alpha));
  pres.relators.push_back(w);
  return pres;
}

}  // namespace

bool VerificationReport::any_fail() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

bool VerificationReport::all_skipped() const {
  if (checks.empty()) return true;
  for (const auto& c : checks)
    if (c.status != CheckStatus::Skip) return false;
  return true;
}

int VerificationReport::exit_code() const {
  if (any_fail()) return 1;
  if (all_skipped()) return 3;
  return 0;
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

std::optional<std::vector<long long>> fixed_cosets_all(const ParamsM& p,
                                                       long long max_cosets) {
  FinitePresentation pres = e_presentation(p.r, p.n, p.s, p.A);
  CosetTable t = todd_coxeter(pres, {letter_word(0, 1)}, max_cosets);
  if (t.status != CosetTable::Status::Closed) return std::nullopt;
  std::vector<long long> out;
  std::vector<long long> cur(static_cast<size_t>(t.live));
  for (long long c = 0; c < t.live; ++c) cur[static_cast<size_t>(c)] = c;
  for (long long j = 0; j < p.n; ++j) {
    long long count = 0;
    for (long long c = 0; c < t.live; ++c)
      if (cur[static_cast<size_t>(c)] == c) ++count;
    out.push_back(count);
    for (long long c = 0; c < t.live; ++c)
      cur[static_cast<size_t>(c)] = t.at(cur[static_cast<size_t>(c)], 0);
  }
  return out;
}

std::optional<long long> fixed_cosets(const ParamsM& p, long long j,
                                      long long max_cosets) {
  auto all = fixed_cosets_all(p, max_cosets);
  if (!all) return std::nullopt;
  return (*all)[static_cast<size_t>(mod_ll(j, p.n))];
}

SchreierPresentation rs_presentation(const FinitePresentation& parent,
                                     const CosetTable& t, int eliminate_gen) {
  if (t.status != CosetTable::Status::Closed)
    throw std::invalid_argument("rs_presentation: table is not closed");
  long long nc = t.live;
  long long ng = static_cast<long long>(parent.generators.size());
  // Spanning tree, breadth-first from coset 0, columns tried in order.
  // tree[a*ng+g] marks the edge a --g--> t.at(a, 2g).
  std::vector<char> tree(static_cast<size_t>(nc * ng), 0);
  std::vector<char> seen(static_cast<size_t>(nc), 0);
  std::vector<long long> queue = {0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    long long c = queue[head];
    for (long long col = 0; col < 2 * ng; ++col) {
      long long d = t.at(c, col);
      if (seen[static_cast<size_t>(d)]) continue;
      seen[static_cast<size_t>(d)] = 1;
      long long g = col / 2;
      long long src = col % 2 == 0 ? c : d;
      tree[static_cast<size_t>(src * ng + g)] = 1;
      queue.push_back(d);
    }
  }
  // One subgroup generator per non-tree edge.
  std::vector<int> sym_of(static_cast<size_t>(nc * ng), -1);
  std::vector<std::pair<long long, int>> edges;
  for (long long c = 0; c < nc; ++c)
    for (long long g = 0; g < ng; ++g)
      if (!tree[static_cast<size_t>(c * ng + g)]) {
        sym_of[static_cast<size_t>(c * ng + g)] =
            static_cast<int>(edges.size());
        edges.push_back({c, static_cast<int>(g)});
      }
  // Trace every relator from every coset; tree crossings contribute nothing.
  std::vector<Word> rels;
  for (const auto& rel : parent.relators) {
    for (long long c0 = 0; c0 < nc; ++c0) {
      Word w;
      long long cur = c0;
      for (const auto& l : rel.letters) {
        long long k = l.exp < 0 ? -l.exp : l.exp;
        for (long long i = 0; i < k; ++i) {
          if (l.exp > 0) {
            int s = sym_of[static_cast<size_t>(cur * ng + l.sym)];
            if (s >= 0) w.letters.push_back({s, 1});
            cur = t.at(cur, 2 * l.sym);
          } else {
            long long d = t.at(cur, 2 * l.sym + 1);
            int s = sym_of[static_cast<size_t>(d * ng + l.sym)];
            if (s >= 0) w.letters.push_back({s, -1});
            cur = d;
          }
        }
      }
      w = reduce(w);
      if (!w.letters.empty()) rels.push_back(std::move(w));
    }
  }
  // A relator that is one bare occurrence of a removable edge generator makes
  // that generator redundant; cancelling it can expose further ones.
  std::vector<char> killed(edges.size(), 0);
  for (;;) {
    bool found = false;
    for (const auto& w : rels)
      if (w.letters.size() == 1 &&
          (w.letters[0].exp == 1 || w.letters[0].exp == -1)) {
        size_t s = static_cast<size_t>(w.letters[0].sym);
        if (!killed[s] && edges[s].second == eliminate_gen) {
          killed[s] = 1;
          found = true;
        }
      }
    if (!found) break;
    std::vector<Word> next;
    for (const auto& w : rels) {
      Word nw;
      for (const auto& l : w.letters)
        if (!killed[static_cast<size_t>(l.sym)]) nw.letters.push_back(l);
      nw = reduce(nw);
      if (!nw.letters.empty()) next.push_back(std::move(nw));
    }
    rels = std::move(next);
  }
  SchreierPresentation out;
  std::vector<int> remap(edges.size(), -1);
  for (size_t s = 0; s < edges.size(); ++s) {
    if (killed[s]) continue;
    remap[s] = static_cast<int>(out.edges.size());
    out.pres.generators.push_back("u" + std::to_string(out.edges.size()));
    out.edges.push_back(edges[s]);
  }
  for (auto& w : rels) {
    for (auto& l : w.letters) l.sym = remap[static_cast<size_t>(l.sym)];
    out.pres.relators.push_back(std::move(w));
  }
  return out;
}

Int shift_model_fix_order(const ParamsM& p, long long j) {
  DerivedParams d = derive(p);
  if (d.g != 1 || gcd_ll(p.n, p.A) != 1 || d.mu == 0)
    throw std::invalid_argument(
        "shift_model_fix_order: needs (r,s) = (n,A) = 1 and unequal powers");
  const Int& mu = d.mu;  // equals |r^n - s^n| since m = n here
  Int rn = int_pow(to_int(p.r), p.n);
  Int sv = to_int(p.s), g, a, b;
  mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), rn.get_mpz_t(),
             sv.get_mpz_t());
  if (g != 1) throw std::logic_error("shift_model_fix_order: (r^n, s) != 1");
  Int beta = mod_int(to_int(p.r) * (int_pow(sv, p.n - 1) * a + b), mu);
  if (gcd_int(beta, mu) != 1)
    throw std::logic_error("shift_model_fix_order: multiplier is not a unit");
  if (mu > 1 && powmod_int(beta, to_int(p.n), mu) != 1)
    throw std::logic_error(
        "shift_model_fix_order: multiplier is not an n-th root of unity");
  Int bj = powmod_int(beta, to_int(mod_ll(j, p.n)), mu);
  return gcd_int(mod_int(bj - 1, mu), mu);
}

VerificationReport cross_verify(const ParamsM& p, const Caps& caps) {
  VerificationReport rep;
  Classification cls;
  try {
    cls = classify(p);
  } catch (const std::exception& e) {
    rep.checks.push_back(
        {"classification", CheckStatus::Fail, std::string("exception: ") + e.what()});
    return rep;
  }
  DerivedParams d = derive(p);
  bool finite = cls.kind == Kind::Finite;
  FinitePresentation gp = cyclic_presentation(make_cyclic(p.n, type_m_word(p)));
  FinitePresentation ep = e_presentation(p.r, p.n, p.s, p.A);
  std::string cap_note = " (cap " + std::to_string(caps.max_cosets) + ")";

  run_check(rep.checks, "order-E", [&](Check& c) {
    if (!finite) { c.detail = "predicted infinite"; return; }
    if (cls.order_E > to_int(caps.max_cosets)) {
      c.detail = "predicted order " + istr(cls.order_E) + " exceeds the coset cap";
      return;
    }
    auto got = group_order(ep, caps.max_cosets);
    if (!got) {
      c.detail = "inconclusive: enumeration overflowed" + cap_note;
      return;
    }
    if (to_int(*got) == cls.order_E) {
      c.status = CheckStatus::Pass;
      c.detail = "enumerated " + std::to_string(*got);
    } else {
      c.status = CheckStatus::Fail;
      c.detail = "enumerated " + std::to_string(*got) + ", predicted " +
                 istr(cls.order_E);
    }
  });

  run_check(rep.checks, "order-G", [&](Check& c) {
    if (!finite) { c.detail = "predicted infinite"; return; }
    if (cls.order_G > to_int(caps.max_cosets)) {
      c.detail = "predicted order " + istr(cls.order_G) + " exceeds the coset cap";
      return;
    }
    auto got = group_order(gp, caps.max_cosets);
    if (!got) {
      c.detail = "inconclusive: enumeration overflowed" + cap_note;
      return;
    }
    if (to_int(*got) == cls.order_G) {
      c.status = CheckStatus::Pass;
      c.detail = "enumerated " + std::to_string(*got);
    } else {
      c.status = CheckStatus::Fail;
      c.detail = "enumerated " + std::to_string(*got) + ", predicted " +
                 istr(cls.order_G);
    }
  });

  run_check(rep.checks, "shift-subgroup-index", [&](Check& c) {
    if (!finite) { c.detail = "predicted infinite"; return; }
    if (cls.order_G > to_int(caps.max_cosets)) {
      c.detail = "predicted index " + istr(cls.order_G) + " exceeds the coset cap";
      return;
    }
    auto got = subgroup_index(ep, {letter_word(0, 1)}, caps.max_cosets);
    if (!got) {
      c.detail = "inconclusive: enumeration overflowed" + cap_note;
      return;
    }
    if (to_int(*got) == cls.order_G) {
      c.status = CheckStatus::Pass;
      c.detail = "index of <t> is " + std::to_string(*got);
    } else {
      c.status = CheckStatus::Fail;
      c.detail = "index of <t> is " + std::to_string(*got) + ", predicted " +
                 istr(cls.order_G);
    }
  });

  run_check(rep.checks, "amalgam-factor", [&](Check& c) {
    if (p.r == 0 && p.s == 0) { c.detail = "no amalgam factor when r = s = 0"; return; }
    MGroupResult mr = m_group_params(p);
    if (mr.shape != MShape::Metacyclic) {
      c.detail = "equal powers: the amalgam factor is infinite";
      return;
    }
    if (b_order(*mr.b) != mr.order) {
      c.status = CheckStatus::Fail;
      c.detail = "metacyclic parameters give order " + istr(b_order(*mr.b)) +
                 ", expected " + istr(mr.order);
      return;
    }
    FinitePresentation mp = amalgam_presentation(d);
    SNFResult lhs = abelianization(mp);
    SNFResult rhs = metacyclic_ab(*mr.b, 1, 0);
    if (!(lhs == rhs)) {
      c.status = CheckStatus::Fail;
      c.detail = "abelianizations differ: presented " + snf_str(lhs) +
                 ", metacyclic " + snf_str(rhs);
      return;
    }
    c.status = CheckStatus::Pass;
    c.detail = "abelianization " + snf_str(lhs);
    if (mr.order <= to_int(caps.max_cosets)) {
      auto got = group_order(mp, caps.max_cosets);
      if (!got) {
        c.detail += "; order unconfirmed, enumeration overflowed" + cap_note;
        return;
      }
      if (to_int(*got) != mr.order) {
        c.status = CheckStatus::Fail;
        c.detail = "enumerated " + std::to_string(*got) + ", predicted " +
                   istr(mr.order);
        return;
      }
      c.detail += "; enumerated order " + std::to_string(*got);
    } else {
      c.detail += "; order " + istr(mr.order) + " not enumerated (exceeds cap)";
    }
  });

  run_check(rep.checks, "decomposition-order", [&](Check& c) {
    if (d.g != 1 || d.mu == 0) {
      c.detail = "decomposition needs (r,s) = 1 and unequal powers";
      return;
    }
    FreeProductDecomposition dec = gbar_params(p);
    Int factor_order = b_order(dec.factor);
    bool dec_finite =
        dec.free_rank == 0 && (dec.copies == 1 || factor_order == 1);
    if (dec_finite != finite) {
      c.status = CheckStatus::Fail;
      c.detail = std::string("decomposition says ") +
                 (dec_finite ? "finite" : "infinite") + ", classification says " +
                 (finite ? "finite" : "infinite");
      return;
    }
    if (finite) {
      Int predicted = dec.copies == 1 ? factor_order : Int(1);
      if (predicted != cls.order_G) {
        c.status = CheckStatus::Fail;
        c.detail = "decomposition order " + istr(predicted) + ", predicted " +
                   istr(cls.order_G);
        return;
      }
    }
    c.status = CheckStatus::Pass;
    c.detail = std::to_string(dec.copies) + " copies of B(" + istr(dec.factor.M) +
               "," + std::to_string(dec.factor.N) + "," + istr(dec.factor.R) +
               "," + std::to_string(dec.factor.lambda) + "), free rank " +
               std::to_string(dec.free_rank);
    if (factor_order <= to_int(caps.max_cosets)) {
      auto got = group_order(b_presentation(dec.factor), caps.max_cosets);
      if (!got) {
        c.detail += "; factor unconfirmed, enumeration overflowed" + cap_note;
        return;
      }
      if (to_int(*got) != factor_order) {
        c.status = CheckStatus::Fail;
        c.detail = "factor enumerated to " + std::to_string(*got) +
                   ", parameters give " + istr(factor_order);
        return;
      }
      c.detail += "; factor order " + std::to_string(*got) + " enumerated";
    } else {
      c.detail += "; factor order " + istr(factor_order) +
                  " not enumerated (exceeds cap)";
    }
  });

  run_check(rep.checks, "decomposition-abelianization", [&](Check& c) {
    if (d.g != 1 || d.mu == 0) {
      c.detail = "decomposition needs (r,s) = 1 and unequal powers";
      return;
    }
    FreeProductDecomposition dec = gbar_params(p);
    SNFResult lhs = abelianization(gp);
    SNFResult rhs = metacyclic_ab(dec.factor, dec.copies, dec.free_rank);
    if (lhs == rhs) {
      c.status = CheckStatus::Pass;
      c.detail = "both sides " + snf_str(lhs);
    } else {
      c.status = CheckStatus::Fail;
      c.detail = "presented " + snf_str(lhs) + ", decomposition " + snf_str(rhs);
    }
  });

  run_check(rep.checks, "free-rank-abelianization", [&](Check& c) {
    if (cls.kind != Kind::EqualPowers || !cls.gamma_free_rank) {
      c.detail = "not in the free regime";
      return;
    }
    SNFResult ab = abelianization(gp);
    if (ab.invariant_factors.empty() && ab.free_rank == *cls.gamma_free_rank) {
      c.status = CheckStatus::Pass;
      c.detail = "abelianization is Z^" + std::to_string(ab.free_rank);
    } else {
      c.status = CheckStatus::Fail;
      c.detail = "abelianization " + snf_str(ab) + ", predicted Z^" +
                 std::to_string(*cls.gamma_free_rank);
    }
  });

  run_check(rep.checks, "fixed-points", [&](Check& c) {
    if (!finite || cls.order_G < 2) {
      c.detail = "needs a finite group with at least two elements";
      return;
    }
    if (cls.order_E > to_int(caps.max_cosets)) {
      c.detail = "predicted order " + istr(cls.order_E) + " exceeds the coset cap";
      return;
    }
    CosetTable t = todd_coxeter(ep, {letter_word(0, 1)}, caps.max_cosets);
    if (t.status != CosetTable::Status::Closed) {
      c.detail = "inconclusive: enumeration overflowed" + cap_note;
      return;
    }
    bool model = d.g == 1 && gcd_ll(p.n, p.A) == 1 && d.mu != 0;
    std::vector<int32_t> cur(static_cast<size_t>(t.live));
    for (long long i = 0; i < t.live; ++i)
      cur[static_cast<size_t>(i)] = static_cast<int32_t>(i);
    for (long long j = 0; j < p.n; ++j) {
      long long count = 0;
      for (long long i = 0; i < t.live; ++i)
        if (cur[static_cast<size_t>(i)] == i) ++count;
      Int predicted = fix_order(p, j);
      if (predicted != to_int(count)) {
        c.status = CheckStatus::Fail;
        c.detail = "j=" + std::to_string(j) + ": coset count " +
                   std::to_string(count) + ", predicted " + istr(predicted);
        return;
      }
      if (model) {
        Int sm = shift_model_fix_order(p, j);
        if (sm != to_int(count)) {
          c.status = CheckStatus::Fail;
          c.detail = "j=" + std::to_string(j) + ": cyclic model gives " +
                     istr(sm) + ", coset count " + std::to_string(count);
          return;
        }
      }
      for (long long i = 0; i < t.live; ++i)
        cur[static_cast<size_t>(i)] = t.at(cur[static_cast<size_t>(i)], 0);
    }
    c.status = CheckStatus::Pass;
    c.detail = std::string("all shift powers agree") +
               (model ? " (three-way)" : " (coset model only)");
  });

  run_check(rep.checks, "element-order-bound", [&](Check& c) {
    if (!cyclic_condition(p)) { c.detail = "cyclic condition fails"; return; }
    if (!finite) { c.detail = "predicted infinite"; return; }
    if (cls.order_G < 2) { c.detail = "trivial group"; return; }
    if (cls.order_G > to_int(caps.element_cap)) {
      c.detail = "order " + istr(cls.order_G) + " exceeds the element cap";
      return;
    }
    Int l = finite_subgroup_bound(p);
    CosetTable t = todd_coxeter(gp, {}, caps.max_cosets);
    if (t.status != CosetTable::Status::Closed) {
      c.detail = "inconclusive: enumeration overflowed" + cap_note;
      return;
    }
    PermGroup pg = regular_rep(t);
    if (element_orders_divide(pg, l)) {
      c.status = CheckStatus::Pass;
      c.detail = "all element orders divide " + istr(l);
    } else {
      c.status = CheckStatus::Fail;
      c.detail = "found an element whose order does not divide " + istr(l);
    }
  });

  return rep;
}

}  // namespace cycpres
