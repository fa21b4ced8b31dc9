#include "cycpres/group_model.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cycpres {

namespace {

// Cayley-graph walker over the regular action: element 0 is the identity,
// multiplication walks one factor's defining word starting at the other.
struct Cayley {
  long long n = 1;
  int ncols = 0;
  std::vector<int32_t> step;    // n x ncols
  std::vector<int32_t> parent;  // BFS tree rooted at 0
  std::vector<int> pcol;

  explicit Cayley(const PermGroup& pg) {
    n = pg.degree;
    int ng = static_cast<int>(pg.gens.size());
    ncols = 2 * ng;
    step.assign(static_cast<size_t>(n) * static_cast<size_t>(ncols), -1);
    for (int g = 0; g < ng; ++g) {
      const auto& perm = pg.gens[static_cast<size_t>(g)];
      if (static_cast<long long>(perm.size()) != n)
        throw std::invalid_argument("regular action: generator degree mismatch");
      std::vector<char> seen(static_cast<size_t>(n), 0);
      for (long long p = 0; p < n; ++p) {
        int32_t q = perm[static_cast<size_t>(p)];
        if (q < 0 || q >= n || seen[static_cast<size_t>(q)])
          throw std::invalid_argument("regular action: generator is not a permutation");
        seen[static_cast<size_t>(q)] = 1;
        at(p, 2 * g) = q;
        at(q, 2 * g + 1) = static_cast<int32_t>(p);
      }
    }
    parent.assign(static_cast<size_t>(n), -1);
    pcol.assign(static_cast<size_t>(n), -1);
    std::deque<int32_t> bfs{0};
    parent[0] = 0;
    long long reached = 1;
    while (!bfs.empty()) {
      int32_t e = bfs.front();
      bfs.pop_front();
      for (int c = 0; c < ncols; ++c) {
        int32_t f = at(e, c);
        if (parent[static_cast<size_t>(f)] >= 0) continue;
        parent[static_cast<size_t>(f)] = e;
        pcol[static_cast<size_t>(f)] = c;
        ++reached;
        bfs.push_back(f);
      }
    }
    if (reached != n)
      throw std::invalid_argument("regular action: not transitive");
  }

  int32_t& at(long long e, int c) {
    return step[static_cast<size_t>(e) * static_cast<size_t>(ncols) +
                static_cast<size_t>(c)];
  }
  int32_t get(long long e, int c) const {
    return step[static_cast<size_t>(e) * static_cast<size_t>(ncols) +
                static_cast<size_t>(c)];
  }

  void word_of(int32_t e, std::vector<int>& out) const {
    out.clear();
    while (e != 0) {
      out.push_back(pcol[static_cast<size_t>(e)]);
      e = parent[static_cast<size_t>(e)];
    }
    std::reverse(out.begin(), out.end());
  }

  int32_t apply(int32_t e, const std::vector<int>& cols) const {
    for (int c : cols) e = get(e, c);
    return e;
  }

  int32_t mult(int32_t x, int32_t y) const {
    thread_local std::vector<int> buf;
    word_of(y, buf);
    return apply(x, buf);
  }

  int32_t inv_elt(int32_t x) const {
    thread_local std::vector<int> buf;
    word_of(x, buf);
    int32_t e = 0;
    for (auto it = buf.rbegin(); it != buf.rend(); ++it) e = get(e, *it ^ 1);
    return e;
  }

  int32_t pow(int32_t x, const Int& e) const {
    if (e < 0) return pow(inv_elt(x), Int(-e));
    if (e == 0) return 0;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    int32_t r = 0;
    for (size_t i = bits; i-- > 0;) {
      r = mult(r, r);
      if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = mult(r, x);
    }
    return r;
  }
};

struct Closure {
  std::vector<int32_t> elems;
  std::vector<int32_t> gens;
};

// Smallest subgroup containing the seeds and closed under conjugation by conj.
Closure normal_closure(const Cayley& cm, const std::vector<int32_t>& seeds,
                       const std::vector<int32_t>& conj) {
  Closure cl;
  std::vector<char> in(static_cast<size_t>(cm.n), 0);
  cl.elems.push_back(0);
  in[0] = 1;
  size_t qi = 1;
  auto try_add = [&](int32_t e) {
    if (!in[static_cast<size_t>(e)]) {
      in[static_cast<size_t>(e)] = 1;
      cl.elems.push_back(e);
    }
  };
  auto process = [&]() {
    while (qi < cl.elems.size()) {
      int32_t e = cl.elems[qi++];
      for (int32_t h : cl.gens) try_add(cm.mult(e, h));
    }
  };
  auto add_gen = [&](int32_t h) {
    cl.gens.push_back(h);
    for (size_t i = 0; i < cl.elems.size(); ++i) try_add(cm.mult(cl.elems[i], h));
    process();
  };
  std::deque<int32_t> work;
  for (int32_t s : seeds)
    if (!in[static_cast<size_t>(s)]) {
      add_gen(s);
      work.push_back(s);
    }
  while (!work.empty()) {
    int32_t h = work.front();
    work.pop_front();
    for (int32_t c : conj) {
      int32_t hc = cm.mult(cm.mult(cm.inv_elt(c), h), c);
      if (!in[static_cast<size_t>(hc)]) {
        add_gen(hc);
        work.push_back(hc);
      }
    }
  }
  return cl;
}

}  // namespace

PermGroup regular_rep(const CosetTable& t) {
  if (t.status != CosetTable::Status::Closed)
    throw std::invalid_argument("regular_rep: table is not closed");
  PermGroup pg;
  pg.degree = t.live;
  pg.gens.resize(static_cast<size_t>(t.ngens));
  for (long long g = 0; g < t.ngens; ++g) {
    auto& perm = pg.gens[static_cast<size_t>(g)];
    perm.resize(static_cast<size_t>(t.live));
    for (long long p = 0; p < t.live; ++p)
      perm[static_cast<size_t>(p)] = t.at(p, 2 * g);
  }
  return pg;
}

int derived_length(const PermGroup& pg) {
  Cayley cm(pg);
  if (cm.n == 1) return 0;
  std::vector<int32_t> gens;
  for (size_t g = 0; g < pg.gens.size(); ++g) {
    int32_t e = cm.get(0, 2 * static_cast<int>(g));
    if (e != 0) gens.push_back(e);
  }
  long long cur = cm.n;
  int depth = 0;
  while (true) {
    std::vector<int32_t> seeds;
    std::vector<char> seen(static_cast<size_t>(cm.n), 0);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) {
        int32_t a = gens[i], b = gens[j];
        int32_t c = cm.mult(cm.mult(cm.mult(cm.inv_elt(a), cm.inv_elt(b)), a), b);
        if (c != 0 && !seen[static_cast<size_t>(c)]) {
          seen[static_cast<size_t>(c)] = 1;
          seeds.push_back(c);
        }
      }
    if (seeds.empty()) return depth + 1;  // current level is abelian
    Closure next = normal_closure(cm, seeds, gens);
    ++depth;
    long long size = static_cast<long long>(next.elems.size());
    if (size == cur) return -1;  // perfect: series stalls
    gens = next.gens;
    cur = size;
  }
}

bool element_orders_divide(const PermGroup& pg, const Int& l) {
  if (l < 1) throw std::invalid_argument("element_orders_divide: l must be >= 1");
  Cayley cm(pg);
  for (long long e = 1; e < cm.n; ++e)
    if (cm.pow(static_cast<int32_t>(e), l) != 0) return false;
  return true;
}

}  // namespace cycpres
