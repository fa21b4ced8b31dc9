#include "cycpres/enumerate.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace cycpres {

namespace {

std::vector<int> word_columns(const Word& w) {
  std::vector<int> cols;
  for (const auto& l : w.letters) {
    int c = 2 * l.sym + (l.exp < 0 ? 1 : 0);
    long long k = l.exp < 0 ? -l.exp : l.exp;
    for (long long i = 0; i < k; ++i) cols.push_back(c);
  }
  return cols;
}

// Relator-scanning enumerator: each live coset is scanned against every
// relator in order, defining new cosets to close the trace; a row's leftover
// empty slots are filled by definitions once its scans are done. Every edge
// that appears is also pushed through deduction processing — each relator
// rotation starting with the edge's column is rescanned at its coset — which
// finds forced identifications long before the plain row sweep would.
// Coincidences are processed immediately, keeping the smaller (older) id as
// survivor. When the coset cap is hit mid-run, definition-free lookahead
// passes flush the collapses that are already implied, the table is
// compacted, and the run resumes; only if that frees almost nothing does the
// run give up. A run is fully deterministic for a fixed presentation,
// subgroup and cap.
struct Enumerator {
  int ncols;
  long long cap;
  std::vector<std::vector<int>> rels;
  std::vector<std::vector<int>> subs;
  std::vector<std::vector<std::vector<int>>> rots;     // rots[r][p]: rotation of rels[r] starting at p
  std::vector<std::vector<std::pair<int, int>>> occ;   // occ[c]: rotations whose first column is c
  std::vector<int32_t> tab;
  std::vector<int32_t> uf;
  std::deque<std::pair<int32_t, int32_t>> coq;
  std::deque<std::pair<int32_t, int32_t>> dedq;  // (coset, column) of fresh edges
  long long created = 0;       // ids in the current table
  long long total_defined = 0; // lifetime, survives compaction
  int rescues = 0;
  bool overflow = false;

  Enumerator(const FinitePresentation& pres, const std::vector<Word>& subgroup,
             long long max_cosets)
      : ncols(2 * static_cast<int>(pres.generators.size())), cap(max_cosets) {
    if (pres.generators.empty())
      throw std::invalid_argument("todd_coxeter: presentation needs generators");
    if (cap < 1 || cap > 2000000000LL)
      throw std::invalid_argument("todd_coxeter: max_cosets out of range");
    for (const auto& r : pres.relators) {
      auto cols = word_columns(reduce(r));
      if (!cols.empty()) rels.push_back(std::move(cols));
    }
    for (const auto& w : subgroup) {
      auto cols = word_columns(reduce(w));
      if (!cols.empty()) subs.push_back(std::move(cols));
    }
    occ.resize(static_cast<size_t>(ncols));
    rots.resize(rels.size());
    for (size_t ri = 0; ri < rels.size(); ++ri) {
      const auto& R = rels[ri];
      int L = static_cast<int>(R.size());
      rots[ri].resize(static_cast<size_t>(L));
      for (int p = 0; p < L; ++p) {
        auto& rot = rots[ri][static_cast<size_t>(p)];
        rot.reserve(static_cast<size_t>(L));
        for (int k = 0; k < L; ++k)
          rot.push_back(R[static_cast<size_t>((p + k) % L)]);
        occ[static_cast<size_t>(R[static_cast<size_t>(p)])].push_back(
            {static_cast<int>(ri), p});
      }
    }
  }

  static int inv(int c) { return c ^ 1; }

  int32_t find(int32_t x) {
    while (uf[static_cast<size_t>(x)] != x) {
      uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      x = uf[static_cast<size_t>(x)];
    }
    return x;
  }

  bool is_live(long long x) { return uf[static_cast<size_t>(x)] == x; }

  int32_t& cell(int32_t row, int col) {
    return tab[static_cast<size_t>(row) * static_cast<size_t>(ncols) +
               static_cast<size_t>(col)];
  }

  // Normalized read; rewrites stale entries in place.
  int32_t get(int32_t row, int col) {
    int32_t v = cell(row, col);
    if (v < 0) return -1;
    int32_t f = find(v);
    if (f != v) cell(row, col) = f;
    return f;
  }

  int32_t new_coset() {
    if (created >= cap) {
      overflow = true;
      return -1;
    }
    int32_t id = static_cast<int32_t>(created++);
    ++total_defined;
    tab.resize(static_cast<size_t>(created) * static_cast<size_t>(ncols), -1);
    uf.push_back(id);
    return id;
  }

  void coincide(int32_t a, int32_t b) { coq.push_back({a, b}); }

  void push_ded(int32_t x, int c, int32_t y) {
    dedq.push_back({x, c});
    dedq.push_back({y, inv(c)});
  }

  void set_edge(int32_t x, int c, int32_t y) {
    x = find(x);
    y = find(y);
    int32_t ex = get(x, c);
    if (ex >= 0) {
      if (ex != y) coincide(ex, y);
      return;
    }
    int32_t ey = get(y, inv(c));
    if (ey >= 0) {
      if (ey != x) {
        coincide(ey, x);
        return;
      }
      cell(x, c) = y;  // repair the missing half
      push_ded(x, c, y);
      return;
    }
    cell(x, c) = y;
    cell(y, inv(c)) = x;
    push_ded(x, c, y);
  }

  void process_coincidences() {
    while (!coq.empty()) {
      auto [x0, y0] = coq.front();
      coq.pop_front();
      int32_t x = find(x0), y = find(y0);
      if (x == y) continue;
      if (x > y) std::swap(x, y);  // keep the older coset; 0 never dies
      uf[static_cast<size_t>(y)] = x;
      for (int c = 0; c < ncols; ++c) {
        int32_t d0 = cell(y, c);
        if (d0 < 0) continue;
        cell(y, c) = -1;
        int32_t d = find(d0);
        // Reattach the edge (y -c-> d) at the survivor.
        int32_t ex = get(x, c);
        if (ex >= 0) {
          if (ex != d) coincide(ex, d);
        } else {
          cell(x, c) = d;
          push_ded(x, c, d);
        }
        int32_t em = get(d, inv(c));
        if (em >= 0) {
          if (em != x) coincide(em, x);
        } else {
          cell(d, inv(c)) = x;
        }
      }
    }
  }

  // Scans word cols from a back to b, defining cosets to close the gap.
  // Cyclic relator scans pass a == b; subgroup words pass a == b == coset 0.
  // Returns false when a needed definition would exceed the cap.
  bool scan_and_fill(int32_t a, int32_t b, const std::vector<int>& cols) {
    int L = static_cast<int>(cols.size());
    int32_t c = find(a);
    int i = 0;
    while (i < L) {
      int32_t t = get(c, cols[static_cast<size_t>(i)]);
      if (t < 0) break;
      c = t;
      ++i;
    }
    if (i == L) {
      int32_t bf = find(b);
      if (c != bf) coincide(c, bf);
      return true;
    }
    int32_t d = find(b);
    int j = L;
    while (j > i + 1) {
      int32_t t = get(d, inv(cols[static_cast<size_t>(j - 1)]));
      if (t < 0) break;
      d = t;
      --j;
    }
    while (j - i > 1) {
      int32_t nb = new_coset();
      if (nb < 0) return false;
      cell(c, cols[static_cast<size_t>(i)]) = nb;
      cell(nb, inv(cols[static_cast<size_t>(i)])) = c;
      push_ded(c, cols[static_cast<size_t>(i)], nb);
      c = nb;
      ++i;
    }
    // set_edge turns a mismatch at the meeting point into a coincidence
    set_edge(c, cols[static_cast<size_t>(i)], d);
    return true;
  }

  // Follows every relator rotation through each fresh edge, with the
  // coincidences that causes; never defines. Purely an accelerant — the row
  // sweep alone would reach the same closed table.
  void drain_deductions() {
    process_coincidences();
    while (!dedq.empty()) {
      auto [x0, c] = dedq.front();
      dedq.pop_front();
      int32_t x = find(x0);
      if (get(x, c) < 0) continue;
      for (auto [ri, p] : occ[static_cast<size_t>(c)]) {
        scan_no_define(x, x, rots[static_cast<size_t>(ri)][static_cast<size_t>(p)]);
        process_coincidences();
        x = find(x);
        if (get(x, c) < 0) break;
      }
    }
  }

  // Definition-free scan: closes traces that already fit in the table and
  // queues the coincidences they force; gaps of two or more are left alone.
  void scan_no_define(int32_t a, int32_t b, const std::vector<int>& cols) {
    int L = static_cast<int>(cols.size());
    int32_t c = find(a);
    int i = 0;
    while (i < L) {
      int32_t t = get(c, cols[static_cast<size_t>(i)]);
      if (t < 0) break;
      c = t;
      ++i;
    }
    if (i == L) {
      int32_t bf = find(b);
      if (c != bf) coincide(c, bf);
      return;
    }
    int32_t d = find(b);
    int j = L;
    while (j > i + 1) {
      int32_t t = get(d, inv(cols[static_cast<size_t>(j - 1)]));
      if (t < 0) break;
      d = t;
      --j;
    }
    if (j - i == 1) set_edge(c, cols[static_cast<size_t>(i)], d);
  }

  long long live_count() {
    long long live = 0;
    for (long long i = 0; i < created; ++i)
      if (is_live(i)) ++live;
    return live;
  }

  // One scan-only sweep over every live coset and relator.
  void lookahead_pass() {
    for (const auto& w : subs) {
      scan_no_define(0, 0, w);
      process_coincidences();
    }
    for (long long a = 0; a < created; ++a) {
      if (!is_live(a)) continue;
      for (const auto& R : rels) {
        scan_no_define(static_cast<int32_t>(a), static_cast<int32_t>(a), R);
        process_coincidences();
        if (!is_live(a)) break;
      }
    }
  }

  // Renumbers live cosets by age and drops the dead rows. Rows before
  // next_row have been fully scanned; the pointer is remapped to match.
  void compact(long long& next_row) {
    std::vector<int32_t> newid(static_cast<size_t>(created), -1);
    long long live = 0;
    for (long long i = 0; i < created; ++i)
      if (is_live(i)) newid[static_cast<size_t>(i)] = static_cast<int32_t>(live++);
    std::vector<int32_t> ntab(static_cast<size_t>(live) * static_cast<size_t>(ncols), -1);
    for (long long i = 0; i < created; ++i) {
      if (!is_live(i)) continue;
      for (int c = 0; c < ncols; ++c) {
        int32_t v = get(static_cast<int32_t>(i), c);
        if (v < 0) continue;
        ntab[static_cast<size_t>(newid[static_cast<size_t>(i)]) *
                 static_cast<size_t>(ncols) +
             static_cast<size_t>(c)] = newid[static_cast<size_t>(v)];
      }
    }
    long long nnext = 0;
    for (long long i = 0; i < next_row && i < created; ++i)
      if (is_live(i)) ++nnext;
    next_row = nnext;
    tab.swap(ntab);
    uf.resize(static_cast<size_t>(live));
    for (long long i = 0; i < live; ++i) uf[static_cast<size_t>(i)] = static_cast<int32_t>(i);
    created = live;
  }

  // Hitting the cap: flush implied collapses, compact, resume. Gives up when
  // lookahead frees under a hundredth of the table — the real out-of-room
  // signal — or after 32 round trips, which cuts off the crawl where every
  // pass scrapes out just enough room for the next sliver of progress.
  bool rescue(long long& next_row) {
    if (++rescues > 32) return false;
    long long before;
    do {
      before = live_count();
      lookahead_pass();
      drain_deductions();
    } while (live_count() < before);
    long long slack = cap / 100 > 2 ? cap / 100 : 2;
    if (live_count() > cap - slack) return false;
    dedq.clear();  // only an accelerant, and compaction renumbers its ids
    compact(next_row);
    overflow = false;
    return true;
  }

  void verify_closed() {
    for (long long a = 0; a < created; ++a) {
      if (!is_live(a)) continue;
      for (int c = 0; c < ncols; ++c) {
        int32_t b = get(static_cast<int32_t>(a), c);
        if (b < 0 || get(b, inv(c)) != static_cast<int32_t>(a))
          throw std::logic_error("todd_coxeter: closed table is inconsistent");
      }
      for (const auto& R : rels) {
        int32_t c = static_cast<int32_t>(a);
        for (int col : R) c = get(c, col);
        if (c != static_cast<int32_t>(a))
          throw std::logic_error("todd_coxeter: relator fails on closed table");
      }
    }
    for (const auto& w : subs) {
      int32_t c = 0;
      for (int col : w) c = get(c, col);
      if (c != 0)
        throw std::logic_error("todd_coxeter: subgroup word leaves coset 0");
    }
  }

  CosetTable overflowed() {
    CosetTable out;
    out.ngens = ncols / 2;
    out.status = CosetTable::Status::Overflow;
    out.total_created = total_defined;
    return out;
  }

  CosetTable run() {
    CosetTable out;
    out.ngens = ncols / 2;
    long long row = 0;
    if (new_coset() < 0) return overflowed();
    for (;;) {  // subgroup words first; retried whole after a rescue
      bool ok = true;
      for (const auto& w : subs) {
        if (!scan_and_fill(0, 0, w)) {
          ok = false;
          break;
        }
        drain_deductions();
      }
      if (ok) break;
      if (!rescue(row)) return overflowed();
    }
    while (row < created) {
      if (!is_live(row)) {
        ++row;
        continue;
      }
      bool retry = false;
      for (const auto& R : rels) {
        if (!scan_and_fill(static_cast<int32_t>(row), static_cast<int32_t>(row),
                           R)) {
          retry = true;
          break;
        }
        drain_deductions();
        if (!is_live(row)) break;  // merged into an earlier, scanned row
      }
      if (retry) {
        if (!rescue(row)) return overflowed();
        continue;  // rescan the same (renumbered) row from its first relator
      }
      if (!is_live(row)) {
        ++row;
        continue;
      }
      for (int c = 0; c < ncols && !retry; ++c) {
        if (cell(static_cast<int32_t>(row), c) >= 0) continue;
        int32_t b = new_coset();
        if (b < 0) {
          retry = true;
          break;
        }
        cell(static_cast<int32_t>(row), c) = b;
        cell(b, inv(c)) = static_cast<int32_t>(row);
        push_ded(static_cast<int32_t>(row), c, b);
        drain_deductions();
        if (!is_live(row)) break;  // a deduction merged this row away
      }
      if (retry) {
        if (!rescue(row)) return overflowed();
        continue;
      }
      ++row;
    }
    verify_closed();
    // compact: renumber live cosets by age
    std::vector<int32_t> newid(static_cast<size_t>(created), -1);
    long long live = 0;
    for (long long i = 0; i < created; ++i)
      if (is_live(i)) newid[static_cast<size_t>(i)] = static_cast<int32_t>(live++);
    out.status = CosetTable::Status::Closed;
    out.live = live;
    out.total_created = total_defined;
    out.table.assign(static_cast<size_t>(live) * static_cast<size_t>(ncols), -1);
    for (long long i = 0; i < created; ++i) {
      if (!is_live(i)) continue;
      for (int c = 0; c < ncols; ++c)
        out.table[static_cast<size_t>(newid[static_cast<size_t>(i)]) *
                      static_cast<size_t>(ncols) +
                  static_cast<size_t>(c)] =
            newid[static_cast<size_t>(get(static_cast<int32_t>(i), c))];
    }
    return out;
  }
};

}  // namespace

CosetTable todd_coxeter(const FinitePresentation& pres,
                        const std::vector<Word>& subgroup, long long max_cosets) {
  Enumerator e(pres, subgroup, max_cosets);
  return e.run();
}

std::optional<long long> subgroup_index(const FinitePresentation& pres,
                                        const std::vector<Word>& subgroup,
                                        long long max_cosets) {
  CosetTable t = todd_coxeter(pres, subgroup, max_cosets);
  if (t.status != CosetTable::Status::Closed) return std::nullopt;
  return t.live;
}

std::optional<long long> group_order(const FinitePresentation& pres,
                                     long long max_cosets) {
  return subgroup_index(pres, {}, max_cosets);
}

}  // namespace cycpres

