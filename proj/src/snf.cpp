#include "cycpres/snf.hpp"

#include <stdexcept>

namespace cycpres {

SNFResult snf(std::vector<std::vector<Int>> m, long long ncols) {
  long long rows = static_cast<long long>(m.size());
  for (const auto& row : m)
    if (static_cast<long long>(row.size()) != ncols)
      throw std::invalid_argument("snf: ragged matrix");
  long long t = 0;
  while (t < rows && t < ncols) {
    // smallest |nonzero| in the trailing submatrix becomes the pivot
    long long pi = -1, pj = -1;
    for (long long i = t; i < rows; ++i)
      for (long long j = t; j < ncols; ++j) {
        const Int& v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (v == 0) continue;
        if (pi < 0 || abs(v) < abs(m[static_cast<size_t>(pi)][static_cast<size_t>(pj)])) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(pi)]);
    if (pj != t)
      for (long long i = 0; i < rows; ++i)
        std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(t)],
                  m[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
    while (true) {
      bool restart = false;
      for (long long i = t + 1; i < rows && !restart; ++i) {
        Int& v = m[static_cast<size_t>(i)][static_cast<size_t>(t)];
        if (v == 0) continue;
        Int q = v / m[static_cast<size_t>(t)][static_cast<size_t>(t)];
        for (long long j = t; j < ncols; ++j)
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              q * m[static_cast<size_t>(t)][static_cast<size_t>(j)];
        if (v != 0) {  // remainder is a strictly smaller pivot
          std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(i)]);
          restart = true;
        }
      }
      if (restart) continue;
      for (long long j = t + 1; j < ncols && !restart; ++j) {
        Int& v = m[static_cast<size_t>(t)][static_cast<size_t>(j)];
        if (v == 0) continue;
        Int q = v / m[static_cast<size_t>(t)][static_cast<size_t>(t)];
        for (long long i = t; i < rows; ++i)
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              q * m[static_cast<size_t>(i)][static_cast<size_t>(t)];
        if (v != 0) {
          for (long long i = 0; i < rows; ++i)
            std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(t)],
                      m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          restart = true;
        }
      }
      if (restart) continue;
      // corner clean; make the pivot divide everything that remains
      bool fixed = false;
      for (long long i = t + 1; i < rows && !fixed; ++i)
        for (long long j = t + 1; j < ncols && !fixed; ++j)
          if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] %
                  m[static_cast<size_t>(t)][static_cast<size_t>(t)] !=
              0) {
            for (long long jj = t; jj < ncols; ++jj)
              m[static_cast<size_t>(t)][static_cast<size_t>(jj)] +=
                  m[static_cast<size_t>(i)][static_cast<size_t>(jj)];
            fixed = true;
          }
      if (!fixed) break;
    }
    ++t;
  }
  SNFResult out;
  out.free_rank = ncols - t;
  Int prev = 0;
  for (long long i = 0; i < t; ++i) {
    Int d = abs(m[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    if (i > 0 && d % prev != 0)
      throw std::logic_error("snf: divisibility chain violated");
    prev = d;
    if (d != 1) out.invariant_factors.push_back(d);
  }
  return out;
}

SNFResult abelianization(const FinitePresentation& pres) {
  long long ng = static_cast<long long>(pres.generators.size());
  std::vector<std::vector<Int>> m;
  m.reserve(pres.relators.size());
  for (const auto& r : pres.relators) {
    std::vector<Int> row(static_cast<size_t>(ng), 0);
    for (const auto& l : r.letters) row[static_cast<size_t>(l.sym)] += to_int(l.exp);
    m.push_back(std::move(row));
  }
  return snf(std::move(m), ng);
}

}  // namespace cycpres
