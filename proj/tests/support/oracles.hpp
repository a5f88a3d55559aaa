#pragma once

// Brute-force reference computations. They work on explicit pair sets and
// boolean matrices, never on the partition/union-find code they check.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "gencat/gen_arrow.hpp"

namespace gencat::oracle {

using PairSet = std::set<std::pair<std::size_t, std::size_t>>;

/// All pairs (x, y) of the equivalence relation presented by a partition.
inline PairSet pairs_of(const GenArrow& r) {
  PairSet out;
  for (const Block& b : r.blocks()) {
    for (Position x : b) {
      for (Position y : b) out.emplace(x, y);
    }
  }
  return out;
}

/// Warshall closure of a relation on {0, ..., size-1}.
inline std::vector<std::vector<bool>> transitive_closure(std::size_t size, const PairSet& pairs) {
  std::vector<std::vector<bool>> m(size, std::vector<bool>(size, false));
  for (auto [x, y] : pairs) m[x][y] = true;
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (m[k][j]) m[i][j] = true;
  return m;
}

/// Equivalence classes of a reflexive, symmetric, transitive matrix, each
/// sorted, listed by least element.
inline std::vector<Block> classes_of(const std::vector<std::vector<bool>>& m) {
  std::vector<Block> out;
  std::vector<bool> done(m.size(), false);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (done[x]) continue;
    Block b;
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (m[x][y]) {
        b.push_back(y);
        done[y] = true;
      }
    }
    out.push_back(b);
  }
  return out;
}

struct ComposeResult {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Block> blocks;
  std::size_t circles = 0;
};

/// Composition by the literal recipe: union of R1 with R2 shifted by n,
/// transitive closure, restriction to n u k^{+m+n}, renumbering x' -> x.
inline ComposeResult compose(const GenArrow& r2, const GenArrow& r1) {
  const std::size_t n = r1.source(), m = r1.target(), k = r2.target();
  const std::size_t size = n + m + k;
  PairSet glued = pairs_of(r1);
  for (auto [x, y] : pairs_of(r2)) glued.emplace(x + n, y + n);
  for (std::size_t x = 0; x < size; ++x) glued.emplace(x, x);
  const auto closure = transitive_closure(size, glued);

  auto prime = [&](std::size_t x) { return x < n ? x : x + m; };
  std::vector<std::vector<bool>> restricted(n + k, std::vector<bool>(n + k, false));
  for (std::size_t x = 0; x < n + k; ++x)
    for (std::size_t y = 0; y < n + k; ++y) restricted[x][y] = closure[prime(x)][prime(y)];

  ComposeResult out{n, k, classes_of(restricted), 0};
  for (const Block& b : classes_of(closure)) {
    bool touches_outer = false;
    for (Position x : b) touches_outer = touches_outer || x < n || x >= n + m;
    if (!touches_outer) ++out.circles;
  }
  return out;
}

}  // namespace gencat::oracle
