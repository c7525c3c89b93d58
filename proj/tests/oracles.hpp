// Test-only reference implementations, deliberately written along different
// routes than the library: subgroup closures for adjacency, Floyd-Warshall
// for distances, and pivot-free clique enumeration.

#ifndef POWGRAPH_TESTS_ORACLES_HPP
#define POWGRAPH_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "powgraph/analysis.hpp"
#include "powgraph/graph.hpp"
#include "powgraph/group.hpp"

namespace oracles {

// Closure of a generating set inside a finite group, by plain worklist.
inline powgraph::Bitset subgroup_closure(const powgraph::GroupTable& g,
                                         std::vector<powgraph::Elem> gens) {
  powgraph::Bitset in(g.order());
  std::vector<powgraph::Elem> work;
  auto push = [&](powgraph::Elem e) {
    if (!in.test(e)) {
      in.set(e);
      work.push_back(e);
    }
  };
  push(g.identity());
  for (auto e : gens) push(e);
  for (std::size_t head = 0; head < work.size(); ++head)
    for (auto e : gens) {
      push(g.mul(work[head], e));
      push(g.mul(e, work[head]));
    }
  return in;
}

// A finite subgroup is cyclic iff some member's order matches its size.
inline bool subset_is_cyclic(const powgraph::GroupTable& g, const powgraph::Bitset& h) {
  for (auto x = h.find_first(); x != powgraph::Bitset::npos; x = h.find_next(x))
    if (powgraph::element_order(g, static_cast<powgraph::Elem>(x)) == h.count())
      return true;
  return false;
}

// The alternative enhanced-power adjacency definition.
inline bool two_generated_cyclic(const powgraph::GroupTable& g, powgraph::Elem x,
                                 powgraph::Elem y) {
  return subset_is_cyclic(g, subgroup_closure(g, {x, y}));
}

inline std::optional<std::uint32_t> floyd_warshall_diameter(
    const powgraph::SimpleGraph& g) {
  const std::uint32_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  constexpr std::uint32_t inf = 0x3fffffff;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::uint32_t i = 0; i < n; ++i) d[i][i] = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::uint32_t best = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return std::nullopt;
      best = std::max(best, d[i][j]);
    }
  return best;
}

// Pivot-free Bron-Kerbosch over std::set, as a slow cross-check. The one
// concession to speed is the standard cutoff: an excluded vertex adjacent
// to every candidate makes the whole subtree non-maximal.
inline void bk_plain(const powgraph::SimpleGraph& g, std::set<std::uint32_t> r,
                     std::set<std::uint32_t> p, std::set<std::uint32_t> x,
                     std::vector<std::vector<std::uint32_t>>& out) {
  if (p.empty() && x.empty()) {
    out.emplace_back(r.begin(), r.end());
    return;
  }
  for (auto u : x) {
    bool dominates = true;
    for (auto v : p)
      if (!g.adjacent(u, v)) {
        dominates = false;
        break;
      }
    if (dominates) return;
  }
  while (!p.empty()) {
    const std::uint32_t v = *p.begin();
    std::set<std::uint32_t> r2 = r, p2, x2;
    r2.insert(v);
    for (auto u : p)
      if (g.adjacent(u, v)) p2.insert(u);
    for (auto u : x)
      if (g.adjacent(u, v)) x2.insert(u);
    bk_plain(g, r2, p2, x2, out);
    p.erase(v);
    x.insert(v);
  }
}

inline std::vector<std::vector<std::uint32_t>> brute_force_maximal_cliques(
    const powgraph::SimpleGraph& g) {
  std::vector<std::vector<std::uint32_t>> out;
  if (g.vertex_count() == 0) return out;
  std::set<std::uint32_t> p;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) p.insert(v);
  bk_plain(g, {}, p, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracles

#endif  // POWGRAPH_TESTS_ORACLES_HPP
