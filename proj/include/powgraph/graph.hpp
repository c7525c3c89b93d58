#ifndef POWGRAPH_GRAPH_HPP
#define POWGRAPH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "powgraph/bits.hpp"
#include "powgraph/group.hpp"

namespace powgraph {

// Undirected, irreflexive graph with bitset adjacency rows. Vertices carry
// an optional label mapping them back to group element indices, so induced
// subgraphs keep their group meaning.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::uint32_t n) : rows_(n, Bitset(n)) {}

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(rows_.size()); }
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return rows_[u].test(v); }
  const Bitset& row(std::uint32_t u) const { return rows_[u]; }
  std::uint32_t degree(std::uint32_t u) const { return static_cast<std::uint32_t>(rows_[u].count()); }

  void add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) return;  // irreflexive
    rows_[u].set(v);
    rows_[v].set(u);
  }

  std::uint64_t edge_count() const {
    std::uint64_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  bool is_complete() const {
    const std::uint64_t n = vertex_count();
    return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  bool has_labels() const { return !labels_.empty(); }
  Elem vertex_label(std::uint32_t v) const { return has_labels() ? labels_[v] : v; }
  void set_labels(std::vector<Elem> labels) { labels_ = std::move(labels); }
  const std::vector<Elem>& labels() const { return labels_; }

 private:
  std::vector<Bitset> rows_;
  std::vector<Elem> labels_;  // empty = vertex index is the element index
};

struct InducedSubgraphMap {
  std::vector<std::uint32_t> kept;  // surviving original vertex indices, ascending
  SimpleGraph graph;
};

// x ~ y iff some cyclic subgroup contains both; built by marking all pairs
// inside <z> for every z.
SimpleGraph enhanced_power_graph(const GroupTable& g);

// x ~ y iff one is a power of the other.
SimpleGraph power_graph(const GroupTable& g);

// Same vertices and labels; edges exactly the non-edges.
SimpleGraph complement(const SimpleGraph& g);

// Removes every degree-0 vertex.
InducedSubgraphMap drop_isolated(const SimpleGraph& g);

// DOT text, deterministic: vertex lines ascending, then one line per edge
// (i < j, ascending). When `group` is given, vertices are labeled by the
// element names of their group labels.
std::string to_dot(const SimpleGraph& g, const GroupTable* group = nullptr);

}  // namespace powgraph

#endif  // POWGRAPH_GRAPH_HPP
