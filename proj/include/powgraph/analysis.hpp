#ifndef POWGRAPH_ANALYSIS_HPP
#define POWGRAPH_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powgraph/graph.hpp"

namespace powgraph {

struct ComponentPartition {
  std::vector<std::uint32_t> component_id;  // per vertex
  std::uint32_t component_count = 0;        // ids numbered by smallest contained vertex
};

ComponentPartition connected_components(const SimpleGraph& g);

// Distances from `source`; unreachable vertices get kUnreached.
inline constexpr std::uint32_t kUnreached = 0xffffffffu;
std::vector<std::uint32_t> bfs_distances(const SimpleGraph& g, std::uint32_t source);

// Max shortest-path length over all vertex pairs; empty when the graph is
// disconnected or has no vertices, 0 for a single vertex.
std::optional<std::uint32_t> diameter(const SimpleGraph& g);

// Degree-0 vertices.
Bitset isolated_by_definition(const SimpleGraph& g);

// Elements lying in every maximal cyclic subgroup. These are exactly the
// vertices that end up isolated in the complement enhanced power graph.
Bitset isolated_by_characterization(const GroupTable& g);

inline constexpr std::uint32_t kDefaultCliqueCap = 48;

// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), each clique
// ascending, the list sorted lexicographically. Refuses graphs larger than
// `cap` vertices.
std::vector<std::vector<std::uint32_t>> maximal_cliques(
    const SimpleGraph& g, std::uint32_t cap = kDefaultCliqueCap);

// --- constructive connectivity witnesses -----------------------------------
//
// For the complement enhanced power graph: pick g of maximal order; every
// non-isolated power of g gets a maximal cyclic subgroup avoiding it, and
// every pair of non-isolated vertices gets an explicit path of at most 3
// edges assembled from those subgroup generators.

struct AvoiderWitness {
  Elem power = 0;      // the power of the base element this entry serves
  Elem generator = 0;  // generator of the avoiding maximal cyclic subgroup
  Bitset subgroup;     // that subgroup's element set
};

struct PathWitness {
  Elem from = 0, to = 0;
  std::vector<Elem> vertices;  // from ... to, consecutive vertices adjacent
};

struct WitnessBundle {
  Elem base = 0;                         // the chosen max-order element
  std::vector<AvoiderWitness> avoiders;  // ascending by power
  std::vector<PathWitness> paths;        // ascending by (from, to), from < to
  bool exhaustive = true;                // paths cover all non-isolated pairs
};

// Above this group order only a deterministic random sample of pairs is
// stored (quadratic pair counts get heavy).
inline constexpr std::uint32_t kWitnessPairCap = 512;
inline constexpr std::uint32_t kWitnessSampleCount = 512;

WitnessBundle extract_witnesses(const GroupTable& g);
WitnessBundle extract_witnesses(const GroupTable& g, const SimpleGraph& complement_ep);

// One proof path between two non-isolated vertices of the complement
// enhanced power graph. Throws InvalidParameterError for out-of-range,
// equal, or isolated endpoints.
std::vector<Elem> witness_path(const GroupTable& g, const SimpleGraph& complement_ep,
                               Elem u, Elem v);

// Re-checks a bundle against the group and the complement enhanced power
// graph: avoider subgroups are maximal and avoid their power, every
// non-isolated power is covered, paths are edge-valid with at most 3 edges,
// and BFS distances never exceed recorded lengths. On failure `reason`
// (when given) says what broke.
bool validate_witnesses(const WitnessBundle& bundle, const GroupTable& g,
                        const SimpleGraph& complement_ep,
                        std::string* reason = nullptr);

}  // namespace powgraph

#endif  // POWGRAPH_ANALYSIS_HPP
