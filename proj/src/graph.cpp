#include "powgraph/graph.hpp"

#include <numeric>
#include <sstream>

namespace powgraph {

namespace {

std::vector<Elem> identity_labels(std::uint32_t n) {
  std::vector<Elem> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return labels;
}

}  // namespace

SimpleGraph enhanced_power_graph(const GroupTable& g) {
  const std::uint32_t n = g.order();
  SimpleGraph out(n);
  for (Elem z = 0; z < n; ++z) {
    const auto members = bitset_indices(generated_cyclic(g, z).elements);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        out.add_edge(members[i], members[j]);
  }
  out.set_labels(identity_labels(n));
  return out;
}

SimpleGraph power_graph(const GroupTable& g) {
  const std::uint32_t n = g.order();
  SimpleGraph out(n);
  for (Elem y = 0; y < n; ++y) {
    const auto powers = generated_cyclic(g, y).elements;
    for (auto x = powers.find_first(); x != Bitset::npos; x = powers.find_next(x))
      out.add_edge(static_cast<std::uint32_t>(x), y);
  }
  out.set_labels(identity_labels(n));
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  const std::uint32_t n = g.vertex_count();
  SimpleGraph out(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    Bitset row = ~g.row(v);
    row.reset(v);
    for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
      out.add_edge(v, static_cast<std::uint32_t>(u));
  }
  if (g.has_labels()) out.set_labels(g.labels());
  return out;
}

InducedSubgraphMap drop_isolated(const SimpleGraph& g) {
  InducedSubgraphMap out;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) out.kept.push_back(v);

  const auto k = static_cast<std::uint32_t>(out.kept.size());
  out.graph = SimpleGraph(k);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (g.adjacent(out.kept[i], out.kept[j])) out.graph.add_edge(i, j);

  std::vector<Elem> labels(k);
  for (std::uint32_t i = 0; i < k; ++i) labels[i] = g.vertex_label(out.kept[i]);
  out.graph.set_labels(std::move(labels));
  return out;
}

std::string to_dot(const SimpleGraph& g, const GroupTable* group) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    std::string name = group != nullptr
                           ? group->element_name(g.vertex_label(v))
                           : std::to_string(g.vertex_label(v));
    std::string escaped;
    for (char c : name) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    os << "  " << v << " [label=\"" << escaped << "\"];\n";
  }
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    for (auto u = g.row(v).find_next(v); u != Bitset::npos; u = g.row(v).find_next(u))
      os << "  " << v << " -- " << u << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace powgraph
