// Command-line frontend: build a group from an expression, inspect its
// power / enhanced power graphs, verify the diameter bound over a catalog,
// or dump connectivity witnesses.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "powgraph/analysis.hpp"
#include "powgraph/dsl.hpp"
#include "powgraph/errors.hpp"
#include "powgraph/graph.hpp"
#include "powgraph/verifier.hpp"

namespace {

using nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw powgraph::Error("cannot open output file: " + out_path);
  out << text;
}

powgraph::SimpleGraph build_graph(const powgraph::GroupTable& g,
                                  const std::string& kind, bool take_complement) {
  powgraph::SimpleGraph graph =
      kind == "power" ? powgraph::power_graph(g) : powgraph::enhanced_power_graph(g);
  if (take_complement) graph = powgraph::complement(graph);
  return graph;
}

int cmd_analyze(const std::string& expr, const std::string& kind,
                bool take_complement, bool drop_isolated_flag,
                const std::string& format, const std::string& out_path,
                std::uint64_t max_order) {
  const powgraph::GroupTable g = powgraph::build_group(expr, max_order);
  powgraph::SimpleGraph graph = build_graph(g, kind, take_complement);

  std::vector<std::uint32_t> kept;
  if (drop_isolated_flag) {
    auto induced = powgraph::drop_isolated(graph);
    kept = std::move(induced.kept);
    graph = std::move(induced.graph);
  }

  const auto parts = powgraph::connected_components(graph);
  const auto diam = powgraph::diameter(graph);
  const auto isolated = powgraph::isolated_by_definition(graph);

  if (format == "dot") {
    write_output(powgraph::to_dot(graph, &g), out_path);
    return 0;
  }

  if (format == "json") {
    ordered_json j;
    j["group_label"] = g.label();
    j["group_order"] = g.order();
    j["graph_kind"] = kind == "power" ? "power" : "enhanced_power";
    j["complement"] = take_complement;
    j["drop_isolated"] = drop_isolated_flag;
    j["vertex_count"] = graph.vertex_count();
    j["edge_count"] = graph.edge_count();
    j["isolated_count"] = isolated.count();
    j["component_count"] = parts.component_count;
    if (diam)
      j["diameter"] = *diam;
    else
      j["diameter"] = nullptr;
    if (drop_isolated_flag) j["kept"] = kept;
    write_output(j.dump(2) + "\n", out_path);
    return 0;
  }

  std::ostringstream os;
  os << "group: " << g.label() << " (order " << g.order() << ")\n";
  os << "graph: " << (take_complement ? "complement of " : "")
     << (kind == "power" ? "power graph" : "enhanced power graph")
     << (drop_isolated_flag ? ", isolated vertices dropped" : "") << "\n";
  os << "vertices: " << graph.vertex_count() << "\n";
  os << "edges: " << graph.edge_count() << "\n";
  os << "isolated: " << isolated.count() << "\n";
  os << "components: " << parts.component_count << "\n";
  os << "diameter: " << (diam ? std::to_string(*diam) : "undefined") << "\n";
  write_output(os.str(), out_path);
  return 0;
}

int cmd_verify(const std::string& catalog_arg, std::uint64_t max_order,
               unsigned jobs) {
  powgraph::CatalogSpec catalog = catalog_arg == "default"
                                      ? powgraph::default_catalog()
                                      : powgraph::load_catalog_file(catalog_arg);
  catalog.max_order = max_order;
  const auto reports = powgraph::run_catalog(catalog, jobs);
  std::cout << powgraph::reports_to_json(reports).dump(2) << "\n";
  return powgraph::all_reports_pass(reports) ? 0 : 1;
}

ordered_json path_to_json(const powgraph::PathWitness& w) {
  ordered_json j;
  j["from"] = w.from;
  j["to"] = w.to;
  j["vertices"] = w.vertices;
  return j;
}

int cmd_witness(const std::string& expr, const std::string& pair,
                std::uint64_t max_order) {
  const powgraph::GroupTable g = powgraph::build_group(expr, max_order);
  const powgraph::SimpleGraph comp =
      powgraph::complement(powgraph::enhanced_power_graph(g));

  if (!pair.empty()) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw powgraph::InvalidParameterError("--pair expects A,B");
    const auto a = static_cast<powgraph::Elem>(std::stoul(pair.substr(0, comma)));
    const auto b = static_cast<powgraph::Elem>(std::stoul(pair.substr(comma + 1)));
    powgraph::PathWitness w;
    w.from = a;
    w.to = b;
    w.vertices = powgraph::witness_path(g, comp, a, b);
    std::cout << path_to_json(w).dump(2) << "\n";
    return 0;
  }

  const powgraph::WitnessBundle bundle = powgraph::extract_witnesses(g, comp);
  ordered_json j;
  j["group_label"] = g.label();
  j["group_order"] = g.order();
  j["base"] = bundle.base;
  j["exhaustive_pairs"] = bundle.exhaustive;
  auto avoiders = ordered_json::array();
  for (const auto& a : bundle.avoiders) {
    ordered_json e;
    e["power"] = a.power;
    e["generator"] = a.generator;
    e["subgroup"] = powgraph::bitset_indices(a.subgroup);
    avoiders.push_back(std::move(e));
  }
  j["avoiders"] = std::move(avoiders);
  auto paths = ordered_json::array();
  for (const auto& w : bundle.paths) paths.push_back(path_to_json(w));
  j["paths"] = std::move(paths);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power graph / enhanced power graph toolkit for finite groups"};
  app.require_subcommand(1);

  std::string expr, graph_kind = "epow", format = "text", out_path;
  std::string catalog_arg = "default", pair;
  std::uint64_t max_order = powgraph::kDefaultMaxOrder;
  unsigned jobs = 1;
  bool take_complement = false, drop_isolated_flag = false;

  auto* analyze = app.add_subcommand("analyze", "build and inspect one graph");
  analyze->add_option("--group", expr, "group expression, e.g. C6xC4")->required();
  analyze->add_option("--graph", graph_kind, "graph kind")
      ->check(CLI::IsMember({"power", "epow"}));
  analyze->add_flag("--complement", take_complement, "take the complement");
  analyze->add_flag("--drop-isolated", drop_isolated_flag, "drop degree-0 vertices");
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  analyze->add_option("-o,--output", out_path, "write to file instead of stdout");
  analyze->add_option("--max-order", max_order, "largest allowed group order");

  auto* verify = app.add_subcommand("verify", "run the catalog verifier");
  verify->add_option("--catalog", catalog_arg, "'default' or a catalog file");
  verify->add_option("--max-order", max_order, "largest allowed group order");
  verify->add_option("--jobs", jobs, "concurrent catalog entries");

  auto* witness = app.add_subcommand("witness", "dump connectivity witnesses");
  witness->add_option("--group", expr, "group expression")->required();
  witness->add_option("--pair", pair, "one vertex pair A,B instead of the full bundle");
  witness->add_option("--max-order", max_order, "largest allowed group order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return cmd_analyze(expr, graph_kind, take_complement, drop_isolated_flag,
                         format, out_path, max_order);
    if (verify->parsed()) return cmd_verify(catalog_arg, max_order, jobs);
    if (witness->parsed()) return cmd_witness(expr, pair, max_order);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
