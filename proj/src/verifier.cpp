#include "powgraph/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "powgraph/dsl.hpp"
#include "powgraph/errors.hpp"

namespace powgraph {

std::string to_string(GraphKind kind) {
  return kind == GraphKind::power ? "power" : "enhanced_power";
}

GraphKind graph_kind_from_string(const std::string& s) {
  if (s == "power") return GraphKind::power;
  if (s == "enhanced_power") return GraphKind::enhanced_power;
  throw InvalidParameterError("unknown graph kind: " + s);
}

namespace {

VerificationReport verify_graph(const GroupTable& g, GraphKind kind) {
  const auto start = std::chrono::steady_clock::now();

  VerificationReport r;
  r.group_label = g.label();
  r.group_order = g.order();
  r.graph_kind = kind;

  const SimpleGraph base =
      kind == GraphKind::power ? power_graph(g) : enhanced_power_graph(g);
  const SimpleGraph comp = complement(base);
  r.isolated_count = isolated_by_definition(comp).count();
  const InducedSubgraphMap survivors = drop_isolated(comp);
  r.surviving_vertices = survivors.graph.vertex_count();
  r.component_count = connected_components(survivors.graph).component_count;
  r.diameter = diameter(survivors.graph);
  r.bound_satisfied =
      r.surviving_vertices == 0 ||
      (r.component_count == 1 && r.diameter && *r.diameter <= 3);

  if (kind == GraphKind::enhanced_power) {
    const WitnessBundle bundle = extract_witnesses(g, comp);
    r.witnesses_validated = validate_witnesses(bundle, g, comp);
  }

  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace

VerificationReport verify_theorem(const GroupTable& g) {
  return verify_graph(g, GraphKind::enhanced_power);
}

VerificationReport verify_corollary(const GroupTable& g) {
  return verify_graph(g, GraphKind::power);
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n == 0) return false;
  if (n == 1) return true;  // trivial group counts
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

// The distinct cyclic subgroups, ordered by size, each containing the last.
bool subgroups_form_chain(const GroupTable& g) {
  std::vector<Bitset> subs;
  for (Elem x = 0; x < g.order(); ++x) {
    Bitset s = generated_cyclic(g, x).elements;
    bool fresh = true;
    for (const auto& t : subs)
      if (t == s) {
        fresh = false;
        break;
      }
    if (fresh) subs.push_back(std::move(s));
  }
  std::sort(subs.begin(), subs.end(),
            [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
  for (std::size_t i = 0; i + 1 < subs.size(); ++i)
    if (!subs[i].is_subset_of(subs[i + 1])) return false;
  return true;
}

}  // namespace

bool verify_remark(std::uint32_t p, std::uint32_t m, std::uint64_t max_order) {
  if (!is_prime(p))
    throw InvalidParameterError("verify_remark: p = " + std::to_string(p) +
                                " is not prime");
  if (m == 0) throw InvalidParameterError("verify_remark: m must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= p;
    if (order > max_order)
      throw CapacityError("verify_remark: p^m exceeds cap " +
                          std::to_string(max_order));
  }
  const GroupTable g = cyclic_group(static_cast<std::uint32_t>(order), max_order);
  return power_graph(g).is_complete() && subgroups_form_chain(g);
}

std::vector<std::pair<std::string, bool>> verify_remark_converse(
    const CatalogSpec& catalog) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& entry : catalog.entries) {
    try {
      const GroupTable g = build_group(entry, catalog.max_order);
      bool pass = true;
      if (power_graph(g).is_complete()) {
        bool cyclic = false;
        for (Elem x = 0; x < g.order() && !cyclic; ++x)
          cyclic = element_order(g, x) == g.order();
        pass = cyclic && is_prime_power(g.order());
      }
      out.emplace_back(entry, pass);
    } catch (const Error&) {
      out.emplace_back(entry, false);
    }
  }
  return out;
}

std::vector<VerificationReport> run_catalog(const CatalogSpec& catalog, unsigned jobs) {
  const std::size_t n = catalog.entries.size();
  std::vector<std::vector<VerificationReport>> slots(n);

  auto verify_entry = [&](std::size_t i) {
    const std::string& entry = catalog.entries[i];
    try {
      const GroupTable g = build_group(entry, catalog.max_order);
      slots[i].push_back(verify_theorem(g));
      slots[i].push_back(verify_corollary(g));
    } catch (const std::exception& e) {
      VerificationReport r;
      r.group_label = entry;
      r.error = e.what();
      slots[i].push_back(std::move(r));
    }
  };

  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) verify_entry(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < n; i = next++) verify_entry(i);
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<VerificationReport> reports;
  for (auto& s : slots)
    for (auto& r : s) reports.push_back(std::move(r));
  return reports;
}

bool all_reports_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.error || !r.bound_satisfied) return false;
  return true;
}

CatalogSpec default_catalog() {
  CatalogSpec cat;
  for (int n = 1; n <= 100; ++n) cat.entries.push_back("C" + std::to_string(n));
  for (int a = 1; a <= 12; ++a)
    for (int b = a; b <= 12; ++b)
      cat.entries.push_back("C" + std::to_string(a) + "xC" + std::to_string(b));
  for (int n = 1; n <= 30; ++n) cat.entries.push_back("D" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) cat.entries.push_back("S" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) cat.entries.push_back("A" + std::to_string(n));
  cat.entries.push_back("Q8");
  for (int n = 1; n <= 5; ++n) cat.entries.push_back("Q8xC" + std::to_string(n));
  // cross-prime products of a square-free and a square factor
  cat.entries.push_back("C6xC4");
  cat.entries.push_back("C10xC4");
  cat.entries.push_back("C6xC9");
  return cat;
}

CatalogSpec load_catalog(std::istream& in, std::uint64_t max_order) {
  CatalogSpec cat;
  cat.max_order = max_order;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r\n");
    cat.entries.push_back(line.substr(first, last - first + 1));
  }
  return cat;
}

CatalogSpec load_catalog_file(const std::string& path, std::uint64_t max_order) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  return load_catalog(in, max_order);
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["group_label"] = r.group_label;
  if (r.error) {
    j["group_order"] = nullptr;
    j["graph_kind"] = nullptr;
    j["isolated_count"] = nullptr;
    j["surviving_vertices"] = nullptr;
    j["component_count"] = nullptr;
    j["diameter"] = nullptr;
    j["bound_satisfied"] = nullptr;
    j["elapsed_ms"] = r.elapsed_ms;
    j["error"] = *r.error;
    return j;
  }
  j["group_order"] = r.group_order;
  j["graph_kind"] = to_string(r.graph_kind);
  j["isolated_count"] = r.isolated_count;
  j["surviving_vertices"] = r.surviving_vertices;
  j["component_count"] = r.component_count;
  if (r.diameter)
    j["diameter"] = *r.diameter;
  else
    j["diameter"] = nullptr;
  j["bound_satisfied"] = r.bound_satisfied;
  if (r.witnesses_validated) j["witnesses_validated"] = *r.witnesses_validated;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.group_label = j.at("group_label").get<std::string>();
  if (j.contains("error") && !j["error"].is_null()) {
    r.error = j["error"].get<std::string>();
    r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
    return r;
  }
  r.group_order = j.at("group_order").get<std::uint64_t>();
  r.graph_kind = graph_kind_from_string(j.at("graph_kind").get<std::string>());
  r.isolated_count = j.at("isolated_count").get<std::uint64_t>();
  r.surviving_vertices = j.at("surviving_vertices").get<std::uint64_t>();
  r.component_count = j.at("component_count").get<std::uint64_t>();
  if (!j.at("diameter").is_null()) r.diameter = j["diameter"].get<std::uint32_t>();
  r.bound_satisfied = j.at("bound_satisfied").get<bool>();
  if (j.contains("witnesses_validated"))
    r.witnesses_validated = j["witnesses_validated"].get<bool>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& rs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

}  // namespace powgraph
