#ifndef POWGRAPH_VERIFIER_HPP
#define POWGRAPH_VERIFIER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "powgraph/analysis.hpp"
#include "powgraph/group.hpp"

namespace powgraph {

enum class GraphKind { power, enhanced_power };

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& s);

// Outcome of one connectivity/diameter check on one group.
struct VerificationReport {
  std::string group_label;
  std::uint64_t group_order = 0;
  GraphKind graph_kind = GraphKind::enhanced_power;
  std::uint64_t isolated_count = 0;
  std::uint64_t surviving_vertices = 0;
  std::uint64_t component_count = 0;
  std::optional<std::uint32_t> diameter;
  bool bound_satisfied = false;
  std::optional<bool> witnesses_validated;  // enhanced-power checks only
  std::int64_t elapsed_ms = 0;
  std::optional<std::string> error;  // set for in-band entry failures

  bool operator==(const VerificationReport&) const = default;
};

struct CatalogSpec {
  std::vector<std::string> entries;  // group expressions
  std::uint64_t max_order = kDefaultMaxOrder;
};

// Complement of the enhanced power graph, isolated vertices dropped:
// connected with diameter <= 3, witnesses extracted and validated.
VerificationReport verify_theorem(const GroupTable& g);

// Same pipeline on the complement of the power graph (no witness recipe).
VerificationReport verify_corollary(const GroupTable& g);

// Power graph of C_{p^m} is complete (and its subgroups form a chain).
// Throws InvalidParameterError unless p is prime (trial division).
bool verify_remark(std::uint32_t p, std::uint32_t m,
                   std::uint64_t max_order = kDefaultMaxOrder);

// Per catalog entry: a complete power graph forces a cyclic group of prime
// power order. Parse/capacity failures are collected, not fatal.
std::vector<std::pair<std::string, bool>> verify_remark_converse(const CatalogSpec& catalog);

// verify_theorem + verify_corollary over every entry, reports in catalog
// order (two per entry; one error report when construction fails). `jobs`
// entries run concurrently.
std::vector<VerificationReport> run_catalog(const CatalogSpec& catalog, unsigned jobs = 1);

// True when nothing errored and every bound held: the process exit status.
bool all_reports_pass(const std::vector<VerificationReport>& reports);

// Cyclic groups, products, dihedrals, small symmetric/alternating groups,
// the quaternion group and the sharp product family.
CatalogSpec default_catalog();

// One expression per line; '#' starts a comment.
CatalogSpec load_catalog(std::istream& in, std::uint64_t max_order = kDefaultMaxOrder);
CatalogSpec load_catalog_file(const std::string& path,
                              std::uint64_t max_order = kDefaultMaxOrder);

nlohmann::ordered_json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& rs);

}  // namespace powgraph

#endif  // POWGRAPH_VERIFIER_HPP
