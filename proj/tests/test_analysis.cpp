#include <doctest.h>

#include <random>
#include <vector>

#include "powgraph/analysis.hpp"
#include "powgraph/errors.hpp"
#include "oracles.hpp"

using namespace powgraph;

namespace {

SimpleGraph random_graph(std::mt19937& rng, std::uint32_t max_vertices) {
  std::uniform_int_distribution<std::uint32_t> nv(0, max_vertices);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  const std::uint32_t n = nv(rng);
  const double p = prob(rng);
  SimpleGraph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (prob(rng) < p) g.add_edge(u, v);
  return g;
}

SimpleGraph complement_ep(const GroupTable& g) {
  return complement(enhanced_power_graph(g));
}

}  // namespace

TEST_CASE("connected components") {
  CHECK(connected_components(SimpleGraph(0)).component_count == 0);

  const auto s3 = drop_isolated(complement_ep(dihedral_group(3)));
  const auto parts = connected_components(s3.graph);
  CHECK(parts.component_count == 1);
  CHECK(s3.graph.vertex_count() == 5);

  const auto edgeless = connected_components(SimpleGraph(4));
  CHECK(edgeless.component_count == 4);
  // ids numbered by smallest contained vertex
  CHECK(edgeless.component_id == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("diameter") {
  CHECK_FALSE(diameter(SimpleGraph(0)).has_value());
  CHECK(diameter(SimpleGraph(1)) == 0);
  CHECK_FALSE(diameter(SimpleGraph(2)).has_value());  // disconnected

  CHECK(diameter(drop_isolated(complement_ep(dihedral_group(3))).graph) == 2);
  CHECK(diameter(drop_isolated(complement_ep(quaternion_group())).graph) == 2);
  CHECK(diameter(drop_isolated(complement(power_graph(cyclic_group(6)))).graph) == 2);
}

TEST_CASE("diameter matches Floyd-Warshall on random graphs") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 40; ++i) {
    const SimpleGraph g = random_graph(rng, 64);
    CHECK(diameter(g) == oracles::floyd_warshall_diameter(g));
  }
}

TEST_CASE("isolated vertices, by degree and by characterization") {
  CHECK(isolated_by_definition(complement_ep(cyclic_group(11))).count() == 11);

  CHECK(bitset_indices(isolated_by_definition(complement_ep(quaternion_group()))) ==
        std::vector<std::uint32_t>{0, 1});
  CHECK(bitset_indices(isolated_by_characterization(quaternion_group())) ==
        std::vector<std::uint32_t>{0, 1});

  CHECK(isolated_by_characterization(cyclic_group(12)).count() == 12);
  CHECK(bitset_indices(isolated_by_characterization(dihedral_group(3))) ==
        std::vector<std::uint32_t>{0});

  const std::vector<GroupTable> sample = {
      cyclic_group(10), dihedral_group(6), quaternion_group(),
      symmetric_group(4), direct_product(cyclic_group(6), cyclic_group(4))};
  for (const auto& g : sample) {
    const Bitset by_def = isolated_by_definition(complement_ep(g));
    const Bitset by_char = isolated_by_characterization(g);
    CHECK(by_def == by_char);
    // isolated vertices are powers of the chosen max-order element
    CHECK(by_def.is_subset_of(generated_cyclic(g, max_order_element(g)).elements));
  }
}

TEST_CASE("maximal cliques") {
  const SimpleGraph k6 = enhanced_power_graph(cyclic_group(6));
  const auto one = maximal_cliques(k6);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});

  const auto singletons = maximal_cliques(SimpleGraph(3));
  CHECK(singletons ==
        std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2}});

  const auto s3 = maximal_cliques(enhanced_power_graph(dihedral_group(3)));
  std::vector<std::vector<std::uint32_t>> expected;
  for (const auto& sub : maximal_cyclic_subgroups(dihedral_group(3)))
    expected.push_back(bitset_indices(sub.elements));
  std::sort(expected.begin(), expected.end());
  CHECK(s3 == expected);

  CHECK(maximal_cliques(SimpleGraph(0)).empty());
  CHECK_THROWS_AS(maximal_cliques(SimpleGraph(49)), CapacityError);
}

TEST_CASE("maximal cliques agree with the pivot-free enumeration") {
  std::mt19937 rng(77);
  for (int i = 0; i < 25; ++i) {
    const SimpleGraph g = random_graph(rng, 20);
    CHECK(maximal_cliques(g) == oracles::brute_force_maximal_cliques(g));
  }
  for (const auto& g : {dihedral_group(4), quaternion_group(), symmetric_group(3)}) {
    const SimpleGraph ep = enhanced_power_graph(g);
    CHECK(maximal_cliques(ep) == oracles::brute_force_maximal_cliques(ep));
  }
}

TEST_CASE("witness paths in S3") {
  const GroupTable s3 = dihedral_group(3);
  const SimpleGraph comp = complement_ep(s3);
  // the two rotations route through a reflection
  CHECK(witness_path(s3, comp, 1, 2) == std::vector<Elem>{1, 3, 2});
  // a non-power of the base element is directly adjacent to it
  const Elem base = max_order_element(s3);
  CHECK(base == 1);
  CHECK(witness_path(s3, comp, 3, base) == std::vector<Elem>{3, 1});

  CHECK_THROWS_AS(witness_path(s3, comp, 0, 1), InvalidParameterError);  // isolated
  CHECK_THROWS_AS(witness_path(s3, comp, 1, 1), InvalidParameterError);
  CHECK_THROWS_AS(witness_path(s3, comp, 1, 9), InvalidParameterError);
}

TEST_CASE("witness bundles validate on a sample") {
  const std::vector<GroupTable> sample = {
      cyclic_group(1), cyclic_group(12), dihedral_group(3), dihedral_group(15),
      quaternion_group(), symmetric_group(4), alternating_group(5),
      direct_product(cyclic_group(6), cyclic_group(4)),
      direct_product(quaternion_group(), cyclic_group(3))};
  for (const auto& g : sample) {
    const SimpleGraph comp = complement_ep(g);
    const WitnessBundle bundle = extract_witnesses(g, comp);
    std::string reason;
    const bool ok = validate_witnesses(bundle, g, comp, &reason);
    INFO(g.label(), ": ", reason);
    CHECK(ok);
    CHECK(bundle.exhaustive);
  }
}

TEST_CASE("witnesses on a cyclic group are empty") {
  const GroupTable c9 = cyclic_group(9);
  const WitnessBundle bundle = extract_witnesses(c9);
  CHECK(bundle.avoiders.empty());
  CHECK(bundle.paths.empty());
  CHECK(bundle.base == 1);
}

TEST_CASE("recorded paths reach length 3 on C6 x C4") {
  const GroupTable g = direct_product(cyclic_group(6), cyclic_group(4));
  const SimpleGraph comp = complement_ep(g);
  const WitnessBundle bundle = extract_witnesses(g, comp);
  std::string reason;
  const bool ok = validate_witnesses(bundle, g, comp, &reason);
  INFO(reason);
  CHECK(ok);
  std::size_t longest = 0;
  for (const auto& w : bundle.paths)
    longest = std::max(longest, w.vertices.size() - 1);
  CHECK(longest == 3);
}

TEST_CASE("large groups fall back to sampled pairs") {
  const GroupTable d300 = dihedral_group(300);  // order 600
  const SimpleGraph comp = complement_ep(d300);
  const WitnessBundle bundle = extract_witnesses(d300, comp);
  CHECK_FALSE(bundle.exhaustive);
  CHECK(bundle.paths.size() == kWitnessSampleCount);
  std::string reason;
  const bool ok = validate_witnesses(bundle, d300, comp, &reason);
  INFO(reason);
  CHECK(ok);
}

TEST_CASE("witness extraction is deterministic") {
  const GroupTable g = direct_product(quaternion_group(), cyclic_group(3));
  const WitnessBundle a = extract_witnesses(g);
  const WitnessBundle b = extract_witnesses(g);
  REQUIRE(a.paths.size() == b.paths.size());
  for (std::size_t i = 0; i < a.paths.size(); ++i)
    CHECK(a.paths[i].vertices == b.paths[i].vertices);
  REQUIRE(a.avoiders.size() == b.avoiders.size());
  for (std::size_t i = 0; i < a.avoiders.size(); ++i) {
    CHECK(a.avoiders[i].power == b.avoiders[i].power);
    CHECK(a.avoiders[i].generator == b.avoiders[i].generator);
  }
}

TEST_CASE("validation rejects corrupted bundles") {
  const GroupTable g = dihedral_group(3);
  const SimpleGraph comp = complement_ep(g);
  WitnessBundle bundle = extract_witnesses(g, comp);
  REQUIRE_FALSE(bundle.paths.empty());

  SUBCASE("broken edge") {
    bundle.paths[0].vertices = {1, 2};  // rotations are not adjacent here
    bundle.paths[0].from = 1;
    bundle.paths[0].to = 2;
    CHECK_FALSE(validate_witnesses(bundle, g, comp));
  }
  SUBCASE("missing avoider") {
    bundle.avoiders.clear();
    CHECK_FALSE(validate_witnesses(bundle, g, comp));
  }
  SUBCASE("avoider subgroup that contains its power") {
    bundle.avoiders[0].subgroup = generated_cyclic(g, 1).elements;
    bundle.avoiders[0].generator = 1;
    CHECK_FALSE(validate_witnesses(bundle, g, comp));
  }
}
