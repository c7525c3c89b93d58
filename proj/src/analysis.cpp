#include "powgraph/analysis.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "powgraph/errors.hpp"

namespace powgraph {

ComponentPartition connected_components(const SimpleGraph& g) {
  const std::uint32_t n = g.vertex_count();
  ComponentPartition part;
  part.component_id.assign(n, kUnreached);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (part.component_id[v] != kUnreached) continue;
    const std::uint32_t id = part.component_count++;
    Bitset frontier(n);
    frontier.set(v);
    part.component_id[v] = id;
    while (frontier.any()) {
      Bitset next(n);
      for (auto u = frontier.find_first(); u != Bitset::npos; u = frontier.find_next(u))
        next |= g.row(static_cast<std::uint32_t>(u));
      frontier.reset();
      for (auto u = next.find_first(); u != Bitset::npos; u = next.find_next(u))
        if (part.component_id[u] == kUnreached) {
          part.component_id[u] = id;
          frontier.set(u);
        }
    }
  }
  return part;
}

std::vector<std::uint32_t> bfs_distances(const SimpleGraph& g, std::uint32_t source) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint32_t> dist(n, kUnreached);
  Bitset visited(n), frontier(n);
  visited.set(source);
  frontier.set(source);
  dist[source] = 0;
  std::uint32_t d = 0;
  while (frontier.any()) {
    Bitset next(n);
    for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
      next |= g.row(static_cast<std::uint32_t>(v));
    next -= visited;
    ++d;
    for (auto v = next.find_first(); v != Bitset::npos; v = next.find_next(v))
      dist[v] = d;
    visited |= next;
    frontier = std::move(next);
  }
  return dist;
}

std::optional<std::uint32_t> diameter(const SimpleGraph& g) {
  const std::uint32_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  std::uint32_t best = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    for (auto d : dist) {
      if (d == kUnreached) return std::nullopt;  // disconnected
      best = std::max(best, d);
    }
  }
  return best;
}

Bitset isolated_by_definition(const SimpleGraph& g) {
  Bitset iso(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) iso.set(v);
  return iso;
}

Bitset isolated_by_characterization(const GroupTable& g) {
  Bitset common(g.order());
  common.set();
  for (const auto& sub : maximal_cyclic_subgroups(g)) common &= sub.elements;
  return common;
}

namespace {

void bron_kerbosch(const SimpleGraph& g, Bitset& take, Bitset cand, Bitset done,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (cand.none() && done.none()) {
    out.push_back(bitset_indices(take));
    return;
  }
  // pivot: most candidate neighbors
  const Bitset both = cand | done;
  std::size_t pivot = both.find_first();
  std::size_t best = 0;
  for (auto u = pivot; u != Bitset::npos; u = both.find_next(u)) {
    const std::size_t c = (cand & g.row(static_cast<std::uint32_t>(u))).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  Bitset ext = cand - g.row(static_cast<std::uint32_t>(pivot));
  for (auto v = ext.find_first(); v != Bitset::npos; v = ext.find_next(v)) {
    const auto& nv = g.row(static_cast<std::uint32_t>(v));
    take.set(v);
    bron_kerbosch(g, take, cand & nv, done & nv, out);
    take.reset(v);
    cand.reset(v);
    done.set(v);
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> maximal_cliques(const SimpleGraph& g,
                                                        std::uint32_t cap) {
  const std::uint32_t n = g.vertex_count();
  if (n > cap)
    throw CapacityError("maximal_cliques: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) return out;
  Bitset take(n), cand(n), done(n);
  cand.set();
  bron_kerbosch(g, take, std::move(cand), std::move(done), out);
  std::sort(out.begin(), out.end());
  return out;
}

// --- witness extraction -----------------------------------------------------

namespace {

struct ProofContext {
  Elem base = 0;
  Bitset base_powers;             // <g>
  Bitset isolated;                // of the complement enhanced power graph
  std::vector<Elem> avoider_of;   // element -> generator of avoiding maximal
                                  // cyclic subgroup; kUnreached when unset
  std::vector<AvoiderWitness> avoiders;
};

ProofContext build_context(const GroupTable& g, const SimpleGraph& comp) {
  ProofContext ctx;
  ctx.base = max_order_element(g);
  ctx.base_powers = generated_cyclic(g, ctx.base).elements;
  ctx.isolated = isolated_by_definition(comp);
  ctx.avoider_of.assign(g.order(), kUnreached);

  const auto maximals = maximal_cyclic_subgroups(g);
  for (auto p = ctx.base_powers.find_first(); p != Bitset::npos;
       p = ctx.base_powers.find_next(p)) {
    if (ctx.isolated.test(p)) continue;
    for (const auto& sub : maximals) {
      if (!sub.elements.test(p)) {  // first by generator index
        ctx.avoider_of[p] = sub.generator;
        ctx.avoiders.push_back({static_cast<Elem>(p), sub.generator, sub.elements});
        break;
      }
    }
  }
  return ctx;
}

// The proof's path between distinct non-isolated vertices: non-powers of the
// base hang directly off it, powers route through their avoider generator,
// and the four-step power-to-power route collapses to length <= 3.
std::vector<Elem> proof_path(const ProofContext& ctx, const SimpleGraph& comp,
                             Elem u, Elem v) {
  if (comp.adjacent(u, v)) return {u, v};
  const bool u_power = ctx.base_powers.test(u);
  const bool v_power = ctx.base_powers.test(v);
  const Elem g = ctx.base;

  if (!u_power && !v_power) return {u, g, v};
  if (u_power && !v_power) return {u, ctx.avoider_of[u], g, v};
  if (!u_power && v_power) return {u, g, ctx.avoider_of[v], v};

  // two powers of the base; never adjacent since <g> is independent here
  if (u == g) return {u, ctx.avoider_of[v], v};
  if (v == g) return {u, ctx.avoider_of[u], v};
  const Elem ha = ctx.avoider_of[u];
  const Elem hb = ctx.avoider_of[v];
  if (ha == hb) return {u, ha, v};
  if (comp.adjacent(ha, hb)) return {u, ha, hb, v};
  // <ha> = <hb> is forced, so u avoids <hb> as well and hangs off hb
  return {u, hb, v};
}

}  // namespace

WitnessBundle extract_witnesses(const GroupTable& g) {
  return extract_witnesses(g, complement(enhanced_power_graph(g)));
}

WitnessBundle extract_witnesses(const GroupTable& g, const SimpleGraph& comp) {
  ProofContext ctx = build_context(g, comp);
  WitnessBundle bundle;
  bundle.base = ctx.base;
  bundle.avoiders = std::move(ctx.avoiders);

  std::vector<Elem> alive;
  for (std::uint32_t v = 0; v < g.order(); ++v)
    if (!ctx.isolated.test(v)) alive.push_back(v);

  auto record = [&](Elem u, Elem v) {
    PathWitness w;
    w.from = u;
    w.to = v;
    w.vertices = proof_path(ctx, comp, u, v);
    bundle.paths.push_back(std::move(w));
  };

  if (g.order() <= kWitnessPairCap) {
    for (std::size_t i = 0; i < alive.size(); ++i)
      for (std::size_t j = i + 1; j < alive.size(); ++j)
        record(alive[i], alive[j]);
  } else {
    bundle.exhaustive = false;
    if (alive.size() >= 2) {
      std::mt19937 rng(0x9e3779b9u);  // fixed seed: reproducible spot checks
      std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
      std::set<std::pair<Elem, Elem>> chosen;
      const std::uint64_t all_pairs =
          std::uint64_t(alive.size()) * (alive.size() - 1) / 2;
      const std::uint64_t want =
          std::min<std::uint64_t>(kWitnessSampleCount, all_pairs);
      while (chosen.size() < want) {
        Elem a = alive[pick(rng)], b = alive[pick(rng)];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        chosen.emplace(a, b);
      }
      for (const auto& [a, b] : chosen) record(a, b);
    }
  }
  return bundle;
}

std::vector<Elem> witness_path(const GroupTable& g, const SimpleGraph& comp,
                               Elem u, Elem v) {
  if (u >= g.order() || v >= g.order())
    throw InvalidParameterError("witness_path: vertex out of range");
  if (u == v) throw InvalidParameterError("witness_path: vertices must differ");
  ProofContext ctx = build_context(g, comp);
  if (ctx.isolated.test(u) || ctx.isolated.test(v))
    throw InvalidParameterError("witness_path: vertex is isolated");
  return proof_path(ctx, comp, u, v);
}

bool validate_witnesses(const WitnessBundle& bundle, const GroupTable& g,
                        const SimpleGraph& comp, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };

  const Bitset isolated = isolated_by_definition(comp);
  const Bitset base_powers = generated_cyclic(g, bundle.base).elements;
  const auto maximals = maximal_cyclic_subgroups(g);

  Bitset covered(g.order());
  for (const auto& a : bundle.avoiders) {
    if (a.power >= g.order()) return fail("avoider power out of range");
    if (!base_powers.test(a.power)) return fail("avoider power is not a base power");
    if (isolated.test(a.power)) return fail("avoider stored for an isolated power");
    if (a.subgroup.test(a.power)) return fail("avoider subgroup contains its power");
    const bool maximal = std::any_of(
        maximals.begin(), maximals.end(),
        [&](const CyclicSubgroup& s) { return s.elements == a.subgroup; });
    if (!maximal) return fail("avoider subgroup is not a maximal cyclic subgroup");
    if (generated_cyclic(g, a.generator).elements != a.subgroup)
      return fail("avoider generator does not generate its subgroup");
    covered.set(a.power);
  }
  for (auto p = base_powers.find_first(); p != Bitset::npos;
       p = base_powers.find_next(p))
    if (!isolated.test(p) && !covered.test(p))
      return fail("non-isolated power " + std::to_string(p) + " has no avoider");

  std::vector<std::uint32_t> dist;
  Elem dist_source = 0;
  bool dist_ready = false;
  for (const auto& w : bundle.paths) {
    const auto& p = w.vertices;
    if (p.size() < 2 || p.size() > 4) return fail("path has bad length");
    if (p.front() != w.from || p.back() != w.to) return fail("path endpoints mismatch");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= comp.vertex_count()) return fail("path vertex out of range");
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] == p[j]) return fail("path repeats a vertex");
    }
    if (isolated.test(w.from) || isolated.test(w.to))
      return fail("path endpoint is isolated");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!comp.adjacent(p[i], p[i + 1]))
        return fail("path edge " + std::to_string(p[i]) + "-" +
                    std::to_string(p[i + 1]) + " is missing");
    if (!dist_ready || dist_source != w.from) {
      dist = bfs_distances(comp, w.from);
      dist_source = w.from;
      dist_ready = true;
    }
    if (dist[w.to] == kUnreached || dist[w.to] > p.size() - 1)
      return fail("BFS distance exceeds recorded path length");
  }

  if (bundle.exhaustive) {
    const std::uint64_t alive = g.order() - isolated.count();
    if (bundle.paths.size() != alive * (alive - (alive > 0 ? 1 : 0)) / 2)
      return fail("exhaustive bundle does not cover all pairs");
  }
  return true;
}

}  // namespace powgraph
