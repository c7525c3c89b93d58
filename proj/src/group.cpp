#include "powgraph/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "powgraph/errors.hpp"

namespace powgraph {

namespace {

void check_order_cap(std::uint64_t order, std::uint64_t max_order,
                     const std::string& what) {
  if (order > max_order)
    throw CapacityError(what + ": order " + std::to_string(order) +
                        " exceeds cap " + std::to_string(max_order));
}

std::vector<std::string> index_names(std::uint32_t n) {
  std::vector<std::string> names(n);
  for (std::uint32_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

// Disjoint-cycle notation with 1-based points; identity prints as "()".
std::string cycle_notation(const Permutation& p) {
  const std::uint32_t m = static_cast<std::uint32_t>(p.size());
  std::string out;
  std::vector<bool> seen(m, false);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::uint32_t j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      first = false;
      j = p[j];
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

void GroupTable::validate(const TableOptions& opts) const {
  const std::uint32_t n = order_;
  if (n == 0) throw Error(label_ + ": empty table");
  if (mul_.size() != std::size_t(n) * n)
    throw Error(label_ + ": table size mismatch");

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<bool> seen(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t c = 0; c < n; ++c) {
      Elem v = mul(r, c);
      if (v >= n || seen[v]) throw Error(label_ + ": row " + std::to_string(r) + " is not a permutation");
      seen[v] = true;
    }
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t r = 0; r < n; ++r) {
      Elem v = mul(r, c);
      if (seen[v]) throw Error(label_ + ": column " + std::to_string(c) + " is not a permutation");
      seen[v] = true;
    }
  }

  for (std::uint32_t x = 0; x < n; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x)
      throw Error(label_ + ": identity law fails at " + std::to_string(x));
    if (mul(x, inverse_[x]) != identity_ || mul(inverse_[x], x) != identity_)
      throw Error(label_ + ": inverse law fails at " + std::to_string(x));
  }

  if (!opts.skip_assoc && n <= opts.assoc_check_cap) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error(label_ + ": associativity fails on (" + std::to_string(a) +
                        "," + std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

GroupTable GroupTable::from_table(std::string label, std::vector<Elem> mul,
                                  std::vector<std::string> names,
                                  const TableOptions& opts) {
  GroupTable g;
  std::uint32_t n = 0;
  while (std::size_t(n) * n < mul.size()) ++n;
  if (std::size_t(n) * n != mul.size() || n == 0)
    throw InvalidParameterError(label + ": table is not a nonempty square");
  g.order_ = n;
  g.mul_ = std::move(mul);
  g.label_ = std::move(label);
  g.names_ = names.empty() ? index_names(n) : std::move(names);
  if (g.names_.size() != n)
    throw InvalidParameterError(g.label_ + ": element name count mismatch");

  // Locate the two-sided identity.
  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(g.label_ + ": no identity element");

  g.inverse_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    bool ok = false;
    for (std::uint32_t y = 0; y < n; ++y)
      if (g.mul(x, y) == g.identity_) {
        g.inverse_[x] = y;
        ok = true;
        break;
      }
    if (!ok) throw Error(g.label_ + ": element " + std::to_string(x) + " has no inverse");
  }

  g.validate(opts);
  return g;
}

GroupTable cyclic_group(std::uint32_t n, std::uint64_t max_order) {
  if (n == 0) throw InvalidParameterError("cyclic_group: n must be >= 1");
  check_order_cap(n, max_order, "cyclic_group");
  std::vector<Elem> mul(std::size_t(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      mul[std::size_t(a) * n + b] = (a + b) % n;
  return GroupTable::from_table("C" + std::to_string(n), std::move(mul));
}

GroupTable dihedral_group(std::uint32_t n, std::uint64_t max_order) {
  if (n == 0) throw InvalidParameterError("dihedral_group: n must be >= 1");
  const std::uint64_t order = 2ull * n;
  check_order_cap(order, max_order, "dihedral_group");
  const std::uint32_t N = 2 * n;
  // Reflection index n+i stands for r^i s.
  auto idx = [n](bool refl, std::uint32_t i) { return refl ? n + i : i; };
  std::vector<Elem> mul(std::size_t(N) * N);
  for (std::uint32_t x = 0; x < N; ++x) {
    const bool xr = x >= n;
    const std::uint32_t xi = xr ? x - n : x;
    for (std::uint32_t y = 0; y < N; ++y) {
      const bool yr = y >= n;
      const std::uint32_t yi = yr ? y - n : y;
      Elem v;
      if (!xr && !yr) v = idx(false, (xi + yi) % n);       // r^x r^y
      else if (!xr) v = idx(true, (xi + yi) % n);          // r^x (r^y s)
      else if (!yr) v = idx(true, (xi + n - yi) % n);      // (r^x s) r^y
      else v = idx(false, (xi + n - yi) % n);              // (r^x s)(r^y s)
      mul[std::size_t(x) * N + y] = v;
    }
  }
  std::vector<std::string> names(N);
  for (std::uint32_t i = 0; i < n; ++i) {
    names[i] = "r" + std::to_string(i);
    names[n + i] = "s" + std::to_string(i);
  }
  return GroupTable::from_table("D" + std::to_string(n), std::move(mul), std::move(names));
}

GroupTable quaternion_group() {
  // Indices: 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k
  static const Elem table[64] = {
      0, 1, 2, 3, 4, 5, 6, 7,
      1, 0, 3, 2, 5, 4, 7, 6,
      2, 3, 1, 0, 6, 7, 5, 4,
      3, 2, 0, 1, 7, 6, 4, 5,
      4, 5, 7, 6, 1, 0, 2, 3,
      5, 4, 6, 7, 0, 1, 3, 2,
      6, 7, 4, 5, 3, 2, 1, 0,
      7, 6, 5, 4, 2, 3, 0, 1,
  };
  std::vector<Elem> mul(table, table + 64);
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return GroupTable::from_table("Q8", std::move(mul), std::move(names));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          std::uint64_t max_order) {
  const std::uint64_t order = std::uint64_t(a.order()) * b.order();
  check_order_cap(order, max_order, "direct_product");
  const std::uint32_t n = static_cast<std::uint32_t>(order);
  const std::uint32_t nb = b.order();
  std::vector<Elem> mul(std::size_t(n) * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const Elem xa = x / nb, xb = x % nb;
    for (std::uint32_t y = 0; y < n; ++y) {
      const Elem ya = y / nb, yb = y % nb;
      mul[std::size_t(x) * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  }
  std::vector<std::string> names(n);
  for (std::uint32_t x = 0; x < n; ++x)
    names[x] = "(" + a.element_name(x / nb) + "," + b.element_name(x % nb) + ")";
  return GroupTable::from_table(a.label() + " x " + b.label(), std::move(mul),
                                std::move(names));
}

GroupTable closure_from_permutations(std::vector<Permutation> generators,
                                     std::uint64_t cap, std::string label) {
  std::uint32_t m = 0;
  for (const auto& p : generators)
    m = std::max(m, static_cast<std::uint32_t>(p.size()));
  for (auto& p : generators) {
    const std::uint32_t old = static_cast<std::uint32_t>(p.size());
    p.resize(m);
    for (std::uint32_t i = old; i < m; ++i) p[i] = i;  // pad with fixed points
    std::vector<bool> hit(m, false);
    for (auto v : p) {
      if (v >= m || hit[v])
        throw InvalidParameterError("closure_from_permutations: generator is not a bijection");
      hit[v] = true;
    }
  }
  std::sort(generators.begin(), generators.end());

  Permutation id(m);
  for (std::uint32_t i = 0; i < m; ++i) id[i] = i;

  // BFS discovery order from the identity; index 0 is always the identity.
  std::vector<Permutation> elems;
  std::map<Permutation, Elem> index;
  elems.push_back(id);
  index.emplace(id, 0);
  Permutation tmp(m);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Permutation e = elems[head];  // copy: push_back below may reallocate
    for (const auto& gen : generators) {
      // (e * gen)(x) = e(gen(x))
      for (std::uint32_t x = 0; x < m; ++x) tmp[x] = e[gen[x]];
      if (index.emplace(tmp, static_cast<Elem>(elems.size())).second) {
        elems.push_back(tmp);
        if (elems.size() > cap)
          throw CapacityError("closure_from_permutations: closure exceeds cap " +
                              std::to_string(cap));
      }
    }
  }

  const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  std::vector<Elem> mul(std::size_t(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t p = 0; p < m; ++p) tmp[p] = elems[x][elems[y][p]];
      mul[std::size_t(x) * n + y] = index.at(tmp);
    }

  std::vector<std::string> names(n);
  for (std::uint32_t x = 0; x < n; ++x) names[x] = cycle_notation(elems[x]);
  if (label.empty()) label = "perm group on " + std::to_string(m) + " points";
  return GroupTable::from_table(std::move(label), std::move(mul), std::move(names),
                                TableOptions{.skip_assoc = true});
}

namespace {

Permutation make_cycle(std::uint32_t m, std::vector<std::uint32_t> pts) {
  Permutation p(m);
  for (std::uint32_t i = 0; i < m; ++i) p[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i)
    p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

}  // namespace

GroupTable symmetric_group(std::uint32_t n, std::uint64_t max_order) {
  if (n == 0) throw InvalidParameterError("symmetric_group: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> full(n);
    for (std::uint32_t i = 0; i < n; ++i) full[i] = i;
    gens.push_back(make_cycle(n, full));
    gens.push_back(make_cycle(n, {0, 1}));
  }
  return closure_from_permutations(std::move(gens), max_order, "S" + std::to_string(n));
}

GroupTable alternating_group(std::uint32_t n, std::uint64_t max_order) {
  if (n == 0) throw InvalidParameterError("alternating_group: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(make_cycle(n, {0, 1, 2}));
    if (n >= 4) {
      // An n-cycle is even exactly when n is odd; for even n use the
      // (n-1)-cycle on points 2..n instead.
      std::vector<std::uint32_t> cyc;
      for (std::uint32_t i = (n % 2 == 0) ? 1 : 0; i < n; ++i) cyc.push_back(i);
      gens.push_back(make_cycle(n, cyc));
    }
  }
  return closure_from_permutations(std::move(gens), max_order, "A" + std::to_string(n));
}

std::uint32_t element_order(const GroupTable& g, Elem x) {
  if (x >= g.order())
    throw InvalidParameterError("element_order: index out of range");
  std::uint32_t k = 1;
  Elem y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

CyclicSubgroup generated_cyclic(const GroupTable& g, Elem x) {
  if (x >= g.order())
    throw InvalidParameterError("generated_cyclic: index out of range");
  CyclicSubgroup s;
  s.generator = x;
  s.elements.resize(g.order());
  Elem y = x;
  s.elements.set(g.identity());
  while (y != g.identity()) {
    s.elements.set(y);
    y = g.mul(y, x);
  }
  return s;
}

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const GroupTable& g) {
  // Smallest generating index wins because the scan is ascending.
  std::map<Bitset, Elem> distinct;
  for (Elem x = 0; x < g.order(); ++x)
    distinct.emplace(generated_cyclic(g, x).elements, x);

  std::vector<CyclicSubgroup> subs;
  subs.reserve(distinct.size());
  for (auto& [elements, generator] : distinct) {
    CyclicSubgroup s;
    s.generator = generator;
    s.elements = elements;
    subs.push_back(std::move(s));
  }

  std::vector<CyclicSubgroup> maximal;
  for (const auto& s : subs) {
    bool contained = false;
    for (const auto& t : subs)
      if (s.elements != t.elements && s.elements.is_subset_of(t.elements)) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(s);
  }
  for (auto& s : maximal) s.is_maximal = true;
  std::sort(maximal.begin(), maximal.end(),
            [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
              return a.generator < b.generator;
            });
  return maximal;
}

Elem max_order_element(const GroupTable& g) {
  Elem best = 0;
  std::uint32_t best_order = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    const std::uint32_t k = element_order(g, x);
    if (k > best_order) {
      best_order = k;
      best = x;
    }
  }
  return best;
}

}  // namespace powgraph
