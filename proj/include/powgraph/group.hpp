#ifndef POWGRAPH_GROUP_HPP
#define POWGRAPH_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "powgraph/bits.hpp"

namespace powgraph {

using Elem = std::uint32_t;

// Permutation of {0..m-1} as an image vector.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultMaxOrder = 20000;

// Full associativity is O(n^3); tables above this order are trusted to the
// constructor that produced them.
inline constexpr std::uint32_t kDefaultAssocCheckCap = 256;

struct TableOptions {
  std::uint32_t assoc_check_cap = kDefaultAssocCheckCap;
  bool skip_assoc = false;  // composition-closure tables are associative by construction
};

// A finite group as a dense Cayley table over element indices 0..order-1.
// Immutable after construction; all queries are pure.
class GroupTable {
 public:
  std::uint32_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * order_ + b]; }
  Elem identity() const { return identity_; }
  Elem inverse(Elem x) const { return inverse_[x]; }
  const std::string& label() const { return label_; }
  const std::string& element_name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& element_names() const { return names_; }

  // Flat row-major table, for byte-level determinism comparisons.
  const std::vector<Elem>& table() const { return mul_; }

  // Checks the Latin-square, identity, inverse and (capped) associativity
  // invariants; throws Error on violation.
  void validate(const TableOptions& opts = {}) const;

  // Builds a table from raw data, derives identity and inverses, validates.
  // `mul` is row-major with order*order entries; `names` may be empty
  // (element indices are used as names).
  static GroupTable from_table(std::string label, std::vector<Elem> mul,
                               std::vector<std::string> names = {},
                               const TableOptions& opts = {});

 private:
  GroupTable() = default;

  std::uint32_t order_ = 0;
  std::vector<Elem> mul_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::string label_;
  std::vector<std::string> names_;
};

// The cyclic subgroup generated by one element.
struct CyclicSubgroup {
  Elem generator = 0;
  Bitset elements;           // over the parent group's element indices
  bool is_maximal = false;   // set by maximal_cyclic_subgroups
  std::uint32_t size() const { return static_cast<std::uint32_t>(elements.count()); }
};

// Z/nZ under addition; element i is residue i, identity 0.
GroupTable cyclic_group(std::uint32_t n, std::uint64_t max_order = kDefaultMaxOrder);

// Order 2n with presentation <r,s | r^n = s^2 = 1, srs = r^-1>; indices
// 0..n-1 are the rotations r^i, n..2n-1 the reflections r^i s.
GroupTable dihedral_group(std::uint32_t n, std::uint64_t max_order = kDefaultMaxOrder);

// The quaternion group {±1, ±i, ±j, ±k} from a fixed 8x8 table.
GroupTable quaternion_group();

// Componentwise product; element (x, y) gets index x*|b| + y.
GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          std::uint64_t max_order = kDefaultMaxOrder);

// Breadth-first closure of the generators under composition, starting from
// the identity; the generator list is sorted first so equal lists give
// byte-identical tables. Throws CapacityError when the closure passes `cap`.
GroupTable closure_from_permutations(std::vector<Permutation> generators,
                                     std::uint64_t cap,
                                     std::string label = "");

// Symmetric and alternating groups via standard permutation generators.
GroupTable symmetric_group(std::uint32_t n, std::uint64_t max_order = kDefaultMaxOrder);
GroupTable alternating_group(std::uint32_t n, std::uint64_t max_order = kDefaultMaxOrder);

// Least k >= 1 with x^k = identity.
std::uint32_t element_order(const GroupTable& g, Elem x);

// <x> as an element bitset; is_maximal is left false here.
CyclicSubgroup generated_cyclic(const GroupTable& g, Elem x);

// The containment-maximal cyclic subgroups, deduplicated; each generator is
// the smallest element index generating that subgroup, and the list is
// sorted by generator.
std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const GroupTable& g);

// Smallest element index attaining the maximal element order.
Elem max_order_element(const GroupTable& g);

}  // namespace powgraph

#endif  // POWGRAPH_GROUP_HPP
