#ifndef POWGRAPH_BITS_HPP
#define POWGRAPH_BITS_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

namespace powgraph {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<std::uint32_t> bitset_indices(const Bitset& b) {
  std::vector<std::uint32_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

inline Bitset bitset_from_indices(std::size_t size,
                                  const std::vector<std::uint32_t>& idx) {
  Bitset b(size);
  for (auto i : idx) b.set(i);
  return b;
}

}  // namespace powgraph

#endif  // POWGRAPH_BITS_HPP
