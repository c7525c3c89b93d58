#include "powgraph/dsl.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "powgraph/errors.hpp"

namespace powgraph {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::uint64_t max_order)
      : text_(text), max_order_(max_order) {}

  GroupTable run() {
    skip_ws();
    if (at_end()) throw ParseError("empty group expression", pos_);
    GroupTable result = parse_atom();
    skip_ws();
    while (!at_end()) {
      if (peek() != 'x')
        throw ParseError("expected 'x' between atoms", pos_);
      ++pos_;
      skip_ws();
      GroupTable rhs = parse_atom();
      result = direct_product(result, rhs, max_order_);
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::uint64_t parse_int() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer", pos_);
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 100000000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return v;
  }

  bool try_keyword(std::string_view kw) {
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  GroupTable parse_atom() {
    skip_ws();
    if (at_end()) throw ParseError("expected a group atom", pos_);
    const std::size_t start = pos_;
    if (try_keyword("perm:")) return parse_perm_atom(start);
    if (try_keyword("Q8")) return quaternion_group();
    const char kind = peek();
    if (kind == 'C' || kind == 'D' || kind == 'S' || kind == 'A') {
      ++pos_;
      const std::uint64_t n = parse_int();
      if (n == 0) throw ParseError("group parameter must be >= 1", start);
      const auto n32 = static_cast<std::uint32_t>(n);
      switch (kind) {
        case 'C': return cyclic_group(n32, max_order_);
        case 'D': return dihedral_group(n32, max_order_);
        case 'S': return symmetric_group(n32, max_order_);
        default: return alternating_group(n32, max_order_);
      }
    }
    throw ParseError("unknown group atom", pos_);
  }

  // One generator per ";"-separated cycle list; points are 1-based.
  GroupTable parse_perm_atom(std::size_t atom_start) {
    std::vector<std::vector<std::vector<std::uint32_t>>> gens_cycles;
    skip_ws();
    while (!at_end() && peek() == '(') {
      gens_cycles.push_back(parse_cycle_list());
      skip_ws();
      if (!at_end() && peek() == ';') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != '(')
          throw ParseError("expected a cycle list after ';'", pos_);
      }
    }

    std::uint32_t m = 0;
    for (const auto& cycles : gens_cycles)
      for (const auto& c : cycles)
        for (auto p : c) m = std::max(m, p);

    std::vector<Permutation> gens;
    for (const auto& cycles : gens_cycles) {
      Permutation perm(m);
      for (std::uint32_t i = 0; i < m; ++i) perm[i] = i;
      for (const auto& c : cycles) {
        // apply this cycle after what is already in perm
        Permutation cy(m);
        for (std::uint32_t i = 0; i < m; ++i) cy[i] = i;
        for (std::size_t i = 0; i < c.size(); ++i)
          cy[c[i] - 1] = c[(i + 1) % c.size()] - 1;
        for (std::uint32_t i = 0; i < m; ++i) perm[i] = cy[perm[i]];
      }
      gens.push_back(std::move(perm));
    }

    const std::string label(text_.substr(atom_start, pos_ - atom_start));
    return closure_from_permutations(std::move(gens), max_order_, label);
  }

  std::vector<std::vector<std::uint32_t>> parse_cycle_list() {
    std::vector<std::vector<std::uint32_t>> cycles;
    skip_ws();
    while (!at_end() && peek() == '(') {
      const std::size_t open = pos_;
      ++pos_;
      std::vector<std::uint32_t> cycle;
      skip_ws();
      while (!at_end() && peek() != ')') {
        const std::size_t at = pos_;
        const std::uint64_t p = parse_int();
        if (p == 0) throw ParseError("points are 1-based", at);
        const auto p32 = static_cast<std::uint32_t>(p);
        for (auto q : cycle)
          if (q == p32) throw ParseError("repeated point in cycle", at);
        cycle.push_back(p32);
        skip_ws();
      }
      if (at_end()) throw ParseError("unclosed cycle", open);
      ++pos_;  // ')'
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    return cycles;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint64_t max_order_;
};

}  // namespace

GroupTable build_group(std::string_view expression, std::uint64_t max_order) {
  return Parser(expression, max_order).run();
}

}  // namespace powgraph
