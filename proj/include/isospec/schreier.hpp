#ifndef ISOSPEC_SCHREIER_HPP
#define ISOSPEC_SCHREIER_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "isospec/charpoly.hpp"
#include "isospec/errors.hpp"
#include "isospec/heisenberg.hpp"
#include "isospec/subgroup.hpp"

namespace isospec {

/// Multigraph on the right cosets Hg with one edge Hg -- Hgs per generator
/// occurrence s in a symmetric multiset S. Row sums equal |S|; the adjacency
/// matrix is symmetric because S is closed under inversion with multiplicity.
struct SchreierGraph {
  std::uint64_t vertices = 0;
  std::vector<std::int64_t> adjacency;  // row major, vertices x vertices
  std::vector<std::uint64_t> generator_multiset;
  bool connected = false;

  std::int64_t at(std::uint64_t u, std::uint64_t v) const { return adjacency[u * vertices + v]; }
};

template <FiniteGroupLike G>
SchreierGraph schreier_graph(const G& g, const Subgroup& h, const std::vector<std::uint64_t>& multiset,
                             std::uint64_t vertex_cap = 2048) {
  if (multiset.empty()) throw std::invalid_argument("schreier_graph: empty generator multiset");
  {
    std::map<std::uint64_t, std::int64_t> counts;
    for (auto s : multiset) ++counts[s];
    for (const auto& [s, c] : counts) {
      auto it = counts.find(g.inv(s));
      if (it == counts.end() || it->second != c)
        throw std::invalid_argument("schreier_graph: generator multiset is not symmetric");
    }
  }
  const std::uint64_t n = g.order();
  const std::uint64_t v = n / h.order();
  if (v > vertex_cap) throw CapExceeded("schreier_graph: vertex count exceeds cap");

  std::vector<std::uint32_t> coset_of(n, kUnassigned);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t e = 0; e < n; ++e) {
    if (coset_of[e] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
    for (auto x : h.elements) coset_of[g.mul(x, e)] = id;
  }
  if (reps.size() != v) throw std::invalid_argument("schreier_graph: subgroup index inconsistent");

  SchreierGraph out;
  out.vertices = v;
  out.generator_multiset = multiset;
  out.adjacency.assign(v * v, 0);
  for (std::uint64_t u = 0; u < v; ++u)
    for (auto s : multiset) ++out.adjacency[u * v + coset_of[g.mul(reps[u], s)]];

  std::vector<char> seen(v, 0);
  std::vector<std::uint64_t> stack{0};
  seen[0] = 1;
  std::uint64_t reached = 1;
  while (!stack.empty()) {
    const std::uint64_t u = stack.back();
    stack.pop_back();
    for (std::uint64_t w = 0; w < v; ++w)
      if (out.at(u, w) != 0 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  out.connected = (reached == v);
  return out;
}

inline std::vector<bigint> charpoly(const SchreierGraph& graph, std::size_t cap = 2048) {
  return charpoly_exact(graph.adjacency, graph.vertices, cap);
}

/// Multiset closed under inversion: each base element contributes itself and
/// its inverse, so the multiset size is exactly twice the base size.
template <FiniteGroupLike G>
std::vector<std::uint64_t> symmetrize(const G& g, const std::vector<std::uint64_t>& base) {
  std::vector<std::uint64_t> out;
  out.reserve(2 * base.size());
  for (auto s : base) {
    out.push_back(s);
    out.push_back(g.inv(s));
  }
  return out;
}

/// Fixed, documented generator battery for H(F_q): the standard generating
/// set in both coordinates, and the same set enriched with the central
/// element (0, 1, 0).
inline std::vector<std::vector<std::uint64_t>> generator_battery(const HeisenbergGroup& g) {
  auto standard = g.generators();
  auto enriched = standard;
  enriched.push_back(g.central(g.field().one()));
  return {symmetrize(g, standard), symmetrize(g, enriched)};
}

}  // namespace isospec

#endif
