#ifndef ISOSPEC_SUBGROUP_HPP
#define ISOSPEC_SUBGROUP_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <vector>

#include "isospec/errors.hpp"

namespace isospec {

/// A finite group whose elements are dense indices in [0, order()).
/// Index order doubles as the canonical element order, so exhaustive scans
/// that return the first hit are deterministic.
template <typename G>
concept FiniteGroupLike = requires(const G& g, std::uint64_t a, std::uint64_t b) {
  { g.order() } -> std::convertible_to<std::uint64_t>;
  { g.identity() } -> std::convertible_to<std::uint64_t>;
  { g.mul(a, b) } -> std::convertible_to<std::uint64_t>;
  { g.inv(a) } -> std::convertible_to<std::uint64_t>;
};

/// Canonical subgroup value: the element list is sorted and duplicate free.
struct Subgroup {
  std::vector<std::uint64_t> elements;

  std::uint64_t order() const { return elements.size(); }

  bool contains(std::uint64_t e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
  }

  bool operator==(const Subgroup&) const = default;
};

inline Subgroup make_subgroup(std::vector<std::uint64_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup{std::move(elems)};
}

/// Full subgroup check: identity, closure under the group law and inversion,
/// and Lagrange divisibility of the order.
template <FiniteGroupLike G>
bool is_subgroup(const G& g, const Subgroup& h) {
  if (h.elements.empty()) return false;
  if (!h.contains(g.identity())) return false;
  if (g.order() % h.order() != 0) return false;
  for (auto a : h.elements) {
    if (a >= g.order()) return false;
    if (!h.contains(g.inv(a))) return false;
    for (auto b : h.elements)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

template <FiniteGroupLike G>
Subgroup conjugate_subgroup(const G& g, const Subgroup& h, std::uint64_t by) {
  std::vector<std::uint64_t> elems;
  elems.reserve(h.elements.size());
  const std::uint64_t byi = g.inv(by);
  for (auto e : h.elements) elems.push_back(g.mul(g.mul(by, e), byi));
  return make_subgroup(std::move(elems));
}

/// Closure of a seed set under the group law, aborted (nullopt) as soon as it
/// grows past max_order.
template <FiniteGroupLike G>
std::optional<Subgroup> bounded_closure(const G& g, const std::vector<std::uint64_t>& seed,
                                        std::uint64_t max_order) {
  std::vector<std::uint64_t> elems{g.identity()};
  std::vector<char> member(g.order(), 0);
  member[g.identity()] = 1;
  auto insert = [&](std::uint64_t e) {
    if (!member[e]) {
      member[e] = 1;
      elems.push_back(e);
    }
  };
  for (auto s : seed) insert(s);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems.size() > max_order) return std::nullopt;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      insert(g.mul(elems[i], elems[j]));
      insert(g.mul(elems[j], elems[i]));
      if (elems.size() > max_order) return std::nullopt;
    }
  }
  return make_subgroup(std::move(elems));
}

}  // namespace isospec

#endif
