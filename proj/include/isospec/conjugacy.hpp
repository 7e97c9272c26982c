#ifndef ISOSPEC_CONJUGACY_HPP
#define ISOSPEC_CONJUGACY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "isospec/errors.hpp"
#include "isospec/heisenberg.hpp"
#include "isospec/subgroup.hpp"

namespace isospec {

struct ConjugacyClass {
  std::uint64_t representative;  // least member
  std::vector<std::uint64_t> members;

  std::uint64_t size() const { return members.size(); }
};

/// Partition of a group into conjugacy classes. Classes are ordered by their
/// least member, which is also the stored representative.
struct ClassTable {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;  // element index -> class index
  std::uint64_t ambient_order = 0;
};

inline constexpr std::uint32_t kUnassigned = 0xffffffffu;

template <FiniteGroupLike G>
ClassTable brute_force_class_table(const G& g, std::uint64_t cap = 1ull << 20) {
  const std::uint64_t n = g.order();
  if (n > cap) throw CapExceeded("class table: group order exceeds cap");
  ClassTable t;
  t.ambient_order = n;
  t.class_of.assign(n, kUnassigned);
  for (std::uint64_t e = 0; e < n; ++e) {
    if (t.class_of[e] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(t.classes.size());
    ConjugacyClass cls;
    cls.representative = e;
    for (std::uint64_t a = 0; a < n; ++a) {
      const std::uint64_t c = g.mul(g.mul(a, e), g.inv(a));
      if (t.class_of[c] == kUnassigned) {
        t.class_of[c] = id;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    t.classes.push_back(std::move(cls));
  }
  return t;
}

namespace detail {

inline ClassTable table_from_classes(std::vector<std::vector<std::uint64_t>> classes, std::uint64_t n) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  ClassTable t;
  t.ambient_order = n;
  t.class_of.assign(n, kUnassigned);
  for (auto& members : classes) {
    const auto id = static_cast<std::uint32_t>(t.classes.size());
    for (auto e : members) t.class_of[e] = id;
    t.classes.push_back(ConjugacyClass{members.front(), std::move(members)});
  }
  return t;
}

}  // namespace detail

/// Closed-form conjugacy classes of H(F_q): q central singletons {(0,y,0)}
/// and, for each (x,z) != (0,0), the class {(x,*,z)} of size q. Total count
/// q^2 + q - 1. Must agree with the brute-force table.
inline ClassTable closed_form_class_table(const HeisenbergGroup& g) {
  const std::uint64_t q = g.field().size();
  std::vector<std::vector<std::uint64_t>> classes;
  for (std::uint64_t y = 0; y < q; ++y)
    classes.push_back({g.pack(0, static_cast<elem_t>(y), 0)});
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t z = 0; z < q; ++z) {
      if (x == 0 && z == 0) continue;
      std::vector<std::uint64_t> members;
      members.reserve(q);
      for (std::uint64_t y = 0; y < q; ++y)
        members.push_back(g.pack(static_cast<elem_t>(x), static_cast<elem_t>(y), static_cast<elem_t>(z)));
      classes.push_back(std::move(members));
    }
  return detail::table_from_classes(std::move(classes), g.order());
}

/// Conjugacy classes of a direct product are the products of factor classes.
inline ClassTable product_class_table(const ProductGroup& g, const std::vector<ClassTable>& factor_tables) {
  if (factor_tables.size() != g.factors().size())
    throw std::invalid_argument("product_class_table: table count does not match factor count");
  std::vector<std::vector<std::uint64_t>> classes{{}};
  classes[0].push_back(0);
  for (std::size_t i = 0; i < factor_tables.size(); ++i) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& partial : classes)
      for (const auto& cls : factor_tables[i].classes) {
        std::vector<std::uint64_t> members;
        members.reserve(partial.size() * cls.members.size());
        for (auto base : partial)
          for (auto m : cls.members) members.push_back(base + m * g.stride(i));
        next.push_back(std::move(members));
      }
    classes = std::move(next);
  }
  return detail::table_from_classes(std::move(classes), g.order());
}

inline bool same_partition(const ClassTable& a, const ClassTable& b) {
  if (a.ambient_order != b.ambient_order || a.classes.size() != b.classes.size()) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    if (a.classes[i].members != b.classes[i].members) return false;
  return true;
}

/// Per-class intersection counts #(H  cap  [g]_G), the almost-conjugacy data.
struct Fingerprint {
  std::vector<std::uint64_t> counts;  // indexed by class table order
  std::uint64_t subgroup_order = 0;

  bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const ClassTable& table, const Subgroup& h) {
  Fingerprint fp;
  fp.counts.assign(table.classes.size(), 0);
  fp.subgroup_order = h.order();
  for (auto e : h.elements) {
    if (e >= table.ambient_order || table.class_of[e] == kUnassigned)
      throw std::invalid_argument("fingerprint: subgroup not contained in the ambient group");
    ++fp.counts[table.class_of[e]];
  }
  return fp;
}

/// Subgroups are almost conjugate iff they meet every conjugacy class in
/// sets of equal size.
inline bool almost_conjugate(const Fingerprint& f1, const Fingerprint& f2) {
  if (f1.counts.size() != f2.counts.size())
    throw std::invalid_argument("almost_conjugate: fingerprints against different class tables");
  return f1.counts == f2.counts;
}

struct ConjugacyVerdict {
  bool conjugate = false;
  std::optional<std::uint64_t> witness;  // canonically least conjugator
  bool search_exhausted = false;
  bool order_mismatch = false;
};

/// Exhaustive conjugator scan in index order; the returned witness, when one
/// exists, is the canonically least element g with g H1 g^{-1} = H2.
template <FiniteGroupLike G>
ConjugacyVerdict find_conjugator(const G& g, const Subgroup& h1, const Subgroup& h2,
                                 std::uint64_t cap = 1ull << 20) {
  ConjugacyVerdict v;
  if (h1.order() != h2.order()) {
    v.order_mismatch = true;
    v.search_exhausted = true;
    return v;
  }
  const std::uint64_t n = g.order();
  if (n > cap) throw CapExceeded("find_conjugator: group order exceeds cap");
  std::vector<char> member2(n, 0);
  for (auto e : h2.elements) member2[e] = 1;
  for (std::uint64_t c = 0; c < n; ++c) {
    const std::uint64_t ci = g.inv(c);
    bool all = true;
    for (auto e : h1.elements) {
      if (!member2[g.mul(g.mul(c, e), ci)]) {
        all = false;
        break;
      }
    }
    if (all) {
      v.conjugate = true;
      v.witness = c;
      return v;
    }
  }
  v.search_exhausted = true;
  return v;
}

/// Complete enumeration of the subgroups of order m, by breadth-first
/// extension of generating sets. Intended as an oracle for small groups.
template <FiniteGroupLike G>
std::vector<Subgroup> subgroups_of_order(const G& g, std::uint64_t m, std::uint64_t cap = 1024) {
  const std::uint64_t n = g.order();
  if (n > cap) throw CapExceeded("subgroups_of_order: group order exceeds oracle cap");
  if (m == 0 || n % m != 0) return {};
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Subgroup> frontier{make_subgroup({g.identity()})};
  seen.insert(frontier.front().elements);
  std::vector<Subgroup> result;
  if (m == 1) return frontier;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (std::uint64_t e = 0; e < n; ++e) {
        if (s.contains(e)) continue;
        auto seed = s.elements;
        seed.push_back(e);
        auto closed = bounded_closure(g, seed, m);
        if (!closed) continue;
        if (seen.insert(closed->elements).second) {
          if (closed->order() == m) result.push_back(*closed);
          if (closed->order() < m) next.push_back(std::move(*closed));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return result;
}

}  // namespace isospec

#endif
