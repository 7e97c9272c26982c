#ifndef ISOSPEC_HEISENBERG_HPP
#define ISOSPEC_HEISENBERG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "isospec/errors.hpp"
#include "isospec/finite_field.hpp"
#include "isospec/subgroup.hpp"

namespace isospec {

/// The Heisenberg group H(F_q) of upper unitriangular 3x3 matrices over F_q,
/// stored as coordinate triples (x, y, z) with x at position (1,2), y at
/// (1,3) and z at (2,3). The group law is
///   (x, y, z) (x', y', z') = (x + x', y + y' + x z', z + z').
/// Element index: (x_idx * q + y_idx) * q + z_idx.
class HeisenbergGroup {
 public:
  struct Triple {
    elem_t x, y, z;
    bool operator==(const Triple&) const = default;
  };

  explicit HeisenbergGroup(Fq field, std::uint64_t order_cap = 1ull << 20) : field_(std::move(field)) {
    const std::uint64_t q = field_.size();
    if (q > order_cap / q / q) throw CapExceeded("HeisenbergGroup: q^3 exceeds cap");
    order_ = q * q * q;
  }

  const Fq& field() const { return field_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t identity() const { return 0; }

  std::uint64_t pack(elem_t x, elem_t y, elem_t z) const {
    const std::uint64_t q = field_.size();
    return (static_cast<std::uint64_t>(x) * q + y) * q + z;
  }

  Triple unpack(std::uint64_t e) const {
    const std::uint64_t q = field_.size();
    Triple t;
    t.z = static_cast<elem_t>(e % q);
    e /= q;
    t.y = static_cast<elem_t>(e % q);
    t.x = static_cast<elem_t>(e / q);
    return t;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const Triple s = unpack(a), t = unpack(b);
    return pack(field_.add(s.x, t.x),
                field_.add(field_.add(s.y, t.y), field_.mul(s.x, t.z)),
                field_.add(s.z, t.z));
  }

  std::uint64_t inv(std::uint64_t a) const {
    const Triple s = unpack(a);
    return pack(field_.neg(s.x),
                field_.sub(field_.mul(s.x, s.z), s.y),
                field_.neg(s.z));
  }

  /// Generating set: (b, 0, 0) and (0, 0, b) for b running over the
  /// polynomial basis 1, x, ..., x^{n-1} of F_q over F_p.
  std::vector<std::uint64_t> generators() const {
    std::vector<std::uint64_t> gens;
    elem_t b = field_.one();
    for (unsigned i = 0; i < field_.degree(); ++i) {
      gens.push_back(pack(b, 0, 0));
      gens.push_back(pack(0, 0, b));
      b = field_.from_coeffs(shift_coeffs(b));
    }
    return gens;
  }

  std::uint64_t central(elem_t y) const { return pack(0, y, 0); }

 private:
  Fq field_;
  std::uint64_t order_;

  std::vector<std::uint32_t> shift_coeffs(elem_t b) const {
    // multiply by x within the polynomial basis; only used for basis walk,
    // never reaches the reduction case because the walk stops at x^{n-1}
    auto c = field_.coeffs(b);
    std::vector<std::uint32_t> out(c.size(), 0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) out[i + 1] = c[i];
    return out;
  }
};

/// H_T = {(x, T(x), 0) : x in F_q} for an additive map T. T = 0 yields the
/// base subgroup of order q; the general H_T is its image under the
/// automorphism (x, y, z) -> (x, y + T(x), z).
inline Subgroup subgroup_from_map(const HeisenbergGroup& g, const AdditiveMap& t) {
  std::vector<std::uint64_t> elems;
  elems.reserve(g.field().size());
  for (std::uint64_t x = 0; x < g.field().size(); ++x)
    elems.push_back(g.pack(static_cast<elem_t>(x), apply(g.field(), t, static_cast<elem_t>(x)), 0));
  return make_subgroup(std::move(elems));
}

inline Subgroup base_subgroup(const HeisenbergGroup& g) {
  return subgroup_from_map(g, AdditiveMap{std::vector<elem_t>(g.field().degree(), 0)});
}

/// The family {H_T : T additive with a_0 = 0}, of size p^{n(n-1)}. Its
/// members are pairwise almost conjugate and pairwise nonconjugate; the
/// verification engine certifies both on demand.
inline std::vector<Subgroup> bgg_family(const HeisenbergGroup& g, std::uint64_t count_cap = 1ull << 20) {
  std::vector<Subgroup> out;
  for (const auto& t : enumerate_additive_maps(g.field(), true, count_cap))
    out.push_back(subgroup_from_map(g, t));
  return out;
}

/// Direct product of Heisenberg groups with componentwise law. Element
/// indices are mixed radix over the factor indices, first factor most
/// significant.
class ProductGroup {
 public:
  explicit ProductGroup(std::vector<HeisenbergGroup> factors, std::uint64_t order_cap = 1ull << 20)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("ProductGroup: no factors");
    order_ = 1;
    for (const auto& f : factors_) {
      if (order_ > order_cap / f.order()) throw CapExceeded("ProductGroup: order exceeds cap");
      order_ *= f.order();
    }
    strides_.resize(factors_.size());
    std::uint64_t s = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      strides_[i] = s;
      s *= factors_[i].order();
    }
  }

  const std::vector<HeisenbergGroup>& factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t identity() const { return 0; }

  std::uint64_t stride(std::size_t i) const { return strides_[i]; }

  std::uint64_t component(std::uint64_t e, std::size_t i) const {
    return (e / strides_[i]) % factors_[i].order();
  }

  std::uint64_t pack(const std::vector<std::uint64_t>& comps) const {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) e += comps[i] * strides_[i];
    return e;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      e += factors_[i].mul(component(a, i), component(b, i)) * strides_[i];
    return e;
  }

  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      e += factors_[i].inv(component(a, i)) * strides_[i];
    return e;
  }

  std::vector<std::uint64_t> generators() const {
    std::vector<std::uint64_t> gens;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (auto g : factors_[i].generators()) gens.push_back(g * strides_[i]);
    return gens;
  }

 private:
  std::vector<HeisenbergGroup> factors_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_;
};

/// All products of one subgroup per factor family. For BGG factor families
/// the result has prod p_i^{n_i(n_i-1)} members of order q_1 ... q_r.
inline std::vector<Subgroup> product_family(const ProductGroup& g,
                                            const std::vector<std::vector<Subgroup>>& factor_families,
                                            std::uint64_t count_cap = 1ull << 20) {
  const std::size_t r = factor_families.size();
  if (r != g.factors().size())
    throw std::invalid_argument("product_family: family count does not match factor count");
  std::uint64_t combos = 1;
  for (const auto& fam : factor_families) {
    if (fam.empty()) throw std::invalid_argument("product_family: empty factor family");
    if (combos > count_cap / fam.size()) throw CapExceeded("product_family: combination count exceeds cap");
    combos *= fam.size();
  }
  std::vector<Subgroup> out;
  out.reserve(combos);
  for (std::uint64_t k = 0; k < combos; ++k) {
    std::vector<std::size_t> pick(r);
    std::uint64_t t = k;
    for (std::size_t i = r; i-- > 0;) {
      pick[i] = t % factor_families[i].size();
      t /= factor_families[i].size();
    }
    std::vector<std::uint64_t> elems{0};
    for (std::size_t i = 0; i < r; ++i) {
      const auto& sub = factor_families[i][pick[i]];
      std::vector<std::uint64_t> next;
      next.reserve(elems.size() * sub.elements.size());
      for (auto base : elems)
        for (auto h : sub.elements) next.push_back(base + h * g.stride(i));
      elems = std::move(next);
    }
    out.push_back(make_subgroup(std::move(elems)));
  }
  return out;
}

}  // namespace isospec

#endif
