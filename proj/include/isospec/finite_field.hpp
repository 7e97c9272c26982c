#ifndef ISOSPEC_FINITE_FIELD_HPP
#define ISOSPEC_FINITE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "isospec/errors.hpp"
#include "isospec/intmath.hpp"

namespace isospec {

/// Field elements are handled as dense indices in [0, q). The index of the
/// element with coefficient vector (c_0, ..., c_{n-1}) is sum c_j p^j, which
/// also serves as the canonical total order on elements.
using elem_t = std::uint32_t;

namespace poly {

// Polynomials over Z/p, coefficient vectors stored low degree first.

inline unsigned degree(const std::vector<std::uint32_t>& f) {
  unsigned d = 0;
  for (unsigned i = 0; i < f.size(); ++i)
    if (f[i] != 0) d = i;
  return d;
}

inline bool is_zero(const std::vector<std::uint32_t>& f) {
  for (auto c : f)
    if (c != 0) return false;
  return true;
}

/// Remainder of f modulo a monic divisor g, in place.
inline void mod_monic(std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g, std::uint64_t p) {
  const unsigned dg = degree(g);
  for (unsigned i = static_cast<unsigned>(f.size()); i-- > dg;) {
    std::uint64_t c = f[i];
    if (c == 0) continue;
    f[i] = 0;
    for (unsigned j = 0; j < dg; ++j) {
      std::uint64_t sub = (c * g[j]) % p;
      f[i - dg + j] = static_cast<std::uint32_t>((f[i - dg + j] + p - sub) % p);
    }
  }
  f.resize(dg);
}

}  // namespace poly

/// Exact arithmetic in F_{p^n}. The modulus is the lexicographically smallest
/// monic irreducible polynomial of degree n over Z/p, comparing coefficients
/// from the constant term upward, so construction is deterministic.
class Fq {
 public:
  static constexpr std::uint64_t kDefaultQCap = 1ull << 16;
  static constexpr std::uint64_t kTableLimit = 256;

  Fq(std::uint64_t p, unsigned n, std::uint64_t q_cap = kDefaultQCap) : p_(p), n_(n) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Fq: characteristic must be prime");
    if (n == 0) throw std::invalid_argument("Fq: extension degree must be positive");
    q_ = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (q_ > q_cap / p_) throw CapExceeded("Fq: p^n exceeds enumeration cap");
      q_ *= p_;
    }
    modulus_ = find_modulus();
    if (q_ <= kTableLimit) build_tables();
  }

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t size() const { return q_; }
  /// Monic degree-n modulus, length n+1, low degree first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool operator==(const Fq& other) const {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
  }

  elem_t zero() const { return 0; }
  elem_t one() const { return from_int(1); }

  std::vector<std::uint32_t> coeffs(elem_t a) const {
    std::vector<std::uint32_t> c(n_);
    std::uint64_t v = a;
    for (unsigned i = 0; i < n_; ++i) {
      c[i] = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
    return c;
  }

  elem_t from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != n_) throw std::invalid_argument("Fq: coefficient vector has wrong length");
    std::uint64_t v = 0;
    for (unsigned i = n_; i-- > 0;) {
      if (c[i] >= p_) throw std::invalid_argument("Fq: coefficient out of range");
      v = v * p_ + c[i];
    }
    return static_cast<elem_t>(v);
  }

  /// Image of an integer residue under Z -> F_p subset F_q.
  elem_t from_int(std::uint64_t r) const { return static_cast<elem_t>(r % p_); }

  elem_t add(elem_t a, elem_t b) const {
    if (add_table_.empty()) return add_slow(a, b);
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
  }

  elem_t neg(elem_t a) const {
    std::uint64_t v = a, out = 0, w = 1;
    for (unsigned i = 0; i < n_; ++i) {
      std::uint64_t c = v % p_;
      v /= p_;
      out += ((p_ - c) % p_) * w;
      w *= p_;
    }
    return static_cast<elem_t>(out);
  }

  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

  elem_t mul(elem_t a, elem_t b) const {
    if (mul_table_.empty()) return mul_slow(a, b);
    return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  }

  elem_t inv(elem_t a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
  }

  elem_t pow(elem_t a, std::uint64_t e) const {
    elem_t r = one(), base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Frobenius x -> x^p.
  elem_t frobenius(elem_t a) const { return pow(a, p_); }

 private:
  std::uint64_t p_;
  unsigned n_;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<elem_t> add_table_, mul_table_, inv_table_;

  elem_t add_slow(elem_t a, elem_t b) const {
    std::uint64_t va = a, vb = b, out = 0, w = 1;
    for (unsigned i = 0; i < n_; ++i) {
      std::uint64_t c = (va % p_ + vb % p_) % p_;
      va /= p_;
      vb /= p_;
      out += c * w;
      w *= p_;
    }
    return static_cast<elem_t>(out);
  }

  elem_t mul_slow(elem_t a, elem_t b) const {
    if (n_ == 1) return static_cast<elem_t>((static_cast<std::uint64_t>(a) * b) % p_);
    const auto ca = coeffs(a), cb = coeffs(b);
    std::vector<std::uint64_t> acc(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < n_; ++j) acc[i + j] += static_cast<std::uint64_t>(ca[i]) * cb[j];
    }
    std::vector<std::uint32_t> prod(2 * n_ - 1);
    for (unsigned i = 0; i < prod.size(); ++i) prod[i] = static_cast<std::uint32_t>(acc[i] % p_);
    poly::mod_monic(prod, modulus_, p_);
    prod.resize(n_);
    return from_coeffs(prod);
  }

  /// Irreducibility over Z/p by trial division: a monic polynomial of degree
  /// n is reducible iff it has a monic factor of degree in [1, n/2].
  bool irreducible(const std::vector<std::uint32_t>& f) const {
    const unsigned n = poly::degree(f);
    if (n == 0) return false;
    if (f[0] == 0) return n == 1;  // divisible by x
    std::vector<std::uint32_t> g;
    for (unsigned d = 1; 2 * d <= n; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p_;
      g.assign(d + 1, 0);
      g[d] = 1;
      for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t t = v;
        for (unsigned i = 0; i < d; ++i) {
          g[i] = static_cast<std::uint32_t>(t % p_);
          t /= p_;
        }
        std::vector<std::uint32_t> r = f;
        poly::mod_monic(r, g, p_);
        if (poly::is_zero(r)) return false;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> find_modulus() const {
    std::vector<std::uint32_t> f(n_ + 1, 0);
    f[n_] = 1;
    if (n_ == 1) return f;  // modulus x, prime field convention
    // Scan candidates in lexicographic order with the constant term most
    // significant, so the first irreducible hit is the canonical choice.
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n_; ++i) total *= p_;
    for (std::uint64_t v = 0; v < total; ++v) {
      std::uint64_t t = v;
      for (unsigned j = n_; j-- > 0;) {
        f[j] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      if (irreducible(f)) return f;
    }
    throw std::logic_error("Fq: no irreducible modulus found");  // unreachable
  }

  void build_tables() {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_slow(static_cast<elem_t>(a), static_cast<elem_t>(b));
        mul_table_[a * q_ + b] = mul_slow(static_cast<elem_t>(a), static_cast<elem_t>(b));
      }
    inv_table_.assign(q_, 0);
    for (std::uint64_t a = 1; a < q_; ++a)
      for (std::uint64_t b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == one()) {
          inv_table_[a] = static_cast<elem_t>(b);
          break;
        }
  }
};

/// Additive self-map of F_q given as a linearized polynomial
/// T(x) = sum_j a_j x^{p^j} with coefficients a_0 ... a_{n-1} in F_q.
struct AdditiveMap {
  std::vector<elem_t> coeffs;

  bool operator==(const AdditiveMap&) const = default;

  /// Multiplication maps x -> c x are exactly the maps with a_j = 0 for j >= 1.
  bool is_multiplication_map() const {
    for (std::size_t j = 1; j < coeffs.size(); ++j)
      if (coeffs[j] != 0) return false;
    return true;
  }
};

inline elem_t apply(const Fq& f, const AdditiveMap& t, elem_t x) {
  if (t.coeffs.size() != f.degree()) throw std::invalid_argument("AdditiveMap: wrong coefficient count");
  elem_t acc = f.zero();
  elem_t frob = x;  // x^{p^j}
  for (unsigned j = 0; j < f.degree(); ++j) {
    acc = f.add(acc, f.mul(t.coeffs[j], frob));
    frob = f.frobenius(frob);
  }
  return acc;
}

inline AdditiveMap multiplication_map(const Fq& f, elem_t c) {
  AdditiveMap t{std::vector<elem_t>(f.degree(), 0)};
  t.coeffs[0] = c;
  return t;
}

inline AdditiveMap map_sum(const Fq& f, const AdditiveMap& a, const AdditiveMap& b) {
  AdditiveMap t{std::vector<elem_t>(f.degree(), 0)};
  for (unsigned j = 0; j < f.degree(); ++j) t.coeffs[j] = f.add(a.coeffs[j], b.coeffs[j]);
  return t;
}

inline AdditiveMap map_difference(const Fq& f, const AdditiveMap& a, const AdditiveMap& b) {
  AdditiveMap t{std::vector<elem_t>(f.degree(), 0)};
  for (unsigned j = 0; j < f.degree(); ++j) t.coeffs[j] = f.sub(a.coeffs[j], b.coeffs[j]);
  return t;
}

/// All additive maps of F_q in a canonical order. With fix_a0_zero the a_0
/// coefficient is pinned to zero, leaving p^{n(n-1)} maps; otherwise all
/// p^{n^2} coefficient vectors are produced.
inline std::vector<AdditiveMap> enumerate_additive_maps(const Fq& f, bool fix_a0_zero,
                                                        std::uint64_t count_cap = 1ull << 20) {
  const unsigned n = f.degree();
  const unsigned free_coeffs = fix_a0_zero ? n - 1 : n;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < free_coeffs; ++i) {
    if (count > count_cap / f.size()) throw CapExceeded("enumerate_additive_maps: count exceeds cap");
    count *= f.size();
  }
  std::vector<AdditiveMap> out;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) {
    AdditiveMap t{std::vector<elem_t>(n, 0)};
    std::uint64_t w = v;
    for (unsigned j = fix_a0_zero ? 1u : 0u; j < n; ++j) {
      t.coeffs[j] = static_cast<elem_t>(w % f.size());
      w /= f.size();
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace isospec

#endif
