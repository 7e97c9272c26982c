#ifndef ISOSPEC_LIE_TYPE_HPP
#define ISOSPEC_LIE_TYPE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "isospec/charpoly.hpp"
#include "isospec/errors.hpp"
#include "isospec/finite_field.hpp"
#include "isospec/heisenberg.hpp"

namespace isospec {

/// Square matrix over F_q, dimension 3 or 4, row major. Unused trailing
/// entries stay zero so default comparison is well defined.
struct Mat {
  std::uint8_t dim = 0;
  std::array<elem_t, 16> e{};

  elem_t at(unsigned i, unsigned j) const { return e[i * dim + j]; }
  elem_t& at(unsigned i, unsigned j) { return e[i * dim + j]; }

  auto operator<=>(const Mat&) const = default;
};

enum class Ambient { SpecialLinear3, Symplectic4 };

/// One-parameter root subgroups realizing a Heisenberg configuration inside
/// SL3 (root system A2: X_a, X_b, center X_{a+b}) or Sp4 (root system B2:
/// X_a, X_{a+b}, center X_{2a+b}).
class RootPairRealization {
 public:
  static RootPairRealization special_linear3(const Fq& field) {
    return RootPairRealization(Ambient::SpecialLinear3, field);
  }

  /// The B2 commutator carries a coefficient of 2, so characteristic 2 is
  /// rejected up front.
  static RootPairRealization symplectic4(const Fq& field) {
    if (field.p() == 2)
      throw std::invalid_argument("symplectic4: characteristic 2 not supported for the B2 pair");
    return RootPairRealization(Ambient::Symplectic4, field);
  }

  const Fq& field() const { return field_; }
  Ambient ambient() const { return ambient_; }
  unsigned dim() const { return ambient_ == Ambient::SpecialLinear3 ? 3 : 4; }

  Mat identity() const {
    Mat m;
    m.dim = static_cast<std::uint8_t>(dim());
    for (unsigned i = 0; i < dim(); ++i) m.at(i, i) = field_.one();
    return m;
  }

  Mat mul(const Mat& a, const Mat& b) const {
    Mat c;
    c.dim = a.dim;
    for (unsigned i = 0; i < a.dim; ++i)
      for (unsigned j = 0; j < a.dim; ++j) {
        elem_t acc = field_.zero();
        for (unsigned k = 0; k < a.dim; ++k)
          acc = field_.add(acc, field_.mul(a.at(i, k), b.at(k, j)));
        c.at(i, j) = acc;
      }
    return c;
  }

  /// Inverse by Gauss-Jordan elimination over the field.
  Mat inverse(const Mat& a) const {
    const unsigned d = a.dim;
    std::vector<elem_t> w(d * 2 * d, 0);
    auto at = [&](unsigned i, unsigned j) -> elem_t& { return w[i * 2 * d + j]; };
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) at(i, j) = a.at(i, j);
      at(i, d + i) = field_.one();
    }
    for (unsigned col = 0; col < d; ++col) {
      unsigned pivot = col;
      while (pivot < d && at(pivot, col) == 0) ++pivot;
      if (pivot == d) throw std::domain_error("Mat: singular matrix");
      if (pivot != col)
        for (unsigned j = 0; j < 2 * d; ++j) std::swap(at(pivot, j), at(col, j));
      const elem_t s = field_.inv(at(col, col));
      for (unsigned j = 0; j < 2 * d; ++j) at(col, j) = field_.mul(s, at(col, j));
      for (unsigned i = 0; i < d; ++i) {
        if (i == col || at(i, col) == 0) continue;
        const elem_t f = at(i, col);
        for (unsigned j = 0; j < 2 * d; ++j)
          at(i, j) = field_.sub(at(i, j), field_.mul(f, at(col, j)));
      }
    }
    Mat inv;
    inv.dim = a.dim;
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) inv.at(i, j) = at(i, d + j);
    return inv;
  }

  elem_t det(const Mat& a) const {
    const unsigned d = a.dim;
    std::vector<elem_t> w(d * d);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) w[i * d + j] = a.at(i, j);
    elem_t result = field_.one();
    for (unsigned col = 0; col < d; ++col) {
      unsigned pivot = col;
      while (pivot < d && w[pivot * d + col] == 0) ++pivot;
      if (pivot == d) return field_.zero();
      if (pivot != col) {
        for (unsigned j = 0; j < d; ++j) std::swap(w[pivot * d + j], w[col * d + j]);
        result = field_.neg(result);
      }
      result = field_.mul(result, w[col * d + col]);
      const elem_t s = field_.inv(w[col * d + col]);
      for (unsigned i = col + 1; i < d; ++i) {
        const elem_t f = field_.mul(s, w[i * d + col]);
        if (f == 0) continue;
        for (unsigned j = col; j < d; ++j)
          w[i * d + j] = field_.sub(w[i * d + j], field_.mul(f, w[col * d + j]));
      }
    }
    return result;
  }

  Mat root_a(elem_t t) const {
    Mat m = identity();
    if (ambient_ == Ambient::SpecialLinear3) {
      m.at(0, 1) = t;
    } else {
      m.at(0, 1) = t;
      m.at(2, 3) = field_.neg(t);
    }
    return m;
  }

  Mat root_b(elem_t t) const {
    Mat m = identity();
    if (ambient_ == Ambient::SpecialLinear3) {
      m.at(1, 2) = t;
    } else {
      m.at(0, 2) = t;
      m.at(1, 3) = t;
    }
    return m;
  }

  Mat root_center(elem_t t) const {
    Mat m = identity();
    if (ambient_ == Ambient::SpecialLinear3)
      m.at(0, 2) = t;
    else
      m.at(0, 3) = t;
    return m;
  }

  /// The two one-parameter families, 2q matrices in total.
  std::vector<Mat> root_generators() const {
    std::vector<Mat> gens;
    gens.reserve(2 * field_.size());
    for (std::uint64_t t = 0; t < field_.size(); ++t) gens.push_back(root_a(static_cast<elem_t>(t)));
    for (std::uint64_t t = 0; t < field_.size(); ++t) gens.push_back(root_b(static_cast<elem_t>(t)));
    return gens;
  }

  /// M^T J M = J for the antidiagonal symplectic form; always true for the
  /// special linear tag.
  bool preserves_form(const Mat& m) const {
    if (ambient_ == Ambient::SpecialLinear3) return true;
    const Mat j = symplectic_form();
    Mat mt;
    mt.dim = m.dim;
    for (unsigned i = 0; i < m.dim; ++i)
      for (unsigned k = 0; k < m.dim; ++k) mt.at(i, k) = m.at(k, i);
    return mul(mul(mt, j), m) == j;
  }

  Mat symplectic_form() const {
    Mat j;
    j.dim = 4;
    j.at(0, 3) = field_.one();
    j.at(1, 2) = field_.one();
    j.at(2, 1) = field_.neg(field_.one());
    j.at(3, 0) = field_.neg(field_.one());
    return j;
  }

 private:
  RootPairRealization(Ambient ambient, Fq field) : ambient_(ambient), field_(std::move(field)) {}

  Ambient ambient_;
  Fq field_;
};

inline std::vector<Mat> sl3_root_generators(const Fq& field) {
  return RootPairRealization::special_linear3(field).root_generators();
}

inline std::vector<Mat> sp4_root_generators(const Fq& field) {
  return RootPairRealization::symplectic4(field).root_generators();
}

/// Breadth-first closure of a generator set under multiplication. Throws if
/// the closure grows past the cap before stabilizing.
inline std::vector<Mat> generate_closure(const RootPairRealization& r, const std::vector<Mat>& gens,
                                         std::uint64_t cap) {
  std::set<Mat> seen;
  std::vector<Mat> frontier;
  const Mat id = r.identity();
  seen.insert(id);
  frontier.push_back(id);
  for (const auto& g : gens)
    if (seen.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    if (seen.size() > cap) throw CapExceeded("generate_closure: cap exceeded before closure");
    std::vector<Mat> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        Mat prod = r.mul(m, g);
        if (seen.insert(prod).second) {
          next.push_back(std::move(prod));
          if (seen.size() > cap) throw CapExceeded("generate_closure: cap exceeded before closure");
        }
      }
    frontier = std::move(next);
  }
  return std::vector<Mat>(seen.begin(), seen.end());
}

/// Result of checking that a generated unipotent set is an isomorphic copy
/// of H(F_q). The map table sends the packed triple (x, y, z) to
///   x_a(x) x_b(z / kappa) x_center(y - x z),
/// where kappa is the structure constant with [x_a(s), x_b(t)] =
/// x_center(kappa s t). Rescaling the x_b argument normalizes the commutator
/// pairing, and y - x z is the central factor in the normal form
/// (x, y, z) = (x,0,0)(0,0,z)(0, y - x z, 0), so the generator images extend
/// to a homomorphism for the law (x,y,z)(x',y',z') = (x+x', y+y'+xz', z+z').
struct EmbeddingCertificate {
  std::uint64_t field_p = 0;
  unsigned field_n = 0;
  Ambient ambient = Ambient::SpecialLinear3;
  std::uint64_t generated_order = 0;
  bool isomorphism = false;
  elem_t commutator_param = 0;
  std::string failure;  // empty when the certificate verifies
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample_pair;
  std::vector<Mat> images;  // indexed by packed Heisenberg element
};

inline EmbeddingCertificate heisenberg_iso_check(const std::vector<Mat>& u, const RootPairRealization& r,
                                                 std::uint64_t exhaustive_limit = 4096) {
  const Fq& f = r.field();
  const std::uint64_t q = f.size();
  const std::uint64_t q3 = q * q * q;
  EmbeddingCertificate cert;
  cert.field_p = f.p();
  cert.field_n = f.degree();
  cert.ambient = r.ambient();
  cert.generated_order = u.size();
  if (u.size() != q3) {
    cert.failure = "order mismatch: expected q^3";
    return cert;
  }

  const Mat a1 = r.root_a(f.one());
  const Mat b1 = r.root_b(f.one());
  const Mat comm = r.mul(r.mul(a1, b1), r.mul(r.inverse(a1), r.inverse(b1)));
  std::optional<elem_t> kappa;
  for (std::uint64_t t = 0; t < q; ++t)
    if (r.root_center(static_cast<elem_t>(t)) == comm) {
      kappa = static_cast<elem_t>(t);
      break;
    }
  if (!kappa || *kappa == 0) {
    cert.failure = "root commutator does not land in the center family";
    return cert;
  }
  cert.commutator_param = *kappa;
  const elem_t kinv = f.inv(*kappa);

  const HeisenbergGroup h(f, q3 < (1ull << 20) ? (1ull << 20) : q3);
  cert.images.resize(q3);
  std::set<Mat> in_u(u.begin(), u.end());
  std::set<Mat> image_set;
  for (std::uint64_t e = 0; e < q3; ++e) {
    const auto t = h.unpack(e);
    const elem_t zk = f.mul(kinv, t.z);
    const elem_t w = f.sub(t.y, f.mul(t.x, t.z));
    Mat img = r.mul(r.mul(r.root_a(t.x), r.root_b(zk)), r.root_center(w));
    if (!in_u.count(img)) {
      cert.failure = "image leaves the generated set";
      cert.counterexample_pair = {e, e};
      cert.images[e] = img;
      return cert;
    }
    image_set.insert(img);
    cert.images[e] = std::move(img);
  }
  if (image_set.size() != q3) {
    cert.failure = "map is not injective";
    return cert;
  }

  auto check_pair = [&](std::uint64_t x, std::uint64_t y) {
    return cert.images[h.mul(x, y)] == r.mul(cert.images[x], cert.images[y]);
  };
  if (q3 <= exhaustive_limit) {
    for (std::uint64_t x = 0; x < q3; ++x)
      for (std::uint64_t y = 0; y < q3; ++y)
        if (!check_pair(x, y)) {
          cert.failure = "homomorphism failure";
          cert.counterexample_pair = {x, y};
          return cert;
        }
  } else {
    // deterministic strided sample, about 2^21 pairs
    const std::uint64_t samples = 1ull << 21;
    std::uint64_t x = 1, y = q3 / 2;
    for (std::uint64_t i = 0; i < samples; ++i) {
      x = (x * 6364136223846793005ull + 1442695040888963407ull) % q3;
      y = (y * 2862933555777941757ull + 3037000493ull) % q3;
      if (!check_pair(x, y)) {
        cert.failure = "homomorphism failure";
        cert.counterexample_pair = {x, y};
        return cert;
      }
    }
  }

  cert.isomorphism = true;
  return cert;
}

enum class LieFamily { A, B, C, D, E6, E7, E8, F4, G2 };

inline std::string to_string(LieFamily f) {
  switch (f) {
    case LieFamily::A: return "A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    case LieFamily::D: return "D";
    case LieFamily::E6: return "E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
    case LieFamily::F4: return "F4";
    case LieFamily::G2: return "G2";
  }
  return "?";
}

/// Lie exponents m_1 ... m_r of the simple root system. Rank 1 is rejected
/// throughout the toolkit.
inline std::vector<unsigned> lie_exponents(LieFamily family, unsigned rank) {
  auto fail = [&]() -> std::vector<unsigned> {
    throw std::invalid_argument("unsupported Lie type/rank: " + to_string(family) +
                                std::to_string(rank));
  };
  switch (family) {
    case LieFamily::A: {
      if (rank < 2) return fail();
      std::vector<unsigned> e(rank);
      std::iota(e.begin(), e.end(), 1u);
      return e;
    }
    case LieFamily::B:
    case LieFamily::C: {
      if (rank < 2) return fail();
      std::vector<unsigned> e(rank);
      for (unsigned i = 0; i < rank; ++i) e[i] = 2 * i + 1;
      return e;
    }
    case LieFamily::D: {
      if (rank < 3) return fail();
      std::vector<unsigned> e;
      for (unsigned i = 0; i + 1 < rank; ++i) e.push_back(2 * i + 1);
      e.push_back(rank - 1);
      std::sort(e.begin(), e.end());
      return e;
    }
    case LieFamily::E6: return rank == 6 ? std::vector<unsigned>{1, 4, 5, 7, 8, 11} : fail();
    case LieFamily::E7: return rank == 7 ? std::vector<unsigned>{1, 5, 7, 9, 11, 13, 17} : fail();
    case LieFamily::E8: return rank == 8 ? std::vector<unsigned>{1, 7, 11, 13, 17, 19, 23, 29} : fail();
    case LieFamily::F4: return rank == 4 ? std::vector<unsigned>{1, 5, 7, 11} : fail();
    case LieFamily::G2: return rank == 2 ? std::vector<unsigned>{1, 5} : fail();
  }
  return fail();
}

/// Exact order of the simply connected Chevalley group of the given type
/// over F_q: q^N prod_i (q^{m_i + 1} - 1), N the number of positive roots.
inline bigint chevalley_order(LieFamily family, unsigned rank, const bigint& q) {
  if (q < 2) throw std::invalid_argument("chevalley_order: q must be a prime power >= 2");
  const auto exps = lie_exponents(family, rank);
  unsigned n_pos = 0;
  for (auto m : exps) n_pos += m;
  bigint order = 1;
  for (unsigned i = 0; i < n_pos; ++i) order *= q;
  for (auto m : exps) {
    bigint t = 1;
    for (unsigned i = 0; i < m + 1; ++i) t *= q;
    order *= (t - 1);
  }
  return order;
}

}  // namespace isospec

#endif
