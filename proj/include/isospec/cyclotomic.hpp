#ifndef ISOSPEC_CYCLOTOMIC_HPP
#define ISOSPEC_CYCLOTOMIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "isospec/charpoly.hpp"
#include "isospec/intmath.hpp"

namespace isospec {

/// Least k >= 1 with g^k = 1 mod ell, by divisor descent on ell - 1.
inline std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t ell) {
  if (ell < 3 || !is_prime_u64(ell)) throw std::invalid_argument("multiplicative_order: modulus must be an odd prime");
  if (std::gcd(g, ell) != 1) throw std::invalid_argument("multiplicative_order: arguments not coprime");
  std::uint64_t k = ell - 1;
  for (const auto& [r, e] : factorize_u64(ell - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (k % r != 0) break;
      if (powmod_u64(g, k / r, ell) == 1)
        k /= r;
      else
        break;
    }
  }
  return k;
}

/// Primitive-root test via g^{(ell-1)/r} != 1 for every prime r | ell - 1.
/// Implemented independently of multiplicative_order; the two routes are
/// cross-checked in the test suite.
inline bool is_primitive_root(std::uint64_t g, std::uint64_t ell) {
  if (ell < 3 || !is_prime_u64(ell)) throw std::invalid_argument("is_primitive_root: modulus must be an odd prime");
  if (std::gcd(g, ell) != 1) throw std::invalid_argument("is_primitive_root: arguments not coprime");
  for (const auto& [r, e] : factorize_u64(ell - 1))
    if (powmod_u64(g, (ell - 1) / r, ell) == 1) return false;
  return true;
}

/// Root discriminant carried exactly as base^(num/den); the float value is
/// advisory only.
struct RootDiscriminant {
  std::uint64_t base = 0;
  std::uint64_t exp_num = 0;
  std::uint64_t exp_den = 1;

  double approx() const {
    return std::exp(static_cast<double>(exp_num) / static_cast<double>(exp_den) *
                    std::log(static_cast<double>(base)));
  }
};

/// Invariants of the maximal real subfield of the cyclotomic field of prime
/// conductor ell: degree (ell-1)/2 and discriminant ell^{(ell-3)/2}.
struct CyclotomicRealField {
  std::uint64_t conductor = 0;
  std::uint64_t degree = 0;
  bigint discriminant;
  RootDiscriminant root_discriminant;
};

inline CyclotomicRealField real_field_data(std::uint64_t ell) {
  if (ell < 5 || !is_prime_u64(ell)) throw std::invalid_argument("real_field_data: conductor must be a prime >= 5");
  CyclotomicRealField k;
  k.conductor = ell;
  k.degree = (ell - 1) / 2;
  k.discriminant = 1;
  for (std::uint64_t i = 0; i < (ell - 3) / 2; ++i) k.discriminant *= ell;
  k.root_discriminant = RootDiscriminant{ell, ell - 3, ell - 1};
  return k;
}

/// Splitting data of a rational prime p != ell in the real subfield: the
/// residue degree f is the least k with p^k = +-1 mod ell, and f m = degree.
struct DecompositionType {
  std::uint64_t rational_prime = 0;
  std::uint64_t conductor = 0;
  std::uint64_t residue_degree = 0;  // f
  std::uint64_t num_primes = 0;      // m
  bool ramified = false;

  bool inert() const { return !ramified && num_primes == 1; }
};

inline DecompositionType decomposition_in_real_subfield(std::uint64_t p, std::uint64_t ell) {
  if (!is_prime_u64(p)) throw std::invalid_argument("decomposition_in_real_subfield: p must be prime");
  if (ell < 5 || !is_prime_u64(ell))
    throw std::invalid_argument("decomposition_in_real_subfield: conductor must be a prime >= 5");
  if (p == ell) throw std::invalid_argument("decomposition_in_real_subfield: p ramifies at the conductor");
  DecompositionType d;
  d.rational_prime = p;
  d.conductor = ell;
  const std::uint64_t deg = (ell - 1) / 2;
  std::uint64_t pw = p % ell;
  std::uint64_t f = 1;
  while (pw != 1 && pw != ell - 1) {
    pw = mulmod_u64(pw, p % ell, ell);
    ++f;
  }
  d.residue_degree = f;
  d.num_primes = deg / f;
  return d;
}

struct InertConductor {
  std::uint64_t conductor = 0;
  std::uint64_t witness = 0;  // least candidate that is a primitive root mod conductor
};

/// Ascending conductors ell <= limit (prime, >= 5) for which some candidate
/// from {5, 7, 11} other than ell itself is a primitive root mod ell; a
/// candidate never witnesses its own conductor since p != ell is required
/// downstream. The candidate set comes from Heath-Brown's theorem; no
/// infinitude claim is made here, the stream just enumerates witnesses up to
/// the limit.
inline std::vector<InertConductor> inert_conductor_stream(const std::vector<std::uint64_t>& candidates,
                                                          std::uint64_t limit) {
  if (candidates.empty()) throw std::invalid_argument("inert_conductor_stream: empty candidate set");
  for (auto g : candidates)
    if (g != 5 && g != 7 && g != 11)
      throw std::invalid_argument("inert_conductor_stream: candidates must lie in {5, 7, 11}");
  std::vector<std::uint64_t> cand = candidates;
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<InertConductor> out;
  for (std::uint64_t ell : primes_up_to(limit)) {
    if (ell < 5) continue;
    for (auto g : cand) {
      if (g == ell) continue;
      if (is_primitive_root(g, ell)) {
        out.push_back(InertConductor{ell, g});
        break;
      }
    }
  }
  return out;
}

}  // namespace isospec

#endif
