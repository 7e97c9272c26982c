#ifndef ISOSPEC_CHARPOLY_HPP
#define ISOSPEC_CHARPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "isospec/errors.hpp"
#include "isospec/intmath.hpp"

namespace isospec {

using bigint = boost::multiprecision::cpp_int;

namespace detail {

/// Characteristic polynomial over Z/p via Hessenberg reduction and the
/// standard recurrence on leading principal minors. Returns coefficients in
/// descending degree, monic, length n + 1.
inline std::vector<std::uint64_t> charpoly_mod(std::vector<std::uint64_t> h, std::size_t n, std::uint64_t p) {
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
  auto inv_mod = [&](std::uint64_t a) { return powmod_u64(a, p - 2, p); };

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && at(pivot, m - 1) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, pivot), at(i, m));
    }
    const std::uint64_t t_inv = inv_mod(at(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      if (at(i, m - 1) == 0) continue;
      const std::uint64_t u = mulmod_u64(at(i, m - 1), t_inv, p);
      for (std::size_t j = 0; j < n; ++j)
        at(i, j) = (at(i, j) + p - mulmod_u64(u, at(m, j), p)) % p;
      for (std::size_t i2 = 0; i2 < n; ++i2)
        at(i2, m) = (at(i2, m) + mulmod_u64(u, at(i2, i), p)) % p;
    }
  }

  // p_k(t) = (t - h_kk) p_{k-1}(t) - sum_i h_{i,k} (prod subdiagonals) p_{i-1}(t),
  // polynomials stored ascending, p_k has degree k.
  std::vector<std::vector<std::uint64_t>> minors(n + 1);
  minors[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = minors[k - 1];
    std::vector<std::uint64_t> cur(k + 1, 0);
    const std::uint64_t hkk = at(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - mulmod_u64(hkk, prev[d], p)) % p;
    }
    std::uint64_t subdiag = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      subdiag = mulmod_u64(subdiag, at(i + 1, i), p);
      if (subdiag == 0) break;
      const std::uint64_t coef = mulmod_u64(at(i, k - 1), subdiag, p);
      if (coef == 0) continue;
      const auto& term = minors[i];
      for (std::size_t d = 0; d < term.size(); ++d)
        cur[d] = (cur[d] + p - mulmod_u64(coef, term[d], p)) % p;
    }
    minors[k] = std::move(cur);
  }

  std::vector<std::uint64_t> out(n + 1);
  for (std::size_t d = 0; d <= n; ++d) out[d] = minors[n][n - d];
  return out;
}

/// Primes just below 2^61, generated on demand and cached. Guarded so the
/// cache stays consistent under concurrent use.
inline std::vector<std::uint64_t> charpoly_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  static std::uint64_t candidate = (1ull << 61) - 1;
  std::lock_guard<std::mutex> lock(mutex);
  while (primes.size() < count) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return std::vector<std::uint64_t>(primes.begin(), primes.begin() + count);
}

}  // namespace detail

/// Exact integer characteristic polynomial det(tI - A) of an n x n integer
/// matrix (row major), computed modulo enough word-size primes and combined
/// by CRT. Coefficients are returned in descending degree with leading 1.
inline std::vector<bigint> charpoly_exact(const std::vector<std::int64_t>& a, std::size_t n,
                                          std::size_t cap = 2048) {
  if (a.size() != n * n) throw std::invalid_argument("charpoly_exact: matrix size mismatch");
  if (n > cap) throw CapExceeded("charpoly_exact: dimension exceeds cap");
  if (n == 0) return {bigint(1)};

  std::int64_t amax = 1;
  for (auto v : a) amax = std::max<std::int64_t>(amax, v < 0 ? -v : v);
  // |c_k| <= C(n, k) (sqrt(n) amax)^k, so log2 |c| <= n + n log2(sqrt(n) amax).
  const double bits = static_cast<double>(n) * (1.0 + std::log2(std::sqrt(static_cast<double>(n)) * static_cast<double>(amax))) + 2.0;
  const std::size_t num_primes = static_cast<std::size_t>(bits / 60.0) + 1;
  const auto& primes = detail::charpoly_primes(num_primes);

  std::vector<std::vector<std::uint64_t>> residues;
  residues.reserve(num_primes);
  for (std::size_t k = 0; k < num_primes; ++k) {
    const std::uint64_t p = primes[k];
    std::vector<std::uint64_t> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      std::int64_t v = a[i] % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      m[i] = static_cast<std::uint64_t>(v);
    }
    residues.push_back(detail::charpoly_mod(std::move(m), n, p));
  }

  std::vector<bigint> out(n + 1);
  for (std::size_t d = 0; d <= n; ++d) {
    bigint value = residues[0][d];
    bigint modulus = primes[0];
    for (std::size_t k = 1; k < num_primes; ++k) {
      const std::uint64_t p = primes[k];
      const std::uint64_t cur = static_cast<std::uint64_t>(value % p);
      std::uint64_t delta = (residues[k][d] + p - cur) % p;
      const std::uint64_t m_inv = powmod_u64(static_cast<std::uint64_t>(modulus % p), p - 2, p);
      value += modulus * mulmod_u64(delta, m_inv, p);
      modulus *= p;
    }
    if (value * 2 > modulus) value -= modulus;
    out[d] = value;
  }
  return out;
}

}  // namespace isospec

#endif
