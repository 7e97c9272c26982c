#ifndef ISOSPEC_BOUNDS_HPP
#define ISOSPEC_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "isospec/intmath.hpp"
#include "isospec/lie_type.hpp"

namespace isospec {

/// Root-system data entering the covolume constants: dimension, rank, Lie
/// exponents, number of positive roots, and the integer constant s of the
/// volume formula (not determined here; configurable with default 0).
struct GroupTypeData {
  LieFamily family = LieFamily::A;
  unsigned rank = 0;
  unsigned dim = 0;
  unsigned num_positive_roots = 0;
  std::vector<unsigned> exponents;
  int s = 0;
};

inline GroupTypeData lie_data(LieFamily family, unsigned rank, int s = 0) {
  GroupTypeData d;
  d.family = family;
  d.rank = rank;
  d.exponents = lie_exponents(family, rank);  // rejects rank 1 and bad ranks
  d.num_positive_roots = 0;
  for (auto m : d.exponents) d.num_positive_roots += m;
  d.dim = rank + 2 * d.num_positive_roots;
  d.s = s;
  return d;
}

/// Constants of the covolume and counting pipeline. Defaults follow the
/// documented reference configuration: c0 = c0' = 1, p0 = 13, p' = 5, C = 1,
/// eps = 0.05, torsion handling off.
struct BoundParams {
  GroupTypeData group;
  double c0 = 1.0;
  double c0_prime = 1.0;
  std::uint64_t p0 = 13;       // residue characteristic at the special place, > 11
  std::uint64_t p_prime = 5;   // the inert prime, in (3, 11]
  double class_cap_exponent = 1.0;  // C
  double epsilon = 0.05;            // in (0, 1/4)
  bool torsion_free = false;
  double torsion_index_constant = 16.0;  // c with torsion-free index <= c^d

  void validate() const {
    if (c0 <= 0 || c0_prime <= 0) throw std::invalid_argument("BoundParams: c0 constants must be positive");
    if (!is_prime_u64(p0) || p0 <= 11) throw std::invalid_argument("BoundParams: p0 must be a prime > 11");
    if (!is_prime_u64(p_prime) || p_prime <= 3 || p_prime > 11)
      throw std::invalid_argument("BoundParams: p' must be a prime in (3, 11]");
    if (p0 == p_prime) throw std::invalid_argument("BoundParams: p0 must differ from p'");
    if (!(epsilon > 0 && epsilon < 0.25)) throw std::invalid_argument("BoundParams: eps must lie in (0, 1/4)");
    if (torsion_index_constant <= 0) throw std::invalid_argument("BoundParams: torsion index constant must be positive");
  }

  double gamma() const { return 0.5 * (group.dim + group.s); }
};

/// log c1 with c1 = c0^{dim/2} c0'^{s/2} prod_i m_i!/(2 pi)^{m_i+1}
///                 * p0^{dim} (pi^2/6)^r, evaluated in log space.
inline double compute_c1_log(const BoundParams& p) {
  p.validate();
  const double pi = 3.14159265358979323846;
  double log_c1 = 0.5 * p.group.dim * std::log(p.c0) + 0.5 * p.group.s * std::log(p.c0_prime);
  for (auto m : p.group.exponents)
    log_c1 += std::lgamma(static_cast<double>(m) + 1.0) - (m + 1.0) * std::log(2.0 * pi);
  log_c1 += p.group.dim * std::log(static_cast<double>(p.p0));
  log_c1 += p.group.rank * std::log(pi * pi / 6.0);
  return log_c1;
}

inline double log_c3(const BoundParams& p) {
  return (p.group.dim - 0.5) * std::log(static_cast<double>(p.p_prime));
}

/// All derived quantities at a given base-field degree d, in log space.
struct BoundReport {
  std::uint64_t d = 0;
  double log_c1 = 0, log_c3 = 0, log_c4 = 0, log_c5 = 0;
  double gamma = 0;
  double log_x = 0;            // d log(c1 c3 d^gamma), plus d log(c_tf) when torsion handling is on
  double gamma_d_log_d = 0;    // the weaker lower bound on log_x
  double log_subgroup_count = 0;
  double log_class_cap = 0;
  double log_nonconjugate_count = 0;  // clamped at 0
  bool c4_valid = false;       // d >= 1/(2 eps)
  double log_count_paper_literal = 0;  // d^2 log c3 - log_class_cap, for comparison only
};

/// Covolume bound log x = d log(c1 c3 d^gamma). Requires d >= 2; the
/// log x >= gamma d log d side condition is reported by the caller-facing
/// report rather than asserted, since it only holds for d >= 3.
inline double covolume_log_bound(const BoundParams& p, std::uint64_t d) {
  if (d < 2) throw std::invalid_argument("covolume_log_bound: d must be at least 2");
  double v = d * (compute_c1_log(p) + log_c3(p) + p.gamma() * std::log(static_cast<double>(d)));
  if (p.torsion_free) v += d * std::log(p.torsion_index_constant);
  return v;
}

inline BoundReport evaluate_bound_report(const BoundParams& p, std::uint64_t d) {
  if (d < 2) throw std::invalid_argument("evaluate_bound_report: d must be at least 2");
  p.validate();
  BoundReport r;
  r.d = d;
  const double ld = std::log(static_cast<double>(d));
  const double lp = std::log(static_cast<double>(p.p_prime));
  r.gamma = p.gamma();
  r.log_c1 = compute_c1_log(p);
  r.log_c3 = log_c3(p);
  r.log_c4 = (0.25 - p.epsilon) * lp;
  r.log_c5 = r.log_c3 + p.class_cap_exponent * r.log_c1 + p.group.dim * lp;
  r.log_x = covolume_log_bound(p, d);
  r.gamma_d_log_d = r.gamma * d * ld;
  r.log_subgroup_count = (d / 2.0) * (d / 2.0 - 1.0) * lp;
  r.log_class_cap = d * (r.log_c5 + r.gamma * p.class_cap_exponent * ld);
  r.log_nonconjugate_count = std::max(0.0, r.log_subgroup_count - r.log_class_cap);
  r.c4_valid = static_cast<double>(d) >= 1.0 / (2.0 * p.epsilon);
  r.log_count_paper_literal = static_cast<double>(d) * d * r.log_c3 - r.log_class_cap;
  return r;
}

struct GrowthTable {
  std::vector<BoundReport> rows;
  std::vector<double> a_running;           // running extracted exponent, NaN before first positive row
  std::optional<std::uint64_t> positivity_threshold;  // least d in range with positive count
  std::optional<double> exponent_a;        // extracted exponent over the positive portion
  std::optional<double> c6;                // best constant with log count >= c6 d^2
};

/// One report per d in [d_lo, d_hi]. The extracted exponent a is the largest
/// constant such that log_nonconjugate_count >= a (log x)^2 / (log log x)^2
/// across the positive-count portion of the range.
inline GrowthTable growth_table(const BoundParams& p, std::uint64_t d_lo, std::uint64_t d_hi,
                                std::uint64_t step = 1) {
  if (d_lo < 2 || d_hi < d_lo || step == 0) throw std::invalid_argument("growth_table: bad d range");
  GrowthTable t;
  double best_a = std::numeric_limits<double>::infinity();
  double best_c6 = std::numeric_limits<double>::infinity();
  for (std::uint64_t d = d_lo; d <= d_hi; d += step) {
    BoundReport r = evaluate_bound_report(p, d);
    if (r.log_nonconjugate_count > 0) {
      if (!t.positivity_threshold) t.positivity_threshold = d;
      const double loglog_x = std::log(r.log_x);
      const double a_here = r.log_nonconjugate_count * loglog_x * loglog_x / (r.log_x * r.log_x);
      best_a = std::min(best_a, a_here);
      best_c6 = std::min(best_c6, r.log_nonconjugate_count / (static_cast<double>(d) * d));
    }
    t.a_running.push_back(t.positivity_threshold ? best_a : std::numeric_limits<double>::quiet_NaN());
    t.rows.push_back(std::move(r));
  }
  if (t.positivity_threshold) {
    t.exponent_a = best_a;
    t.c6 = best_c6;
  }
  return t;
}

/// Least d in [d_lo, d_hi] with a strictly positive nonconjugate count.
inline std::optional<std::uint64_t> positivity_threshold(const BoundParams& p, std::uint64_t d_lo,
                                                         std::uint64_t d_hi) {
  for (std::uint64_t d = std::max<std::uint64_t>(d_lo, 2); d <= d_hi; ++d)
    if (evaluate_bound_report(p, d).log_nonconjugate_count > 0) return d;
  return std::nullopt;
}

/// Exact index bound of the reduction: prod_i #G(F_{p^{n_i}}) / p^{sum n_i}.
/// The division must be exact; a nonzero remainder would indicate an order
/// formula bug and raises logic_error.
inline bigint prop41_index_bound(LieFamily family, unsigned rank, std::uint64_t p,
                                 const std::vector<unsigned>& inertia_degrees) {
  if (!is_prime_u64(p)) throw std::invalid_argument("prop41_index_bound: p must be prime");
  if (inertia_degrees.empty()) throw std::invalid_argument("prop41_index_bound: no inertia degrees");
  bigint numerator = 1;
  std::uint64_t total_degree = 0;
  for (auto n : inertia_degrees) {
    if (n == 0) throw std::invalid_argument("prop41_index_bound: inertia degrees must be positive");
    bigint q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    numerator *= chevalley_order(family, rank, q);
    total_degree += n;
  }
  bigint denom = 1;
  for (std::uint64_t i = 0; i < total_degree; ++i) denom *= p;
  if (numerator % denom != 0) throw std::logic_error("prop41_index_bound: division is not exact");
  return numerator / denom;
}

}  // namespace isospec

#endif
