#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cyclebound/cycles.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/graph.hpp"

namespace cyclebound {

/// Absolute slack used when comparing an exact count against a bound.
inline constexpr double bound_slack = 1e-9;

inline bool is_prime(unsigned k) {
  if (k < 2) return false;
  for (unsigned d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

namespace detail {

inline void require_edges(double E) {
  if (!(E >= 0.0) || !std::isfinite(E)) throw invalid_input("edge count must be a finite non-negative number");
}

inline void require_fits(double E, long long V) {
  const double cap = 0.5 * static_cast<double>(V) * static_cast<double>(V - 1);
  if (E > cap)
    throw too_many_edges("E = " + std::to_string(E) + " exceeds V(V-1)/2 = " + std::to_string(cap));
}

}  // namespace detail

/// T <= (sqrt(2)/3) E^{3/2}.
inline double triangle_bound_naive(double E) {
  detail::require_edges(E);
  return std::sqrt(2.0) / 3.0 * std::pow(E, 1.5);
}

/// C_k <= 2^{k/2-1} E^{k/2} in general, and the same divided by k for prime k.
inline double cycle_bound_naive(double E, unsigned k, bool prime) {
  detail::require_edges(E);
  if (k < 3) throw invalid_input("cycle length must be >= 3");
  if (prime && !is_prime(k)) throw not_prime(std::to_string(k) + " is not prime");
  const double half = 0.5 * static_cast<double>(k);
  const double general = std::pow(2.0, half - 1.0) * std::pow(E, half);
  return prime ? general / static_cast<double>(k) : general;
}

/// Maximum of sum x_i^k over {sum x = 0, sum x^2 = 1} for odd k, attained at
/// x = (sqrt((n-1)/n), -1/sqrt(n(n-1)), ...):
///
///   ((n-1)^{k-1} - 1) / (n^{k/2} (n-1)^{k/2-1})
///
/// Evaluated as ((n-1)/n)^{k/2} (1 - (n-1)^{1-k}) to avoid overflow. Defined
/// for every k >= 3; for even k it is only a lower bound on the maximum.
inline double odd_extremum(long long n, unsigned k) {
  if (n < 2 || k < 3) throw invalid_input("odd_extremum needs n >= 2 and k >= 3");
  const double m = static_cast<double>(n - 1);
  return std::pow(m / static_cast<double>(n), 0.5 * k) * (1.0 - std::pow(m, 1.0 - static_cast<double>(k)));
}

/// Maximum of sum x_i^p over the same set for even p:
///
///   ((n-1)^{p-1} + 1) / (n^{p/2} (n-1)^{p/2-1})
inline double even_extremum(long long n, unsigned p) {
  if (n < 2) throw invalid_input("even_extremum needs n >= 2");
  if (p % 2 != 0) throw odd_exponent("even_extremum needs an even exponent, got " + std::to_string(p));
  if (p < 4) throw invalid_input("even_extremum needs p >= 4");
  const double m = static_cast<double>(n - 1);
  return std::pow(m / static_cast<double>(n), 0.5 * p) * (1.0 + std::pow(m, 1.0 - static_cast<double>(p)));
}

/// Closed-form maximum for either parity.
inline double extremum(long long n, unsigned p) { return p % 2 ? odd_extremum(n, p) : even_extremum(n, p); }

/// T <= (V-2)/sqrt(V(V-1)) (sqrt(2)/3) E^{3/2}; equality on K_V.
inline double triangle_bound_sharp(double E, long long V) {
  detail::require_edges(E);
  if (V < 2) throw invalid_input("triangle_bound_sharp needs V >= 2");
  detail::require_fits(E, V);
  const double v = static_cast<double>(V);
  return (v - 2.0) / std::sqrt(v * (v - 1.0)) * triangle_bound_naive(E);
}

enum class BoundForm {
  /// odd_extremum(V, p) * (2^{p/2-1}/p) * E^{p/2}.
  canonical,
  /// The constant with denominator V^{(p+1)/2} (V-1)^{(p-1)/2-1}, as printed.
  /// Smaller than the canonical one by sqrt((V-1)/V); kept for probing.
  printed,
};

/// Upper bound on the number of p-cycles for odd prime p.
inline double cycle_bound_sharp(double E, long long V, unsigned p, BoundForm form = BoundForm::canonical) {
  detail::require_edges(E);
  if (p < 3 || !is_prime(p)) throw not_odd_prime(std::to_string(p) + " is not an odd prime");
  if (V < 3) throw invalid_input("cycle_bound_sharp needs V >= 3");
  detail::require_fits(E, V);
  const double naive = cycle_bound_naive(E, p, true);
  if (form == BoundForm::canonical) return odd_extremum(V, p) * naive;
  const double v = static_cast<double>(V);
  const double pp = static_cast<double>(p);
  const double constant = (std::pow(v - 1.0, pp - 1.0) - 1.0) /
                          (std::pow(v, 0.5 * (pp + 1.0)) * std::pow(v - 1.0, 0.5 * (pp - 1.0) - 1.0));
  return constant * naive;
}

struct BoundRow {
  unsigned k = 0;
  BigInt exact_count = 0;
  /// 2^{k/2-1} E^{k/2}.
  double naive_bound = 0.0;
  /// 2^{k/2-1} E^{k/2} / k; only for prime k.
  std::optional<double> prime_bound;
  /// Extremal-spectrum bound; only for odd prime k.
  std::optional<double> sharp_bound;
  double tightness_ratio = 0.0;
  /// Which bound the ratio divides by: "sharp", or "naive" when k has no sharp bound.
  std::string ratio_basis;
};

struct BoundReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<BoundRow> rows;
};

inline BoundReport bound_report(const Graph& g, unsigned k_max, std::uint64_t budget = default_search_budget) {
  if (k_max < 3 || k_max > g.vertex_count())
    throw invalid_input("bound report needs 3 <= k_max <= vertex_count");
  BoundReport report;
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  const auto E = static_cast<double>(g.edge_count());
  const auto V = static_cast<long long>(g.vertex_count());

  for (unsigned k = 3; k <= k_max; ++k) {
    BoundRow row;
    row.k = k;
    row.exact_count = k == 3 ? count_triangles(g) : count_simple_cycles(g, k, budget);
    row.naive_bound = cycle_bound_naive(E, k, false);
    if (is_prime(k)) {
      row.prime_bound = cycle_bound_naive(E, k, true);
      row.sharp_bound = k == 3 ? triangle_bound_sharp(E, V) : cycle_bound_sharp(E, V, k);
    }
    const double basis = row.sharp_bound ? *row.sharp_bound : row.naive_bound;
    row.ratio_basis = row.sharp_bound ? "sharp" : "naive";
    row.tightness_ratio = basis > 0.0 ? row.exact_count.convert_to<double>() / basis : 0.0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cyclebound
