#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclebound/bounds.hpp"
#include "cyclebound/cycles.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/graph.hpp"
#include "cyclebound/spectral.hpp"

namespace cyclebound {

struct SweepOptions {
  unsigned jobs = 1;
  /// Permit vertex_max = 8 (2^28 edge subsets in the worst case).
  bool allow_large = false;
};

/// Outcome of an exhaustive check of one claim over a parameter range.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, long long>> params;
  std::uint64_t instances_checked = 0;
  /// Instances where the claim is vacuous (e.g. tr A^k = 0); included in instances_checked.
  std::uint64_t instances_vacuous = 0;
  std::vector<std::string> violations;
  std::vector<Graph> witnesses;
  /// Isomorphism types among the witnesses.
  std::size_t witness_types = 0;
  double wall_time_s = 0.0;

  bool verified() const noexcept { return violations.empty(); }
  const char* status() const noexcept { return verified() ? "verified" : "violated"; }
};

/// Canonical certificate of a graph up to isomorphism and isolated vertices:
/// the lexicographically smallest upper-triangle adjacency bit string over all
/// orderings of the non-isolated vertices, prefixed by their count.
inline std::vector<bool> isomorphism_certificate(const Graph& g) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.row(i) != 0) support.push_back(i);
  if (support.size() > 9) throw budget_exceeded("isomorphism certificate limited to 9 non-isolated vertices");
  std::vector<bool> best;
  std::vector<bool> bits;
  do {
    bits.clear();
    for (std::size_t a = 0; a < support.size(); ++a)
      for (std::size_t b = a + 1; b < support.size(); ++b) bits.push_back(g.adjacent(support[a], support[b]));
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(support.begin(), support.end()));
  std::vector<bool> prefix(8);
  for (std::size_t i = 0; i < 8; ++i) prefix[i] = (support.size() >> i) & 1U;
  best.insert(best.begin(), prefix.begin(), prefix.end());
  return best;
}

inline std::size_t count_isomorphism_types(const std::vector<Graph>& graphs) {
  std::set<std::vector<bool>> seen;
  for (const auto& g : graphs) seen.insert(isomorphism_certificate(g));
  return seen.size();
}

namespace detail {

inline void require_sweep_size(std::size_t vertex_max, std::size_t default_limit, const SweepOptions& opt) {
  const std::size_t limit = opt.allow_large ? 8 : default_limit;
  if (vertex_max > limit)
    throw budget_exceeded("vertex_max " + std::to_string(vertex_max) + " exceeds the sweep limit " +
                          std::to_string(limit) + (opt.allow_large ? "" : " (pass allow_large for 8)"));
}

struct Chunk {
  std::size_t edges;
  std::uint64_t first;
  std::uint64_t last;
};

/// Runs visit(partial, graph) over every graph on vertex_count vertices whose
/// edge count is in edge_counts. The index space is cut into fixed chunks;
/// per-chunk partials are merged in chunk order, so the result is identical
/// for any number of jobs.
template <class Partial, class Visit, class Merge>
Partial sweep(std::size_t vertex_count, const std::vector<std::size_t>& edge_counts, unsigned jobs,
              Visit visit, Merge merge) {
  constexpr std::uint64_t chunk_size = 4096;
  std::vector<GraphEnumeration> enums;
  std::vector<Chunk> chunks;
  for (std::size_t e : edge_counts) {
    enums.emplace_back(vertex_count, e);
    for (std::uint64_t f = 0; f < enums.back().size(); f += chunk_size)
      chunks.push_back({enums.size() - 1, f, std::min(f + chunk_size, enums.back().size())});
  }
  std::vector<Partial> partials(chunks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks.size();) {
      const auto& ch = chunks[c];
      enums[ch.edges].for_each_in(ch.first, ch.last,
                                  [&](std::uint64_t, const Graph& g) { visit(partials[c], g); });
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Partial total{};
  for (auto& p : partials) merge(total, std::move(p));
  return total;
}

struct Thm2Partial {
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::vector<Graph> witnesses;
};

inline std::string describe(const Graph& g) {
  std::string s = "V=" + std::to_string(g.vertex_count()) + " edges=[";
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    s += (i ? "," : "") + std::string("(") + std::to_string(g.edges()[i].u) + "," +
         std::to_string(g.edges()[i].v) + ")";
  return s + "]";
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Every graph with at most n(n-1)/2 edges has average triangles per edge
/// 3T/E <= n - 2, with equality only for K_n (up to isolated vertices).
/// Sweeps all labeled graphs on vertex_max vertices with 1..n(n-1)/2 edges.
inline VerificationReport verify_theorem2(long long n, std::size_t vertex_max, const SweepOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n < 3) throw invalid_input("verify_theorem2 needs n >= 3");
  if (static_cast<long long>(vertex_max) < n)
    throw invalid_input("vertex_max " + std::to_string(vertex_max) + " cannot host n(n-1)/2 = " +
                        std::to_string(n * (n - 1) / 2) + " edges");
  detail::require_sweep_size(vertex_max, 7, opt);

  const auto cap = static_cast<std::size_t>(n * (n - 1) / 2);
  std::vector<std::size_t> edge_counts(cap);
  std::iota(edge_counts.begin(), edge_counts.end(), std::size_t{1});
  const auto bound = static_cast<std::uint64_t>(n - 2);

  auto visit = [&](detail::Thm2Partial& part, const Graph& g) {
    ++part.checked;
    const std::uint64_t t = detail::direct_triangle_count(g);
    const std::uint64_t lhs = 3 * t;
    const std::uint64_t rhs = bound * g.edge_count();
    if (lhs > rhs) {
      part.violations.push_back("3T/E = " + std::to_string(lhs) + "/" + std::to_string(g.edge_count()) +
                                " > n-2 at " + detail::describe(g));
    } else if (lhs == rhs) {
      if (g.is_padded_complete(static_cast<std::size_t>(n)))
        part.witnesses.push_back(g);
      else
        part.violations.push_back("equality at non-complete graph " + detail::describe(g));
    }
  };
  auto merge = [](detail::Thm2Partial& total, detail::Thm2Partial&& p) {
    total.checked += p.checked;
    for (auto& v : p.violations) total.violations.push_back(std::move(v));
    for (auto& w : p.witnesses) total.witnesses.push_back(std::move(w));
  };
  auto part = detail::sweep<detail::Thm2Partial>(vertex_max, edge_counts, opt.jobs, visit, merge);

  VerificationReport r;
  r.claim = "theorem2";
  r.params = {{"n", n}, {"vertex_max", static_cast<long long>(vertex_max)}};
  r.instances_checked = part.checked;
  r.violations = std::move(part.violations);
  r.witnesses = std::move(part.witnesses);
  r.witness_types = count_isomorphism_types(r.witnesses);
  r.wall_time_s = detail::seconds_since(t0);
  return r;
}

struct MaxTrianglesResult {
  std::size_t edge_count = 0;
  std::size_t vertex_max = 0;
  std::uint64_t max_triangles = 0;
  std::uint64_t instances_checked = 0;
  /// Labeled graphs on vertex_max vertices attaining the maximum.
  std::uint64_t labeled_witness_count = 0;
  /// One representative per isomorphism type, in enumeration order.
  std::vector<Graph> witnesses;
};

/// Exact maximum triangle count over all graphs with E edges on at most
/// vertex_max vertices.
inline MaxTrianglesResult max_triangles_for_edges(std::size_t E, std::size_t vertex_max,
                                                  const SweepOptions& opt = {}) {
  if (E == 0) throw invalid_input("max_triangles_for_edges needs E >= 1");
  if (E > vertex_max * (vertex_max - 1) / 2)
    throw too_many_edges(std::to_string(E) + " edges do not fit on " + std::to_string(vertex_max) + " vertices");
  detail::require_sweep_size(vertex_max, 7, opt);

  struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t best = 0;
    std::vector<Graph> witnesses;
  };
  auto visit = [](Partial& part, const Graph& g) {
    ++part.checked;
    const std::uint64_t t = detail::direct_triangle_count(g);
    if (t > part.best || part.witnesses.empty()) {
      part.best = t;
      part.witnesses.clear();
    }
    if (t == part.best) part.witnesses.push_back(g);
  };
  auto merge = [](Partial& total, Partial&& p) {
    total.checked += p.checked;
    if (p.witnesses.empty()) return;
    if (total.witnesses.empty() || p.best > total.best) {
      total.best = p.best;
      total.witnesses = std::move(p.witnesses);
    } else if (p.best == total.best) {
      for (auto& w : p.witnesses) total.witnesses.push_back(std::move(w));
    }
  };
  auto part = detail::sweep<Partial>(vertex_max, {E}, opt.jobs, visit, merge);

  MaxTrianglesResult r;
  r.edge_count = E;
  r.vertex_max = vertex_max;
  r.max_triangles = part.best;
  r.instances_checked = part.checked;
  r.labeled_witness_count = part.witnesses.size();
  std::set<std::vector<bool>> seen;
  for (auto& w : part.witnesses)
    if (seen.insert(isomorphism_certificate(w)).second) r.witnesses.push_back(std::move(w));
  return r;
}

/// tr(A^k)/(2k) <= #closed-walk classes <= tr(A^k)/2 on every graph with
/// vertex_max vertices, k = 1..k_max. Instances with tr(A^k) = 0 are vacuous.
inline VerificationReport verify_eq5(std::size_t vertex_max, unsigned k_max, const SweepOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (vertex_max == 0 || vertex_max > 6) throw invalid_input("verify_eq5 needs 1 <= vertex_max <= 6");
  if (k_max == 0 || k_max > 6) throw invalid_input("verify_eq5 needs 1 <= k_max <= 6");

  struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t vacuous = 0;
    std::vector<std::string> violations;
  };
  auto visit = [&](Partial& part, const Graph& g) {
    for (unsigned k = 1; k <= k_max; ++k) {
      ++part.checked;
      const BigInt tr = trace_power(g, k);
      if (tr == 0) {
        ++part.vacuous;
        continue;
      }
      const BigInt classes = closed_walk_classes(g, k);
      if (tr > BigInt(2 * k) * classes || BigInt(2) * classes > tr)
        part.violations.push_back("k=" + std::to_string(k) + " tr=" + tr.str() + " classes=" + classes.str() +
                                  " at " + detail::describe(g));
    }
  };
  auto merge = [](Partial& total, Partial&& p) {
    total.checked += p.checked;
    total.vacuous += p.vacuous;
    for (auto& v : p.violations) total.violations.push_back(std::move(v));
  };
  std::vector<std::size_t> edge_counts(vertex_max * (vertex_max - 1) / 2 + 1);
  std::iota(edge_counts.begin(), edge_counts.end(), std::size_t{0});
  auto part = detail::sweep<Partial>(vertex_max, edge_counts, opt.jobs, visit, merge);

  VerificationReport r;
  r.claim = "eq5";
  r.params = {{"vertex_max", static_cast<long long>(vertex_max)}, {"k_max", k_max}};
  r.instances_checked = part.checked;
  r.instances_vacuous = part.vacuous;
  r.violations = std::move(part.violations);
  r.wall_time_s = detail::seconds_since(t0);
  return r;
}

/// Exact p-cycle count of K_n against the sharp bound at E = n(n-1)/2.
struct Thm4EqualityReport {
  long long n = 0;
  unsigned p = 0;
  BigInt exact = 0;
  double bound = 0.0;
  double bound_printed = 0.0;
  bool equal = false;
  /// tr(A^p) - 2p C_p on K_n.
  BigInt gap = 0;
};

inline Thm4EqualityReport verify_thm4_equality(long long n, unsigned p, const SweepOptions& opt = {},
                                               std::uint64_t budget = default_search_budget) {
  if (p < 3 || !is_prime(p)) throw not_odd_prime(std::to_string(p) + " is not an odd prime");
  if (n < 3 || static_cast<long long>(p) > n) throw invalid_input("verify_thm4_equality needs 3 <= p <= n");
  if (n > (opt.allow_large ? 12 : 9)) throw budget_exceeded("verify_thm4_equality limited to n <= 9");
  const Graph kn = Graph::complete(static_cast<std::size_t>(n));
  const double E = static_cast<double>(kn.edge_count());
  Thm4EqualityReport r;
  r.n = n;
  r.p = p;
  r.exact = count_simple_cycles(kn, p, budget);
  r.bound = cycle_bound_sharp(E, n, p);
  r.bound_printed = cycle_bound_sharp(E, n, p, BoundForm::printed);
  const double exact = r.exact.convert_to<double>();
  r.equal = std::abs(exact - r.bound) <= bound_slack * std::max(1.0, r.bound);
  r.gap = trace_power(kn, p) - BigInt(2 * p) * r.exact;
  return r;
}

// ---------------------------------------------------------------------------
// Discrepancy probes: each compares a stated identity or bound against
// independently computed ground truth and records what it finds.

struct DiscrepancyRecord {
  std::string probe;
  std::string claim;
  std::vector<std::pair<std::string, long long>> params;
  /// Named quantities, exact ones as decimal strings.
  std::vector<std::pair<std::string, std::string>> exact_values;
  std::vector<std::pair<std::string, double>> real_values;
  bool discrepancy = false;
  std::string detail;
};

/// tr(A^p) = 2p C_p(G)?
inline DiscrepancyRecord probe_eq4(const Graph& g, unsigned p, std::uint64_t budget = default_search_budget) {
  DiscrepancyRecord d;
  d.probe = "eq4";
  d.claim = "tr(A^p) = 2p*C_p";
  d.params = {{"vertex_count", static_cast<long long>(g.vertex_count())},
              {"edge_count", static_cast<long long>(g.edge_count())},
              {"p", p}};
  const BigInt tr = trace_power(g, p);
  const BigInt cycles = count_simple_cycles(g, p, budget);
  const BigInt rhs = BigInt(2 * p) * cycles;
  const BigInt gap = tr - rhs;
  d.exact_values = {{"trace", tr.str()}, {"simple_cycles", cycles.str()}, {"two_p_cycles", rhs.str()}, {"gap", gap.str()}};
  d.discrepancy = gap != 0;
  d.detail = d.discrepancy ? "closed walks that are not simple cycles contribute " + gap.str() + " to the trace"
                           : "identity holds on this instance";
  return d;
}

/// The printed and canonical p-cycle bounds at K_V against its exact count.
inline DiscrepancyRecord probe_thm4(long long V, unsigned p, std::uint64_t budget = default_search_budget) {
  SweepOptions opt;
  opt.allow_large = true;
  const auto r = verify_thm4_equality(V, p, opt, budget);
  DiscrepancyRecord d;
  d.probe = "thm4";
  d.claim = "C_p(G) <= bound, with equality iff G = K_V";
  d.params = {{"V", V}, {"E", V * (V - 1) / 2}, {"p", p}};
  const double exact = r.exact.convert_to<double>();
  const bool printed_violated = exact > r.bound_printed + bound_slack;
  const bool equality_fails = !r.equal;
  d.exact_values = {{"exact", r.exact.str()}, {"gap", r.gap.str()}};
  d.real_values = {{"canonical_bound", r.bound}, {"printed_bound", r.bound_printed}};
  d.discrepancy = printed_violated || equality_fails;
  if (printed_violated) d.detail = "printed constant gives a bound below the exact count of K_V";
  if (equality_fails)
    d.detail += std::string(d.detail.empty() ? "" : "; ") + "canonical bound is not attained by K_V";
  if (!d.discrepancy) d.detail = "canonical bound attained by K_V and printed bound not violated";
  return d;
}

}  // namespace cyclebound
