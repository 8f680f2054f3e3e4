#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclebound/errors.hpp"
#include "cyclebound/graph.hpp"
#include "cyclebound/spectral.hpp"

namespace cyclebound {

/// Node-expansion budget for the backtracking searches.
inline constexpr std::uint64_t default_search_budget = 200'000'000;

struct CycleCounts {
  std::map<unsigned, BigInt> by_length;
  BigInt triangle_count = 0;
};

namespace detail {

inline std::uint64_t direct_triangle_count(const Graph& g) {
  std::uint64_t t = 0;
  for (const auto& e : g.edges()) {
    // Third vertex w > v keeps each triangle counted once.
    const std::uint64_t above = e.v + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (e.v + 1)) - 1);
    t += static_cast<std::uint64_t>(std::popcount(g.row(e.u) & g.row(e.v) & above));
  }
  return t;
}

}  // namespace detail

/// T(G), computed as tr(A^3)/6 and cross-checked against enumeration of
/// adjacent vertex triples.
inline BigInt count_triangles(const Graph& g) {
  const BigInt tr3 = trace_power(g, 3);
  const BigInt direct = detail::direct_triangle_count(g);
  if (tr3 % 6 != 0 || tr3 / 6 != direct)
    throw internal_inconsistency("tr(A^3)/6 = " + BigInt(tr3 / 6).str() + " but triple enumeration found " +
                                 direct.str());
  return direct;
}

/// Number of simple k-cycles, each undirected unrooted cycle counted once.
///
/// Backtracking from each root s over vertices greater than s; a closed path
/// s, v1, ..., v_{k-1} is kept only when v1 < v_{k-1}, which fixes the
/// orientation.
inline BigInt count_simple_cycles(const Graph& g, unsigned k,
                                  std::uint64_t budget = default_search_budget) {
  const std::size_t n = g.vertex_count();
  if (k < 3 || k > n)
    throw invalid_input("cycle length must satisfy 3 <= k <= vertex_count, got k=" + std::to_string(k));

  std::uint64_t expansions = 0;
  std::uint64_t count = 0;
  std::vector<std::size_t> stack(k);

  // Depth-first over simple paths rooted at `root`, visiting only vertices > root.
  auto extend = [&](auto&& self, std::size_t root, std::size_t depth, std::uint64_t used) -> void {
    if (++expansions > budget)
      throw budget_exceeded("simple-cycle search exceeded budget of " + std::to_string(budget) + " expansions");
    const std::size_t last = stack[depth - 1];
    if (depth == k) {
      if (g.adjacent(last, root) && stack[1] < last) ++count;
      return;
    }
    const std::uint64_t above_root = root + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (root + 1)) - 1);
    for (std::uint64_t cand = g.row(last) & above_root & ~used; cand != 0; cand &= cand - 1) {
      const auto next = static_cast<std::size_t>(std::countr_zero(cand));
      stack[depth] = next;
      self(self, root, depth + 1, used | (std::uint64_t{1} << next));
    }
  };

  for (std::size_t root = 0; root < n; ++root) {
    stack[0] = root;
    extend(extend, root, 1, std::uint64_t{1} << root);
  }
  return count;
}

/// Triangle count plus simple-cycle counts for lengths 3..k_max.
inline CycleCounts count_cycles(const Graph& g, unsigned k_max, std::uint64_t budget = default_search_budget) {
  CycleCounts c;
  c.triangle_count = count_triangles(g);
  for (unsigned k = 3; k <= k_max; ++k) c.by_length[k] = k == 3 ? c.triangle_count : count_simple_cycles(g, k, budget);
  return c;
}

/// tr(A^p) - 2p * C_p(G). Zero means the walk/cycle identity holds on g;
/// anything else measures how many closed walks are not simple cycles.
inline BigInt walk_cycle_gap(const Graph& g, unsigned p, std::uint64_t budget = default_search_budget) {
  return trace_power(g, p) - BigInt(2 * p) * count_simple_cycles(g, p, budget);
}

struct WalkClassLimits {
  std::size_t max_vertices = 6;
  unsigned max_length = 8;
  std::uint64_t budget = default_search_budget;
};

/// Number of classes of closed k-walks under rotation of the starting point
/// and reversal of orientation.
///
/// Every rooted oriented walk is enumerated; a walk is counted when it is the
/// lexicographically smallest of its 2k rotations and reflections, so each
/// class contributes exactly one representative.
inline BigInt closed_walk_classes(const Graph& g, unsigned k, const WalkClassLimits& limits = {}) {
  if (k == 0) throw invalid_input("walk length must be >= 1");
  if (g.vertex_count() > limits.max_vertices)
    throw invalid_input("closed-walk classes limited to " + std::to_string(limits.max_vertices) + " vertices");
  if (k > limits.max_length)
    throw invalid_input("closed-walk classes limited to length " + std::to_string(limits.max_length));

  std::vector<std::size_t> walk(k);
  std::uint64_t expansions = 0;
  std::uint64_t classes = 0;

  auto is_canonical = [&]() {
    // Compare walk against every rotation, in both directions.
    for (unsigned dir = 0; dir < 2; ++dir)
      for (unsigned r = 0; r < k; ++r) {
        if (dir == 0 && r == 0) continue;
        for (unsigned i = 0; i < k; ++i) {
          const std::size_t other = dir == 0 ? walk[(r + i) % k] : walk[(r + k - i) % k];
          if (other < walk[i]) return false;
          if (other > walk[i]) break;
        }
      }
    return true;
  };

  auto extend = [&](auto&& self, unsigned depth) -> void {
    if (++expansions > limits.budget)
      throw budget_exceeded("closed-walk enumeration exceeded budget of " + std::to_string(limits.budget));
    if (depth == k) {
      if (g.adjacent(walk[k - 1], walk[0]) && is_canonical()) ++classes;
      return;
    }
    for (std::uint64_t cand = g.row(walk[depth - 1]); cand != 0; cand &= cand - 1) {
      const auto next = static_cast<std::size_t>(std::countr_zero(cand));
      // A canonical walk starts at its smallest vertex.
      if (next < walk[0]) continue;
      walk[depth] = next;
      self(self, depth + 1);
    }
  };

  if (k == 1) return 0;
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    walk[0] = start;
    extend(extend, 1);
  }
  return classes;
}

}  // namespace cyclebound
