#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclebound/errors.hpp"

namespace cyclebound {

using vertex_t = std::uint32_t;

/// Unordered vertex pair, stored with first < second once inside a Graph.
struct edge {
  vertex_t u = 0;
  vertex_t v = 0;

  friend bool operator==(const edge&, const edge&) = default;
  friend auto operator<=>(const edge&, const edge&) = default;
};

/// Simple, loopless, undirected graph on at most 64 vertices.
///
/// The adjacency matrix is held densely as one 64-bit row mask per vertex,
/// alongside the sorted edge list. Instances are immutable once built.
class Graph {
 public:
  static constexpr std::size_t max_vertices = 64;

  Graph() = default;

  /// Builds a graph from vertex pairs. Repeated pairs (in either orientation)
  /// are merged into a single edge. Without an explicit vertex count the
  /// graph has 1 + the largest index mentioned.
  static Graph from_edge_list(std::span<const edge> pairs,
                              std::optional<std::size_t> vertex_count = std::nullopt) {
    std::size_t n = 0;
    if (vertex_count) {
      n = *vertex_count;
      if (n == 0) throw invalid_input("vertex_count must be positive");
    } else {
      for (const auto& e : pairs) n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
      if (n == 0) throw invalid_input("empty edge list needs an explicit vertex_count");
    }
    if (n > max_vertices)
      throw index_out_of_range("graphs are limited to " + std::to_string(max_vertices) +
                               " vertices, got " + std::to_string(n));
    Graph g(n);
    for (const auto& e : pairs) {
      if (e.u == e.v) throw loop_edge("loop edge at vertex " + std::to_string(e.u));
      if (e.u >= n || e.v >= n)
        throw index_out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") outside vertex range [0," + std::to_string(n) + ")");
      g.rows_[e.u] |= bit(e.v);
      g.rows_[e.v] |= bit(e.u);
    }
    g.rebuild_edges();
    return g;
  }

  /// K_n.
  static Graph complete(std::size_t n) {
    if (n == 0) throw invalid_input("complete graph needs n >= 1");
    if (n > max_vertices) throw index_out_of_range("complete graph too large");
    Graph g(n);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t i = 0; i < n; ++i) g.rows_[i] = all & ~bit(i);
    g.rebuild_edges();
    return g;
  }

  /// Path v0 - v1 - ... - v_{n-1}.
  static Graph path(std::size_t n) {
    std::vector<edge> es;
    for (std::size_t i = 0; i + 1 < n; ++i)
      es.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1)});
    return from_edge_list(es, n);
  }

  /// Cycle C_n, n >= 3.
  static Graph cycle(std::size_t n) {
    if (n < 3) throw invalid_input("cycle graph needs n >= 3");
    std::vector<edge> es;
    for (std::size_t i = 0; i < n; ++i)
      es.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>((i + 1) % n)});
    return from_edge_list(es, n);
  }

  /// Builds directly from symmetric row masks; used by enumeration.
  static Graph from_rows(std::vector<std::uint64_t> rows) {
    Graph g(rows.size());
    g.rows_ = std::move(rows);
    for (std::size_t i = 0; i < g.rows_.size(); ++i) {
      if (g.rows_[i] & bit(i)) throw loop_edge("loop edge at vertex " + std::to_string(i));
      for (std::size_t j = 0; j < g.rows_.size(); ++j)
        if (((g.rows_[i] >> j) & 1U) != ((g.rows_[j] >> i) & 1U))
          throw invalid_input("adjacency rows are not symmetric");
    }
    g.rebuild_edges();
    return g;
  }

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<edge>& edges() const noexcept { return edges_; }
  std::uint64_t row(std::size_t i) const { return rows_.at(i); }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

  bool adjacent(std::size_t i, std::size_t j) const { return (rows_.at(i) >> j) & 1U; }
  std::size_t degree(std::size_t i) const { return static_cast<std::size_t>(std::popcount(rows_.at(i))); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < vertex_count(); ++i) d = std::max(d, degree(i));
    return d;
  }

  /// Number of vertices with at least one incident edge.
  std::size_t non_isolated_count() const {
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(),
                                                  [](std::uint64_t r) { return r != 0; }));
  }

  /// True when the non-isolated vertices induce a complete graph on exactly n vertices.
  bool is_padded_complete(std::size_t n) const {
    std::uint64_t support = 0;
    for (std::size_t i = 0; i < vertex_count(); ++i)
      if (rows_[i] != 0) support |= bit(i);
    if (static_cast<std::size_t>(std::popcount(support)) != n) return false;
    for (std::size_t i = 0; i < vertex_count(); ++i)
      if (rows_[i] != 0 && rows_[i] != (support & ~bit(i))) return false;
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::size_t n) : rows_(n, 0) {}

  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  void rebuild_edges() {
    edges_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::uint64_t r = rows_[i] >> i; r != 0; r &= r - 1) {
        const auto off = static_cast<std::size_t>(std::countr_zero(r));
        if (off != 0) edges_.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(i + off)});
      }
  }

  std::vector<std::uint64_t> rows_;
  std::vector<edge> edges_;
};

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # comment
//   p <vertex_count>        (optional, must precede edges)
//   <u> <v>                 (0-based)

inline Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<edge> pairs;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw parse_error("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    if (line[first] == 'p') {
      std::string tag;
      long long count = 0;
      if (!(ls >> tag >> count) || tag != "p" || count <= 0) fail("malformed 'p <vertex_count>' line");
      if (declared || !pairs.empty()) fail("'p' line must appear once, before any edge");
      declared = static_cast<std::size_t>(count);
      continue;
    }
    long long u = 0, v = 0;
    if (!(ls >> u >> v)) fail("expected '<u> <v>'");
    std::string rest;
    if (ls >> rest) fail("trailing tokens after edge");
    if (u < 0 || v < 0) fail("negative vertex index");
    if (u >= static_cast<long long>(Graph::max_vertices) || v >= static_cast<long long>(Graph::max_vertices))
      throw index_out_of_range("line " + std::to_string(lineno) + ": vertex index too large");
    pairs.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
  }
  if (!declared && pairs.empty()) throw parse_error("empty edge list without a 'p' line");
  return Graph::from_edge_list(pairs, declared);
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

// ---------------------------------------------------------------------------
// Enumeration of labeled graphs as edge subsets of K_n.

/// Binomial coefficient; throws when the result does not fit in 63 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw invalid_input("binomial coefficient overflows 63 bits");
  }
  return static_cast<std::uint64_t>(r);
}

/// All labeled graphs on exactly `vertex_count` vertices with exactly
/// `edge_count` edges, in lexicographic order of their edge-slot subsets.
/// Slot order is (0,1),(0,2),...,(0,n-1),(1,2),... .
///
/// The index space [0, size()) can be split across workers with
/// for_each_in(), which unranks the first subset of each range.
class GraphEnumeration {
 public:
  GraphEnumeration(std::size_t vertex_count, std::size_t edge_count)
      : n_(vertex_count), k_(edge_count) {
    if (vertex_count == 0) throw invalid_input("enumeration needs at least one vertex");
    if (vertex_count > Graph::max_vertices) throw index_out_of_range("enumeration vertex count too large");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        slots_.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(j)});
    if (k_ > slots_.size())
      throw edge_count_too_large("edge_count " + std::to_string(k_) + " exceeds " +
                                 std::to_string(slots_.size()) + " available vertex pairs");
    size_ = binomial(slots_.size(), k_);
  }

  std::uint64_t size() const noexcept { return size_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return k_; }

  /// Calls fn(index, graph) for each index in [first, last).
  template <class Fn>
  void for_each_in(std::uint64_t first, std::uint64_t last, Fn&& fn) const {
    last = std::min(last, size_);
    if (first >= last) return;
    auto combo = unrank(first);
    for (std::uint64_t idx = first; idx < last; ++idx) {
      fn(idx, build(combo));
      advance(combo);
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each_in(0, size_, [&](std::uint64_t, const Graph& g) { fn(g); });
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Graph& operator*() const { return current_; }
    const Graph* operator->() const { return &current_; }
    iterator& operator++() {
      if (++index_ < owner_->size_) {
        owner_->advance(combo_);
        current_ = owner_->build(combo_);
      }
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    friend class GraphEnumeration;
    iterator(const GraphEnumeration* owner, std::uint64_t index) : owner_(owner), index_(index) {
      if (index_ < owner_->size_) {
        combo_ = owner_->unrank(index_);
        current_ = owner_->build(combo_);
      }
    }
    const GraphEnumeration* owner_ = nullptr;
    std::uint64_t index_ = 0;
    std::vector<std::size_t> combo_;
    Graph current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

 private:
  std::vector<std::size_t> unrank(std::uint64_t index) const {
    std::vector<std::size_t> combo;
    combo.reserve(k_);
    const std::size_t m = slots_.size();
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < k_; ++pos) {
      for (;; ++next) {
        const std::uint64_t with = binomial(m - next - 1, k_ - pos - 1);
        if (index < with) break;
        index -= with;
      }
      combo.push_back(next++);
    }
    return combo;
  }

  void advance(std::vector<std::size_t>& combo) const {
    const std::size_t m = slots_.size();
    std::size_t i = k_;
    while (i > 0 && combo[i - 1] == m - k_ + i - 1) --i;
    if (i == 0) return;
    ++combo[i - 1];
    for (std::size_t j = i; j < k_; ++j) combo[j] = combo[j - 1] + 1;
  }

  Graph build(const std::vector<std::size_t>& combo) const {
    std::vector<std::uint64_t> rows(n_, 0);
    for (auto s : combo) {
      rows[slots_[s].u] |= std::uint64_t{1} << slots_[s].v;
      rows[slots_[s].v] |= std::uint64_t{1} << slots_[s].u;
    }
    return Graph::from_rows(std::move(rows));
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<edge> slots_;
  std::uint64_t size_ = 0;
};

inline GraphEnumeration enumerate_graphs(std::size_t vertex_max, std::size_t edge_count) {
  return GraphEnumeration(vertex_max, edge_count);
}

}  // namespace cyclebound
