#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jmg {

using Vertex = std::size_t;

/// Unordered pair of distinct vertices, stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  static VertexPair of(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/**
 * Finite simple graph. Vertex identity is the index in [0, vertex_count);
 * labels are cosmetic. Self-loops are never stored: adjacent(v, v) is true
 * by convention.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError on an out-of-range index or a self-loop. Duplicate
  /// and reversed edges are merged.
  Graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
        std::vector<std::string> labels = {});

  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  bool adjacent(Vertex v, Vertex w) const;

  /// |G|(|G|−1)/2
  std::size_t pair_count() const noexcept { return n_ * (n_ == 0 ? 0 : n_ - 1) / 2; }

  /// Same vertex count and edge set; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::string> labels_;
  std::vector<bool> adjacency_;
};

/// Distinct unordered pairs {v, w} with v ≁ w, in lexicographic order.
class NonEdgeSet {
 public:
  NonEdgeSet() = default;
  explicit NonEdgeSet(std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) {}

  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Position of {a, b} in the ordered list, if it is a non-edge.
  std::optional<std::size_t> index_of(Vertex a, Vertex b) const;

 private:
  std::vector<VertexPair> pairs_;
};

NonEdgeSet non_edges(const Graph& g);

/// Parses `<vertex_count>; <a>-<b>, <a>-<b>, ...`. Whitespace is
/// insignificant and the edge list may be empty. Throws ParseError carrying
/// the byte offset of the offending token.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph on normalized graphs, e.g. "3; 0-1, 0-2".
std::string serialize_graph(const Graph& g);

using VertexSet = std::vector<Vertex>;

/// All inclusion-maximal cliques, each sorted, listed in lexicographic
/// order. Isolated vertices appear as singletons.
std::vector<VertexSet> maximal_cliques(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& vertices);

}  // namespace jmg
