#pragma once

#include <cstddef>
#include <vector>

#include "jmg/graph.hpp"

namespace jmg {

/**
 * Hypergraph over vertices [0, vertex_count).
 *
 * With `downward_closed` set, `hyperedges` are generators and the family is
 * every nonempty subset of some generator; the generators are reduced to the
 * inclusion-maximal ones on construction. Without the flag the list is taken
 * literally. The empty set is never a hyperedge.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  static Hypergraph from_maximal(std::size_t vertex_count, std::vector<VertexSet> generators);
  static Hypergraph explicit_edges(std::size_t vertex_count, std::vector<VertexSet> hyperedges);

  std::size_t vertex_count() const noexcept { return n_; }
  bool downward_closed() const noexcept { return closed_; }
  const std::vector<VertexSet>& hyperedges() const noexcept { return edges_; }

  bool contains(VertexSet s) const;

  /// Inclusion-maximal hyperedges.
  std::vector<VertexSet> maximal_hyperedges() const;

  /// True when the stored family is downward closed (always for closed form).
  bool is_downward_closed() const;

 private:
  std::size_t n_ = 0;
  bool closed_ = false;
  std::vector<VertexSet> edges_;
};

/// Hyperedges are the nonempty cliques of g.
Hypergraph induced_hypergraph(const Graph& g);

/// True iff every vertex set whose pairs are all 2-element hyperedges is a
/// hyperedge. Throws DomainError if h is not downward closed.
bool is_graph_induced(const Hypergraph& h);

/// The graph formed by the 2-element hyperedges of h.
Graph two_section(const Hypergraph& h);

}  // namespace jmg
