#include "jmg/hypergraph.hpp"

#include <algorithm>

#include "jmg/error.hpp"

namespace jmg {

namespace {

VertexSet normalize(VertexSet s, std::size_t n) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s)
    if (v >= n) throw DomainError("hypergraph: vertex " + std::to_string(v) + " out of range");
  return s;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<VertexSet> keep_maximal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      dominated = i != j && sets[i].size() < sets[j].size() && is_subset(sets[i], sets[j]);
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

Hypergraph Hypergraph::from_maximal(std::size_t vertex_count, std::vector<VertexSet> generators) {
  Hypergraph h;
  h.n_ = vertex_count;
  h.closed_ = true;
  for (auto& s : generators) {
    s = normalize(std::move(s), vertex_count);
    if (!s.empty()) h.edges_.push_back(std::move(s));
  }
  h.edges_ = keep_maximal(std::move(h.edges_));
  return h;
}

Hypergraph Hypergraph::explicit_edges(std::size_t vertex_count, std::vector<VertexSet> hyperedges) {
  Hypergraph h;
  h.n_ = vertex_count;
  for (auto& s : hyperedges) {
    s = normalize(std::move(s), vertex_count);
    if (!s.empty()) h.edges_.push_back(std::move(s));
  }
  std::sort(h.edges_.begin(), h.edges_.end());
  h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());
  return h;
}

bool Hypergraph::contains(VertexSet s) const {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) return false;
  if (closed_)
    return std::any_of(edges_.begin(), edges_.end(), [&](const VertexSet& e) { return is_subset(s, e); });
  return std::binary_search(edges_.begin(), edges_.end(), s);
}

std::vector<VertexSet> Hypergraph::maximal_hyperedges() const {
  return closed_ ? edges_ : keep_maximal(edges_);
}

bool Hypergraph::is_downward_closed() const {
  if (closed_) return true;
  for (const auto& e : edges_) {
    // Removing one element at a time suffices by induction on the size.
    if (e.size() < 2) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      VertexSet smaller = e;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (!std::binary_search(edges_.begin(), edges_.end(), smaller)) return false;
    }
  }
  return true;
}

Hypergraph induced_hypergraph(const Graph& g) {
  return Hypergraph::from_maximal(g.vertex_count(), maximal_cliques(g));
}

Graph two_section(const Hypergraph& h) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < h.vertex_count(); ++a)
    for (Vertex b = a + 1; b < h.vertex_count(); ++b)
      if (h.contains({a, b})) edges.emplace_back(a, b);
  return Graph(h.vertex_count(), edges);
}

bool is_graph_induced(const Hypergraph& h) {
  if (!h.is_downward_closed()) throw DomainError("is_graph_induced: hypergraph is not downward closed");
  // Every clique of the 2-section lies inside a maximal one, and h is
  // downward closed, so checking maximal cliques is enough.
  const auto cliques = maximal_cliques(two_section(h));
  return std::all_of(cliques.begin(), cliques.end(), [&](const VertexSet& c) { return h.contains(c); });
}

}  // namespace jmg
