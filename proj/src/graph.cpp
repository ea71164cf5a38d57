#include "jmg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "jmg/error.hpp"

namespace jmg {

Graph::Graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)), adjacency_(vertex_count * vertex_count, false) {
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  } else if (labels_.size() != n_) {
    throw DimensionError("graph: label count does not match vertex count");
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n_ || b >= n_)
      throw DomainError("graph: edge " + std::to_string(a) + "-" + std::to_string(b) +
                        " references a vertex outside [0, " + std::to_string(n_) + ")");
    if (a == b) throw DomainError("graph: self-loop on vertex " + std::to_string(a));
    edges_.push_back(VertexPair::of(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    adjacency_[e.first * n_ + e.second] = true;
    adjacency_[e.second * n_ + e.first] = true;
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph Graph::edgeless(std::size_t n) { return Graph(n, {}); }

bool Graph::adjacent(Vertex v, Vertex w) const {
  if (v >= n_ || w >= n_) throw DomainError("graph: vertex index out of range");
  return v == w || adjacency_[v * n_ + w];
}

std::optional<std::size_t> NonEdgeSet::index_of(Vertex a, Vertex b) const {
  const auto key = VertexPair::of(a, b);
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
  if (it == pairs_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

NonEdgeSet non_edges(const Graph& g) {
  std::vector<VertexPair> pairs;
  pairs.reserve(g.pair_count() - g.edges().size());
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b = a + 1; b < g.vertex_count(); ++b)
      if (!g.adjacent(a, b)) pairs.push_back({a, b});
  return NonEdgeSet(std::move(pairs));
}

namespace {

class EdgeListParser {
 public:
  explicit EdgeListParser(std::string_view text) : text_(text) {}

  Graph parse() {
    const std::size_t n = number("vertex count");
    expect(';');
    std::vector<std::pair<Vertex, Vertex>> edges;
    skip_space();
    if (pos_ < text_.size()) {
      while (true) {
        const std::size_t a = number("vertex index");
        const std::size_t at = number_start_;
        if (a >= n) throw ParseError("vertex index out of range for " + std::to_string(n) + " vertices", at);
        expect('-');
        const std::size_t b = number("vertex index");
        if (b >= n)
          throw ParseError("vertex index out of range for " + std::to_string(n) + " vertices", number_start_);
        if (a == b) throw ParseError("self-loop " + std::to_string(a) + "-" + std::to_string(b), at);
        edges.emplace_back(a, b);
        skip_space();
        if (pos_ == text_.size()) break;
        expect(',');
      }
    }
    return Graph(n, edges);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
    if (text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'", pos_);
    ++pos_;
  }

  std::size_t number(const char* what) {
    skip_space();
    number_start_ = pos_;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ptr == begin) throw ParseError(std::string("expected ") + what, pos_);
    if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " too large", pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_start_ = 0;
};

}  // namespace

Graph parse_graph(std::string_view text) { return EdgeListParser(text).parse(); }

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ";";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

namespace {

// Bron–Kerbosch with Tomita pivoting over sorted candidate vectors.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const Graph& g) : g_(g), neighbours_(g.vertex_count()) {
    for (const auto& e : g.edges()) {
      neighbours_[e.first].push_back(e.second);
      neighbours_[e.second].push_back(e.first);
    }
    for (auto& adj : neighbours_) std::sort(adj.begin(), adj.end());
  }

  std::vector<VertexSet> run() {
    VertexSet candidates(g_.vertex_count());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) candidates[v] = v;
    if (!candidates.empty()) expand(candidates, {});
    for (auto& c : cliques_) std::sort(c.begin(), c.end());
    std::sort(cliques_.begin(), cliques_.end());
    return std::move(cliques_);
  }

 private:
  VertexSet intersect(const VertexSet& s, Vertex v) const {
    VertexSet out;
    std::set_intersection(s.begin(), s.end(), neighbours_[v].begin(), neighbours_[v].end(),
                          std::back_inserter(out));
    return out;
  }

  void expand(VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) cliques_.push_back(current_);
      return;
    }
    // Pivot maximizing |candidates ∩ N(u)| over candidates ∪ excluded.
    Vertex pivot = candidates.front();
    std::size_t best = 0;
    for (const auto* pool : {&candidates, &excluded}) {
      for (Vertex u : *pool) {
        const std::size_t k = intersect(candidates, u).size();
        if (k >= best) {
          best = k;
          pivot = u;
        }
      }
    }
    VertexSet branch;
    std::set_difference(candidates.begin(), candidates.end(), neighbours_[pivot].begin(),
                        neighbours_[pivot].end(), std::back_inserter(branch));
    for (Vertex v : branch) {
      current_.push_back(v);
      expand(intersect(candidates, v), intersect(excluded, v));
      current_.pop_back();
      candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  const Graph& g_;
  std::vector<VertexSet> neighbours_;
  VertexSet current_;
  std::vector<VertexSet> cliques_;
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) { return CliqueEnumerator(g).run(); }

}  // namespace jmg
