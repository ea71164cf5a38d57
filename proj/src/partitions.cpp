#include "jmg/partitions.hpp"

#include "jmg/error.hpp"

namespace jmg {

namespace {

Partition from_growth_string(const std::vector<int>& a) {
  Partition p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto block = static_cast<std::size_t>(a[i]);
    if (block == p.blocks.size()) p.blocks.emplace_back();
    p.blocks[block].push_back(static_cast<int>(i) + 1);
  }
  return p;
}

// a[i] ≤ 1 + max(a[0..i)), a[0] = 0.
void extend(std::vector<int>& a, std::size_t i, int max_so_far, std::vector<Partition>& out) {
  if (i == a.size()) {
    out.push_back(from_growth_string(a));
    return;
  }
  for (int b = 0; b <= max_so_far + 1; ++b) {
    a[i] = b;
    extend(a, i + 1, std::max(max_so_far, b), out);
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t d) {
  if (d > kMaxPartitionDegree)
    throw DomainError("enumerate_partitions: d = " + std::to_string(d) + " exceeds guard " +
                      std::to_string(kMaxPartitionDegree));
  std::vector<Partition> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a(d, 0);
  extend(a, 1, 0, out);
  return out;
}

std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += " | ";
    s += "{";
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p.blocks[b][i]);
    }
    s += "}";
  }
  return s;
}

LowerBoundGraph lower_bound_graph(std::size_t d) {
  if (d == 0 || d > kMaxLowerBoundDim)
    throw DomainError("lower_bound_graph: d must lie in [1, " + std::to_string(kMaxLowerBoundDim) + "]");

  LowerBoundGraph out;
  out.dimension = d;
  out.bell_number = enumerate_partitions(d).size();
  const std::size_t actions = out.bell_number + 1;
  std::size_t controls = 0;
  while ((std::size_t{1} << controls) < actions) ++controls;  // ⌈log₂(actions)⌉

  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < actions; ++i) {
    out.action.push_back(i);
    out.bitstrings.push_back(i);
    labels.push_back("a" + std::to_string(i));
    for (std::size_t j = i + 1; j < actions; ++j) edges.emplace_back(i, j);
  }
  for (std::size_t k = 0; k < controls; ++k) {
    const Vertex c = actions + k;
    out.control.push_back(c);
    labels.push_back("c" + std::to_string(k));
    for (std::size_t i = 0; i < actions; ++i)
      if ((out.bitstrings[i] >> k) & 1U) edges.emplace_back(i, c);
  }
  out.graph = Graph(actions + controls, edges, std::move(labels));
  return out;
}

}  // namespace jmg
