#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jmg/graph.hpp"

namespace jmg {

/// Set partition of {1, …, d}: blocks sorted internally and by least element.
struct Partition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

inline constexpr std::size_t kMaxPartitionDegree = 10;
inline constexpr std::size_t kMaxLowerBoundDim = 8;

/// Every partition of {1, …, d}, in lexicographic order of restricted
/// growth strings. d = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(std::size_t d);

std::string to_string(const Partition& p);

/// A graph with no PVM realization in dimension d: B_d + 1 action vertices
/// forming a clique, plus ⌈log₂(B_d + 1)⌉ control vertices.
struct LowerBoundGraph {
  Graph graph;
  std::size_t dimension = 0;
  std::size_t bell_number = 0;
  std::vector<Vertex> action;
  std::vector<Vertex> control;
  /// bitstrings[i] is the code of action[i]; bit k set ⟺ edge to control[k].
  std::vector<std::size_t> bitstrings;
};

/// Action vertex i carries bitstring i (binary counting from 0); control
/// vertices share no edges. Valid for 1 ≤ d ≤ 8.
LowerBoundGraph lower_bound_graph(std::size_t d);

}  // namespace jmg
