#include <doctest.h>

#include <set>

#include "jmg/error.hpp"
#include "jmg/partitions.hpp"
#include "oracles.hpp"

using namespace jmg;

TEST_CASE("Bell triangle oracle") {
  const std::vector<std::uint64_t> frozen{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  CHECK(oracle::bell_triangle(10) == frozen);
}

TEST_CASE("enumerate_partitions examples") {
  const auto p1 = enumerate_partitions(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].blocks == std::vector<std::vector<int>>{{1}});

  const auto p2 = enumerate_partitions(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].blocks == std::vector<std::vector<int>>{{1, 2}});
  CHECK(p2[1].blocks == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(to_string(p2[1]) == "{1} | {2}");

  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK_THROWS_AS(enumerate_partitions(kMaxPartitionDegree + 1), DomainError);
}

TEST_CASE("partition counts follow the Bell triangle") {
  const auto bells = oracle::bell_triangle(10);
  for (std::size_t d = 0; d <= 10; ++d) CHECK(enumerate_partitions(d).size() == bells[d]);
}

TEST_CASE("partitions match an independent enumeration") {
  for (int d = 1; d <= 7; ++d) {
    std::set<std::vector<std::vector<int>>> mine;
    for (const auto& p : enumerate_partitions(d)) {
      for (const auto& b : p.blocks) CHECK(std::is_sorted(b.begin(), b.end()));
      mine.insert(p.blocks);
    }
    CHECK(mine == oracle::partitions_by_insertion(d));
  }
}

TEST_CASE("lower_bound_graph sizes") {
  CHECK(lower_bound_graph(1).graph.vertex_count() == 3);
  CHECK(lower_bound_graph(2).graph.vertex_count() == 5);
  CHECK(lower_bound_graph(3).graph.vertex_count() == 9);
  CHECK_THROWS_AS(lower_bound_graph(0), DomainError);
  CHECK_THROWS_AS(lower_bound_graph(kMaxLowerBoundDim + 1), DomainError);
}

TEST_CASE("lower_bound_graph structure") {
  const auto bells = oracle::bell_triangle(8);
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto lb = lower_bound_graph(d);
    CAPTURE(d);
    CHECK(lb.bell_number == bells[d]);
    REQUIRE(lb.action.size() == enumerate_partitions(d).size() + 1);
    std::set<std::vector<Vertex>> neighborhoods;
    for (Vertex a : lb.action) {
      for (Vertex b : lb.action) CHECK(lb.graph.adjacent(a, b));
      std::vector<Vertex> nb;
      for (Vertex c : lb.control)
        if (lb.graph.adjacent(a, c)) nb.push_back(c);
      neighborhoods.insert(nb);
    }
    CHECK(neighborhoods.size() == lb.action.size());
    for (Vertex c : lb.control)
      for (Vertex e : lb.control)
        if (c != e) CHECK_FALSE(lb.graph.adjacent(c, e));
    CHECK(lb.graph.vertex_count() == lb.action.size() + lb.control.size());
  }
}
