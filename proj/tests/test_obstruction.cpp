#include <doctest.h>

#include "helpers.hpp"
#include "jmg/obstruction.hpp"

using namespace jmg;

TEST_CASE("LinearExpr arithmetic") {
  const Graph g = testing::fork();
  const auto px = LinearExpr::term(0);
  const auto one = LinearExpr::constant(1);
  const auto py = one - px;
  CHECK(py.coefficient(0) == -1);
  CHECK(py.constant_part() == 1);
  CHECK(py.to_string(g) == "1 - p_x");
  CHECK((py - py).is_zero());
  CHECK((px + px).coefficient(0) == 2);
  CHECK(LinearExpr::term(1, 0).is_zero());
}

TEST_CASE("fork forces p_y = p_z") {
  const auto ob = clique_pvm_obstruction(testing::fork());
  REQUIRE(ob.has_value());
  CHECK(ob->first_clique == VertexSet{0, 1});
  CHECK(ob->second_clique == VertexSet{0, 2});
  CHECK(ob->a == 1);
  CHECK(ob->b == 2);
  CHECK(ob->forced_a == ob->forced_b);
  bool found = false;
  for (const auto& line : ob->derivation) found = found || line == "p_y = 1 - p_x = p_z";
  CHECK(found);
}

TEST_CASE("obstruction needs two maximal cliques differing in one vertex each") {
  CHECK_FALSE(clique_pvm_obstruction(testing::triangle()).has_value());
  CHECK_FALSE(clique_pvm_obstruction(Graph(4, {{0, 1}, {2, 3}})).has_value());
}

TEST_CASE("obstruction for larger cliques sharing a vertex set") {
  // Cliques {0,1,2} and {0,1,3} with 2 ≁ 3.
  const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const auto ob = clique_pvm_obstruction(g);
  REQUIRE(ob.has_value());
  CHECK(ob->a == 2);
  CHECK(ob->b == 3);
  CHECK(ob->forced_a == ob->forced_b);
}

TEST_CASE("singleton cliques force every projection to the identity") {
  const auto ob = clique_pvm_obstruction(Graph::edgeless(2));
  REQUIRE(ob.has_value());
  CHECK(ob->forced_a == LinearExpr::constant(1));
}
