#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jmg/graph.hpp"
#include "jmg/matrix.hpp"

namespace jmg {

/// c·1 + Σ_v a_v·p_v over the projections of a graph's vertices.
class LinearExpr {
 public:
  LinearExpr() = default;
  static LinearExpr constant(Rational c);
  static LinearExpr term(Vertex v, Rational coeff = 1);

  LinearExpr& operator+=(const LinearExpr& o);
  LinearExpr& operator-=(const LinearExpr& o);
  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;

  const Rational& constant_part() const { return constant_; }
  Rational coefficient(Vertex v) const;
  bool is_zero() const { return jmg::is_zero(constant_) && terms_.empty(); }

  std::string to_string(const Graph& g) const;

 private:
  void normalize();

  Rational constant_ = 0;
  std::map<Vertex, Rational> terms_;
};

/**
 * Two maximal cliques S ∪ {a} and S ∪ {b} cannot both be sent to PVMs:
 * their resolutions of identity give p_a = 1 − Σ_S p = p_b, so p_a and p_b
 * commute although a ≁ b.
 */
struct CliqueObstruction {
  VertexSet first_clique;
  VertexSet second_clique;
  Vertex a = 0;
  Vertex b = 0;
  LinearExpr forced_a;  ///< p_a solved from the first clique's equation
  LinearExpr forced_b;  ///< p_b solved from the second clique's equation
  std::vector<std::string> derivation;
};

std::optional<CliqueObstruction> clique_pvm_obstruction(const Graph& g);

}  // namespace jmg
