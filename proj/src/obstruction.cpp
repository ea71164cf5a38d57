#include "jmg/obstruction.hpp"

#include <algorithm>

namespace jmg {

LinearExpr LinearExpr::constant(Rational c) {
  LinearExpr e;
  e.constant_ = std::move(c);
  return e;
}

LinearExpr LinearExpr::term(Vertex v, Rational coeff) {
  LinearExpr e;
  e.terms_[v] = std::move(coeff);
  e.normalize();
  return e;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& o) {
  constant_ += o.constant_;
  for (const auto& [v, c] : o.terms_) terms_[v] += c;
  normalize();
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& o) {
  constant_ -= o.constant_;
  for (const auto& [v, c] : o.terms_) terms_[v] -= c;
  normalize();
  return *this;
}

Rational LinearExpr::coefficient(Vertex v) const {
  const auto it = terms_.find(v);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinearExpr::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return jmg::is_zero(kv.second); });
}

std::string LinearExpr::to_string(const Graph& g) const {
  std::string out;
  auto append = [&](const Rational& c, const std::string& symbol) {
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const bool unit = magnitude == 1;
    if (symbol.empty()) out += magnitude.get_str();
    else out += (unit ? "" : magnitude.get_str() + "*") + symbol;
  };
  if (!jmg::is_zero(constant_)) append(constant_, "");
  for (const auto& [v, c] : terms_) append(c, "p_" + g.label(v));
  return out.empty() ? "0" : out;
}

std::optional<CliqueObstruction> clique_pvm_obstruction(const Graph& g) {
  const auto cliques = maximal_cliques(g);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      VertexSet only_first, only_second, shared;
      const auto& c1 = cliques[i];
      const auto& c2 = cliques[j];
      std::set_difference(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(only_first));
      std::set_difference(c2.begin(), c2.end(), c1.begin(), c1.end(), std::back_inserter(only_second));
      std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(shared));
      if (only_first.size() != 1 || only_second.size() != 1) continue;

      CliqueObstruction ob;
      ob.first_clique = c1;
      ob.second_clique = c2;
      ob.a = only_first.front();
      ob.b = only_second.front();

      // Σ_{v∈C} p_v = 1, solved for the unshared vertex.
      LinearExpr rest = LinearExpr::constant(1);
      for (Vertex v : shared) rest -= LinearExpr::term(v);
      ob.forced_a = rest;
      ob.forced_b = rest;

      auto sum_of = [&](const VertexSet& c) {
        std::string s;
        for (Vertex v : c) s += (s.empty() ? "p_" : " + p_") + g.label(v);
        return s;
      };
      auto names_of = [&](const VertexSet& c) {
        std::string s;
        for (Vertex v : c) s += (s.empty() ? "" : ", ") + g.label(v);
        return s;
      };
      const std::string pa = "p_" + g.label(ob.a);
      const std::string pb = "p_" + g.label(ob.b);
      ob.derivation.push_back("clique {" + names_of(c1) + "} is a PVM: " + sum_of(c1) + " = 1");
      ob.derivation.push_back("clique {" + names_of(c2) + "} is a PVM: " + sum_of(c2) + " = 1");
      ob.derivation.push_back(pa + " = " + ob.forced_a.to_string(g) + " = " + pb);
      ob.derivation.push_back((ob.forced_a - ob.forced_b).is_zero()
                                  ? pa + " - " + pb + " = 0, so " + pa + " and " + pb + " commute"
                                  : "no forced equality");
      if (!g.adjacent(ob.a, ob.b) && (ob.forced_a - ob.forced_b).is_zero()) {
        ob.derivation.push_back("contradiction: " + g.label(ob.a) + " and " + g.label(ob.b) +
                                " are not adjacent, so " + pa + " and " + pb + " must not commute");
        return ob;
      }
    }
  }
  return std::nullopt;
}

}  // namespace jmg
