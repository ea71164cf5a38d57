#pragma once

#include <array>
#include <string>
#include <vector>

#include "jmg/hypergraph.hpp"
#include "jmg/jm_solver.hpp"

namespace jmg {

/// E_k(±) = (1 ± eta·σ_k)/2 for k = x, y, z.
std::array<Povm, 3> noisy_orthogonal_triple(double eta);

/// Outcome of probing the noisy triple for a dilation obstruction.
struct HollowTriangleReport {
  double eta = 0.0;
  std::array<Povm, 3> povms;
  /// Queries {E1,E2}, {E1,E3}, {E2,E3}, in that order.
  std::array<JmReport, 3> pairs;
  JmReport triple;
  /// Singletons, feasible pairs, and the triple if feasible.
  Hypergraph observed;
  bool graph_induced = true;
  bool hollow_triangle = false;
  std::vector<std::string> flags;
  std::string conclusion;
};

/// Runs the three pairwise queries concurrently, then the triple.
HollowTriangleReport demo_theorem5(double eta, const JmOptions& options = {});

}  // namespace jmg
