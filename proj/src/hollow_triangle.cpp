#include "jmg/hollow_triangle.hpp"

#include <future>

#include "jmg/error.hpp"

namespace jmg {

std::array<Povm, 3> noisy_orthogonal_triple(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("noisy_orthogonal_triple: eta must lie in [0, 1]");
  return {unbiased_qubit_povm({eta, 0.0, 0.0}), unbiased_qubit_povm({0.0, eta, 0.0}),
          unbiased_qubit_povm({0.0, 0.0, eta})};
}

HollowTriangleReport demo_theorem5(double eta, const JmOptions& options) {
  HollowTriangleReport report;
  report.eta = eta;
  report.povms = noisy_orthogonal_triple(eta);

  constexpr std::array<std::array<std::size_t, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<std::future<JmReport>, 3> pending;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::array<Povm, 2> pair{report.povms[kPairs[k][0]], report.povms[kPairs[k][1]]};
    pending[k] = std::async(std::launch::async, [pair, options] { return jm_feasible(pair, options); });
  }
  for (std::size_t k = 0; k < 3; ++k) report.pairs[k] = pending[k].get();
  report.triple = jm_feasible(report.povms, options);

  std::vector<VertexSet> edges{{0}, {1}, {2}};
  bool all_pairs = true;
  for (std::size_t k = 0; k < 3; ++k) {
    if (report.pairs[k].verdict == JmVerdict::feasible) edges.push_back({kPairs[k][0], kPairs[k][1]});
    else all_pairs = false;
  }
  const bool triple = report.triple.verdict == JmVerdict::feasible;
  if (triple) edges.push_back({0, 1, 2});
  report.observed = Hypergraph::explicit_edges(3, edges);
  report.graph_induced = is_graph_induced(report.observed);
  report.hollow_triangle = all_pairs && !triple;

  if (report.hollow_triangle) {
    report.flags.push_back("hollow triangle");
    report.conclusion =
        "Every pair of E1, E2, E3 is jointly measurable but the triple is not, so the observed "
        "hypergraph is not induced by any graph. Suppose an isometry V and PVMs P1, P2, P3 with "
        "E_n(i) = V^dag P_n(i) V had the same joint measurability pattern. The P_n would commute "
        "pairwise, hence be jointly measurable as a triple; compressing their joint PVM through V "
        "would give a joint POVM for E1, E2, E3, contradicting the triple verdict. No such "
        "dilation exists.";
  } else if (triple) {
    report.flags.push_back("no obstruction at this noise level");
    report.conclusion =
        "The triple is jointly measurable; its joint POVM dilates to a single PVM, so the "
        "coarse-grained dilations preserve every joint measurability relation.";
  } else {
    report.flags.push_back("not a hollow triangle");
    report.conclusion =
        "Some pair is not jointly measurable, so the observed hypergraph is induced by a graph "
        "and no obstruction to pattern-preserving dilation arises.";
  }
  return report;
}

}  // namespace jmg
