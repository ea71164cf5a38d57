#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jmg/graph.hpp"
#include "jmg/linalg.hpp"
#include "jmg/matrix.hpp"

namespace jmg {

enum class RealizationMethod { direct_sum, rank_one, rank_one_restricted, faithful_augmented };

std::string_view to_string(RealizationMethod m);
RealizationMethod parse_realization_method(std::string_view s);

/**
 * An assignment vertex ↦ projection on a common space. Constructions that
 * stay rational keep exact operators; restrict_to_span produces floats.
 */
struct Realization {
  using ExactOps = std::vector<RationalMatrix>;
  using FloatOps = std::vector<ComplexMatrix>;

  Graph graph;
  std::size_t space_dim = 0;
  RealizationMethod method = RealizationMethod::direct_sum;
  std::variant<ExactOps, FloatOps> projections;
  /// ψ_x of the rank-one construction in the ambient basis.
  std::optional<std::vector<RationalVector>> vectors;

  bool exact() const noexcept { return std::holds_alternative<ExactOps>(projections); }
  const ExactOps& exact_projections() const;
  const FloatOps& float_projections() const;
  std::size_t operator_count() const;
};

/// Each vertex carries a PVM: orthogonal projections summing to identity.
struct PvmRealization {
  Graph graph;
  std::size_t space_dim = 0;
  std::vector<std::vector<RationalMatrix>> pvms;
};

enum class Relation { commuting, non_commuting };

struct Violation {
  enum class Kind { wrong_relation, not_projection, not_pvm };
  Kind kind = Kind::wrong_relation;
  Vertex v = 0;
  Vertex w = 0;
  Relation expected = Relation::commuting;
  /// Frobenius norm of the commutator (largest elementwise one for PVMs).
  double commutator_norm = 0.0;
  std::string detail;
};

struct VerificationReport {
  bool passed = true;
  std::vector<Violation> violations;
};

/// One C² block per non-edge {v,w} (v < w): p_v gets |0⟩⟨0|, p_w gets
/// |+⟩⟨+|, every other vertex 0. A graph without non-edges maps to the
/// 1×1 zero operator everywhere.
Realization realize_direct_sum(const Graph& g);

/// p_x = |ψ_x⟩⟨ψ_x| / ⟨ψ_x|ψ_x⟩ with ψ_x = e_x + Σ_{v≁x} e_{x,v} on the
/// basis (vertices, then non-edges in lexicographic order).
Realization realize_rank_one(const Graph& g);

/// Rewrites a rank-one realization on an orthonormal basis of span{ψ_x}.
Realization restrict_to_span(const Realization& r);

/// p_x ↦ p_x ⊕ |x⟩⟨x|, making distinct vertices carry distinct projections.
Realization make_faithful(const Realization& r);

/// P_x = {p_x, 1 − p_x}.
PvmRealization lift_to_pvms(const Realization& r);

/// P_x with exactly outcomes[x] ≥ 2 elements on H ⊕ ⊕_x C^{n_x − 2}.
PvmRealization extend_outcomes(const Realization& r, const std::vector<std::size_t>& outcomes);

/// Checks operators are projections (PVMs) and commute exactly on edges.
/// `tol` applies to float realizations only.
VerificationReport verify_realization(const Graph& g, const Realization& r,
                                      double tol = kDefaultCheckTol);
VerificationReport verify_realization(const Graph& g, const PvmRealization& r);

/// Pairwise distinct operators (exact regime compares entries exactly).
bool is_faithful(const Realization& r, double tol = kDefaultCheckTol);

}  // namespace jmg
