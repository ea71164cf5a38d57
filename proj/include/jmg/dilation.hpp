#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jmg/povm.hpp"

namespace jmg {

/// Isometry V : H → K and PVM P on K with E(i) = V†P(i)V.
struct DilationResult {
  ComplexMatrix isometry;
  Povm pvm;
  std::size_t enlarged_dim = 0;
  /// ‖V†V − 1‖_F
  double isometry_error = 0.0;
  /// max_i ‖V†P(i)V − E(i)‖_F
  double max_reconstruction_error = 0.0;
};

/// Neumark dilation on K = H ⊗ C^|I|: row block i of V is √E(i) and P(i)
/// projects onto block i.
DilationResult neumark_dilate(const Povm& e);

/// The coarse-grained PVMs P_n(i) = Σ_j P(i, j) of a joint dilation.
struct JointDilationResult {
  DilationResult joint;
  std::vector<Povm> marginal_pvms;
  /// max ‖V†P_n(i)V − witness marginal‖_F; exact algebra, ≈ rounding.
  double witness_error = 0.0;
  /// max ‖V†P_n(i)V − E_n(i)‖_F against the query POVMs.
  double input_error = 0.0;
  /// Largest elementwise commutator norm between different P_n.
  double max_commutator = 0.0;
};

/// Dilates a joint POVM witness and coarse-grains it per factor. Throws
/// DomainError when the witness marginals miss the inputs by more than tol.
JointDilationResult joint_dilation(std::span<const Povm> povms, const JointPovm& witness,
                                   double tol = 1e-7);

}  // namespace jmg
