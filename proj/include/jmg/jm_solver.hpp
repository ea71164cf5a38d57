#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "jmg/povm.hpp"

namespace jmg {

struct JmOptions {
  double tol = 1e-7;
  std::size_t max_iter = 50000;
  /// Upper bound on |∏ I_n| · d² real variables.
  std::size_t guard_vars = 100000;
  /// Plateau test: relative improvement over the trailing `stall_window`
  /// fraction of iterations below `stall_improvement`, checked once at
  /// least `min_stall_iter` iterations have run.
  double stall_window = 0.1;
  double stall_improvement = 1e-3;
  std::size_t min_stall_iter = 1000;
};

enum class JmVerdict { feasible, infeasible_stalled };

std::string_view to_string(JmVerdict v);

struct JmReport {
  JmVerdict verdict = JmVerdict::infeasible_stalled;
  /// Present iff feasible. Exactly PSD and normalized up to rounding.
  std::optional<JointPovm> witness;
  std::size_t iterations = 0;
  /// Frobenius distance between the last affine iterate and the PSD cone.
  double final_residual = 0.0;
  /// Largest ‖marginal(witness, n)(i) − E_n(i)‖_F; 0 without a witness.
  double marginal_error = 0.0;
  /// True when the residual had plateaued at termination.
  bool plateaued = false;
  /// (iteration, residual) at powers of two and at the last iteration.
  std::vector<std::pair<std::size_t, double>> residual_history;
};

/**
 * Decides joint measurability by Dykstra's alternating projections between
 * the product of PSD cones and the affine set of joint POVMs with the
 * requested marginals. Starts from the affine projection of the uniform
 * joint POVM, so runs are deterministic.
 *
 * infeasible_stalled is numerical evidence of incompatibility, not a
 * certificate.
 *
 * Throws DimensionError on mismatched spaces and ResourceGuardError when
 * the product outcome set is too large.
 */
JmReport jm_feasible(std::span<const Povm> povms, const JmOptions& options = {});

using BlochVector = std::array<double, 3>;

/// Unbiased dichotomic qubit effects (1 ± a·σ)/2 and (1 ± b·σ)/2 are jointly
/// measurable iff ‖a + b‖ + ‖a − b‖ ≤ 2.
bool qubit_pair_jm_oracle(const BlochVector& a, const BlochVector& b);

/// {(1 + a·σ)/2, (1 − a·σ)/2} with outcomes "+", "-".
Povm unbiased_qubit_povm(const BlochVector& a);

}  // namespace jmg
