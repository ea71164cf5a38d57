#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jmg/linalg.hpp"
#include "jmg/matrix.hpp"

namespace jmg {

/// Discrete POVM: outcomes[i] labels elements[i]. `projective` marks a PVM.
struct Povm {
  std::size_t space_dim = 0;
  std::vector<std::string> outcomes;
  std::vector<ComplexMatrix> elements;
  bool projective = false;

  std::size_t size() const noexcept { return elements.size(); }
  const ComplexMatrix& at(std::string_view outcome) const;
};

struct PovmCheckReport {
  bool valid = false;
  double max_asymmetry = 0.0;
  double min_eigenvalue = 0.0;
  /// Largest eigenvalue over all elements; ≤ 1 + tol required.
  double max_eigenvalue = 0.0;
  /// ‖Σ_i E(i) − 1‖_F
  double identity_error = 0.0;
  /// Projective case: max ‖E(i)² − E(i)‖_F and max ‖E(i)E(j)‖_F.
  double idempotency_error = 0.0;
  std::string reason;
};

/// Hermiticity, 0 ≤ E(i) ≤ 1 and Σ E(i) = 1 within tol; for PVMs also
/// idempotency and pairwise orthogonality.
PovmCheckReport validate_povm(const Povm& e, double tol = kDefaultCheckTol);

/// Builds a POVM, throwing DomainError when validation fails.
Povm make_povm(std::vector<std::string> outcomes, std::vector<ComplexMatrix> elements,
               double tol = kDefaultCheckTol);
Povm make_pvm(std::vector<std::string> outcomes, std::vector<ComplexMatrix> elements,
              double tol = kDefaultCheckTol);

/// Every cross pair of elements commutes within tol. Joint measurability of
/// sharp observables is pairwise, so this decides the whole family.
bool pvm_jointly_measurable(std::span<const Povm> pvms, double tol = kDefaultCheckTol);

/**
 * POVM on the product outcome set I₁ × … × I_k. Elements are stored in
 * lexicographic order of outcome tuples (last factor fastest).
 */
struct JointPovm {
  std::size_t space_dim = 0;
  std::vector<std::vector<std::string>> factor_outcomes;
  std::vector<ComplexMatrix> elements;

  std::size_t factor_count() const noexcept { return factor_outcomes.size(); }
  std::size_t outcome_count() const;
  std::size_t flat_index(std::span<const std::size_t> tuple) const;
  std::vector<std::size_t> tuple_of(std::size_t flat) const;
  std::vector<std::string> labels_of(std::size_t flat) const;

  /// Flattened view as an ordinary POVM with "i1,i2,..." labels.
  Povm as_povm() const;
};

/// E_n(i) = Σ over all other indices of E(…, i, …).
Povm marginal(const JointPovm& joint, std::size_t factor);

/// G(i₁,…,i_k) = E₁(i₁)⋯E_k(i_k); a joint POVM when the factors commute.
JointPovm product_joint(std::span<const Povm> povms);

}  // namespace jmg
