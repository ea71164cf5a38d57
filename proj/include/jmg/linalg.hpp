#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "jmg/matrix.hpp"

namespace jmg {

inline constexpr double kDefaultCheckTol = 1e-9;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending; column k of
/// `vectors` is the unit eigenvector for `values[k]`.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic Jacobi eigensolver. Only the Hermitian part of `a` is used.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a);

/// (a + a†)/2
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// U f(Λ) U† for the Hermitian part of `a`.
ComplexMatrix spectral_map(const ComplexMatrix& a, const std::function<double(double)>& f);

/// Nearest PSD matrix in Frobenius norm: negative eigenvalues clamped to 0.
ComplexMatrix psd_projection(const ComplexMatrix& a);

/// Principal square root of a PSD matrix. Eigenvalues in [−tol, 0) are
/// clamped; throws NumericalError when `a` is not Hermitian within tol or
/// has an eigenvalue below −tol.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol = kDefaultCheckTol);

struct HermitianCheckReport {
  double max_asymmetry = 0.0;
  double min_eigenvalue = 0.0;
  bool verdict = false;
};

/// Operator-interval check. To test a ≤ 1, pass 1 − a with require_psd.
HermitianCheckReport hermitian_check(const ComplexMatrix& a, bool require_psd,
                                     double tol = kDefaultCheckTol);

/// Exact test of p = pᵀ and p² = p.
bool is_projection(const RationalMatrix& p);

/// Hermitian and idempotent within tol (Frobenius).
bool is_projection(const ComplexMatrix& p, double tol = kDefaultCheckTol);

/// Pivot count under exact Gaussian elimination.
std::size_t numerical_rank(const RationalMatrix& a);

/// Number of singular values exceeding tol.
std::size_t numerical_rank(const ComplexMatrix& a, double tol);

/// Gram matrix G_ij = ⟨v_i|v_j⟩ of real rational vectors.
RationalMatrix gram_matrix(const std::vector<RationalVector>& vectors);

}  // namespace jmg
