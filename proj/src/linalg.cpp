#include "jmg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jmg {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// Applies the 2×2 unitary g to columns (p, q) of a: a ← a·G.
void rotate_columns(ComplexMatrix& a, std::size_t p, std::size_t q, const Complex g[2][2]) {
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g[0][0] + akq * g[1][0];
    a(k, q) = akp * g[0][1] + akq * g[1][1];
  }
}

// a ← G†·a on rows (p, q).
void rotate_rows(ComplexMatrix& a, std::size_t p, std::size_t q, const Complex g[2][2]) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g[0][0]) * apk + std::conj(g[1][0]) * aqk;
    a(q, k) = std::conj(g[0][1]) * apk + std::conj(g[1][1]) * aqk;
  }
}

}  // namespace

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermitian_part: matrix must be square");
  ComplexMatrix h = a + a.adjoint();
  h *= Complex(0.5, 0.0);
  return h;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& input) {
  ComplexMatrix a = hermitian_part(input);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = frobenius_norm(a);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        // Remove the phase of a_pq, then a real symmetric Jacobi rotation.
        const Complex phase = apq / b;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * b);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex g[2][2] = {{Complex(c, 0.0), Complex(s, 0.0)},
                                 {-s * std::conj(phase), c * std::conj(phase)}};
        rotate_columns(a, p, q, g);
        rotate_rows(a, p, q, g);
        a(p, q) = a(q, p) = Complex{};
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
        rotate_columns(v, p, q, g);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix spectral_map(const ComplexMatrix& a, const std::function<double(double)>& f) {
  const auto eig = hermitian_eigen(a);
  const std::size_t n = a.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = eig.vectors(r, k) * fk;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return out;
}

ComplexMatrix psd_projection(const ComplexMatrix& a) {
  return spectral_map(a, [](double x) { return std::max(x, 0.0); });
}

HermitianCheckReport hermitian_check(const ComplexMatrix& a, bool require_psd, double tol) {
  if (!a.is_square()) throw DimensionError("hermitian_check: matrix must be square");
  HermitianCheckReport report;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c)
      report.max_asymmetry = std::max(report.max_asymmetry, std::abs(a(r, c) - std::conj(a(c, r))));
  const auto eig = hermitian_eigen(a);
  report.min_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
  report.verdict = report.max_asymmetry <= tol && (!require_psd || report.min_eigenvalue >= -tol);
  return report;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol) {
  const auto check = hermitian_check(a, true, tol);
  if (check.max_asymmetry > tol) throw NumericalError("psd_sqrt: matrix is not Hermitian");
  if (check.min_eigenvalue < -tol)
    throw NumericalError("psd_sqrt: eigenvalue " + std::to_string(check.min_eigenvalue) +
                         " below -tol");
  return spectral_map(a, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

bool is_projection(const RationalMatrix& p) {
  if (!p.is_square()) return false;
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = r + 1; c < p.cols(); ++c)
      if (p(r, c) != p(c, r)) return false;
  return product_equals(p, p, p);
}

bool is_projection(const ComplexMatrix& p, double tol) {
  if (!p.is_square()) return false;
  if (frobenius_norm(p - p.adjoint()) > tol) return false;
  return frobenius_norm(p * p - p) <= tol;
}

std::size_t numerical_rank(const RationalMatrix& input) {
  RationalMatrix a = input;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(rank, c));
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      const Rational factor = a(r, col) / a(rank, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::size_t numerical_rank(const ComplexMatrix& a, double tol) {
  // One-sided Jacobi: orthogonalize the columns pairwise; the final column
  // norms are the singular values, accurate to roughly eps·‖a‖. Going
  // through eig(a†a) instead would lose half the digits of the small ones.
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Complex>> col(n, std::vector<Complex>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) col[c][r] = a(r, c);
  auto dot = [&](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex s{};
    for (std::size_t k = 0; k < m; ++k) s += std::conj(x[k]) * y[k];
    return s;
  };

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = dot(col[i], col[i]).real();
        const double beta = dot(col[j], col[j]).real();
        const Complex gamma = dot(col[i], col[j]);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const Complex x = col[i][k], y = col[j][k] * std::conj(phase);
          col[i][k] = c * x - s * y;
          col[j][k] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }
  std::size_t rank = 0;
  for (const auto& c : col)
    if (std::sqrt(dot(c, c).real()) > tol) ++rank;
  return rank;
}

RationalMatrix gram_matrix(const std::vector<RationalVector>& vectors) {
  const std::size_t n = vectors.size();
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (vectors[i].size() != vectors[j].size())
        throw DimensionError("gram_matrix: vectors have different lengths");
      Rational dot = 0;
      for (std::size_t k = 0; k < vectors[i].size(); ++k) dot += vectors[i][k] * vectors[j][k];
      g(i, j) = dot;
      g(j, i) = dot;
    }
  }
  return g;
}

}  // namespace jmg
