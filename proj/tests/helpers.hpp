#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "jmg/graph.hpp"
#include "jmg/linalg.hpp"
#include "jmg/matrix.hpp"
#include "jmg/povm.hpp"

namespace jmg::testing {

inline Graph fork() { return Graph(3, {{0, 1}, {0, 2}}, {"x", "y", "z"}); }
inline Graph triangle() { return Graph::complete(3); }

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (auto& x : m.data()) x = Complex(normal(rng), normal(rng));
  return m;
}

inline ComplexMatrix random_psd(std::mt19937_64& rng, std::size_t d) {
  const auto m = random_matrix(rng, d, d);
  return m.adjoint() * m;
}

/// Random unitary from the eigenvectors of a random Hermitian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t d) {
  return hermitian_eigen(hermitian_part(random_matrix(rng, d, d))).vectors;
}

inline std::vector<std::string> numbered_outcomes(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Random POVM: random PSD elements S_i, normalized as T^{-1/2} S_i T^{-1/2}
/// with T = Σ S_i.
inline Povm random_povm(std::mt19937_64& rng, std::size_t d, std::size_t k) {
  std::vector<ComplexMatrix> s;
  ComplexMatrix total(d, d);
  for (std::size_t i = 0; i < k; ++i) {
    s.push_back(random_psd(rng, d));
    total += s.back();
  }
  const auto inv_sqrt = spectral_map(total, [](double x) { return 1.0 / std::sqrt(x); });
  for (auto& e : s) e = hermitian_part(inv_sqrt * e * inv_sqrt);
  return make_povm(numbered_outcomes(k), std::move(s), 1e-8);
}

/// Random PVM: a random partition of the columns of u into k nonempty groups.
inline Povm pvm_from_unitary(const ComplexMatrix& u, const std::vector<std::size_t>& group_of, std::size_t k) {
  const std::size_t d = u.rows();
  std::vector<ComplexMatrix> elements(k, ComplexMatrix(d, d));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) elements[group_of[c]](r, s) += u(r, c) * std::conj(u(s, c));
  for (auto& e : elements) e = hermitian_part(e);
  return make_pvm(numbered_outcomes(k), std::move(elements), 1e-8);
}

inline Povm random_pvm(std::mt19937_64& rng, const ComplexMatrix& u) {
  const std::size_t d = u.rows();
  std::uniform_int_distribution<std::size_t> kdist(1, d);
  const std::size_t k = kdist(rng);
  std::vector<std::size_t> group_of(d);
  for (std::size_t c = 0; c < d; ++c) group_of[c] = c < k ? c : std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
  std::shuffle(group_of.begin(), group_of.end(), rng);
  return pvm_from_unitary(u, group_of, k);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return frobenius_norm(a - b); }

}  // namespace jmg::testing
