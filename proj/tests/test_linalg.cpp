#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jmg/error.hpp"
#include "jmg/linalg.hpp"
#include "jmg/realizer.hpp"

using namespace jmg;

namespace {

const RationalMatrix kZeroProj{{1, 0}, {0, 0}};
const RationalMatrix kPlusProj{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};

RationalMatrix random_rational(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  RationalMatrix m(rows, cols);
  for (auto& x : m.data()) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return m;
}

}  // namespace

TEST_CASE("commutator examples") {
  const RationalMatrix expected{{0, Rational(1, 2)}, {Rational(-1, 2), 0}};
  CHECK(commutator(kZeroProj, kPlusProj) == expected);
  CHECK_FALSE(commutes(kZeroProj, kPlusProj));
  CHECK(commutator(kZeroProj, kZeroProj).is_zero_matrix());
  CHECK(commutator(kZeroProj, RationalMatrix::identity(2)).is_zero_matrix());
  CHECK_THROWS_AS(commutator(kZeroProj, RationalMatrix::identity(3)), DimensionError);
}

TEST_CASE("exact identities hold without tolerance") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_rational(rng, 3, 4), b = random_rational(rng, 4, 2), c = random_rational(rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    const auto s = random_rational(rng, 3, 3), t = random_rational(rng, 3, 3);
    CHECK(commutator(s, t) == -commutator(t, s));
  }
}

TEST_CASE("direct_sum examples") {
  const auto d = direct_sum({kZeroProj, kPlusProj});
  CHECK(d.rows() == 4);
  CHECK(d(0, 0) == 1);
  CHECK(d(2, 3) == Rational(1, 2));
  CHECK(d(0, 2) == 0);
  CHECK(d(3, 1) == 0);
  CHECK(direct_sum({kPlusProj}) == kPlusProj);
  CHECK(direct_sum(std::vector<RationalMatrix>{}).rows() == 0);
}

TEST_CASE("is_projection examples") {
  CHECK(is_projection(kPlusProj));
  CHECK(is_projection(RationalMatrix::zero(2)));
  CHECK_FALSE(is_projection(RationalMatrix{{1, 1}, {0, 1}}));
  CHECK(is_projection(to_complex(kPlusProj)));
  CHECK_FALSE(is_projection(ComplexMatrix{{Complex(0.5), 0}, {0, 0}}));
}

TEST_CASE("psd_sqrt examples") {
  CHECK(testing::max_abs_diff(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) < 1e-14);
  const ComplexMatrix d{{4, 0}, {0, 1}};
  const ComplexMatrix expected{{2, 0}, {0, 1}};
  CHECK(testing::max_abs_diff(psd_sqrt(d), expected) < 1e-14);
  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix{{-1, 0}, {0, 1}}), NumericalError);
}

TEST_CASE("psd_sqrt squares back on random PSD input") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 1 + i % 6;
    const auto a = testing::random_psd(rng, d);
    const auto s = psd_sqrt(a);
    CHECK(frobenius_norm(s * s - a) <= 1e-10);
    CHECK(hermitian_check(s, true).verdict);
  }
}

TEST_CASE("hermitian_eigen reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 1 + i % 8;
    const auto a = hermitian_part(testing::random_matrix(rng, d, d));
    const auto eig = hermitian_eigen(a);
    CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
    const auto& v = eig.vectors;
    CHECK(frobenius_norm(v.adjoint() * v - ComplexMatrix::identity(d)) < 1e-12);
    ComplexMatrix lambda(d, d);
    for (std::size_t k = 0; k < d; ++k) lambda(k, k) = eig.values[k];
    CHECK(frobenius_norm(v * lambda * v.adjoint() - a) < 1e-11 * (1 + frobenius_norm(a)));
  }
}

TEST_CASE("hermitian_check examples") {
  const auto half = hermitian_check(ComplexMatrix::identity(2) * Complex(0.5), true);
  CHECK(half.verdict);
  CHECK(half.min_eigenvalue == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_FALSE(hermitian_check(ComplexMatrix{{0, 1}, {0, 0}}, false).verdict);

  // (I + 0.6 σx)/2 has eigenvalues 0.2 and 0.8.
  const ComplexMatrix noisy{{0.5, 0.3}, {0.3, 0.5}};
  const auto r = hermitian_check(noisy, true);
  CHECK(r.verdict);
  CHECK(r.min_eigenvalue == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(hermitian_check(ComplexMatrix::identity(2) - noisy, true).min_eigenvalue ==
        doctest::Approx(0.2).epsilon(1e-12));

  CHECK_FALSE(hermitian_check(ComplexMatrix{{1, 0}, {0, -0.1}}, true).verdict);
  CHECK(hermitian_check(ComplexMatrix{{1, 0}, {0, -0.1}}, false).verdict);
}

TEST_CASE("numerical_rank examples") {
  CHECK(numerical_rank(RationalMatrix::identity(3)) == 3);
  CHECK(numerical_rank(outer({1, 2, Rational(-1, 3)}, {1, 2, Rational(-1, 3)})) == 1);
  CHECK(numerical_rank(RationalMatrix::zero(3)) == 0);

  const auto fork = realize_rank_one(testing::fork());
  const auto gram = gram_matrix(*fork.vectors);
  CHECK(gram == RationalMatrix{{1, 0, 0}, {0, 2, 1}, {0, 1, 2}});
  CHECK(numerical_rank(gram) == 3);

  CHECK(numerical_rank(ComplexMatrix::identity(3), 1e-9) == 3);
  CHECK(numerical_rank(to_complex(gram), 1e-9) == 3);
  CHECK(numerical_rank(ComplexMatrix{{1, 1}, {1, 1}}, 1e-9) == 1);
}

TEST_CASE("rank is invariant under row permutation and invertible multiplication") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = 2 + i % 4, c = 2 + (i / 4) % 4, k = 1 + i % 3;
    // Product of r×k and k×c has rank ≤ k.
    const auto a = random_rational(rng, r, k) * random_rational(rng, k, c);
    const auto base = numerical_rank(a);
    CHECK(base <= k);

    RationalMatrix permuted(r, c);
    for (std::size_t row = 0; row < r; ++row)
      for (std::size_t col = 0; col < c; ++col) permuted((row + 1) % r, col) = a(row, col);
    CHECK(numerical_rank(permuted) == base);

    // Unit upper triangular matrices are invertible.
    auto u = random_rational(rng, r, r);
    for (std::size_t x = 0; x < r; ++x) {
      u(x, x) = 1;
      for (std::size_t y = 0; y < x; ++y) u(x, y) = 0;
    }
    CHECK(numerical_rank(u * a) == base);
    CHECK(numerical_rank(to_complex(a), 1e-9) == base);
  }
}
