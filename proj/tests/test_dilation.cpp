#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "jmg/dilation.hpp"
#include "jmg/error.hpp"
#include "jmg/hollow_triangle.hpp"
#include "jmg/jm_solver.hpp"

using namespace jmg;

namespace {

/// Independent recheck of E(i) = V†P(i)V and V†V = I.
void check_dilation(const Povm& e, const DilationResult& r, double tol) {
  const auto& v = r.isometry;
  REQUIRE(v.rows() == r.enlarged_dim);
  REQUIRE(v.cols() == e.space_dim);
  CHECK(frobenius_norm(v.adjoint() * v - ComplexMatrix::identity(e.space_dim)) <= tol);
  REQUIRE(r.pvm.size() == e.size());
  CHECK(validate_povm(r.pvm).valid);
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(is_projection(r.pvm.elements[i]));
    CHECK(frobenius_norm(v.adjoint() * r.pvm.elements[i] * v - e.elements[i]) <= tol);
  }
}

}  // namespace

TEST_CASE("dilating a PVM") {
  const auto p = make_pvm({"0", "1"}, {ComplexMatrix{{1, 0}, {0, 0}}, ComplexMatrix{{0, 0}, {0, 1}}});
  const auto r = neumark_dilate(p);
  check_dilation(p, r, 1e-10);
  CHECK(r.isometry_error <= 1e-10);
}

TEST_CASE("dilating the trivial POVM") {
  const auto half = ComplexMatrix::identity(2) * Complex(0.5);
  const auto e = make_povm({"a", "b"}, {half, half});
  const auto r = neumark_dilate(e);
  CHECK(r.enlarged_dim == 4);
  CHECK(std::abs(r.isometry(0, 0) - Complex(std::sqrt(0.5))) < 1e-15);
  check_dilation(e, r, 1e-10);
}

TEST_CASE("dilating the trine") {
  std::vector<ComplexMatrix> el;
  for (int k = 0; k < 3; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 3.0;
    const double c = std::cos(t), s = std::sin(t);
    el.push_back(ComplexMatrix{{c * c, c * s}, {c * s, s * s}} * Complex(2.0 / 3.0));
  }
  const auto e = make_povm({"0", "1", "2"}, el);
  const auto r = neumark_dilate(e);
  CHECK(r.enlarged_dim == 6);
  check_dilation(e, r, 1e-9);
}

TEST_CASE("dilation of random POVMs") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 4, k = 1 + (i / 4) % 5;
    const auto e = testing::random_povm(rng, d, k);
    const auto r = neumark_dilate(e);
    CHECK(r.enlarged_dim == d * k);
    CHECK(r.isometry_error <= 1e-9);
    CHECK(r.max_reconstruction_error <= 1e-9);
    check_dilation(e, r, 1e-9);
  }
}

TEST_CASE("neumark_dilate rejects invalid input") {
  CHECK_THROWS_AS(neumark_dilate(Povm{2, {"a", "b"}, {ComplexMatrix{{1.5, 0}, {0, 1}}, ComplexMatrix{{-0.5, 0}, {0, 0}}}}),
                  DomainError);
}

TEST_CASE("joint dilation of commuting PVMs with the product witness") {
  const auto p = make_pvm({"0", "1"}, {ComplexMatrix{{1, 0}, {0, 0}}, ComplexMatrix{{0, 0}, {0, 1}}});
  const auto q = make_pvm({"a", "b"}, {ComplexMatrix{{0, 0}, {0, 1}}, ComplexMatrix{{1, 0}, {0, 0}}});
  const std::vector<Povm> pq{p, q};
  const auto r = joint_dilation(pq, product_joint(pq));
  CHECK(r.input_error <= 1e-12);
  CHECK(r.max_commutator <= 1e-12);
  REQUIRE(r.marginal_pvms.size() == 2);
  const auto& v = r.joint.isometry;
  for (std::size_t n = 0; n < 2; ++n)
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(is_projection(r.marginal_pvms[n].elements[i]));
      CHECK(frobenius_norm(v.adjoint() * r.marginal_pvms[n].elements[i] * v - pq[n].elements[i]) <= 1e-12);
    }
}

TEST_CASE("joint dilation of the noisy pair from a solver witness") {
  const auto triple = noisy_orthogonal_triple(0.6);
  const std::vector<Povm> pair{triple[0], triple[1]};
  const auto report = jm_feasible(pair);
  REQUIRE(report.verdict == JmVerdict::feasible);
  const auto r = joint_dilation(pair, *report.witness);
  CHECK(r.input_error <= 1e-7);
  CHECK(r.max_commutator <= 1e-9);
  const auto& v = r.joint.isometry;
  for (std::size_t n = 0; n < 2; ++n)
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(frobenius_norm(v.adjoint() * r.marginal_pvms[n].elements[i] * v - pair[n].elements[i]) <= 1e-7);
}

TEST_CASE("joint dilation refuses a witness with wrong marginals") {
  const auto triple = noisy_orthogonal_triple(0.6);
  const std::vector<Povm> pair{triple[0], triple[1]};
  const auto trivial = noisy_orthogonal_triple(0.0);
  const std::vector<Povm> trivial_pair{trivial[0], trivial[1]};
  CHECK_THROWS_AS(joint_dilation(pair, product_joint(trivial_pair)), DomainError);
  const std::vector<Povm> one{triple[0]};
  CHECK_THROWS_AS(joint_dilation(one, product_joint(trivial_pair)), DimensionError);
}
