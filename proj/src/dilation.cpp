#include "jmg/dilation.hpp"

#include <algorithm>

#include "jmg/error.hpp"

namespace jmg {

namespace {

constexpr double kDilationInputTol = 1e-8;

ComplexMatrix compress(const ComplexMatrix& v, const ComplexMatrix& p) { return v.adjoint() * p * v; }

}  // namespace

DilationResult neumark_dilate(const Povm& e) {
  const auto check = validate_povm(e, kDilationInputTol);
  if (!check.valid) throw DomainError("neumark_dilate: invalid POVM: " + check.reason);

  const std::size_t d = e.space_dim;
  const std::size_t k = e.size();
  DilationResult out;
  out.enlarged_dim = d * k;
  out.isometry = ComplexMatrix(d * k, d);
  for (std::size_t i = 0; i < k; ++i) {
    const ComplexMatrix root = psd_sqrt(e.elements[i], kDilationInputTol);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out.isometry(i * d + r, c) = root(r, c);
  }

  out.pvm.space_dim = out.enlarged_dim;
  out.pvm.outcomes = e.outcomes;
  out.pvm.projective = true;
  for (std::size_t i = 0; i < k; ++i) {
    ComplexMatrix p(out.enlarged_dim, out.enlarged_dim);
    for (std::size_t r = 0; r < d; ++r) p(i * d + r, i * d + r) = 1.0;
    out.pvm.elements.push_back(std::move(p));
  }

  out.isometry_error = frobenius_norm(out.isometry.adjoint() * out.isometry - ComplexMatrix::identity(d));
  for (std::size_t i = 0; i < k; ++i)
    out.max_reconstruction_error =
        std::max(out.max_reconstruction_error,
                 frobenius_norm(compress(out.isometry, out.pvm.elements[i]) - e.elements[i]));
  return out;
}

JointDilationResult joint_dilation(std::span<const Povm> povms, const JointPovm& witness, double tol) {
  if (povms.size() != witness.factor_count())
    throw DimensionError("joint_dilation: witness has " + std::to_string(witness.factor_count()) +
                         " factors for " + std::to_string(povms.size()) + " POVMs");
  for (std::size_t n = 0; n < povms.size(); ++n) {
    if (povms[n].space_dim != witness.space_dim)
      throw DimensionError("joint_dilation: POVM and witness act on different spaces");
    if (povms[n].outcomes != witness.factor_outcomes[n])
      throw DomainError("joint_dilation: witness outcome set differs for factor " + std::to_string(n));
  }

  JointDilationResult out;
  std::vector<Povm> witness_marginals;
  for (std::size_t n = 0; n < povms.size(); ++n) {
    witness_marginals.push_back(marginal(witness, n));
    for (std::size_t i = 0; i < povms[n].size(); ++i)
      out.input_error = std::max(
          out.input_error, frobenius_norm(witness_marginals[n].elements[i] - povms[n].elements[i]));
  }
  if (out.input_error > tol)
    throw DomainError("joint_dilation: witness marginals miss the inputs by " +
                      std::to_string(out.input_error));

  out.joint = neumark_dilate(witness.as_povm());
  const std::size_t big = out.joint.enlarged_dim;
  for (std::size_t n = 0; n < povms.size(); ++n) {
    Povm coarse;
    coarse.space_dim = big;
    coarse.outcomes = povms[n].outcomes;
    coarse.projective = true;
    coarse.elements.assign(povms[n].size(), ComplexMatrix(big, big));
    for (std::size_t t = 0; t < witness.elements.size(); ++t)
      coarse.elements[witness.tuple_of(t)[n]] += out.joint.pvm.elements[t];
    out.marginal_pvms.push_back(std::move(coarse));
  }

  out.input_error = 0.0;
  for (std::size_t n = 0; n < povms.size(); ++n) {
    for (std::size_t i = 0; i < povms[n].size(); ++i) {
      const ComplexMatrix compressed = compress(out.joint.isometry, out.marginal_pvms[n].elements[i]);
      out.witness_error =
          std::max(out.witness_error, frobenius_norm(compressed - witness_marginals[n].elements[i]));
      out.input_error = std::max(out.input_error, frobenius_norm(compressed - povms[n].elements[i]));
    }
  }
  for (std::size_t a = 0; a < povms.size(); ++a)
    for (std::size_t b = a + 1; b < povms.size(); ++b)
      for (const auto& p : out.marginal_pvms[a].elements)
        for (const auto& q : out.marginal_pvms[b].elements)
          out.max_commutator = std::max(out.max_commutator, frobenius_norm(commutator(p, q)));
  return out;
}

}  // namespace jmg
