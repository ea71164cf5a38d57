#include "jmg/povm.hpp"

#include <algorithm>
#include <cmath>

#include "jmg/error.hpp"

namespace jmg {

const ComplexMatrix& Povm::at(std::string_view outcome) const {
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (outcomes[i] == outcome) return elements[i];
  throw DomainError("povm: unknown outcome '" + std::string(outcome) + "'");
}

PovmCheckReport validate_povm(const Povm& e, double tol) {
  PovmCheckReport report;
  report.min_eigenvalue = 0.0;
  if (e.elements.empty()) {
    report.reason = "no outcomes";
    return report;
  }
  if (e.outcomes.size() != e.elements.size()) {
    report.reason = "outcome labels do not match elements";
    return report;
  }
  const std::size_t d = e.space_dim;
  ComplexMatrix sum(d, d);
  bool first = true;
  for (const auto& m : e.elements) {
    if (m.rows() != d || m.cols() != d) {
      report.reason = "element shape differs from space_dim";
      return report;
    }
    if (!all_finite(m)) {
      report.reason = "non-finite entry";
      return report;
    }
    const auto check = hermitian_check(m, true, tol);
    const auto eig = hermitian_eigen(m);
    report.max_asymmetry = std::max(report.max_asymmetry, check.max_asymmetry);
    const double lo = eig.values.empty() ? 0.0 : eig.values.front();
    const double hi = eig.values.empty() ? 0.0 : eig.values.back();
    report.min_eigenvalue = first ? lo : std::min(report.min_eigenvalue, lo);
    report.max_eigenvalue = first ? hi : std::max(report.max_eigenvalue, hi);
    first = false;
    sum += m;
  }
  report.identity_error = frobenius_norm(sum - ComplexMatrix::identity(d));

  if (e.projective) {
    for (std::size_t i = 0; i < e.elements.size(); ++i) {
      const auto& p = e.elements[i];
      report.idempotency_error = std::max(report.idempotency_error, frobenius_norm(p * p - p));
      for (std::size_t j = i + 1; j < e.elements.size(); ++j)
        report.idempotency_error = std::max(report.idempotency_error, frobenius_norm(p * e.elements[j]));
    }
  }

  if (report.max_asymmetry > tol) report.reason = "element not Hermitian";
  else if (report.min_eigenvalue < -tol) report.reason = "element not positive semidefinite";
  else if (report.max_eigenvalue > 1.0 + tol) report.reason = "element exceeds identity";
  else if (report.identity_error > tol) report.reason = "elements do not sum to identity";
  else if (report.idempotency_error > tol) report.reason = "elements are not orthogonal projections";
  report.valid = report.reason.empty();
  return report;
}

namespace {

Povm build(std::vector<std::string> outcomes, std::vector<ComplexMatrix> elements, bool projective,
           double tol) {
  Povm p;
  p.space_dim = elements.empty() ? 0 : elements.front().rows();
  p.outcomes = std::move(outcomes);
  p.elements = std::move(elements);
  p.projective = projective;
  const auto report = validate_povm(p, tol);
  if (!report.valid) throw DomainError("invalid " + std::string(projective ? "PVM" : "POVM") + ": " + report.reason);
  return p;
}

}  // namespace

Povm make_povm(std::vector<std::string> outcomes, std::vector<ComplexMatrix> elements, double tol) {
  return build(std::move(outcomes), std::move(elements), false, tol);
}

Povm make_pvm(std::vector<std::string> outcomes, std::vector<ComplexMatrix> elements, double tol) {
  return build(std::move(outcomes), std::move(elements), true, tol);
}

bool pvm_jointly_measurable(std::span<const Povm> pvms, double tol) {
  for (const auto& p : pvms)
    if (p.space_dim != pvms.front().space_dim)
      throw DimensionError("pvm_jointly_measurable: PVMs act on different spaces");
  for (std::size_t a = 0; a < pvms.size(); ++a)
    for (std::size_t b = a + 1; b < pvms.size(); ++b)
      for (const auto& p : pvms[a].elements)
        for (const auto& q : pvms[b].elements)
          if (frobenius_norm(commutator(p, q)) > tol) return false;
  return true;
}

std::size_t JointPovm::outcome_count() const {
  std::size_t count = 1;
  for (const auto& f : factor_outcomes) count *= f.size();
  return count;
}

std::size_t JointPovm::flat_index(std::span<const std::size_t> tuple) const {
  if (tuple.size() != factor_outcomes.size()) throw DimensionError("joint povm: tuple length mismatch");
  std::size_t flat = 0;
  for (std::size_t n = 0; n < tuple.size(); ++n) {
    if (tuple[n] >= factor_outcomes[n].size()) throw DomainError("joint povm: outcome index out of range");
    flat = flat * factor_outcomes[n].size() + tuple[n];
  }
  return flat;
}

std::vector<std::size_t> JointPovm::tuple_of(std::size_t flat) const {
  std::vector<std::size_t> tuple(factor_outcomes.size());
  for (std::size_t n = factor_outcomes.size(); n-- > 0;) {
    tuple[n] = flat % factor_outcomes[n].size();
    flat /= factor_outcomes[n].size();
  }
  return tuple;
}

std::vector<std::string> JointPovm::labels_of(std::size_t flat) const {
  const auto tuple = tuple_of(flat);
  std::vector<std::string> labels;
  labels.reserve(tuple.size());
  for (std::size_t n = 0; n < tuple.size(); ++n) labels.push_back(factor_outcomes[n][tuple[n]]);
  return labels;
}

Povm JointPovm::as_povm() const {
  Povm p;
  p.space_dim = space_dim;
  p.elements = elements;
  for (std::size_t t = 0; t < elements.size(); ++t) {
    std::string label;
    for (const auto& l : labels_of(t)) label += (label.empty() ? "" : ",") + l;
    p.outcomes.push_back(std::move(label));
  }
  return p;
}

Povm marginal(const JointPovm& joint, std::size_t factor) {
  if (factor >= joint.factor_count())
    throw DomainError("marginal: factor " + std::to_string(factor) + " out of range");
  if (joint.elements.size() != joint.outcome_count())
    throw DimensionError("marginal: joint POVM element count does not match its outcome set");
  Povm out;
  out.space_dim = joint.space_dim;
  out.outcomes = joint.factor_outcomes[factor];
  out.elements.assign(out.outcomes.size(), ComplexMatrix(joint.space_dim, joint.space_dim));
  for (std::size_t t = 0; t < joint.elements.size(); ++t)
    out.elements[joint.tuple_of(t)[factor]] += joint.elements[t];
  return out;
}

JointPovm product_joint(std::span<const Povm> povms) {
  JointPovm joint;
  joint.space_dim = povms.empty() ? 0 : povms.front().space_dim;
  for (const auto& p : povms) {
    if (p.space_dim != joint.space_dim) throw DimensionError("product_joint: POVMs act on different spaces");
    joint.factor_outcomes.push_back(p.outcomes);
  }
  const std::size_t count = joint.outcome_count();
  joint.elements.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const auto tuple = joint.tuple_of(t);
    ComplexMatrix m = ComplexMatrix::identity(joint.space_dim);
    for (std::size_t n = 0; n < povms.size(); ++n) m = m * povms[n].elements[tuple[n]];
    joint.elements.push_back(std::move(m));
  }
  return joint;
}

}  // namespace jmg
