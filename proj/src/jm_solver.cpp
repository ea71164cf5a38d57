#include "jmg/jm_solver.hpp"

#include <algorithm>
#include <cmath>

#include "jmg/error.hpp"

namespace jmg {

std::string_view to_string(JmVerdict v) {
  return v == JmVerdict::feasible ? "feasible" : "infeasible_stalled";
}

namespace {

// Orthogonal projection onto {X : Σ_{t : t_n = i} X_t = E_n(i) ∀ n, i}.
// The constraint matrix M (rows (n, i), columns t) acts identically on every
// matrix entry, so X ← X − M⁺(MX − E) with M⁺ = Mᵀ(MMᵀ)⁺ precomputed.
class MarginalProjector {
 public:
  MarginalProjector(const JointPovm& shape, std::span<const Povm> povms) {
    const std::size_t outcomes = shape.outcome_count();
    for (const auto& p : povms)
      for (const auto& e : p.elements) targets_.push_back(hermitian_part(e));
    const std::size_t rows = targets_.size();

    membership_.assign(outcomes, {});
    std::vector<std::size_t> offset;
    std::size_t acc = 0;
    for (const auto& p : povms) {
      offset.push_back(acc);
      acc += p.size();
    }
    for (std::size_t t = 0; t < outcomes; ++t) {
      const auto tuple = shape.tuple_of(t);
      for (std::size_t n = 0; n < tuple.size(); ++n) membership_[t].push_back(offset[n] + tuple[n]);
    }

    // MMᵀ is small and singular (each factor's rows sum to the all-ones row).
    ComplexMatrix mmt(rows, rows);
    for (std::size_t t = 0; t < outcomes; ++t)
      for (std::size_t r1 : membership_[t])
        for (std::size_t r2 : membership_[t]) mmt(r1, r2) += 1.0;
    const auto eig = hermitian_eigen(mmt);
    const double cutoff = 1e-10 * std::max(1.0, eig.values.empty() ? 1.0 : eig.values.back());
    ComplexMatrix pinv(rows, rows);
    for (std::size_t k = 0; k < rows; ++k) {
      if (eig.values[k] <= cutoff) continue;
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < rows; ++b)
          pinv(a, b) += eig.vectors(a, k) * std::conj(eig.vectors(b, k)) / eig.values[k];
    }
    // M⁺ restricted to column t: row t of Mᵀ(MMᵀ)⁺.
    weights_.assign(outcomes, std::vector<double>(rows, 0.0));
    for (std::size_t t = 0; t < outcomes; ++t)
      for (std::size_t r : membership_[t])
        for (std::size_t b = 0; b < rows; ++b) weights_[t][b] += pinv(r, b).real();
  }

  void project(std::vector<ComplexMatrix>& x) const {
    std::vector<ComplexMatrix> residual = targets_;
    for (auto& r : residual) r *= Complex(-1.0, 0.0);
    for (std::size_t t = 0; t < x.size(); ++t)
      for (std::size_t r : membership_[t]) residual[r] += x[t];
    for (std::size_t t = 0; t < x.size(); ++t) {
      for (std::size_t r = 0; r < residual.size(); ++r) {
        const double w = weights_[t][r];
        if (w == 0.0) continue;
        auto dst = x[t].data();
        auto src = residual[r].data();
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= w * src[k];
      }
    }
  }

 private:
  std::vector<ComplexMatrix> targets_;
  std::vector<std::vector<std::size_t>> membership_;
  std::vector<std::vector<double>> weights_;
};

double distance(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
  double sum = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const auto x = a[t].data();
    const auto y = b[t].data();
    for (std::size_t k = 0; k < x.size(); ++k) sum += std::norm(x[k] - y[k]);
  }
  return std::sqrt(sum);
}

// Congruence by (Σ G)^{-1/2} so the elements sum to the identity exactly.
void normalize_resolution(std::vector<ComplexMatrix>& g, std::size_t d) {
  ComplexMatrix sum(d, d);
  for (const auto& m : g) sum += m;
  const ComplexMatrix inv_root = spectral_map(sum, [](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; });
  for (auto& m : g) m = hermitian_part(inv_root * m * inv_root);
}

}  // namespace

JmReport jm_feasible(std::span<const Povm> povms, const JmOptions& options) {
  if (povms.empty()) throw DomainError("jm_feasible: no POVMs given");
  const std::size_t d = povms.front().space_dim;
  JointPovm shape;
  shape.space_dim = d;
  for (const auto& p : povms) {
    if (p.space_dim != d) throw DimensionError("jm_feasible: POVMs act on different spaces");
    if (p.size() == 0) throw DomainError("jm_feasible: POVM without outcomes");
    shape.factor_outcomes.push_back(p.outcomes);
  }
  // a·b > g ⟺ b > ⌊g/a⌋ keeps the size check overflow-free.
  std::size_t outcomes = 1;
  for (const auto& p : povms) {
    if (p.size() > options.guard_vars / outcomes)
      throw ResourceGuardError("jm_feasible: product outcome space exceeds the resource guard of " +
                               std::to_string(options.guard_vars) + " variables");
    outcomes *= p.size();
  }
  const std::size_t per_element = std::max<std::size_t>(1, d * d);
  if (per_element > options.guard_vars / outcomes)
    throw ResourceGuardError("jm_feasible: " + std::to_string(outcomes) + " joint outcomes x " +
                             std::to_string(per_element) + " variables exceeds the guard of " +
                             std::to_string(options.guard_vars));

  const MarginalProjector affine(shape, povms);

  std::vector<ComplexMatrix> x(outcomes, ComplexMatrix::identity(d));
  for (auto& m : x) m *= Complex(1.0 / static_cast<double>(outcomes), 0.0);
  affine.project(x);
  std::vector<ComplexMatrix> correction(outcomes, ComplexMatrix(d, d));
  std::vector<ComplexMatrix> y(outcomes);
  std::vector<double> history;
  history.reserve(std::min<std::size_t>(options.max_iter, 1 << 20));

  // The PSD iterate, renormalized, is an exact POVM whose marginals are
  // close to the inputs; it is accepted once they are within tol.
  auto polish = [&](std::vector<ComplexMatrix> psd) {
    for (auto& m : psd) m = hermitian_part(m);
    normalize_resolution(psd, d);
    JointPovm witness = shape;
    witness.elements = std::move(psd);
    double error = 0.0;
    for (std::size_t n = 0; n < povms.size(); ++n) {
      const Povm m = marginal(witness, n);
      for (std::size_t i = 0; i < m.size(); ++i)
        error = std::max(error, frobenius_norm(m.elements[i] - povms[n].elements[i]));
    }
    return std::pair{std::move(witness), error};
  };

  JmReport report;
  std::size_t next_log = 1;
  for (std::size_t k = 1; k <= options.max_iter; ++k) {
    for (std::size_t t = 0; t < outcomes; ++t) {
      y[t] = psd_projection(x[t] + correction[t]);
      correction[t] = x[t] + correction[t] - y[t];
    }
    x = y;
    affine.project(x);
    const double residual = distance(x, y);
    history.push_back(residual);
    report.iterations = k;
    report.final_residual = residual;
    if (k == next_log) {
      report.residual_history.emplace_back(k, residual);
      next_log *= 2;
    }
    if (residual <= options.tol) {
      auto [witness, error] = polish(y);
      if (error <= options.tol) {
        report.verdict = JmVerdict::feasible;
        report.witness = std::move(witness);
        report.marginal_error = error;
        break;
      }
    }
    if (k >= options.min_stall_iter) {
      const auto back = static_cast<std::size_t>(std::floor((1.0 - options.stall_window) * static_cast<double>(k)));
      const double earlier = history[std::max<std::size_t>(back, 1) - 1];
      report.plateaued = earlier > 0.0 && (earlier - residual) / earlier < options.stall_improvement;
      if (report.plateaued) break;
    }
  }
  if (report.residual_history.empty() || report.residual_history.back().first != report.iterations)
    report.residual_history.emplace_back(report.iterations, report.final_residual);

  return report;
}

bool qubit_pair_jm_oracle(const BlochVector& a, const BlochVector& b) {
  auto norm = [](double x, double y, double z) { return std::sqrt(x * x + y * y + z * z); };
  if (norm(a[0], a[1], a[2]) > 1.0 + 1e-12 || norm(b[0], b[1], b[2]) > 1.0 + 1e-12)
    throw DomainError("qubit_pair_jm_oracle: Bloch vector outside the unit ball");
  const double sum = norm(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
  const double diff = norm(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
  return sum + diff <= 2.0;
}

Povm unbiased_qubit_povm(const BlochVector& a) {
  const ComplexMatrix sigma{{Complex(a[2], 0.0), Complex(a[0], -a[1])},
                            {Complex(a[0], a[1]), Complex(-a[2], 0.0)}};
  const auto id = ComplexMatrix::identity(2);
  ComplexMatrix plus = id + sigma;
  ComplexMatrix minus = id - sigma;
  plus *= Complex(0.5, 0.0);
  minus *= Complex(0.5, 0.0);
  return make_povm({"+", "-"}, {plus, minus});
}

}  // namespace jmg
