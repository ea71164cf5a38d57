#include "jmg/realizer.hpp"

#include <algorithm>
#include <cmath>

#include "jmg/error.hpp"

namespace jmg {

std::string_view to_string(RealizationMethod m) {
  switch (m) {
    case RealizationMethod::direct_sum: return "direct_sum";
    case RealizationMethod::rank_one: return "rank_one";
    case RealizationMethod::rank_one_restricted: return "rank_one_restricted";
    case RealizationMethod::faithful_augmented: return "faithful_augmented";
  }
  return "unknown";
}

RealizationMethod parse_realization_method(std::string_view s) {
  for (auto m : {RealizationMethod::direct_sum, RealizationMethod::rank_one,
                 RealizationMethod::rank_one_restricted, RealizationMethod::faithful_augmented})
    if (to_string(m) == s) return m;
  throw DomainError("unknown realization method '" + std::string(s) + "'");
}

const Realization::ExactOps& Realization::exact_projections() const {
  if (!exact()) throw DomainError("realization is not in the exact regime");
  return std::get<ExactOps>(projections);
}

const Realization::FloatOps& Realization::float_projections() const {
  if (exact()) throw DomainError("realization is not in the float regime");
  return std::get<FloatOps>(projections);
}

std::size_t Realization::operator_count() const {
  return std::visit([](const auto& ops) { return ops.size(); }, projections);
}

namespace {

const RationalMatrix& ket0_bra0() {
  static const RationalMatrix m{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
  return m;
}

const RationalMatrix& ketplus_braplus() {
  static const RationalMatrix m{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
  return m;
}

}  // namespace

Realization realize_direct_sum(const Graph& g) {
  const auto missing = non_edges(g);
  const std::size_t n = g.vertex_count();
  Realization r;
  r.graph = g;
  r.method = RealizationMethod::direct_sum;
  Realization::ExactOps ops;
  ops.reserve(n);
  if (missing.empty()) {
    r.space_dim = 1;
    ops.assign(n, RationalMatrix::zero(1));
  } else {
    r.space_dim = 2 * missing.size();
    for (Vertex x = 0; x < n; ++x) {
      std::vector<RationalMatrix> blocks;
      blocks.reserve(missing.size());
      for (const auto& pair : missing.pairs()) {
        if (x == pair.first) blocks.push_back(ket0_bra0());
        else if (x == pair.second) blocks.push_back(ketplus_braplus());
        else blocks.push_back(RationalMatrix::zero(2));
      }
      ops.push_back(direct_sum(blocks));
    }
  }
  r.projections = std::move(ops);
  return r;
}

Realization realize_rank_one(const Graph& g) {
  const auto missing = non_edges(g);
  const std::size_t n = g.vertex_count();
  const std::size_t dim = n + missing.size();
  Realization r;
  r.graph = g;
  r.method = RealizationMethod::rank_one;
  r.space_dim = dim;

  std::vector<RationalVector> psi(n, RationalVector(dim));
  for (Vertex x = 0; x < n; ++x) psi[x][x] = 1;
  for (std::size_t k = 0; k < missing.size(); ++k) {
    psi[missing.pairs()[k].first][n + k] = 1;
    psi[missing.pairs()[k].second][n + k] = 1;
  }

  Realization::ExactOps ops;
  ops.reserve(n);
  for (const auto& v : psi) {
    Rational norm2 = 0;
    for (const auto& c : v) norm2 += c * c;
    RationalMatrix p = outer(v, v);
    p *= Rational(1) / norm2;
    ops.push_back(std::move(p));
  }
  r.projections = std::move(ops);
  r.vectors = std::move(psi);
  return r;
}

Realization restrict_to_span(const Realization& r) {
  if (!r.vectors) throw DomainError("restrict_to_span: realization carries no rank-one vectors");
  const auto& psi = *r.vectors;
  const auto& ops = r.exact_projections();
  const std::size_t dim = r.space_dim;

  // Modified Gram–Schmidt, two passes per vector.
  std::vector<std::vector<double>> basis;
  for (const auto& v : psi) {
    std::vector<double> u(dim);
    double original = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      u[k] = v[k].get_d();
      original += u[k] * u[k];
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        double dot = 0.0;
        for (std::size_t k = 0; k < dim; ++k) dot += q[k] * u[k];
        for (std::size_t k = 0; k < dim; ++k) u[k] -= dot * q[k];
      }
    }
    double norm = 0.0;
    for (double c : u) norm += c * c;
    norm = std::sqrt(norm);
    if (norm <= 1e-10 * std::sqrt(original)) continue;
    for (double& c : u) c /= norm;
    basis.push_back(std::move(u));
  }

  const std::size_t rank = basis.size();
  ComplexMatrix q(dim, rank);
  for (std::size_t j = 0; j < rank; ++j)
    for (std::size_t k = 0; k < dim; ++k) q(k, j) = basis[j][k];
  const ComplexMatrix qt = q.adjoint();

  Realization out;
  out.graph = r.graph;
  out.method = RealizationMethod::rank_one_restricted;
  out.space_dim = rank;
  Realization::FloatOps restricted;
  restricted.reserve(ops.size());
  for (const auto& p : ops) restricted.push_back(qt * to_complex(p) * q);
  out.projections = std::move(restricted);
  return out;
}

Realization make_faithful(const Realization& r) {
  const auto& ops = r.exact_projections();
  const std::size_t n = ops.size();
  Realization out;
  out.graph = r.graph;
  out.method = RealizationMethod::faithful_augmented;
  out.space_dim = r.space_dim + n;
  Realization::ExactOps augmented;
  augmented.reserve(n);
  for (Vertex x = 0; x < n; ++x)
    augmented.push_back(direct_sum({ops[x], basis_projector<Rational>(n, x)}));
  out.projections = std::move(augmented);
  return out;
}

PvmRealization lift_to_pvms(const Realization& r) {
  const auto& ops = r.exact_projections();
  PvmRealization out;
  out.graph = r.graph;
  out.space_dim = r.space_dim;
  const auto identity = RationalMatrix::identity(r.space_dim);
  const auto zero = RationalMatrix::zero(r.space_dim);
  for (const auto& p : ops) out.pvms.push_back({p, identity - p});
  return out;
}

PvmRealization extend_outcomes(const Realization& r, const std::vector<std::size_t>& outcomes) {
  const auto& ops = r.exact_projections();
  if (outcomes.size() != ops.size())
    throw DimensionError("extend_outcomes: need one outcome count per vertex");
  std::vector<std::size_t> offset(ops.size());
  std::size_t extra = 0;
  for (std::size_t x = 0; x < ops.size(); ++x) {
    if (outcomes[x] < 2)
      throw DomainError("extend_outcomes: vertex " + std::to_string(x) + " needs at least 2 outcomes");
    offset[x] = extra;
    extra += outcomes[x] - 2;
  }

  const std::size_t base = r.space_dim;
  PvmRealization out;
  out.graph = r.graph;
  out.space_dim = base + extra;
  const auto identity = RationalMatrix::identity(base);
  for (std::size_t x = 0; x < ops.size(); ++x) {
    // The complement of p_x also covers the ancilla blocks of the other
    // vertices, so the elements resolve the identity on the whole space.
    RationalMatrix ancilla_rest = RationalMatrix::identity(extra);
    for (std::size_t i = 0; i < outcomes[x] - 2; ++i) ancilla_rest(offset[x] + i, offset[x] + i) = 0;

    std::vector<RationalMatrix> pvm;
    pvm.reserve(outcomes[x]);
    pvm.push_back(direct_sum({ops[x], RationalMatrix::zero(extra)}));
    pvm.push_back(direct_sum({identity - ops[x], ancilla_rest}));
    for (std::size_t i = 0; i < outcomes[x] - 2; ++i)
      pvm.push_back(basis_projector<Rational>(out.space_dim, base + offset[x] + i));
    out.pvms.push_back(std::move(pvm));
  }
  return out;
}

namespace {

void require_vertex_match(const Graph& g, std::size_t count) {
  if (g.vertex_count() != count)
    throw DimensionError("verify_realization: graph has " + std::to_string(g.vertex_count()) +
                         " vertices, realization has " + std::to_string(count));
}

template <typename M>
void require_shape(const M& m, std::size_t dim) {
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionError("verify_realization: operator is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(dim) + "x" +
                         std::to_string(dim));
}

Relation expected_relation(const Graph& g, Vertex v, Vertex w) {
  return g.adjacent(v, w) ? Relation::commuting : Relation::non_commuting;
}

void record_pair(VerificationReport& report, const Graph& g, Vertex v, Vertex w, bool observed_commute,
                 double norm) {
  const Relation expected = expected_relation(g, v, w);
  if ((expected == Relation::commuting) == observed_commute) return;
  Violation violation;
  violation.v = v;
  violation.w = w;
  violation.expected = expected;
  violation.commutator_norm = norm;
  violation.detail = expected == Relation::commuting ? "expected commuting, observed non-commuting"
                                                     : "expected non-commuting, observed commuting";
  report.violations.push_back(std::move(violation));
}

void finish(VerificationReport& report) { report.passed = report.violations.empty(); }

}  // namespace

VerificationReport verify_realization(const Graph& g, const Realization& r, double tol) {
  require_vertex_match(g, r.operator_count());
  VerificationReport report;
  const std::size_t n = g.vertex_count();

  if (r.exact()) {
    const auto& ops = r.exact_projections();
    for (const auto& p : ops) require_shape(p, r.space_dim);
    for (Vertex v = 0; v < n; ++v) {
      if (!is_projection(ops[v])) {
        report.violations.push_back({Violation::Kind::not_projection, v, v, Relation::commuting, 0.0,
                                     "operator is not a projection"});
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        const bool zero = commutes(ops[v], ops[w]);
        record_pair(report, g, v, w, zero, zero ? 0.0 : frobenius_norm(commutator(ops[v], ops[w])));
      }
    }
  } else {
    const auto& ops = r.float_projections();
    for (const auto& p : ops) require_shape(p, r.space_dim);
    for (Vertex v = 0; v < n; ++v) {
      if (!is_projection(ops[v], tol)) {
        report.violations.push_back({Violation::Kind::not_projection, v, v, Relation::commuting, 0.0,
                                     "operator is not a projection within tolerance"});
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        const double norm = frobenius_norm(commutator(ops[v], ops[w]));
        record_pair(report, g, v, w, norm <= tol, norm);
      }
    }
  }
  finish(report);
  return report;
}

VerificationReport verify_realization(const Graph& g, const PvmRealization& r) {
  require_vertex_match(g, r.pvms.size());
  VerificationReport report;
  const std::size_t n = g.vertex_count();
  const auto identity = RationalMatrix::identity(r.space_dim);
  const auto zero = RationalMatrix::zero(r.space_dim);

  std::vector<bool> valid(n, false);
  for (Vertex v = 0; v < n; ++v) {
    const auto& pvm = r.pvms[v];
    RationalMatrix sum(r.space_dim, r.space_dim);
    bool ok = !pvm.empty();
    for (std::size_t i = 0; i < pvm.size(); ++i) {
      require_shape(pvm[i], r.space_dim);
      ok = ok && is_projection(pvm[i]);
      sum += pvm[i];
      for (std::size_t j = i + 1; j < pvm.size() && ok; ++j) ok = product_equals(pvm[i], pvm[j], zero);
    }
    valid[v] = ok && sum == identity;
    if (!valid[v]) {
      report.violations.push_back({Violation::Kind::not_pvm, v, v, Relation::commuting, 0.0,
                                   "elements are not orthogonal projections summing to identity"});
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      bool all_commute = true;
      double worst = 0.0;
      // In a valid PVM the last element is 1 minus the others, so it
      // commutes with whatever they all commute with.
      const std::size_t pv = r.pvms[v].size() - (valid[v] ? 1 : 0);
      const std::size_t pw = r.pvms[w].size() - (valid[w] ? 1 : 0);
      for (std::size_t i = 0; i < pv; ++i) {
        for (std::size_t j = 0; j < pw; ++j) {
          const auto& p = r.pvms[v][i];
          const auto& q = r.pvms[w][j];
          if (!commutes(p, q)) {
            all_commute = false;
            worst = std::max(worst, frobenius_norm(commutator(p, q)));
          }
        }
      }
      record_pair(report, g, v, w, all_commute, worst);
    }
  }
  finish(report);
  return report;
}

bool is_faithful(const Realization& r, double tol) {
  if (r.exact()) {
    const auto& ops = r.exact_projections();
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j)
        if (ops[i] == ops[j]) return false;
    return true;
  }
  const auto& ops = r.float_projections();
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (frobenius_norm(ops[i] - ops[j]) <= tol) return false;
  return true;
}

}  // namespace jmg
