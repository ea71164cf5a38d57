#include "jmg/json_io.hpp"

#include <cctype>
#include <cmath>

#include "jmg/error.hpp"

namespace jmg::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return a;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(s) + "'");
  Rational q;
  q.get_num() = mpz_class(std::string(num));
  q.get_den() = mpz_class(std::string(den));
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  if (s.front() == '-') q = -q;
  return q;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  json out{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
  bool default_labels = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) default_labels = default_labels && g.label(v) == std::to_string(v);
  if (!default_labels) out["labels"] = g.labels();
  return out;
}

Graph graph_from_json(const json& j) {
  const std::size_t n = natural(field(j, "vertices"), "vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a 2-element array");
    edges.emplace_back(natural(e[0], "edge endpoint"), natural(e[1], "edge endpoint"));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = j["labels"];
    if (!l.is_array()) throw ParseError("labels must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("labels must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
  }
  try {
    return Graph(n, edges, std::move(labels));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Graph graph_from_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid graph JSON: ") + e.what(), e.byte);
    }
    return graph_from_json(j);
  }
  return parse_graph(text);
}

json to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (const auto& x : m.data()) entries.push_back(rational_to_string(x));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"scalar", "rational"}, {"entries", std::move(entries)}};
}

json to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& x : m.data()) entries.push_back({x.real(), x.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"scalar", "complex"}, {"entries", std::move(entries)}};
}

AnyMatrix matrix_from_json(const json& j) {
  const std::size_t rows = natural(field(j, "rows"), "rows");
  const std::size_t cols = natural(field(j, "cols"), "cols");
  const json& scalar = field(j, "scalar");
  const json& entries = array_field(j, "entries");
  if (entries.size() != rows * cols)
    throw ParseError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  if (scalar == "rational") {
    RationalMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].is_string()) m.data()[k] = rational_from_string(entries[k].get<std::string>());
      else if (entries[k].is_number_integer()) m.data()[k] = Rational(entries[k].get<long>());
      else throw ParseError("rational entries must be strings \"num/den\"");
    }
    return m;
  }
  if (scalar == "complex") {
    ComplexMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const json& e = entries[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("complex entries must be [re, im] number pairs");
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite matrix entry");
      m.data()[k] = Complex(re, im);
    }
    return m;
  }
  throw ParseError("scalar must be \"rational\" or \"complex\"");
}

RationalMatrix rational_matrix_from_json(const json& j) {
  auto m = matrix_from_json(j);
  if (!std::holds_alternative<RationalMatrix>(m)) throw ParseError("expected a rational matrix");
  return std::get<RationalMatrix>(std::move(m));
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  auto m = matrix_from_json(j);
  if (auto* q = std::get_if<RationalMatrix>(&m)) return to_complex(*q);
  return std::get<ComplexMatrix>(std::move(m));
}

json to_json(const Realization& r) {
  json ops = json::array();
  std::visit([&](const auto& v) {
    for (const auto& m : v) ops.push_back(to_json(m));
  }, r.projections);
  json out{{"graph", to_json(r.graph)},
           {"space_dim", r.space_dim},
           {"method", std::string(to_string(r.method))},
           {"projections", std::move(ops)}};
  if (r.vectors) {
    json vecs = json::array();
    for (const auto& v : *r.vectors) {
      json entries = json::array();
      for (const auto& x : v) entries.push_back(rational_to_string(x));
      vecs.push_back(std::move(entries));
    }
    out["vectors"] = std::move(vecs);
  }
  return out;
}

Realization realization_from_json(const json& j) {
  Realization r;
  r.graph = graph_from_json(field(j, "graph"));
  r.space_dim = natural(field(j, "space_dim"), "space_dim");
  const json& method = field(j, "method");
  if (!method.is_string()) throw ParseError("method must be a string");
  try {
    r.method = parse_realization_method(method.get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  const json& ops = array_field(j, "projections");
  Realization::ExactOps exact;
  Realization::FloatOps floats;
  for (const auto& m : ops) {
    auto parsed = matrix_from_json(m);
    if (auto* q = std::get_if<RationalMatrix>(&parsed)) exact.push_back(std::move(*q));
    else floats.push_back(std::get<ComplexMatrix>(std::move(parsed)));
  }
  if (!exact.empty() && !floats.empty()) throw ParseError("realization mixes rational and complex operators");
  if (floats.empty()) r.projections = std::move(exact);
  else r.projections = std::move(floats);
  if (j.contains("vectors")) {
    std::vector<RationalVector> vecs;
    for (const auto& v : array_field(j, "vectors")) {
      if (!v.is_array()) throw ParseError("vectors must be arrays of rationals");
      RationalVector out;
      for (const auto& x : v) {
        if (!x.is_string()) throw ParseError("vector entries must be rational strings");
        out.push_back(rational_from_string(x.get<std::string>()));
      }
      vecs.push_back(std::move(out));
    }
    r.vectors = std::move(vecs);
  }
  return r;
}

json to_json(const PvmRealization& r) {
  json pvms = json::array();
  for (const auto& pvm : r.pvms) {
    json elements = json::array();
    for (const auto& m : pvm) elements.push_back(to_json(m));
    pvms.push_back(std::move(elements));
  }
  return {{"graph", to_json(r.graph)}, {"space_dim", r.space_dim}, {"pvms", std::move(pvms)}};
}

PvmRealization pvm_realization_from_json(const json& j) {
  PvmRealization r;
  r.graph = graph_from_json(field(j, "graph"));
  r.space_dim = natural(field(j, "space_dim"), "space_dim");
  for (const auto& pvm : array_field(j, "pvms")) {
    if (!pvm.is_array()) throw ParseError("each PVM must be an array of matrices");
    std::vector<RationalMatrix> elements;
    for (const auto& m : pvm) elements.push_back(rational_matrix_from_json(m));
    r.pvms.push_back(std::move(elements));
  }
  return r;
}

json to_json(const VerificationReport& r, const Graph& g) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    const char* kind = v.kind == Violation::Kind::wrong_relation   ? "wrong_relation"
                       : v.kind == Violation::Kind::not_projection ? "not_projection"
                                                                   : "not_pvm";
    json item{{"kind", kind}, {"detail", v.detail}};
    if (v.kind == Violation::Kind::wrong_relation) {
      item["pair"] = {g.label(v.v), g.label(v.w)};
      item["expected"] = v.expected == Relation::commuting ? "commuting" : "non_commuting";
      item["commutator_norm"] = v.commutator_norm;
    } else {
      item["vertex"] = g.label(v.v);
    }
    violations.push_back(std::move(item));
  }
  return {{"passed", r.passed}, {"violations", std::move(violations)}};
}

json to_json(const Hypergraph& h) {
  return {{"vertices", h.vertex_count()},
          {"downward_closed", h.downward_closed()},
          {"hyperedges", h.hyperedges()},
          {"maximal_hyperedges", h.maximal_hyperedges()}};
}

json to_json(const Partition& p) { return p.blocks; }

json to_json(const LowerBoundGraph& g) {
  json bits = json::array();
  for (std::size_t b : g.bitstrings) {
    std::string s(g.control.size(), '0');
    for (std::size_t k = 0; k < g.control.size(); ++k)
      if ((b >> k) & 1U) s[k] = '1';
    bits.push_back(s);
  }
  return {{"dimension", g.dimension},
          {"bell_number", g.bell_number},
          {"graph", to_json(g.graph)},
          {"action", g.action},
          {"control", g.control},
          {"bitstrings", std::move(bits)}};
}

json to_json(const Povm& p) {
  json elements = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) elements[p.outcomes[i]] = to_json(p.elements[i]);
  json out{{"space_dim", p.space_dim}, {"outcomes", p.outcomes}, {"elements", std::move(elements)}};
  if (p.projective) out["projective"] = true;
  return out;
}

Povm povm_from_json(const json& j) {
  Povm p;
  p.space_dim = natural(field(j, "space_dim"), "space_dim");
  for (const auto& o : array_field(j, "outcomes")) {
    if (!o.is_string()) throw ParseError("outcomes must be strings");
    p.outcomes.push_back(o.get<std::string>());
  }
  const json& elements = field(j, "elements");
  if (!elements.is_object()) throw ParseError("elements must be an outcome-keyed object");
  if (elements.size() != p.outcomes.size()) throw ParseError("elements and outcomes differ in size");
  for (const auto& o : p.outcomes) {
    const auto it = elements.find(o);
    if (it == elements.end()) throw ParseError("no element for outcome '" + o + "'");
    ComplexMatrix m = complex_matrix_from_json(*it);
    if (m.rows() != p.space_dim || m.cols() != p.space_dim)
      throw ParseError("element '" + o + "' does not match space_dim");
    p.elements.push_back(std::move(m));
  }
  if (j.contains("projective")) {
    if (!j["projective"].is_boolean()) throw ParseError("projective must be a boolean");
    p.projective = j["projective"].get<bool>();
  }
  return p;
}

json to_json(const JointPovm& p) {
  json elements = json::array();
  for (std::size_t t = 0; t < p.elements.size(); ++t)
    elements.push_back({{"outcome", p.labels_of(t)}, {"matrix", to_json(p.elements[t])}});
  return {{"space_dim", p.space_dim}, {"factor_outcomes", p.factor_outcomes}, {"elements", std::move(elements)}};
}

JointPovm joint_povm_from_json(const json& j) {
  JointPovm p;
  p.space_dim = natural(field(j, "space_dim"), "space_dim");
  for (const auto& f : array_field(j, "factor_outcomes")) {
    if (!f.is_array()) throw ParseError("factor_outcomes must be arrays of strings");
    std::vector<std::string> labels;
    for (const auto& l : f) {
      if (!l.is_string()) throw ParseError("factor_outcomes must be arrays of strings");
      labels.push_back(l.get<std::string>());
    }
    p.factor_outcomes.push_back(std::move(labels));
  }
  p.elements.assign(p.outcome_count(), ComplexMatrix(p.space_dim, p.space_dim));
  std::vector<bool> seen(p.elements.size(), false);
  for (const auto& e : array_field(j, "elements")) {
    const json& key = field(e, "outcome");
    if (!key.is_array() || key.size() != p.factor_count()) throw ParseError("outcome key has wrong length");
    std::vector<std::size_t> tuple;
    for (std::size_t n = 0; n < key.size(); ++n) {
      const auto& labels = p.factor_outcomes[n];
      const auto it = key[n].is_string() ? std::find(labels.begin(), labels.end(), key[n].get<std::string>())
                                         : labels.end();
      if (it == labels.end()) throw ParseError("unknown outcome label in joint key");
      tuple.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    const std::size_t flat = p.flat_index(tuple);
    if (seen[flat]) throw ParseError("duplicate joint outcome key");
    seen[flat] = true;
    p.elements[flat] = complex_matrix_from_json(field(e, "matrix"));
  }
  for (bool s : seen)
    if (!s) throw ParseError("joint POVM is missing an outcome tuple");
  return p;
}

json to_json(const PovmCheckReport& r) {
  return {{"valid", r.valid},
          {"reason", r.reason},
          {"max_asymmetry", r.max_asymmetry},
          {"min_eigenvalue", r.min_eigenvalue},
          {"max_eigenvalue", r.max_eigenvalue},
          {"identity_error", r.identity_error},
          {"idempotency_error", r.idempotency_error}};
}

json to_json(const JmReport& r) {
  json history = json::array();
  for (const auto& [k, res] : r.residual_history) history.push_back({k, res});
  json out{{"verdict", std::string(to_string(r.verdict))},
           {"iterations", r.iterations},
           {"final_residual", r.final_residual},
           {"plateaued", r.plateaued},
           {"residual_history", std::move(history)}};
  if (r.witness) {
    out["witness"] = to_json(*r.witness);
    out["marginal_error"] = r.marginal_error;
  }
  return out;
}

json to_json(const DilationResult& r) {
  return {{"enlarged_dim", r.enlarged_dim},
          {"isometry", to_json(r.isometry)},
          {"pvm", to_json(r.pvm)},
          {"isometry_error", r.isometry_error},
          {"max_reconstruction_error", r.max_reconstruction_error}};
}

json to_json(const JointDilationResult& r) {
  json marginals = json::array();
  for (const auto& p : r.marginal_pvms) marginals.push_back(to_json(p));
  return {{"joint", to_json(r.joint)},
          {"marginal_pvms", std::move(marginals)},
          {"witness_error", r.witness_error},
          {"input_error", r.input_error},
          {"max_commutator", r.max_commutator}};
}

json to_json(const HollowTriangleReport& r) {
  json povms = json::array();
  for (const auto& p : r.povms) povms.push_back(to_json(p));
  json pairs = json::array();
  const char* names[3] = {"E1,E2", "E1,E3", "E2,E3"};
  for (std::size_t k = 0; k < 3; ++k) {
    json entry = to_json(r.pairs[k]);
    entry.erase("witness");
    entry["pair"] = names[k];
    pairs.push_back(std::move(entry));
  }
  json triple = to_json(r.triple);
  triple.erase("witness");
  return {{"eta", r.eta},
          {"povms", std::move(povms)},
          {"pairs", std::move(pairs)},
          {"triple", std::move(triple)},
          {"hypergraph", to_json(r.observed)},
          {"graph_induced", r.graph_induced},
          {"hollow_triangle", r.hollow_triangle},
          {"flags", r.flags},
          {"conclusion", r.conclusion}};
}

}  // namespace jmg::io
