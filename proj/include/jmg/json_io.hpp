#pragma once

#include <json.hpp>

#include <string_view>
#include <variant>

#include "jmg/dilation.hpp"
#include "jmg/graph.hpp"
#include "jmg/hollow_triangle.hpp"
#include "jmg/hypergraph.hpp"
#include "jmg/jm_solver.hpp"
#include "jmg/partitions.hpp"
#include "jmg/povm.hpp"
#include "jmg/realizer.hpp"

// Wire formats. Every *_from_json throws ParseError on schema violations.
namespace jmg::io {

using json = nlohmann::json;
using AnyMatrix = std::variant<RationalMatrix, ComplexMatrix>;

std::string rational_to_string(const Rational& q);
/// Accepts "n" or "n/d" with optional leading '-', d ≠ 0.
Rational rational_from_string(std::string_view s);

json to_json(const Graph& g);
Graph graph_from_json(const json& j);
/// Edge-list text, or graph JSON when the first non-blank character is '{'.
Graph graph_from_text(std::string_view text);

json to_json(const RationalMatrix& m);
json to_json(const ComplexMatrix& m);
AnyMatrix matrix_from_json(const json& j);
RationalMatrix rational_matrix_from_json(const json& j);
/// Rational matrices are converted.
ComplexMatrix complex_matrix_from_json(const json& j);

json to_json(const Realization& r);
Realization realization_from_json(const json& j);
json to_json(const PvmRealization& r);
PvmRealization pvm_realization_from_json(const json& j);
json to_json(const VerificationReport& r, const Graph& g);

json to_json(const Hypergraph& h);
json to_json(const Partition& p);
json to_json(const LowerBoundGraph& g);

json to_json(const Povm& p);
Povm povm_from_json(const json& j);
json to_json(const JointPovm& p);
JointPovm joint_povm_from_json(const json& j);
json to_json(const PovmCheckReport& r);

json to_json(const JmReport& r);
json to_json(const DilationResult& r);
json to_json(const JointDilationResult& r);
json to_json(const HollowTriangleReport& r);

}  // namespace jmg::io
