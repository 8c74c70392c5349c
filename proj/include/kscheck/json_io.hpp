#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kscheck/experiment.hpp"
#include "kscheck/family.hpp"
#include "kscheck/ks_coloring.hpp"
#include "kscheck/orthogonality_graph.hpp"
#include "kscheck/quantum.hpp"
#include "kscheck/rational.hpp"

namespace kscheck {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars and vectors
// ---------------------------------------------------------------------------

inline Json to_json(const Rational& q) { return format_rational(q); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) {
    throw std::invalid_argument("expected rational string \"p/q\"");
  }
  return parse_rational(j.get<std::string>());
}

inline Json to_json(const RationalVector3& v) {
  return Json::array({to_json(v.x), to_json(v.y), to_json(v.z)});
}

inline Json to_json(const RationalUnitVector3& v) { return to_json(v.vec()); }

inline RationalUnitVector3 rational_unit_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("expected 3-element vector");
  }
  return RationalUnitVector3(rational_from_json(j[0]), rational_from_json(j[1]),
                             rational_from_json(j[2]));
}

inline Json to_json(const RealVector3& v) {
  return Json::array({v.x, v.y, v.z});
}

inline RealVector3 real_vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("expected 3-element vector");
  }
  return RealVector3{j[0].get<double>(), j[1].get<double>(),
                     j[2].get<double>()};
}

// ---------------------------------------------------------------------------
// Vector sets: { "dimension": 3, "field": "rational"|"real", "vectors": [...] }
// ---------------------------------------------------------------------------

using VectorSet =
    std::variant<std::vector<RationalUnitVector3>, std::vector<RealVector3>>;

inline Json to_json(const std::vector<RationalUnitVector3>& vectors) {
  Json arr = Json::array();
  for (const auto& v : vectors) arr.push_back(to_json(v));
  return Json{{"dimension", 3}, {"field", "rational"}, {"vectors", arr}};
}

inline Json to_json(const std::vector<RealVector3>& vectors) {
  Json arr = Json::array();
  for (const auto& v : vectors) arr.push_back(to_json(v));
  return Json{{"dimension", 3}, {"field", "real"}, {"vectors", arr}};
}

inline VectorSet vector_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("vectors")) {
    throw std::invalid_argument("vector set: missing field/vectors");
  }
  if (j.contains("dimension") && j["dimension"].get<int>() != 3) {
    throw std::invalid_argument("vector set: only dimension 3 is supported");
  }
  const std::string field = j["field"].get<std::string>();
  const Json& vecs = j["vectors"];
  if (!vecs.is_array() || vecs.empty()) {
    throw std::invalid_argument("vector set: vectors must be nonempty");
  }
  if (field == "rational") {
    std::vector<RationalUnitVector3> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) out.push_back(rational_unit_from_json(v));
    return out;
  }
  if (field == "real") {
    std::vector<RealVector3> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) out.push_back(real_vector_from_json(v));
    return out;
  }
  throw std::invalid_argument("vector set: field must be rational or real");
}

// ---------------------------------------------------------------------------
// Families: { "cA": "104/185", "cB": ..., "cC": ..., "cD": ... }
// ---------------------------------------------------------------------------

inline Json family_to_json(const FamilyParameters& p) {
  return Json{{"cA", format_rational(p.a.c())},
              {"cB", format_rational(p.b.c())},
              {"cC", format_rational(p.c.c())},
              {"cD", format_rational(p.d.c())}};
}

inline FamilyParameters family_from_json(const Json& j) {
  for (const char* key : {"cA", "cB", "cC", "cD"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("family: missing ") + key);
    }
  }
  return family_params(rational_from_json(j["cA"]), rational_from_json(j["cB"]),
                       rational_from_json(j["cC"]), rational_from_json(j["cD"]));
}

// ---------------------------------------------------------------------------
// Partial colorings: { "assignments": { "<input index>": 0|1, ... } }
// ---------------------------------------------------------------------------

inline Json to_json(const PartialColoring& partial) {
  Json m = Json::object();
  for (auto [v, value] : partial.assignments) {
    m[std::to_string(v)] = value;
  }
  return Json{{"assignments", m}};
}

inline PartialColoring partial_from_json(const Json& j) {
  PartialColoring partial;
  if (!j.is_object() || !j.contains("assignments") ||
      !j["assignments"].is_object()) {
    throw std::invalid_argument("partial coloring: missing assignments object");
  }
  for (const auto& [key, value] : j["assignments"].items()) {
    std::size_t index = 0;
    try {
      index = static_cast<std::size_t>(std::stoull(key));
    } catch (const std::exception&) {
      throw std::invalid_argument("partial coloring: bad index " + key);
    }
    const int v = value.get<int>();
    if (v != 0 && v != 1) {
      throw std::invalid_argument("partial coloring: values must be 0 or 1");
    }
    auto [it, inserted] = partial.assignments.emplace(index, v);
    if (!inserted && it->second != v) {
      throw std::invalid_argument("partial coloring: conflicting assignment");
    }
  }
  return partial;
}

// Rebases input-indexed assignments onto graph vertices. Duplicated inputs
// that received contradictory values are an input error.
inline PartialColoring translate_partial(const OrthogonalityGraph& graph,
                                         const PartialColoring& by_input) {
  PartialColoring out;
  for (auto [input_index, value] : by_input.assignments) {
    if (input_index >= graph.input_to_vertex.size()) {
      throw std::invalid_argument("partial coloring: index out of range");
    }
    const std::size_t vertex = graph.input_to_vertex[input_index];
    auto [it, inserted] = out.assignments.emplace(vertex, value);
    if (!inserted && it->second != value) {
      throw std::invalid_argument(
          "partial coloring: contradictory values on one direction");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Colorability results:
// { "colorable": bool, "witness": [...]|null, "certificate": [...]|null }
// ---------------------------------------------------------------------------

inline const char* step_reason_name(StepReason r) {
  switch (r) {
    case StepReason::given: return "given";
    case StepReason::orthogonal_to_one: return "orthogonal-to-one";
    case StepReason::context_completion: return "context-completion";
  }
  return "?";
}

inline const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::edge_both_one: return "edge-both-one";
    case ViolationKind::context_all_zero: return "context-all-zero";
    case ViolationKind::search_exhausted: return "search-exhausted";
  }
  return "?";
}

// Witness entries are reported per input position; `input_to_vertex` maps
// them onto graph vertices (pass the identity for graph-indexed output).
inline Json colorability_to_json(const ColorabilityResult& result,
                                 const std::vector<std::size_t>& input_to_vertex) {
  Json out{{"colorable", result.colorable()},
           {"witness", nullptr},
           {"certificate", nullptr}};
  if (result.witness) {
    Json w = Json::array();
    for (std::size_t vertex : input_to_vertex) {
      w.push_back(result.witness->values[vertex]);
    }
    out["witness"] = w;
  }
  if (result.certificate) {
    Json cert = Json::array();
    for (const auto& step : result.certificate->steps) {
      cert.push_back(Json{{"vertex", step.vertex},
                          {"value", step.value},
                          {"reason", step_reason_name(step.reason)},
                          {"sources", step.sources}});
    }
    const Violation& viol = result.certificate->violation;
    Json v{{"violation", violation_name(viol.kind)},
           {"vertices", viol.vertices}};
    if (viol.kind == ViolationKind::search_exhausted) {
      v["nodes_explored"] = viol.nodes_explored;
    }
    cert.push_back(v);
    out["certificate"] = cert;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json fvalue_to_json(const FValue& f) {
  return Json{{"F_exact", format_rational(f.value())},
              {"F_decimal", decimal_string(f.value(), 12)},
              {"F_3dp", decimal_string(f.value(), 3)},
              {"term_AB", format_rational(f.term_ab)},
              {"term_CB", format_rational(f.term_cb)}};
}

inline Json to_json(const ExactCheck& check) {
  return Json{{"name", check.name},
              {"value", format_rational(check.value)},
              {"expected", format_rational(check.expected)},
              {"passed", check.passed}};
}

inline Json checks_to_json(const std::vector<ExactCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

inline Json to_json(const SumRuleReport& report) {
  Json arr = Json::array();
  for (const auto& c : report.checks) {
    arr.push_back(Json{
        {"name", c.name}, {"passed", c.passed}, {"deviation", c.deviation}});
  }
  return Json{{"all_passed", report.all_passed}, {"checks", arr}};
}

inline Json to_json(const EnsembleReport& r) {
  return Json{{"model", r.model},
              {"epsilon", r.epsilon},
              {"samples", r.samples},
              {"seed", r.seed},
              {"counts",
               Json{{"trials", r.counts.trials},
                    {"accepted", r.counts.accepted},
                    {"measured_a", r.counts.measured_a},
                    {"ones_a", r.counts.ones_a},
                    {"measured_c", r.counts.measured_c},
                    {"ones_c", r.counts.ones_c}}},
              {"p_b", r.p_b},
              {"p_a_given_b", r.p_a_given_b},
              {"p_c_given_b", r.p_c_given_b},
              {"f_estimate", r.f_estimate},
              {"confidence_radius", r.confidence_radius},
              {"degenerate", r.degenerate}};
}

inline Json to_json(const SweepReport& sweep) {
  Json entries = Json::array();
  for (const auto& e : sweep.entries) {
    Json entry{{"epsilon", e.epsilon},
               {"model_report", nullptr},
               {"qm_report", nullptr}};
    if (e.model_report) entry["model_report"] = to_json(*e.model_report);
    if (e.qm_report) entry["qm_report"] = to_json(*e.qm_report);
    entries.push_back(std::move(entry));
  }
  return Json{{"model", sweep.model},
              {"samples", sweep.samples},
              {"seed", sweep.seed},
              {"entries", entries}};
}

inline std::string sweep_to_csv(const SweepReport& sweep) {
  std::string csv =
      "epsilon,samples,model_seed,model_p_b,model_p_a_given_b,"
      "model_p_c_given_b,model_f,model_radius,model_degenerate,"
      "qm_seed,qm_p_b,qm_p_a_given_b,qm_p_c_given_b,qm_f,qm_radius,"
      "qm_degenerate\n";
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  auto report_cells = [&](const std::optional<EnsembleReport>& r) {
    if (!r) return std::string(",,,,,,");
    return std::to_string(r->seed) + "," + num(r->p_b) + "," +
           num(r->p_a_given_b) + "," + num(r->p_c_given_b) + "," +
           num(r->f_estimate) + "," + num(r->confidence_radius) + "," +
           (r->degenerate ? "1" : "0");
  };
  for (const auto& e : sweep.entries) {
    csv += num(e.epsilon) + "," + std::to_string(sweep.samples) + "," +
           report_cells(e.model_report) + "," + report_cells(e.qm_report) +
           "\n";
  }
  return csv;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace kscheck
