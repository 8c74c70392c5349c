// Command-line front end: exact construction and validation of the rational
// direction families, coloring feasibility checks with certificates, the
// exact F functional, perturbed-configuration bounds, and finite-precision
// measurement simulations with JSON/CSV output.
//
// Exit codes are the machine contract: 0 success/claim confirmed,
// 1 claim violation, 2 invalid input.

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kscheck/kscheck.hpp"

namespace {

using namespace kscheck;

constexpr std::uint64_t kDefaultSeed = 12345;

struct GlobalOptions {
  bool json = false;
  std::string output;
  std::uint64_t seed = kDefaultSeed;
};

void emit(const GlobalOptions& opts, const Json& j,
          const std::string& human_text) {
  if (opts.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human_text;
  }
  if (!opts.output.empty()) {
    write_text_file(opts.output, j.dump(2) + "\n");
  }
}

FamilyParameters load_family(bool paper_params, const std::string& family_path) {
  if (paper_params != family_path.empty()) {
    throw std::invalid_argument(
        "exactly one of --paper-params or --family is required");
  }
  if (paper_params) return paper_parameters();
  return family_from_json(load_json_file(family_path));
}

std::string describe_step(const CertificateStep& step,
                          const std::vector<std::string>& labels) {
  std::string s = "  ";
  switch (step.reason) {
    case StepReason::given:
      s += "given   ";
      break;
    case StepReason::orthogonal_to_one:
      s += "forced  ";
      break;
    case StepReason::context_completion:
      s += "forced  ";
      break;
  }
  s += "f(" + labels[step.vertex] + ") = " + std::to_string(step.value);
  if (step.reason == StepReason::orthogonal_to_one) {
    s += "   [orthogonal to " + labels[step.sources[0]] + " = 1]";
  } else if (step.reason == StepReason::context_completion) {
    s += "   [context with " + labels[step.sources[0]] + " = " +
         labels[step.sources[1]] + " = 0]";
  }
  return s + "\n";
}

std::string describe_certificate(const InfeasibilityCertificate& cert,
                                 const std::vector<std::string>& labels) {
  std::string s;
  for (const auto& step : cert.steps) s += describe_step(step, labels);
  s += "  violation: ";
  switch (cert.violation.kind) {
    case ViolationKind::edge_both_one:
      s += "orthogonal pair " + labels[cert.violation.vertices[0]] + ", " +
           labels[cert.violation.vertices[1]] + " both valued 1";
      break;
    case ViolationKind::context_all_zero:
      s += "context {" + labels[cert.violation.vertices[0]] + ", " +
           labels[cert.violation.vertices[1]] + ", " +
           labels[cert.violation.vertices[2]] + "} entirely valued 0";
      break;
    case ViolationKind::search_exhausted:
      s += "complete search exhausted (" +
           std::to_string(cert.violation.nodes_explored) + " nodes)";
      break;
  }
  return s + "\n";
}

int cmd_verify_lemma1(const GlobalOptions& opts, bool paper_params,
                      const std::string& family_path) {
  FamilyParameters params = load_family(paper_params, family_path);
  NineVectorSet set = build_nine_vectors(params);
  std::vector<ExactCheck> checks = validate_nine(set);
  NineVectorGraph nine = build_nine_graph(set);
  ColorabilityResult result =
      find_ks_coloring(nine.graph.structure, all_three_one_partial(nine));

  std::vector<std::string> labels(nine.graph.vertex_count());
  for (std::size_t i = 0; i < 9; ++i) {
    labels[nine.vertex_of[i]] = nine_vector_names()[i];
  }
  std::size_t forced_steps = 0;
  if (result.certificate) {
    for (const auto& step : result.certificate->steps) {
      if (step.reason != StepReason::given) ++forced_steps;
    }
  }
  Json j{{"family", family_to_json(params)},
         {"validation", checks_to_json(checks)},
         {"validation_passed", all_checks_pass(checks)},
         {"colorable_with_all_three_one", result.colorable()},
         {"forced_steps", forced_steps},
         {"result", colorability_to_json(result, nine.graph.input_to_vertex)}};

  std::string text;
  text += "exact validation: ";
  text += all_checks_pass(checks) ? "13/13 checks passed\n" : "FAILED\n";
  if (result.colorable()) {
    text +=
        "UNEXPECTED: a coloring with f(A) = f(B) = f(C) = 1 exists for this "
        "family\n";
    emit(opts, j, text);
    return 1;
  }
  text += "no coloring admits f(A) = f(B) = f(C) = 1; certificate:\n";
  text += describe_certificate(*result.certificate, labels);
  emit(opts, j, text);
  return all_checks_pass(checks) ? 0 : 1;
}

int cmd_compute_f(const GlobalOptions& opts, bool paper_params,
                  const std::string& family_path) {
  FamilyParameters params = load_family(paper_params, family_path);
  FValue f = f_qm(params);
  Json j = fvalue_to_json(f);
  j["family"] = family_to_json(params);
  std::string text;
  text += "F       = " + format_rational(f.value()) + "\n";
  text += "decimal = " + decimal_string(f.value(), 12) + "\n";
  text += "3dp     = " + decimal_string(f.value(), 3) + "\n";
  text += "term_AB = " + format_rational(f.term_ab) + "  (" +
          decimal_string(f.term_ab, 12) + ")\n";
  text += "term_CB = " + format_rational(f.term_cb) + "  (" +
          decimal_string(f.term_cb, 12) + ")\n";
  emit(opts, j, text);
  return 0;
}

int cmd_check_colorable(const GlobalOptions& opts, const std::string& vectors_path,
                        const std::string& partial_path, double tolerance,
                        bool no_pair_rule) {
  VectorSet vectors = vector_set_from_json(load_json_file(vectors_path));
  OrthogonalityGraph graph;
  if (const auto* rational =
          std::get_if<std::vector<RationalUnitVector3>>(&vectors)) {
    graph = build_graph(*rational);
  } else {
    graph = build_graph(std::get<std::vector<RealVector3>>(vectors), tolerance);
  }
  PartialColoring partial;
  if (!partial_path.empty()) {
    partial = translate_partial(graph,
                                partial_from_json(load_json_file(partial_path)));
  }
  ColoringRules rules{!no_pair_rule};
  ColorabilityResult result =
      find_ks_coloring(graph.structure, partial, rules);
  Json j = colorability_to_json(result, graph.input_to_vertex);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    labels.push_back("#" + std::to_string(i));
  }
  std::string text = "vertices after canonicalization: " +
                     std::to_string(graph.vertex_count()) + ", edges: " +
                     std::to_string(graph.structure.edges.size()) +
                     ", contexts: " +
                     std::to_string(graph.structure.contexts.size()) + "\n";
  if (result.colorable()) {
    text += "colorable; witness (by input position):";
    for (std::size_t input = 0; input < graph.input_to_vertex.size(); ++input) {
      text += " " + std::to_string(
                        result.witness->values[graph.input_to_vertex[input]]);
    }
    text += "\n";
    emit(opts, j, text);
    return 0;
  }
  text += "not colorable; certificate:\n";
  text += describe_certificate(*result.certificate, labels);
  emit(opts, j, text);
  return 1;
}

int cmd_simulate(const GlobalOptions& opts, const std::string& model_name,
                 bool paper_params, const std::string& family_path,
                 std::vector<double> epsilons, std::uint64_t samples,
                 const std::string& one_axis_arg) {
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  FamilyParameters params = load_family(paper_params, family_path);
  Axis one_axis;
  if (one_axis_arg == "auto") {
    // Matching the preparation direction's own color keeps the filter
    // non-degenerate in the high-precision limit.
    one_axis = meyer_color(build_nine_vectors(params).b);
  } else if (one_axis_arg.size() == 1) {
    one_axis = axis_from_letter(one_axis_arg[0]);
  } else {
    throw std::invalid_argument("--one-axis must be auto, X, Y or Z");
  }
  SweepReport sweep;
  if (model_name == "meyer") {
    MeyerModel model(one_axis);
    sweep = precision_sweep(model, params, epsilons, samples, opts.seed);
  } else if (model_name == "rotated-meyer") {
    RotatedMeyerModel model(one_axis);
    sweep = precision_sweep(model, params, epsilons, samples, opts.seed);
  } else if (model_name == "qm") {
    sweep = qm_reference_sweep(params, epsilons, samples, opts.seed);
  } else {
    throw std::invalid_argument("--model must be meyer, rotated-meyer or qm");
  }
  Json j = to_json(sweep);
  j["family"] = family_to_json(params);
  std::string text = "model: " + sweep.model +
                     "  samples: " + std::to_string(samples) +
                     "  seed: " + std::to_string(opts.seed) + "\n";
  auto line = [](const EnsembleReport& r) {
    char buf[160];
    if (r.degenerate) {
      std::snprintf(buf, sizeof(buf),
                    "    %-18s p_b=%.5f  DEGENERATE (no accepted trials)\n",
                    r.model.c_str(), r.p_b);
    } else {
      std::snprintf(buf, sizeof(buf),
                    "    %-18s p_b=%.5f  F=%.5f  +-%.5f (3 sigma)\n",
                    r.model.c_str(), r.p_b, r.f_estimate, r.confidence_radius);
    }
    return std::string(buf);
  };
  for (const auto& e : sweep.entries) {
    char head[48];
    std::snprintf(head, sizeof(head), "  epsilon = %g\n", e.epsilon);
    text += head;
    if (e.model_report) text += line(*e.model_report);
    if (e.qm_report) text += line(*e.qm_report);
  }
  emit(opts, j, text);
  if (!opts.output.empty()) {
    std::string csv_path = opts.output;
    if (auto pos = csv_path.rfind('.'); pos != std::string::npos) {
      csv_path = csv_path.substr(0, pos);
    }
    csv_path += ".csv";
    write_text_file(csv_path, sweep_to_csv(sweep));
  }
  return 0;
}

int cmd_clifton_kent(const GlobalOptions& opts, double epsilon, int seeds) {
  if (seeds < 1) throw std::invalid_argument("--seeds must be >= 1");
  if (!(epsilon >= 0.0) || epsilon >= 0.1) {
    throw std::invalid_argument("--epsilon must lie in [0, 0.1)");
  }
  Json entries = Json::array();
  double max_bound = 0.0;
  double min_prob = 1.0;
  double max_prob = 0.0;
  double min_gap = 1.0;
  bool pass = true;
  for (int k = 0; k < seeds; ++k) {
    const std::uint64_t config_seed = sub_seed(opts.seed, k);
    CKConfiguration config = build_ck_configuration(epsilon, config_seed);
    const double bound = ck_union_bound(config);
    const double prob = transition_prob(config.a_prime, config.b_prime);
    entries.push_back(Json{{"seed", config_seed},
                           {"union_bound", bound},
                           {"transition_prob_ab", prob}});
    max_bound = std::max(max_bound, bound);
    min_prob = std::min(min_prob, prob);
    max_prob = std::max(max_prob, prob);
    min_gap = std::min(min_gap, prob - bound);
    if (!(bound < 0.01 && prob > 0.09)) pass = false;
  }
  Json j{{"epsilon", epsilon}, {"seeds", seeds},
         {"master_seed", opts.seed}, {"entries", entries},
         {"max_union_bound", max_bound}, {"min_transition_prob", min_prob},
         {"max_transition_prob", max_prob}, {"min_gap", min_gap},
         {"pass", pass}};
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "epsilon = %g over %d seeds\n"
                "  max union bound        = %.3e\n"
                "  transition prob |<a'|b'>|^2 in [%.6f, %.6f]\n"
                "  min gap (prob - bound) = %.6f\n"
                "  gate (bound < 0.01 and prob > 0.09): %s\n",
                epsilon, seeds, max_bound, min_prob, max_prob, min_gap,
                pass ? "pass" : "FAIL");
  emit(opts, j, std::string(buf));
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kscheck: exact rational constructions, coloring feasibility "
      "certificates and finite-precision measurement simulations"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "emit JSON on stdout instead of text");
  app.add_option("--output", opts.output, "write the JSON report to this path");
  app.add_option("--seed", opts.seed,
                 "master seed for randomized subcommands (default 12345)");

  bool paper_params = false;
  std::string family_path;
  auto enable_global_flags = [](CLI::App* sub) { sub->fallthrough(); };

  auto* verify = app.add_subcommand(
      "verify-lemma1",
      "build the nine-direction family, validate the exact relations and "
      "certify that no coloring assigns 1 to all of A, B, C");
  verify->add_flag("--paper-params", paper_params,
                   "use the built-in canonical parameter values");
  verify->add_option("--family", family_path, "family JSON file");
  enable_global_flags(verify);

  auto* computef = app.add_subcommand(
      "compute-f", "exact F = |<A|B>|^2 + |<C|B>|^2 for a family");
  computef->add_flag("--paper-params", paper_params,
                     "use the built-in canonical parameter values");
  computef->add_option("--family", family_path, "family JSON file");
  enable_global_flags(computef);

  std::string vectors_path;
  std::string partial_path;
  double tolerance = 1e-12;
  bool no_pair_rule = false;
  auto* checkc = app.add_subcommand(
      "check-colorable",
      "decide colorability of a vector set, with witness or certificate");
  checkc->add_option("vectors", vectors_path, "vector-set JSON file")
      ->required();
  checkc->add_option("--partial", partial_path,
                     "partial assignment JSON file (input-position indexed)");
  auto* tol_opt = checkc->add_option(
      "--tolerance", tolerance,
      "orthogonality tolerance for real-valued sets (default 1e-12)");
  checkc->add_flag("--no-pair-rule", no_pair_rule,
                   "enforce only the per-context rule, not the bare-pair rule");
  enable_global_flags(checkc);

  std::string model_name;
  std::vector<double> epsilons;
  std::uint64_t samples = 0;
  std::string one_axis_arg = "auto";
  auto* simulate = app.add_subcommand(
      "simulate",
      "finite-precision measurement sweep; writes JSON and CSV reports");
  simulate->add_option("--model", model_name, "meyer | rotated-meyer | qm")
      ->required();
  simulate->add_flag("--paper-params", paper_params,
                     "use the built-in canonical parameter values");
  simulate->add_option("--family", family_path, "family JSON file");
  simulate->add_option("--epsilons", epsilons,
                       "comma-separated, strictly decreasing scatter angles")
      ->required()
      ->delimiter(',');
  simulate->add_option("--samples", samples, "trials per report")->required();
  simulate->add_option("--one-axis", one_axis_arg,
                       "color class answering 1: auto (match B), X, Y or Z");
  enable_global_flags(simulate);

  double ck_epsilon = 1e-3;
  int ck_seeds = 100;
  auto* ck = app.add_subcommand(
      "clifton-kent",
      "perturbed eight-direction configurations: union bound vs |<a'|b'>|^2");
  ck->add_option("--epsilon", ck_epsilon, "perturbation angle, in [0, 0.1)")
      ->required();
  ck->add_option("--seeds", ck_seeds, "number of seeded configurations");
  enable_global_flags(ck);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      return cmd_verify_lemma1(opts, paper_params, family_path);
    }
    if (computef->parsed()) {
      return cmd_compute_f(opts, paper_params, family_path);
    }
    if (checkc->parsed()) {
      bool is_rational = false;
      {
        VectorSet vs = vector_set_from_json(load_json_file(vectors_path));
        is_rational =
            std::holds_alternative<std::vector<RationalUnitVector3>>(vs);
      }
      if (is_rational && tol_opt->count() > 0) {
        throw std::invalid_argument(
            "--tolerance applies only to real-valued vector sets");
      }
      return cmd_check_colorable(opts, vectors_path, partial_path, tolerance,
                                 no_pair_rule);
    }
    if (simulate->parsed()) {
      return cmd_simulate(opts, model_name, paper_params, family_path,
                          epsilons, samples, one_axis_arg);
    }
    if (ck->parsed()) {
      return cmd_clifton_kent(opts, ck_epsilon, ck_seeds);
    }
  } catch (const FamilyParameterError& e) {
    std::cerr << "error (" << e.quantity() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
