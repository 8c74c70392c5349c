// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: kscheck_acceptance <path-to-kscheck-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus_helpers.hpp"
#include "kscheck/kscheck.hpp"

namespace {

using namespace kscheck;
namespace fs = std::filesystem;

std::string g_cli;
int g_failures = 0;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, n);
    if (n < sizeof(buffer)) {
      if (std::feof(pipe)) break;
    }
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  char line[512];
  std::snprintf(line, sizeof(line), "[%s] criterion %d: %s (%s%.2f s)\n",
                ok ? "PASS" : "FAIL", number, title.c_str(),
                detail.empty() ? "" : (detail + ", ").c_str(), seconds);
  std::cout << line << std::flush;
  if (!ok) ++g_failures;
}

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: kscheck_acceptance <path-to-kscheck-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  fs::path workdir = fs::temp_directory_path() / "kscheck_acceptance";
  fs::remove_all(workdir);
  fs::create_directories(workdir);

  criterion(1, "exact F for the canonical family prints as 1.108", [&](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    CommandResult r = run_cli("compute-f --paper-params --json");
    if (r.exit_code != 0) {
      detail = "exit code " + std::to_string(r.exit_code);
      return false;
    }
    Json j = Json::parse(r.output);
    const double seconds = elapsed_since(start);
    FValue f = f_qm(paper_parameters());
    detail = "F = " + j["F_decimal"].get<std::string>();
    return j["F_3dp"] == "1.108" &&
           j["F_exact"].get<std::string>() == format_rational(f.value()) &&
           seconds < 1.0;
  });

  criterion(2, "no coloring admits three 1s: canonical + 100 random families", [&](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    CommandResult r = run_cli("verify-lemma1 --paper-params --json");
    if (r.exit_code != 0) {
      detail = "CLI exit code " + std::to_string(r.exit_code);
      return false;
    }
    Json j = Json::parse(r.output);
    if (j["colorable_with_all_three_one"] != false) return false;
    if (j["forced_steps"].get<int>() < 5) {
      detail = "certificate too short";
      return false;
    }
    Rng rng(splitmix64(20240601));
    for (int i = 0; i < 100; ++i) {
      FamilyParameters p = random_valid_family(rng);
      NineVectorGraph nine = build_nine_graph(build_nine_vectors(p));
      auto result =
          find_ks_coloring(nine.graph.structure, all_three_one_partial(nine));
      if (result.colorable()) {
        detail = "family " + format_rational(p.a.c()) + " unexpectedly colorable";
        return false;
      }
    }
    const double seconds = elapsed_since(start);
    detail = "100 random families";
    return seconds < 10.0;
  });

  criterion(3, "all 13 exact identities for canonical + 100 random families", [&](std::string& detail) {
    Rng rng(splitmix64(919));
    for (int i = 0; i <= 100; ++i) {
      FamilyParameters p = (i == 0) ? paper_parameters() : random_valid_family(rng);
      auto checks = validate_nine(build_nine_vectors(p));
      if (checks.size() != 13 || !all_checks_pass(checks)) {
        detail = "family " + std::to_string(i);
        return false;
      }
      for (const auto& c : checks) {
        if (c.value != c.expected) return false;
      }
    }
    detail = "13 checks x 101 families";
    return true;
  });

  criterion(4, "10^4 exact random triads get three distinct colors", [&](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(splitmix64(515151));
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
      RationalFrame f = random_rational_frame(rng);
      Axis a = meyer_color(f.axes[0]);
      Axis b = meyer_color(f.axes[1]);
      Axis c = meyer_color(f.axes[2]);
      if (a == b || a == c || b == c) ++violations;
    }
    const double seconds = elapsed_since(start);
    detail = std::to_string(violations) + " violations";
    return violations == 0 && seconds < 10.0;
  });

  criterion(5, "search agrees with the exhaustive oracle on 50+ graphs", [&](std::string& detail) {
    auto corpus = kscheck::testing::build_corpus(77007, 40, 10);
    std::size_t graphs = 0;
    std::size_t cases = 0;
    for (const auto& entry : corpus) {
      if (entry.graph.vertex_count() > 15) {
        detail = entry.label + " too large";
        return false;
      }
      ++graphs;
      for (const auto& partial : entry.partials) {
        auto result = find_ks_coloring(entry.graph.structure, partial);
        auto count = count_colorings(entry.graph.structure, partial);
        if (result.colorable() != (count > 0)) {
          detail = "disagreement on " + entry.label;
          return false;
        }
        if (result.colorable() &&
            (!satisfies_constraints(entry.graph.structure, *result.witness) ||
             !extends(*result.witness, partial))) {
          detail = "invalid witness on " + entry.label;
          return false;
        }
        ++cases;
      }
    }
    detail = std::to_string(graphs) + " graphs, " + std::to_string(cases) +
             " cases";
    return graphs >= 50;
  });

  criterion(6, "discrimination at eps = 1e-3 with 1e5 samples", [&](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    FamilyParameters params = paper_parameters();
    MeyerModel model(meyer_color(build_nine_vectors(params).b));
    SweepReport sweep = precision_sweep(model, params, {1e-3}, 100000, 60616);
    const EnsembleReport& nchv = *sweep.entries[0].model_report;
    const EnsembleReport& qm = *sweep.entries[0].qm_report;
    const double seconds = elapsed_since(start);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "F_nchv = %.4f +- %.4f, F_qm = %.4f +- %.4f",
                  nchv.f_estimate, nchv.confidence_radius, qm.f_estimate,
                  qm.confidence_radius);
    detail = buf;
    if (nchv.degenerate || qm.degenerate) return false;
    return nchv.f_estimate <= 1.0 + nchv.confidence_radius &&
           std::abs(qm.f_estimate - 1.108) <= qm.confidence_radius &&
           nchv.confidence_radius < 0.02 && qm.confidence_radius < 0.02 &&
           seconds < 60.0;
  });

  criterion(7, "perturbed-configuration gap over 100 seeds", [&](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    CommandResult r = run_cli("clifton-kent --epsilon 1e-3 --seeds 100 --json");
    if (r.exit_code != 0) {
      detail = "exit code " + std::to_string(r.exit_code);
      return false;
    }
    Json j = Json::parse(r.output);
    const double seconds = elapsed_since(start);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "bound <= %.2e, prob in [%.4f, %.4f]",
                  j["max_union_bound"].get<double>(),
                  j["min_transition_prob"].get<double>(),
                  j["max_transition_prob"].get<double>());
    detail = buf;
    return j["pass"] == true && j["max_union_bound"].get<double>() < 0.01 &&
           j["min_transition_prob"].get<double>() >= 0.10 &&
           j["max_transition_prob"].get<double>() <= 0.12 && seconds < 5.0;
  });

  criterion(8, "spin-1 sum rules within 1e-12", [&](std::string& detail) {
    SumRuleReport report = verify_sum_rules(Spin1Representation::standard());
    double worst = 0.0;
    for (const auto& c : report.checks) worst = std::max(worst, c.deviation);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst deviation %.2e", worst);
    detail = buf;
    return report.all_passed;
  });

  criterion(9, "simulation outputs are byte-identical per seed", [&](std::string& detail) {
    const fs::path out1 = workdir / "run1.json";
    const fs::path out2 = workdir / "run2.json";
    const std::string args =
        "simulate --model meyer --paper-params --epsilons 1e-2,1e-3 "
        "--samples 2000 --seed 31337 --json --output ";
    CommandResult r1 = run_cli(args + out1.string());
    CommandResult r2 = run_cli(args + out2.string());
    if (r1.exit_code != 0 || r2.exit_code != 0) {
      detail = "exit codes " + std::to_string(r1.exit_code) + "/" +
               std::to_string(r2.exit_code);
      return false;
    }
    const bool json_same = read_file(out1) == read_file(out2) &&
                           !read_file(out1).empty();
    const fs::path csv1 = workdir / "run1.csv";
    const fs::path csv2 = workdir / "run2.csv";
    const bool csv_same = read_file(csv1) == read_file(csv2) &&
                          !read_file(csv1).empty();
    const bool stdout_same = r1.output == r2.output;
    detail = std::string("json ") + (json_same ? "ok" : "DIFFERS") + ", csv " +
             (csv_same ? "ok" : "DIFFERS");
    return json_same && csv_same && stdout_same;
  });

  std::cout << (g_failures == 0 ? "all criteria passed\n"
                                : std::to_string(g_failures) +
                                      " criteria failed\n");
  return g_failures == 0 ? 0 : 1;
}
