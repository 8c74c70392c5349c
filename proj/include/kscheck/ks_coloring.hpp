#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kscheck/orthogonality_graph.hpp"

namespace kscheck {

// Partial {0,1} assignment, keyed by vertex index.
struct PartialColoring {
  std::map<std::size_t, int> assignments;
};

// Total assignment. Valid iff every edge carries at most one 1 and every
// context carries exactly one 1.
struct Coloring {
  std::vector<int> values;
};

// The pair rule (at most one 1 on every orthogonal pair) can be switched off
// to experiment with the bare context rule; both are on by default.
struct ColoringRules {
  bool pair_rule = true;
};

enum class StepReason {
  given,               // seeded from the partial assignment
  orthogonal_to_one,   // forced 0: adjacent to a vertex valued 1
  context_completion,  // forced 1: the other two context members are 0
};

struct CertificateStep {
  std::size_t vertex = 0;
  int value = 0;
  StepReason reason = StepReason::given;
  std::vector<std::size_t> sources;
};

enum class ViolationKind {
  edge_both_one,     // an orthogonal pair with both members valued 1
  context_all_zero,  // a context with all three members valued 0
  search_exhausted,  // complete backtracking search found no coloring
};

struct Violation {
  ViolationKind kind = ViolationKind::search_exhausted;
  std::vector<std::size_t> vertices;
  std::uint64_t nodes_explored = 0;
};

// Forced-propagation trace from the given partial, ending in a violation, or
// an exhausted-search marker when the contradiction needed branching.
struct InfeasibilityCertificate {
  std::vector<CertificateStep> steps;
  Violation violation;
};

struct ColorabilityResult {
  std::optional<Coloring> witness;
  std::optional<InfeasibilityCertificate> certificate;
  bool colorable() const { return witness.has_value(); }
};

namespace detail {

struct SearchContext {
  const GraphStructure* graph = nullptr;
  std::vector<std::vector<std::size_t>> adjacency;       // effective
  std::vector<std::vector<std::size_t>> contexts_of;     // vertex -> context ids
};

inline SearchContext make_search_context(const GraphStructure& g,
                                         ColoringRules rules) {
  SearchContext ctx;
  ctx.graph = &g;
  if (rules.pair_rule) {
    ctx.adjacency = g.adjacency;
  } else {
    // Only pairs inside a context constrain each other.
    ctx.adjacency.assign(g.vertex_count, {});
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& c : g.contexts) {
      pairs.emplace_back(c[0], c[1]);
      pairs.emplace_back(c[0], c[2]);
      pairs.emplace_back(c[1], c[2]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto [u, v] : pairs) {
      ctx.adjacency[u].push_back(v);
      ctx.adjacency[v].push_back(u);
    }
  }
  ctx.contexts_of.assign(g.vertex_count, {});
  for (std::size_t i = 0; i < g.contexts.size(); ++i) {
    for (std::size_t v : g.contexts[i]) ctx.contexts_of[v].push_back(i);
  }
  return ctx;
}

struct SearchState {
  std::vector<signed char> values;  // -1 unassigned
  std::vector<signed char> ctx_zeros;
  std::vector<signed char> ctx_ones;
  std::vector<std::size_t> pending;
  std::size_t unassigned = 0;
};

inline SearchState make_state(const SearchContext& ctx) {
  SearchState s;
  s.values.assign(ctx.graph->vertex_count, -1);
  s.ctx_zeros.assign(ctx.graph->contexts.size(), 0);
  s.ctx_ones.assign(ctx.graph->contexts.size(), 0);
  s.unassigned = ctx.graph->vertex_count;
  return s;
}

inline void assign(const SearchContext& ctx, SearchState& s, std::size_t v,
                   int value, StepReason reason,
                   std::vector<std::size_t> sources,
                   std::vector<CertificateStep>* recorder) {
  if (s.values[v] != -1) {
    // Callers only force unassigned vertices; conflicts surface as explicit
    // violations before this point.
    throw std::logic_error("assign: vertex already assigned");
  }
  s.values[v] = static_cast<signed char>(value);
  --s.unassigned;
  for (std::size_t c : ctx.contexts_of[v]) {
    if (value == 0) ++s.ctx_zeros[c];
    else ++s.ctx_ones[c];
  }
  if (recorder) {
    recorder->push_back({v, value, reason, std::move(sources)});
  }
  s.pending.push_back(v);
}

inline std::optional<Violation> propagate(const SearchContext& ctx,
                                          SearchState& s,
                                          std::vector<CertificateStep>* recorder) {
  while (!s.pending.empty()) {
    std::size_t v = s.pending.back();
    s.pending.pop_back();
    if (s.values[v] == 1) {
      for (std::size_t u : ctx.adjacency[v]) {
        if (s.values[u] == 1) {
          return Violation{ViolationKind::edge_both_one, {v, u}, 0};
        }
        if (s.values[u] == -1) {
          assign(ctx, s, u, 0, StepReason::orthogonal_to_one, {v}, recorder);
        }
      }
    }
    for (std::size_t c : ctx.contexts_of[v]) {
      const auto& members = ctx.graph->contexts[c];
      if (s.ctx_zeros[c] == 3) {
        return Violation{ViolationKind::context_all_zero,
                         {members[0], members[1], members[2]},
                         0};
      }
      if (s.ctx_zeros[c] == 2 && s.ctx_ones[c] == 0) {
        std::size_t third = members[0];
        std::vector<std::size_t> zeros;
        for (std::size_t m : members) {
          if (s.values[m] == 0) zeros.push_back(m);
          else third = m;
        }
        assign(ctx, s, third, 1, StepReason::context_completion,
               std::move(zeros), recorder);
      }
    }
  }
  return std::nullopt;
}

// Branch vertex: unassigned vertex with the most already-decided neighbors,
// ties broken by lowest index. Deterministic, so certificates and witnesses
// are reproducible.
inline std::size_t pick_branch_vertex(const SearchContext& ctx,
                                      const SearchState& s) {
  std::size_t best = 0;
  int best_score = -1;
  for (std::size_t v = 0; v < s.values.size(); ++v) {
    if (s.values[v] != -1) continue;
    int score = 0;
    for (std::size_t u : ctx.adjacency[v]) {
      if (s.values[u] != -1) ++score;
    }
    if (score > best_score) {
      best_score = score;
      best = v;
    }
  }
  return best;
}

inline std::optional<Coloring> search(const SearchContext& ctx, SearchState s,
                                      std::uint64_t& nodes) {
  if (s.unassigned == 0) {
    Coloring coloring;
    coloring.values.reserve(s.values.size());
    for (signed char v : s.values) coloring.values.push_back(v);
    return coloring;
  }
  const std::size_t v = pick_branch_vertex(ctx, s);
  for (int value : {0, 1}) {
    SearchState child = s;
    ++nodes;
    assign(ctx, child, v, value, StepReason::given, {}, nullptr);
    if (!propagate(ctx, child, nullptr)) {
      if (auto witness = search(ctx, std::move(child), nodes)) return witness;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool satisfies_constraints(const GraphStructure& g,
                                  const Coloring& coloring,
                                  ColoringRules rules = {}) {
  if (coloring.values.size() != g.vertex_count) return false;
  for (int v : coloring.values) {
    if (v != 0 && v != 1) return false;
  }
  if (rules.pair_rule) {
    for (auto [u, v] : g.edges) {
      if (coloring.values[u] + coloring.values[v] > 1) return false;
    }
  }
  for (const auto& c : g.contexts) {
    if (coloring.values[c[0]] + coloring.values[c[1]] + coloring.values[c[2]] !=
        1) {
      return false;
    }
  }
  return true;
}

inline bool extends(const Coloring& coloring, const PartialColoring& partial) {
  for (auto [v, value] : partial.assignments) {
    if (v >= coloring.values.size() || coloring.values[v] != value) return false;
  }
  return true;
}

// Complete backtracking search with unit propagation: a 1 forces 0 on all
// neighbors; a context with two 0s forces a 1 on its third member. Returns
// either a witness extending the partial, or an infeasibility certificate.
inline ColorabilityResult find_ks_coloring(const GraphStructure& g,
                                           const PartialColoring& partial,
                                           ColoringRules rules = {}) {
  for (auto [v, value] : partial.assignments) {
    if (v >= g.vertex_count) {
      throw std::invalid_argument("find_ks_coloring: partial index out of range");
    }
    if (value != 0 && value != 1) {
      throw std::invalid_argument("find_ks_coloring: partial value not in {0,1}");
    }
  }
  detail::SearchContext ctx = detail::make_search_context(g, rules);
  detail::SearchState root = detail::make_state(ctx);
  std::vector<CertificateStep> steps;
  for (auto [v, value] : partial.assignments) {
    detail::assign(ctx, root, v, value, StepReason::given, {}, &steps);
  }
  std::optional<Violation> viol = detail::propagate(ctx, root, &steps);
  ColorabilityResult result;
  if (viol) {
    result.certificate = InfeasibilityCertificate{std::move(steps), *viol};
    return result;
  }
  std::uint64_t nodes = 0;
  if (auto witness = detail::search(ctx, std::move(root), nodes)) {
    if (!satisfies_constraints(g, *witness, rules) ||
        !extends(*witness, partial)) {
      throw std::logic_error("find_ks_coloring: invalid witness produced");
    }
    result.witness = std::move(*witness);
    return result;
  }
  Violation exhausted;
  exhausted.kind = ViolationKind::search_exhausted;
  exhausted.nodes_explored = nodes;
  result.certificate = InfeasibilityCertificate{std::move(steps), exhausted};
  return result;
}

// Exhaustive 2^n oracle for small graphs. Independent of the search engine.
inline std::uint64_t count_colorings(const GraphStructure& g,
                                     const PartialColoring& partial,
                                     ColoringRules rules = {}) {
  const std::size_t n = g.vertex_count;
  if (n > 25) {
    throw std::invalid_argument("count_colorings: more than 25 vertices");
  }
  std::uint32_t required_ones = 0;
  std::uint32_t required_zeros = 0;
  for (auto [v, value] : partial.assignments) {
    if (v >= n) {
      throw std::invalid_argument("count_colorings: partial index out of range");
    }
    if (value == 1) required_ones |= (1u << v);
    else required_zeros |= (1u << v);
  }
  std::vector<std::uint32_t> adjacency_mask(n, 0);
  if (rules.pair_rule) {
    for (auto [u, v] : g.edges) {
      adjacency_mask[u] |= (1u << v);
      adjacency_mask[v] |= (1u << u);
    }
  } else {
    for (const auto& c : g.contexts) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i != j) adjacency_mask[c[i]] |= (1u << c[j]);
        }
      }
    }
  }
  std::vector<std::uint32_t> context_mask;
  context_mask.reserve(g.contexts.size());
  for (const auto& c : g.contexts) {
    context_mask.push_back((1u << c[0]) | (1u << c[1]) | (1u << c[2]));
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::uint32_t m = static_cast<std::uint32_t>(mask);
    if ((m & required_ones) != required_ones) continue;
    if ((m & required_zeros) != 0) continue;
    bool ok = true;
    for (std::uint32_t bits = m; bits != 0 && ok;) {
      const int v = std::countr_zero(bits);
      bits &= bits - 1;
      if (adjacency_mask[v] & m) ok = false;
    }
    if (!ok) continue;
    for (std::uint32_t cm : context_mask) {
      if (std::popcount(m & cm) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

// Re-derives an infeasibility certificate step by step. Returns true iff every
// step is genuinely forced and the final violation holds in the replayed
// state. Exhausted-search markers carry no local contradiction and yield
// false; small instances are cross-checked with count_colorings instead.
inline bool replay_certificate(const GraphStructure& g,
                               const PartialColoring& partial,
                               const InfeasibilityCertificate& cert,
                               ColoringRules rules = {}) {
  detail::SearchContext ctx = detail::make_search_context(g, rules);
  std::vector<int> values(g.vertex_count, -1);
  auto is_adjacent = [&](std::size_t u, std::size_t v) {
    const auto& adj = ctx.adjacency[u];
    return std::find(adj.begin(), adj.end(), v) != adj.end();
  };
  for (const auto& step : cert.steps) {
    if (step.vertex >= g.vertex_count) return false;
    switch (step.reason) {
      case StepReason::given: {
        auto it = partial.assignments.find(step.vertex);
        if (it == partial.assignments.end() || it->second != step.value) {
          return false;
        }
        break;
      }
      case StepReason::orthogonal_to_one: {
        if (step.value != 0 || step.sources.size() != 1) return false;
        std::size_t src = step.sources.front();
        if (values[src] != 1 || !is_adjacent(src, step.vertex)) return false;
        break;
      }
      case StepReason::context_completion: {
        if (step.value != 1 || step.sources.size() != 2) return false;
        std::array<std::size_t, 3> key{step.vertex, step.sources[0],
                                       step.sources[1]};
        std::sort(key.begin(), key.end());
        if (std::find(g.contexts.begin(), g.contexts.end(), key) ==
            g.contexts.end()) {
          return false;
        }
        if (values[step.sources[0]] != 0 || values[step.sources[1]] != 0) {
          return false;
        }
        break;
      }
    }
    if (values[step.vertex] != -1 && values[step.vertex] != step.value) {
      return false;  // steps list a conflict without declaring the violation
    }
    values[step.vertex] = step.value;
  }
  const Violation& viol = cert.violation;
  switch (viol.kind) {
    case ViolationKind::edge_both_one: {
      if (viol.vertices.size() != 2) return false;
      std::size_t u = viol.vertices[0];
      std::size_t v = viol.vertices[1];
      if (u >= g.vertex_count || v >= g.vertex_count) return false;
      return is_adjacent(u, v) && values[u] == 1 && values[v] == 1;
    }
    case ViolationKind::context_all_zero: {
      if (viol.vertices.size() != 3) return false;
      std::array<std::size_t, 3> key{viol.vertices[0], viol.vertices[1],
                                     viol.vertices[2]};
      std::sort(key.begin(), key.end());
      if (std::find(g.contexts.begin(), g.contexts.end(), key) ==
          g.contexts.end()) {
        return false;
      }
      return values[key[0]] == 0 && values[key[1]] == 0 && values[key[2]] == 0;
    }
    case ViolationKind::search_exhausted:
      return false;
  }
  return false;
}

}  // namespace kscheck
