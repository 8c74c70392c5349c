#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kscheck/geometry.hpp"
#include "kscheck/ks_coloring.hpp"
#include "kscheck/orthogonality_graph.hpp"
#include "kscheck/rational.hpp"

namespace kscheck {

// Raised when a requested parameter family is not realizable over the
// rationals; `quantity` names the offending value (s_A, s_B, s_C, s_D or N).
class FamilyParameterError : public std::runtime_error {
 public:
  FamilyParameterError(std::string quantity, const std::string& message)
      : std::runtime_error(message), quantity_(std::move(quantity)) {}
  const std::string& quantity() const { return quantity_; }

 private:
  std::string quantity_;
};

// Four exact circle points (c_i, s_i) plus the normalization factor
// N = 1/sqrt(c_A^2 + (s_A c_D)^2), all rational. s_i is always the
// nonnegative root.
struct FamilyParameters {
  CircleParameter a;
  CircleParameter b;
  CircleParameter c;
  CircleParameter d;
  Rational norm_factor;  // N; satisfies N^2 (c_A^2 + (s_A c_D)^2) = 1 exactly
};

inline FamilyParameters family_params(const Rational& c_a, const Rational& c_b,
                                      const Rational& c_c,
                                      const Rational& c_d) {
  auto circle_point = [](const Rational& c, const char* name) {
    if (c > 1 || c < -1) {
      throw std::invalid_argument(std::string("family_params: |") + name +
                                  "| > 1");
    }
    std::string s_name = std::string("s_") + (name + 2);  // "c_A" -> "s_A"
    auto s = rational_sqrt(1 - c * c);
    if (!s) {
      throw FamilyParameterError(
          s_name, "family_params: " + s_name + " = sqrt(1 - " + name +
                      "^2) is irrational for " + name + " = " +
                      format_rational(c));
    }
    return CircleParameter(c, *s);
  };
  CircleParameter pa = circle_point(c_a, "c_A");
  CircleParameter pb = circle_point(c_b, "c_B");
  CircleParameter pc = circle_point(c_c, "c_C");
  CircleParameter pd = circle_point(c_d, "c_D");
  Rational norm_sq = pa.c() * pa.c() + (pa.s() * pd.c()) * (pa.s() * pd.c());
  if (norm_sq == 0) {
    throw FamilyParameterError(
        "N", "family_params: c_A^2 + (s_A c_D)^2 = 0, N undefined");
  }
  auto root = rational_sqrt(norm_sq);
  if (!root) {
    throw FamilyParameterError(
        "N", "family_params: N = 1/sqrt(c_A^2 + (s_A c_D)^2) is irrational");
  }
  return FamilyParameters{std::move(pa), std::move(pb), std::move(pc),
                          std::move(pd), 1 / *root};
}

// The canonical fixture: c_A = 104/185, c_B = 10209400000/12605796209,
// c_C = 490231/789769, c_D = 105/137. All four sines and N are exact
// rationals (s_A = 153/185, s_D = 88/137, N = 25345/21473).
inline FamilyParameters paper_parameters() {
  return family_params(
      Rational(104, 185), Rational(Int("10209400000"), Int("12605796209")),
      Rational(490231, 789769), Rational(105, 137));
}

// The nine-direction family. Invariants (all exact):
//   A perp v1, A perp v2, B perp v3, C perp v4,
//   {v1, v3, v5} and {v2, v4, v6} mutually orthogonal, v5 perp v6,
//   every member unit; v1 = e_x, v3 = e_z, v5 = e_y always.
struct NineVectorSet {
  RationalUnitVector3 a;
  RationalUnitVector3 b;
  RationalUnitVector3 c;
  RationalUnitVector3 v1;
  RationalUnitVector3 v2;
  RationalUnitVector3 v3;
  RationalUnitVector3 v4;
  RationalUnitVector3 v5;
  RationalUnitVector3 v6;
};

inline const std::array<const char*, 9>& nine_vector_names() {
  static const std::array<const char*, 9> names{"A",  "B",  "C",  "v1", "v2",
                                                "v3", "v4", "v5", "v6"};
  return names;
}

inline std::vector<RationalUnitVector3> nine_vector_list(
    const NineVectorSet& s) {
  return {s.a, s.b, s.c, s.v1, s.v2, s.v3, s.v4, s.v5, s.v6};
}

// One named exact check: `value` must equal `expected` (0 for orthogonality,
// 1 for unit norms) with exact rational equality.
struct ExactCheck {
  std::string name;
  Rational value;
  Rational expected;
  bool passed = false;
};

// The thirteen exact checks consumed by the infeasibility argument: the
// eleven pairwise orthogonality relations plus the two unit-norm groups.
inline std::vector<ExactCheck> validate_nine(const NineVectorSet& s) {
  std::vector<ExactCheck> checks;
  auto orth = [&](const char* name, const RationalUnitVector3& u,
                  const RationalUnitVector3& v) {
    Rational value = dot(u, v);
    checks.push_back({name, value, Rational(0), value == 0});
  };
  orth("dot(A,v1)", s.a, s.v1);
  orth("dot(A,v2)", s.a, s.v2);
  orth("dot(B,v3)", s.b, s.v3);
  orth("dot(C,v4)", s.c, s.v4);
  orth("dot(v1,v3)", s.v1, s.v3);
  orth("dot(v1,v5)", s.v1, s.v5);
  orth("dot(v3,v5)", s.v3, s.v5);
  orth("dot(v2,v4)", s.v2, s.v4);
  orth("dot(v2,v6)", s.v2, s.v6);
  orth("dot(v4,v6)", s.v4, s.v6);
  orth("dot(v5,v6)", s.v5, s.v6);
  auto norm_group = [&](const char* name,
                        std::initializer_list<const RationalUnitVector3*> vs) {
    Rational worst(1);
    bool ok = true;
    for (const auto* v : vs) {
      Rational n2 = norm_squared(v->vec());
      if (n2 != 1) {
        worst = n2;
        ok = false;
      }
    }
    checks.push_back({name, worst, Rational(1), ok});
  };
  norm_group("norms(A,B,C)", {&s.a, &s.b, &s.c});
  norm_group("norms(v1..v6)", {&s.v1, &s.v2, &s.v3, &s.v4, &s.v5, &s.v6});
  return checks;
}

inline bool all_checks_pass(const std::vector<ExactCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

// Constructs the nine directions from the parameters:
//   A  = (0, c_A, -s_A)
//   B  = (c_B, s_B, 0)
//   C  = (c_C c_D + N c_A s_C s_D, N s_A s_C c_D, -c_C s_D + N c_A s_C c_D)
//   v1 = e_x,  v2 = N (c_A s_D, s_A c_D, c_A c_D),  v3 = e_z,
//   v4 = N (s_A c_D s_D, -c_A, s_A c_D^2),  v5 = e_y,  v6 = (c_D, 0, -s_D)
// and verifies every set invariant before returning.
inline NineVectorSet build_nine_vectors(const FamilyParameters& p) {
  const Rational& ca = p.a.c();
  const Rational& sa = p.a.s();
  const Rational& cb = p.b.c();
  const Rational& sb = p.b.s();
  const Rational& cc = p.c.c();
  const Rational& sc = p.c.s();
  const Rational& cd = p.d.c();
  const Rational& sd = p.d.s();
  const Rational& n = p.norm_factor;
  NineVectorSet set{
      RationalUnitVector3(Rational(0), ca, -sa),
      RationalUnitVector3(cb, sb, Rational(0)),
      RationalUnitVector3(cc * cd + n * ca * sc * sd, n * sa * sc * cd,
                          -cc * sd + n * ca * sc * cd),
      RationalUnitVector3(Rational(1), Rational(0), Rational(0)),
      RationalUnitVector3(n * ca * sd, n * sa * cd, n * ca * cd),
      RationalUnitVector3(Rational(0), Rational(0), Rational(1)),
      RationalUnitVector3(n * sa * cd * sd, n * -ca, n * sa * cd * cd),
      RationalUnitVector3(Rational(0), Rational(1), Rational(0)),
      RationalUnitVector3(cd, Rational(0), -sd)};
  if (!all_checks_pass(validate_nine(set))) {
    // The relations are algebraic identities in valid parameters; a failure
    // here is an arithmetic bug, not bad input.
    throw std::logic_error("build_nine_vectors: exact invariant violated");
  }
  return set;
}

// Graph over the nine directions plus the location of each in the graph
// (degenerate parameter choices can make some of the nine coincide).
struct NineVectorGraph {
  OrthogonalityGraph graph;
  std::array<std::size_t, 9> vertex_of;  // order A, B, C, v1..v6
};

inline NineVectorGraph build_nine_graph(const NineVectorSet& set) {
  NineVectorGraph out{build_graph(nine_vector_list(set)), {}};
  for (std::size_t i = 0; i < 9; ++i) {
    out.vertex_of[i] = out.graph.input_to_vertex[i];
  }
  return out;
}

// The assumption refuted by the coloring search: all three of A, B, C
// answer 1.
inline PartialColoring all_three_one_partial(const NineVectorGraph& g) {
  PartialColoring partial;
  for (std::size_t i = 0; i < 3; ++i) {
    auto [it, inserted] = partial.assignments.emplace(g.vertex_of[i], 1);
    if (!inserted && it->second != 1) {
      throw std::logic_error("all_three_one_partial: conflicting identification");
    }
  }
  return partial;
}

}  // namespace kscheck
