#pragma once

#include <utility>
#include <vector>

#include "kscheck/family.hpp"
#include "kscheck/random.hpp"

namespace kscheck {

// Random generation of valid parameter families.
//
// The pair (c_A, c_D) must satisfy a perfect-square condition: with all four
// points on the rational circle, c_A^2 + (s_A c_D)^2 = 1 - (s_A s_D)^2, so N
// is rational iff (s_A s_D, *, 1) completes to a rational Pythagorean triple.
// Random circle points essentially never satisfy it, so candidates are
// enumerated once from pairs of primitive Pythagorean triples with bounded
// hypotenuse and the generator draws from that table (through the half-angle
// tangent parameterization). c_B and c_C are unconstrained.

namespace detail {

struct TanglePair {
  Rational t_a;
  Rational t_d;
};

inline std::vector<TanglePair> enumerate_family_tangents(int max_hypotenuse) {
  struct Triple {
    long long odd_leg, even_leg, hyp;
  };
  std::vector<Triple> triples;
  for (long long m = 2; m * m + 1 <= max_hypotenuse; ++m) {
    for (long long n = 1; n < m; ++n) {
      if ((m - n) % 2 != 1) continue;
      if (boost::multiprecision::gcd(Int(m), Int(n)) != 1) continue;
      long long hyp = m * m + n * n;
      if (hyp <= max_hypotenuse) {
        triples.push_back({m * m - n * n, 2 * m * n, hyp});
      }
    }
  }
  std::vector<TanglePair> table;
  auto tangent = [](long long s, long long c, long long h) {
    // t = s/(h + c) gives (c/h, s/h) under the half-angle map.
    return make_rational(Int(s), Int(h + c));
  };
  for (const Triple& t1 : triples) {
    for (const Triple& t2 : triples) {
      for (auto [s1, c1] : {std::pair{t1.odd_leg, t1.even_leg},
                            std::pair{t1.even_leg, t1.odd_leg}}) {
        for (auto [s2, c2] : {std::pair{t2.odd_leg, t2.even_leg},
                              std::pair{t2.even_leg, t2.odd_leg}}) {
          Int lhs = Int(t1.hyp) * Int(t2.hyp);
          Int product = Int(s1) * Int(s2);
          if (is_perfect_square(lhs * lhs - product * product)) {
            table.push_back({tangent(s1, c1, t1.hyp), tangent(s2, c2, t2.hyp)});
          }
        }
      }
    }
  }
  return table;
}

inline const std::vector<TanglePair>& family_tangent_table() {
  static const std::vector<TanglePair> table = enumerate_family_tangents(1000);
  return table;
}

}  // namespace detail

// A uniformly drawn valid family: (c_A, c_D) from the precomputed table with
// random signs (signs leave N unchanged), c_B and c_C from random tangents.
// A small fraction of draws uses the degenerate anchors c_A = +-1 or
// c_D = +-1, for which N = 1 holds for free.
inline FamilyParameters random_valid_family(Rng& rng) {
  const auto& table = detail::family_tangent_table();
  Rational t_a, t_d;
  const std::uint64_t kind = uniform_below(rng, 20);
  if (kind == 0) {
    t_a = 0;  // c_A = +-1, any c_D
    t_d = random_tangent(rng);
  } else if (kind == 1) {
    t_d = 0;  // c_D = +-1, any c_A
    t_a = random_tangent(rng);
  } else {
    const auto& entry = table[uniform_below(rng, table.size())];
    t_a = entry.t_a;
    t_d = entry.t_d;
  }
  CircleParameter pa = circle_param_from_tangent(t_a);
  CircleParameter pd = circle_param_from_tangent(t_d);
  Rational c_a = pa.c();
  Rational c_d = pd.c();
  if (c_a != 1 && c_a != -1 && uniform_below(rng, 2) == 1) c_a = -c_a;
  if (c_d != 1 && c_d != -1 && uniform_below(rng, 2) == 1) c_d = -c_d;
  Rational c_b = circle_param_from_tangent(random_tangent(rng)).c();
  Rational c_c = circle_param_from_tangent(random_tangent(rng)).c();
  return family_params(c_a, c_b, c_c, c_d);
}

}  // namespace kscheck
