#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "kscheck/clifton_kent.hpp"
#include "kscheck/family.hpp"
#include "kscheck/geometry.hpp"
#include "kscheck/random.hpp"
#include "kscheck/rational.hpp"

namespace kscheck {

// ---------------------------------------------------------------------------
// Transition probabilities and the F functional
// ---------------------------------------------------------------------------

// |<u|v>|^2 = (u.v)^2 for real unit vectors. Exact rational in [0,1];
// 1 iff u = +-v, 0 iff orthogonal.
inline Rational transition_prob(const RationalUnitVector3& u,
                                const RationalUnitVector3& v) {
  Rational d = dot(u, v);
  return d * d;
}

inline double transition_prob(const RealVector3& u, const RealVector3& v) {
  const double d = dot(u, v);
  return d * d;
}

// F = P(A|B) + P(C|B) evaluated with quantum statistics:
// |<A|B>|^2 + |<C|B>|^2, kept exact per term.
struct FValue {
  Rational term_ab;
  Rational term_cb;
  Rational value() const { return term_ab + term_cb; }
};

inline FValue f_qm(const FamilyParameters& params) {
  NineVectorSet set = build_nine_vectors(params);
  return FValue{transition_prob(set.a, set.b), transition_prob(set.c, set.b)};
}

// ---------------------------------------------------------------------------
// Spin-1 operators (hbar = 1)
// ---------------------------------------------------------------------------

using Complex = std::complex<double>;

struct Matrix3c {
  std::array<std::array<Complex, 3>, 3> m{};

  static Matrix3c identity() {
    Matrix3c r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
    return r;
  }

  Matrix3c operator+(const Matrix3c& o) const {
    Matrix3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }
  Matrix3c operator-(const Matrix3c& o) const {
    Matrix3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
  }
  Matrix3c operator*(const Matrix3c& o) const {
    Matrix3c r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < 3; ++k) acc += m[i][k] * o.m[k][j];
        r.m[i][j] = acc;
      }
    }
    return r;
  }

  Matrix3c adjoint() const {
    Matrix3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = std::conj(m[j][i]);
    return r;
  }

  Complex trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  double frobenius_distance(const Matrix3c& o) const {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += std::norm(m[i][j] - o.m[i][j]);
    return std::sqrt(acc);
  }
};

inline Matrix3c operator*(Complex k, const Matrix3c& a) {
  Matrix3c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = k * a.m[i][j];
  return r;
}

// Spin-1 generators satisfying [Jx, Jy] = i Jz (cyclically) and
// Jx^2 + Jy^2 + Jz^2 = 2 * identity.
struct Spin1Representation {
  Matrix3c jx;
  Matrix3c jy;
  Matrix3c jz;

  // The real "vector" representation (J_k)_{lm} = -i eps_{klm}. In it the
  // projector identity - (v.J)^2 reduces to the dyad v v^T, which makes the
  // projector/direction correspondence transparent. Any unitarily equivalent
  // choice passes the same checks.
  static Spin1Representation standard() {
    const Complex i(0.0, 1.0);
    Spin1Representation rep;
    rep.jx.m[1][2] = -i;
    rep.jx.m[2][1] = i;
    rep.jy.m[2][0] = -i;
    rep.jy.m[0][2] = i;
    rep.jz.m[0][1] = -i;
    rep.jz.m[1][0] = i;
    return rep;
  }
};

inline Matrix3c spin_component(const Spin1Representation& rep,
                               const RealVector3& v) {
  return Complex(v.x) * rep.jx + Complex(v.y) * rep.jy + Complex(v.z) * rep.jz;
}

// P = identity - (v.J)^2: the rank-1 orthogonal projector onto v.
inline Matrix3c projector_in(const Spin1Representation& rep,
                             const RealVector3& v) {
  Matrix3c jv = spin_component(rep, v);
  return Matrix3c::identity() - jv * jv;
}

inline Matrix3c spin1_projector(const RealVector3& v) {
  return projector_in(Spin1Representation::standard(), v);
}

inline Matrix3c spin1_projector(const RationalUnitVector3& v) {
  return spin1_projector(to_real(v));
}

// Eigenvalues of a Hermitian 3x3 matrix, descending. Cyclic Jacobi with
// complex Givens rotations; accurate near degenerate spectra, unlike the
// closed-form cubic.
inline std::array<double, 3> hermitian_eigenvalues(Matrix3c a) {
  auto off_norm = [](const Matrix3c& x) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) acc += std::norm(x.m[i][j]);
    return std::sqrt(acc);
  };
  for (int sweep = 0; sweep < 50 && off_norm(a) > 1e-15; ++sweep) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const Complex apq = a.m[p][q];
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex phase = apq / mag;
        const double tau = (a.m[p][p].real() - a.m[q][q].real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        Matrix3c rot = Matrix3c::identity();
        rot.m[p][p] = c;
        rot.m[p][q] = -s * phase;
        rot.m[q][p] = s * std::conj(phase);
        rot.m[q][q] = c;
        a = rot.adjoint() * a * rot;
      }
    }
  }
  std::array<double, 3> eig{a.m[0][0].real(), a.m[1][1].real(),
                            a.m[2][2].real()};
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

struct NamedCheck {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // worst observed deviation for this check
};

struct SumRuleReport {
  std::vector<NamedCheck> checks;
  bool all_passed = true;
};

// Verifies, within 1e-12:
//  - the commutation relations [Jx,Jy] = iJz (cyclic),
//  - Jx^2 + Jy^2 + Jz^2 = 2 * identity,
//  - for `triads` random orthonormal real triads: the three projectors are
//    Hermitian, sum to the identity, and each has eigenvalues {1, 0, 0}.
inline SumRuleReport verify_sum_rules(const Spin1Representation& rep,
                                      int triads = 100,
                                      std::uint64_t seed = 2020) {
  SumRuleReport report;
  const double tol = 1e-12;
  auto add = [&](std::string name, double deviation) {
    bool ok = deviation <= tol;
    report.checks.push_back({std::move(name), ok, deviation});
    if (!ok) report.all_passed = false;
  };
  const Complex i(0.0, 1.0);
  auto commutator = [](const Matrix3c& a, const Matrix3c& b) {
    return a * b - b * a;
  };
  add("[Jx,Jy] = iJz", commutator(rep.jx, rep.jy).frobenius_distance(i * rep.jz));
  add("[Jy,Jz] = iJx", commutator(rep.jy, rep.jz).frobenius_distance(i * rep.jx));
  add("[Jz,Jx] = iJy", commutator(rep.jz, rep.jx).frobenius_distance(i * rep.jy));
  add("Jx^2+Jy^2+Jz^2 = 2I",
      (rep.jx * rep.jx + rep.jy * rep.jy + rep.jz * rep.jz)
          .frobenius_distance(Complex(2.0) * Matrix3c::identity()));

  Rng rng(splitmix64(seed));
  double worst_sum = 0.0;
  double worst_eig = 0.0;
  double worst_herm = 0.0;
  for (int t = 0; t < triads; ++t) {
    // Random orthonormal triad from a random axis/angle rotation.
    const RealVector3 axis = detail::random_unit_axis(rng);
    const double angle = 2.0 * std::numbers::pi * uniform_double01(rng);
    const std::array<RealVector3, 3> basis{
        detail::rotate({1.0, 0.0, 0.0}, axis, angle),
        detail::rotate({0.0, 1.0, 0.0}, axis, angle),
        detail::rotate({0.0, 0.0, 1.0}, axis, angle)};
    Matrix3c sum;
    for (const auto& dir : basis) {
      Matrix3c proj = projector_in(rep, dir);
      sum = sum + proj;
      worst_herm = std::max(worst_herm, proj.frobenius_distance(proj.adjoint()));
      auto eig = hermitian_eigenvalues(proj);
      const double dev = std::max({std::abs(eig[0] - 1.0), std::abs(eig[1]),
                                   std::abs(eig[2])});
      worst_eig = std::max(worst_eig, dev);
    }
    worst_sum =
        std::max(worst_sum, sum.frobenius_distance(Matrix3c::identity()));
  }
  add("projector sum = I over random triads", worst_sum);
  add("projectors Hermitian", worst_herm);
  add("projector eigenvalues {1,0,0}", worst_eig);
  return report;
}

// ---------------------------------------------------------------------------
// Union bound for the perturbed configuration
// ---------------------------------------------------------------------------

// Upper bound on the probability that a statistics-respecting coloring sets
// both anchors to 1: the chain of forced assignments can only fail through
// one of the five leak events, each of whose probabilities equals the squared
// leak product, so their sum bounds the failure probability.
inline double ck_union_bound(const CKConfiguration& c) {
  const double leaks[5] = {dot(c.v[0], c.a_prime), dot(c.v[1], c.a_prime),
                           dot(c.v[2], c.b_prime), dot(c.v[3], c.b_prime),
                           dot(c.v[4], c.v[5])};
  double sum = 0.0;
  for (double l : leaks) sum += l * l;
  return sum;
}

}  // namespace kscheck
