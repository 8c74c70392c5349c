#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kscheck/geometry.hpp"

namespace kscheck {

// Combinatorial core of an orthogonality graph: vertices are canonical
// directions, edges are orthogonal pairs, contexts are mutually orthogonal
// triples (triangles of the edge relation; maximal in dimension 3).
struct GraphStructure {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;   // u < v, sorted
  std::vector<std::array<std::size_t, 3>> contexts;         // i < j < k, sorted
  std::vector<std::vector<std::size_t>> adjacency;
};

// Builds adjacency and contexts from an edge list.
inline GraphStructure make_structure(
    std::size_t vertex_count,
    std::vector<std::pair<std::size_t, std::size_t>> edges) {
  GraphStructure g;
  g.vertex_count = vertex_count;
  for (auto& [u, v] : edges) {
    if (u == v || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("make_structure: bad edge");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adjacency.assign(vertex_count, {});
  std::vector<std::vector<bool>> adj(vertex_count,
                                     std::vector<bool>(vertex_count, false));
  for (auto [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
    adj[u][v] = adj[v][u] = true;
  }
  for (auto [u, v] : g.edges) {
    for (std::size_t w = v + 1; w < vertex_count; ++w) {
      if (adj[u][w] && adj[v][w]) g.contexts.push_back({u, v, w});
    }
  }
  std::sort(g.contexts.begin(), g.contexts.end());
  return g;
}

enum class VectorField { rational, real };

struct OrthogonalityGraph {
  VectorField field = VectorField::rational;
  std::vector<RationalUnitVector3> rational_vertices;
  std::vector<RealVector3> real_vertices;  // unit, canonical sign
  GraphStructure structure;
  // Input position -> vertex index after canonicalization and deduplication.
  std::vector<std::size_t> input_to_vertex;

  std::size_t vertex_count() const { return structure.vertex_count; }
};

// Exact build: edges are pairs with dot product exactly zero.
inline OrthogonalityGraph build_graph(
    const std::vector<RationalUnitVector3>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("build_graph: empty input");
  OrthogonalityGraph g;
  g.field = VectorField::rational;
  std::map<std::array<Rational, 3>, std::size_t> seen;
  for (const auto& raw : vectors) {
    RationalUnitVector3 v = canonicalize(raw);
    std::array<Rational, 3> key{v.x(), v.y(), v.z()};
    auto [it, inserted] = seen.try_emplace(key, g.rational_vertices.size());
    if (inserted) g.rational_vertices.push_back(v);
    g.input_to_vertex.push_back(it->second);
  }
  const std::size_t n = g.rational_vertices.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dot(g.rational_vertices[i], g.rational_vertices[j]) == 0) {
        edges.emplace_back(i, j);
      }
    }
  }
  g.structure = make_structure(n, std::move(edges));
  return g;
}

// Tolerance build for real-valued directions: vectors must be unit within
// 1e-9 (then renormalized), duplicates are directions equal up to sign within
// the tolerance, and edges are pairs with |dot| <= tolerance.
inline OrthogonalityGraph build_graph(const std::vector<RealVector3>& vectors,
                                      double tolerance) {
  if (vectors.empty()) throw std::invalid_argument("build_graph: empty input");
  if (!(tolerance >= 0.0) || tolerance >= 0.1) {
    throw std::invalid_argument("build_graph: bad tolerance");
  }
  OrthogonalityGraph g;
  g.field = VectorField::real;
  for (const auto& raw : vectors) {
    if (std::abs(dot(raw, raw) - 1.0) > 1e-9) {
      throw std::invalid_argument("build_graph: real vector not unit");
    }
    RealVector3 v = normalized(raw);
    const double* first = &v.x;
    if (std::abs(v.x) <= tolerance) first = (std::abs(v.y) > tolerance) ? &v.y : &v.z;
    if (*first < 0.0) v = -v;
    std::size_t index = g.real_vertices.size();
    for (std::size_t i = 0; i < g.real_vertices.size(); ++i) {
      const RealVector3& u = g.real_vertices[i];
      if (std::abs(std::abs(dot(u, v)) - 1.0) <= tolerance) {
        index = i;
        break;
      }
    }
    if (index == g.real_vertices.size()) g.real_vertices.push_back(v);
    g.input_to_vertex.push_back(index);
  }
  const std::size_t n = g.real_vertices.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(dot(g.real_vertices[i], g.real_vertices[j])) <= tolerance) {
        edges.emplace_back(i, j);
      }
    }
  }
  g.structure = make_structure(n, std::move(edges));
  return g;
}

}  // namespace kscheck
