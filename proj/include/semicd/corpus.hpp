#pragma once

// Standard complexes used by the verification suites and tests: the 7-vertex
// torus, the 6-vertex real projective plane, simplex boundaries, a staircase
// product triangulation of S^2 x S^1, and a few small degenerate examples.

#include "semicd/simplicial.hpp"

#include <string>
#include <vector>

namespace semicd {

/// The unique 7-vertex triangulation of the torus: facets {i, i+1, i+3} and
/// {i, i+2, i+3} mod 7; f = (7, 21, 14).
inline SimplicialComplex torus_7() {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({std::to_string(i), std::to_string((i + 1) % 7), std::to_string((i + 3) % 7)});
    facets.push_back({std::to_string(i), std::to_string((i + 2) % 7), std::to_string((i + 3) % 7)});
  }
  return SimplicialComplex::from_facets(facets);
}

/// The 6-vertex triangulation of the real projective plane (antipodal quotient
/// of the icosahedron); f = (6, 15, 10), every edge in exactly two triangles.
inline SimplicialComplex projective_plane_6() {
  const std::vector<std::vector<std::string>> facets = {
      {"1", "2", "5"}, {"1", "2", "6"}, {"1", "3", "4"}, {"1", "3", "6"}, {"1", "4", "5"},
      {"2", "3", "4"}, {"2", "3", "5"}, {"2", "4", "6"}, {"3", "5", "6"}, {"4", "5", "6"}};
  return SimplicialComplex::from_facets(facets);
}

/// Triangle boundary with k vertices (cycle 0-1-...-k-1-0).
inline SimplicialComplex cycle_complex(int k) {
  if (k < 3) throw std::invalid_argument("cycle_complex requires k >= 3");
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < k; ++i)
    facets.push_back({std::to_string(i), std::to_string((i + 1) % k)});
  return SimplicialComplex::from_facets(facets);
}

/// Staircase triangulation of S^2 x S^1 (boundary of the 3-simplex times a
/// 3-cycle): 12 vertices, 36 facets, a simplicial 3-manifold.
inline SimplicialComplex sphere_product_s2xs1() {
  return simplicial_product(boundary_of_simplex(3), cycle_complex(3));
}

inline SimplicialComplex disjoint_points(int k) {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < k; ++i) facets.push_back({std::to_string(i)});
  return SimplicialComplex::from_facets(facets);
}

/// Two triangles sharing one vertex; the shared vertex's link is disconnected.
inline SimplicialComplex two_triangles_glued_at_vertex() {
  return SimplicialComplex::from_facets({{"1", "2", "3"}, {"3", "4", "5"}});
}

/// Two boundaries of 3-simplices identified at one vertex (wedge of 2-spheres).
inline SimplicialComplex wedge_of_two_spheres() {
  std::vector<std::vector<std::string>> facets;
  const std::vector<std::string> s1 = {"1", "2", "3", "4"}, s2 = {"4", "5", "6", "7"};
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<std::string> f1, f2;
    for (int v = 0; v < 4; ++v)
      if (v != skip) {
        f1.push_back(s1[static_cast<std::size_t>(v)]);
        f2.push_back(s2[static_cast<std::size_t>(v)]);
      }
    facets.push_back(f1);
    facets.push_back(f2);
  }
  return SimplicialComplex::from_facets(facets);
}

/// Full simplex on k vertices (a ball, all faces of {1..k}).
inline SimplicialComplex full_simplex(int k) {
  std::vector<std::string> f;
  for (int v = 1; v <= k; ++v) f.push_back(std::to_string(v));
  return SimplicialComplex::from_facets({f});
}

}  // namespace semicd
