#pragma once

// Hand-rolled generators and brute-force oracles shared by the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flagsub/flagsub.hpp"

namespace testsupport {

using namespace flagsub;

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Random complex on n vertices with up to m random generators.
inline SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  FaceList gens;
  const std::size_t count = 1 + rng() % m;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(Face(rng() & Face::range(n).bits()));
  return SimplicialComplex(labels(n), gens);
}

/// Clique complex of a random graph, built by brute force over all vertex subsets.
inline SimplicialComplex random_clique_complex(std::mt19937_64& rng, std::size_t n, unsigned percent) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = rng() % 100 < percent;
  FaceList faces;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const auto m = Face(b).members();
    bool clique = true;
    for (std::size_t i = 0; i < m.size() && clique; ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!adj[m[i]][m[j]]) clique = false;
    if (clique) faces.push_back(Face(b));
  }
  return SimplicialComplex::from_face_set(labels(n), faces);
}

/// Every subset of the ground set that lies in some facet.
inline FaceList brute_force_faces(const SimplicialComplex& k) {
  FaceList out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << k.ground_size()); ++b) {
    for (Face f : k.facets())
      if (Face(b).subset_of(f)) {
        out.push_back(Face(b));
        break;
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// h(x) = Σ_F x^|F| (1-x)^(d-|F|), expanded face by face.
inline IntPolynomial brute_force_h(const SimplicialComplex& k) {
  const int d = k.dimension() + 1;
  IntPolynomial out;
  for (Face f : k.faces()) out += IntPolynomial::monomial(f.size()) * IntPolynomial::one_minus_x_pow(d - f.size());
  return out;
}

inline SimplicialComplex cycle(std::size_t n) {
  std::vector<NameSet> edges;
  const auto l = labels(n, "c");
  for (std::size_t i = 0; i < n; ++i) edges.push_back({l[i], l[(i + 1) % n]});
  return SimplicialComplex::from_facets(l, edges);
}

/// Six-vertex real projective plane.
inline SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
       {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"}, {"3", "5", "6"}, {"2", "4", "6"}});
}

}  // namespace testsupport
