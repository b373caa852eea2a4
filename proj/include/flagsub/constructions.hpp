#pragma once

// Named subdivisions: the cross-polytope carrier map of a flag sphere, the
// ball-to-sphere completion of a subdivided simplex, and small fixtures.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flagsub/complex.hpp"
#include "flagsub/error.hpp"
#include "flagsub/homology.hpp"
#include "flagsub/subdivision.hpp"

namespace flagsub {

/// An ordered facet {x_1, …, x_d} of the source complex.
struct FacetChoice {
  NameSet ordering;
};

/// σ(E) = {u_i : x_i ∈ E} ∪ {v_i : E ∪ {x_i} ∉ K}, mapping a flag sphere K onto Σ_{d-1}.
/// Flagness is always checked; `verify` additionally certifies K as a homology sphere.
inline SubdivisionMap sigma_cross_polytope_map(const SimplicialComplex& k, const FacetChoice& choice,
                                               bool verify = false, const FieldSpec& field = FieldSpec::gf2()) {
  if (!is_flag(k)) throw Error(Errc::NotFlag, "source complex is not flag");
  const int d = k.dimension() + 1;
  std::vector<std::size_t> xs;
  Face facet;
  for (const auto& name : choice.ordering) {
    auto i = k.index_of(name);
    if (!i) throw Error(Errc::NotAFacet, "unknown vertex '" + name + "' in facet choice");
    if (facet.contains(*i)) throw Error(Errc::NotAFacet, "vertex '" + name + "' repeated in facet choice");
    facet = facet.with(*i);
    xs.push_back(*i);
  }
  const auto& facets = k.facets();
  if (facet.size() != d || std::find(facets.begin(), facets.end(), facet) == facets.end())
    throw Error(Errc::NotAFacet, "{" + k.key(facet) + "} is not a facet of dimension " + std::to_string(d - 1));
  if (verify && !classify(k, field).is_sphere(d - 1))
    throw Error(Errc::NotASphere, "source complex is not a homology sphere");
  const SimplicialComplex base = cross_polytope(d);
  return SubdivisionMap(k, base, [&](Face e) {
    Face out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (e.contains(xs[i])) out = out.with(i);
      if (!k.contains(e.with(xs[i]))) out = out.with(static_cast<std::size_t>(d) + i);
    }
    return out;
  });
}

/// Default facet choice: the first facet in canonical order, in ground-set order.
inline FacetChoice default_facet_choice(const SimplicialComplex& k) {
  const int d = k.dimension() + 1;
  for (Face f : k.facets())
    if (f.size() == d) return {k.names(f)};
  throw Error(Errc::NotAFacet, "complex has no facet");
}

/// Completes a subdivision Γ of 2^V (V = {v_1..v_d} in base order) to a subdivision
/// of Σ_{d-1} on U ∪ V: Δ = ⋃ 2^{U_I} ∗ Γ_{V_J} over disjoint (I, J), σ_0(E ∪ F) = E ∪ σ(F).
inline SubdivisionMap ball_to_sphere(const SubdivisionMap& s, bool verify = false,
                                     const FieldSpec& field = FieldSpec::gf2()) {
  const Face v = s.simplex_face();
  const auto d = static_cast<std::size_t>(v.size());
  const bool ok = verify ? validate(s, {field, false}).is_homology_subdivision
                         : validate(s, {field, true}).is_homology_subdivision;
  if (!ok) throw Error(Errc::NotHomologySubdivision, "ball_to_sphere input");

  std::unordered_set<std::string> taken(s.total().labels().begin(), s.total().labels().end());
  taken.insert(s.base().labels().begin(), s.base().labels().end());
  NameSet us;
  for (std::size_t i = 1; i <= d; ++i) {
    std::string name = "u" + std::to_string(i);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    us.push_back(name);
  }

  std::vector<std::string> total_labels = s.total().labels();
  const std::size_t ushift = total_labels.size();
  total_labels.insert(total_labels.end(), us.begin(), us.end());
  std::vector<std::string> base_labels = us;
  base_labels.insert(base_labels.end(), s.base().labels().begin(), s.base().labels().end());
  if (total_labels.size() > kMaxGroundSet || base_labels.size() > kMaxGroundSet)
    throw Error(Errc::GroundSetTooLarge, "ball_to_sphere exceeds the 64-vertex width");

  // Every ordered pair of disjoint index sets (I, J), encoded as a base-3 digit string.
  FaceList gens;
  std::size_t pairs = 1;
  for (std::size_t i = 0; i < d; ++i) pairs *= 3;
  for (std::size_t code = 0; code < pairs; ++code) {
    Face ui, vj;
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= 3) {
      if (c % 3 == 1) ui = ui.with(ushift + i);
      if (c % 3 == 2) vj = vj.with(i);
    }
    const SimplicialComplex gamma_j = SimplicialComplex::from_face_set(s.total().labels(), s.restricted_faces(vj));
    for (Face g : gamma_j.facets()) gens.push_back(g | ui);
  }
  SimplicialComplex total(std::move(total_labels), gens);

  FaceList bgens;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << d); ++choice) {
    Face f;
    for (std::size_t i = 0; i < d; ++i) f = f.with((choice >> i) & 1U ? d + i : i);
    bgens.push_back(f);
  }
  SimplicialComplex base(std::move(base_labels), bgens);
  const Face low = Face::range(ushift);
  return SubdivisionMap(total, base, [&](Face e) {
    const Face e_u(ushift >= 64 ? 0 : (e - low).bits() >> ushift);
    const Face f = e & low;
    return e_u | Face(s.carrier(f).bits() << d);
  });
}

namespace detail {

// Carrier shared by the "pushed" fixtures: the face F of the base simplex moves
// to the interior of V, and vertices outside V move to the interior of F.
inline Face pushed_carrier(Face e, Face v, Face f, Face to_v) {
  if (e.intersects(to_v) || f.subset_of(e)) return v;
  if (e.subset_of(v)) return e;
  return f;
}

}  // namespace detail

/// Fixtures: "ex-2.3a", "ex-2.3b", "ex-2.3c" (subdivisions of a tetrahedron) and
/// "rem-4.5" (a subdivision of a triangle).
inline SubdivisionMap example_fixture(const std::string& name) {
  if (name == "ex-2.3a") {
    auto total = SimplicialComplex::from_facets({"a", "b", "c", "d", "e"}, {{"a", "b", "c", "d"}, {"b", "c", "d", "e"}});
    auto base = simplex({"a", "b", "c", "d"});
    const Face v = base.ground(), f = base.face_of({"b", "c", "d"});
    return SubdivisionMap(total, base, [&](Face e) { return detail::pushed_carrier(e, v, f, Face{}); });
  }
  if (name == "ex-2.3b") {
    std::vector<NameSet> facets{{"a", "b", "c", "d"}};
    const NameSet rim{"b", "c", "d", "e"};
    for (std::size_t skip = 0; skip < rim.size(); ++skip) {
      NameSet g{"v"};
      for (std::size_t i = 0; i < rim.size(); ++i)
        if (i != skip) g.push_back(rim[i]);
      facets.push_back(g);
    }
    auto total = SimplicialComplex::from_facets({"a", "b", "c", "d", "e", "v"}, facets);
    auto base = simplex({"a", "b", "c", "d"});
    const Face v = base.ground(), f = base.face_of({"b", "c", "d"});
    const Face apex = total.face_of({"v"});
    return SubdivisionMap(total, base, [&](Face e) { return detail::pushed_carrier(e, v, f, apex); });
  }
  if (name == "ex-2.3c") {
    // Γ_0: octahedron boundary on the pairs {b,b'}, {c,c'}, {d,d'}; it contains F = {b,c,d}
    // and Γ_0 minus F is a subdivision of the triangle F with interior vertices b', c', d'.
    std::vector<NameSet> facets{{"a", "b", "c", "d"}};
    for (int choice = 0; choice < 8; ++choice)
      facets.push_back({"v", (choice & 1) ? "b'" : "b", (choice & 2) ? "c'" : "c", (choice & 4) ? "d'" : "d"});
    auto total = SimplicialComplex::from_facets({"a", "b", "c", "d", "b'", "c'", "d'", "v"}, facets);
    auto base = simplex({"a", "b", "c", "d"});
    const Face v = base.ground(), f = base.face_of({"b", "c", "d"});
    const Face apex = total.face_of({"v"});
    return SubdivisionMap(total, base, [&](Face e) { return detail::pushed_carrier(e, v, f, apex); });
  }
  if (name == "rem-4.5") {
    auto total = SimplicialComplex::from_facets({"v1", "v2", "v3", "v4"}, {{"v1", "v2", "v3"}, {"v2", "v3", "v4"}});
    auto base = simplex({"v1", "v2", "v3"});
    const Face v = base.ground(), f = base.face_of({"v2", "v3"});
    return SubdivisionMap(total, base, [&](Face e) { return detail::pushed_carrier(e, v, f, Face{}); });
  }
  throw Error(Errc::UnknownFixture, "unknown fixture '" + name + "'");
}

inline std::vector<std::string> fixture_names() { return {"ex-2.3a", "ex-2.3b", "ex-2.3c", "rem-4.5"}; }

}  // namespace flagsub
