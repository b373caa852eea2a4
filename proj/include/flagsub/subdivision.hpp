#pragma once

// Subdivision maps σ: Δ′ → Δ, their validation, and the local h / local γ
// invariants of subdivisions of a simplex.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagsub/complex.hpp"
#include "flagsub/enumeration.hpp"
#include "flagsub/error.hpp"
#include "flagsub/homology.hpp"
#include "flagsub/polynomial.hpp"

namespace flagsub {

/// True when k is the full simplex on its ground set (including {∅} = 2^∅).
inline bool is_simplex(const SimplicialComplex& k) {
  return k.facets().size() == 1 && k.facets().front() == k.ground();
}

/// A total complex Δ′, a base complex Δ and an explicit carrier σ(E) for every
/// face E of Δ′. The constructor enforces σ(∅) = ∅, monotonicity,
/// dim σ(E) ≥ dim E and surjectivity onto the faces of Δ.
class SubdivisionMap {
 public:
  using CarrierFn = std::function<Face(Face)>;

  SubdivisionMap(SimplicialComplex total, SimplicialComplex base, const CarrierFn& carrier)
      : total_(std::move(total)), base_(std::move(base)) {
    carriers_.reserve(total_.face_count());
    for (Face e : total_.faces()) carriers_.push_back(carrier(e));
    check();
  }

  const SimplicialComplex& total() const { return total_; }
  const SimplicialComplex& base() const { return base_; }

  Face carrier(Face e) const {
    const auto& fs = total_.faces();
    auto it = std::lower_bound(fs.begin(), fs.end(), e);
    if (it == fs.end() || *it != e) throw Error(Errc::NotAFace, "{" + total_.key(e) + "} is not a face of the total complex");
    return carriers_[static_cast<std::size_t>(it - fs.begin())];
  }
  /// Carriers aligned with total().faces().
  const FaceList& carriers() const { return carriers_; }

  /// Faces of Δ′ with σ(E) ⊆ F (the restriction Δ′_F), in total's indexing.
  FaceList restricted_faces(Face f) const {
    FaceList out;
    for (std::size_t i = 0; i < carriers_.size(); ++i)
      if (carriers_[i].subset_of(f)) out.push_back(total_.faces()[i]);
    return out;
  }

  /// σ^{-1}(F), in total's indexing.
  FaceList preimage(Face f) const {
    FaceList out;
    for (std::size_t i = 0; i < carriers_.size(); ++i)
      if (carriers_[i] == f) out.push_back(total_.faces()[i]);
    return out;
  }

  /// The simplex face V when the base is 2^V.
  Face simplex_face() const {
    if (!is_simplex(base_)) throw Error(Errc::BaseNotSimplex, "base complex is not a simplex");
    return base_.ground();
  }

 private:
  void check() const {
    const auto& fs = total_.faces();
    std::vector<char> hit(base_.face_count(), 0);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Face e = fs[i];
      const Face c = carriers_[i];
      if (!base_.contains(c))
        throw Error(Errc::InvalidCarrier, "carrier of {" + total_.key(e) + "} is not a face of the base");
      if (c.size() < e.size())
        throw Error(Errc::InvalidCarrier, "carrier of {" + total_.key(e) + "} has smaller dimension");
      for (std::size_t v : e.members())
        if (!carrier(e.without(v)).subset_of(c))
          throw Error(Errc::InvalidCarrier, "carrier map is not monotone at {" + total_.key(e) + "}");
      const auto& bf = base_.faces();
      hit[static_cast<std::size_t>(std::lower_bound(bf.begin(), bf.end(), c) - bf.begin())] = 1;
    }
    if (carriers_.front() != Face{}) throw Error(Errc::InvalidCarrier, "the empty face must map to the empty face");
    for (std::size_t j = 0; j < hit.size(); ++j)
      if (!hit[j]) throw Error(Errc::InvalidCarrier, "base face {" + base_.key(base_.faces()[j]) + "} has no preimage");
  }

  SimplicialComplex total_;
  SimplicialComplex base_;
  FaceList carriers_;
};

/// σ = identity on K.
inline SubdivisionMap trivial_subdivision(const SimplicialComplex& k) {
  return SubdivisionMap(k, k, [](Face e) { return e; });
}

/// Δ′_F as a subdivision of the simplex 2^F.
inline SubdivisionMap restriction(const SubdivisionMap& s, Face f) {
  if (!s.base().contains(f)) throw Error(Errc::NotAFace, "{" + s.base().key(f) + "} is not a face of the base");
  SimplicialComplex total = subcomplex(s.total(), s.restricted_faces(f));
  SimplicialComplex base = simplex(s.base().names(f));
  return SubdivisionMap(total, base, [&](Face e) {
    return translate(s.carrier(translate(e, total, s.total())), s.base(), base);
  });
}

namespace detail {

// h(Δ′_F, x) computed straight from carrier counts.
inline IntPolynomial restriction_h(const SubdivisionMap& s, Face f) {
  std::vector<long long> counts(static_cast<std::size_t>(s.total().dimension() + 2), 0);
  int top = 0;
  const auto& fs = s.total().faces();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (s.carriers()[i].subset_of(f)) {
      ++counts[static_cast<std::size_t>(fs[i].size())];
      top = std::max(top, fs[i].size());
    }
  counts.resize(static_cast<std::size_t>(top + 1));
  return face_sum(counts, top);
}

// h(link_{Δ′_F}(E), x) from carrier counts; E must lie in Δ′_F.
inline IntPolynomial restricted_link_h(const SubdivisionMap& s, Face f, Face e) {
  std::vector<long long> counts(static_cast<std::size_t>(s.total().dimension() + 2), 0);
  int top = 0;
  const auto& fs = s.total().faces();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (e.subset_of(fs[i]) && s.carriers()[i].subset_of(f)) {
      const int k = fs[i].size() - e.size();
      ++counts[static_cast<std::size_t>(k)];
      top = std::max(top, k);
    }
  counts.resize(static_cast<std::size_t>(top + 1));
  return face_sum(counts, top);
}

}  // namespace detail

/// ℓ_V(Δ′_V, x) = Σ_{F ⊆ V} (-1)^{|V|-|F|} h(Δ′_F, x) for a face V of the base.
inline IntPolynomial local_h_at(const SubdivisionMap& s, Face v) {
  if (!s.base().contains(v)) throw Error(Errc::NotAFace, "{" + s.base().key(v) + "} is not a face of the base");
  IntPolynomial out;
  v.for_each_subset([&](Face f) {
    IntPolynomial h = detail::restriction_h(s, f);
    if ((v.size() - f.size()) % 2 == 0)
      out += h;
    else
      out -= h;
  });
  return out;
}

/// Local h-polynomial of a subdivision of a simplex 2^V.
inline IntPolynomial local_h(const SubdivisionMap& s) { return local_h_at(s, s.simplex_face()); }

/// ℓ_V(Γ, E, x) = Σ_{σ(E) ⊆ F ⊆ V} (-1)^{|V|-|F|} h(link_{Γ_F}(E), x).
inline IntPolynomial relative_local_h(const SubdivisionMap& s, Face e) {
  const Face v = s.simplex_face();
  const Face c = s.carrier(e);
  IntPolynomial out;
  (v - c).for_each_subset([&](Face extra) {
    const Face f = c | extra;
    IntPolynomial h = detail::restricted_link_h(s, f, e);
    if ((v.size() - f.size()) % 2 == 0)
      out += h;
    else
      out -= h;
  });
  return out;
}

/// ξ_V: the γ-vector of ℓ_V with respect to d = |V|.
inline GammaVector local_gamma_at(const SubdivisionMap& s, Face v) {
  auto r = gamma_from_symmetric(local_h_at(s, v), v.size());
  if (auto* fail = std::get_if<SymmetryFailure>(&r))
    throw Error(Errc::NotHomologySubdivision, "local h-vector is not symmetric at (" + std::to_string(fail->i) + ", " +
                                                  std::to_string(fail->j) + ")");
  return std::get<GammaVector>(r);
}

inline GammaVector local_gamma(const SubdivisionMap& s) { return local_gamma_at(s, s.simplex_face()); }

struct InteriorStats {
  long long f0_interior = 0;       // vertices carried to V
  long long f1_interior = 0;       // edges carried to V
  long long f0_codim1_relint = 0;  // vertices carried to a (d-2)-face of 2^V
  bool operator==(const InteriorStats&) const = default;
};

inline InteriorStats interior_stats(const SubdivisionMap& s) {
  const Face v = s.simplex_face();
  InteriorStats out;
  const auto& fs = s.total().faces();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Face c = s.carriers()[i];
    if (fs[i].size() == 1 && c == v) ++out.f0_interior;
    if (fs[i].size() == 2 && c == v) ++out.f1_interior;
    if (fs[i].size() == 1 && c.size() == v.size() - 1) ++out.f0_codim1_relint;
  }
  return out;
}

struct SubdivisionFailure {
  std::string face;
  std::string reason;
};

struct RestrictionRecord {
  Face base_face;
  SimplicialComplex complex;  // Δ′_F on its own vertices
  HomologyClass homology;
};

struct SubdivisionVerdict {
  bool is_homology_subdivision = true;
  bool is_quasi_geometric = true;
  bool is_vertex_induced = true;
  bool is_flag_subdivision = true;
  /// False when validated with `fast`: only combinatorial axioms were checked.
  bool homology_checked = true;
  std::vector<SubdivisionFailure> failures;
  /// Homology classification of every restriction Δ′_F (full validation only).
  std::vector<RestrictionRecord> restrictions;
};

/// |⋃_{v ∈ E} σ(v)| ≥ |E| for every face E.
inline bool quasi_geometric_at(const SubdivisionMap& s, Face e) {
  Face u;
  for (std::size_t v : e.members()) u = u | s.carrier(Face::singleton(v));
  return u.size() >= e.size();
}

struct ValidateOptions {
  FieldSpec field = FieldSpec::gf2();
  bool fast = false;
};

/// Checks the homology-subdivision axioms and the quasi-geometric /
/// vertex-induced / flag hierarchy. Never throws on a failing axiom.
inline SubdivisionVerdict validate(const SubdivisionMap& s, const ValidateOptions& opts = {}) {
  SubdivisionVerdict out;
  out.homology_checked = !opts.fast;
  const SimplicialComplex& total = s.total();
  const SimplicialComplex& base = s.base();
  auto fail = [&out](bool& flag, std::string face, std::string reason) {
    flag = false;
    out.failures.push_back({std::move(face), std::move(reason)});
  };

  for (Face f : base.faces()) {
    if (f.empty()) continue;  // Δ′_∅ = {∅}: the (-1)-ball with interior {∅}.
    const FaceList faces = s.restricted_faces(f);
    const FaceList pre = s.preimage(f);
    const SimplicialComplex sub = SimplicialComplex::from_face_set(total.labels(), faces);
    const SimplicialComplex compact = sub.compacted();
    const std::string key = "{" + base.key(f) + "}";

    if (opts.fast) {
      if (!sub.is_pure() || sub.dimension() != f.dimension()) {
        fail(out.is_homology_subdivision, key, "restriction is not pure of dimension " + std::to_string(f.dimension()));
      } else {
        FaceList ridges;
        for (Face r : sub.faces()) {
          if (r.size() != f.size() - 1) continue;
          int count = 0;
          for (Face g : sub.facets())
            if (r.subset_of(g)) ++count;
          if (count == 1) ridges.push_back(r);
        }
        FaceList interior;
        if (!ridges.empty()) {
          SimplicialComplex bd(total.labels(), ridges);
          for (Face g : faces)
            if (!bd.contains(g)) interior.push_back(g);
        }
        if (interior != pre) fail(out.is_homology_subdivision, key, "preimage differs from the interior of the restriction");
      }
    } else {
      HomologyClass cls = classify(compact, opts.field);
      if (!cls.is_ball(f.dimension())) {
        fail(out.is_homology_subdivision, key,
             "restriction is not a homology ball of dimension " + std::to_string(f.dimension()) +
                 (cls.reason.empty() ? "" : " (" + cls.reason + ")"));
      } else {
        FaceList interior;
        for (Face g : cls.interior) interior.push_back(translate(g, compact, total));
        std::sort(interior.begin(), interior.end());
        if (interior != pre) fail(out.is_homology_subdivision, key, "preimage differs from the interior of the restriction");
      }
      out.restrictions.push_back({f, compact, std::move(cls)});
    }

    if (!is_flag(compact)) fail(out.is_flag_subdivision, key, "restriction is not flag");

    const Face verts = translate(compact.ground(), compact, total);
    for (Face e : total.faces())
      if (e.subset_of(verts) && !s.carrier(e).subset_of(f)) {
        fail(out.is_vertex_induced, key, "face {" + total.key(e) + "} spans restriction vertices but is not in it");
        break;
      }
  }

  for (Face e : total.faces())
    if (!quasi_geometric_at(s, e)) fail(out.is_quasi_geometric, "{" + total.key(e) + "}", "vertex carriers fit in a smaller face");
  return out;
}

/// σ_outer ∘ σ_inner, where inner's base is outer's total.
inline SubdivisionMap compose(const SubdivisionMap& outer, const SubdivisionMap& inner) {
  if (!(inner.base() == outer.total()))
    throw Error(Errc::BaseMismatch, "inner base differs from outer total complex");
  return SubdivisionMap(inner.total(), outer.base(), [&](Face e) {
    return outer.carrier(translate(inner.carrier(e), inner.base(), outer.total()));
  });
}

struct Decomposition {
  IntPolynomial lhs;
  IntPolynomial rhs;
  /// γ form, present when the base is Eulerian.
  std::optional<IntPolynomial> gamma_lhs;
  std::optional<IntPolynomial> gamma_rhs;
  bool holds() const { return lhs == rhs && gamma_lhs == gamma_rhs; }
};

/// h(Δ′) against Σ_{F ∈ Δ} ℓ_F(Δ′_F) h(link_Δ F), plus the γ form on Eulerian bases.
inline Decomposition check_h_decomposition(const SubdivisionMap& s, bool verify = false) {
  if (verify) {
    if (!validate(s).is_homology_subdivision) throw Error(Errc::NotHomologySubdivision, "h-decomposition input");
  } else if (!validate(s, {FieldSpec::gf2(), true}).is_homology_subdivision) {
    throw Error(Errc::NotHomologySubdivision, "h-decomposition input fails the combinatorial axioms");
  }
  Decomposition out;
  out.lhs = h_polynomial(s.total());
  const bool eulerian = is_eulerian(s.base());
  IntPolynomial gamma_rhs;
  for (Face f : s.base().faces()) {
    const SimplicialComplex lk = link(s.base(), f);
    const IntPolynomial lf = local_h_at(s, f);
    out.rhs += lf * h_polynomial(lk);
    if (eulerian) {
      auto xi = gamma_from_symmetric(lf, f.size());
      auto g = gamma_vector(lk);
      if (std::holds_alternative<GammaVector>(xi) && std::holds_alternative<GammaVector>(g))
        gamma_rhs += std::get<GammaVector>(xi).polynomial() * std::get<GammaVector>(g).polynomial();
    }
  }
  if (eulerian) {
    auto g = gamma_vector(s.total());
    out.gamma_lhs = std::holds_alternative<GammaVector>(g) ? std::get<GammaVector>(g).polynomial() : IntPolynomial{};
    out.gamma_rhs = gamma_rhs;
  }
  return out;
}

/// ℓ_V of the composition against Σ_{E ∈ Γ} ℓ_E(Γ′_E) ℓ_V(Γ, E).
inline std::pair<IntPolynomial, IntPolynomial> check_locality(const SubdivisionMap& outer, const SubdivisionMap& inner) {
  const SubdivisionMap composed = compose(outer, inner);
  IntPolynomial lhs = local_h(composed);
  IntPolynomial rhs;
  for (Face e : outer.total().faces()) {
    const Face inner_e = translate(e, outer.total(), inner.base());
    const IntPolynomial rel = relative_local_h(outer, e);
    if (rel.is_zero()) continue;
    rhs += local_h_at(inner, inner_e) * rel;
  }
  return {std::move(lhs), std::move(rhs)};
}

/// Default name of the vertex added by a stellar move on F: "b{a.b.c}".
inline std::string stellar_vertex_name(const SimplicialComplex& k, Face f) {
  std::string out = "b{";
  bool first = true;
  for (const auto& n : k.names(f)) {
    if (!first) out += '.';
    out += n;
    first = false;
  }
  return out + "}";
}

/// Stellar subdivision of K on F with a new vertex; σ(E) = E on K, (E ∖ v) ∪ F otherwise.
inline SubdivisionMap stellar_subdivision(const SimplicialComplex& k, Face f, std::string new_vertex = {}) {
  if (!k.contains(f)) throw Error(Errc::NotAFace, "{" + k.key(f) + "} is not a face");
  if (f.empty()) throw Error(Errc::InvalidArgument, "stellar subdivision on the empty face");
  if (new_vertex.empty()) new_vertex = stellar_vertex_name(k, f);
  if (k.index_of(new_vertex)) throw Error(Errc::VertexCollision, "vertex '" + new_vertex + "' already exists");
  std::vector<std::string> labels = k.labels();
  labels.push_back(new_vertex);
  if (labels.size() > kMaxGroundSet) throw Error(Errc::GroundSetTooLarge, "stellar subdivision exceeds the 64-vertex width");
  const std::size_t apex = labels.size() - 1;
  FaceList gens;
  for (Face g : k.facets()) {
    if (!f.subset_of(g)) {
      gens.push_back(g);
      continue;
    }
    for (std::size_t x : f.members()) gens.push_back(g.without(x).with(apex));
  }
  SimplicialComplex total(std::move(labels), gens);
  return SubdivisionMap(total, k, [&](Face e) { return e.contains(apex) ? (e.without(apex) | f) : e; });
}

inline SubdivisionMap edge_subdivision(const SimplicialComplex& k, Face edge, std::string new_vertex = {}) {
  if (edge.size() != 2) throw Error(Errc::InvalidArgument, "edge subdivision needs a two-element face");
  return stellar_subdivision(k, edge, std::move(new_vertex));
}

/// s followed by a stellar move on a face of s's total complex.
inline SubdivisionMap refine_stellar(const SubdivisionMap& s, Face f, std::string new_vertex = {}) {
  return compose(s, stellar_subdivision(s.total(), f, std::move(new_vertex)));
}

/// Barycentric subdivision of 2^V by stellar moves on every face of size ≥ 2,
/// in decreasing size.
inline SubdivisionMap barycentric_subdivision(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(Errc::InvalidArgument, "barycentric subdivision needs |V| >= 1");
  const SimplicialComplex v = simplex(labels);
  SubdivisionMap s = trivial_subdivision(v);
  FaceList order = v.faces();
  std::sort(order.begin(), order.end(), [](Face a, Face b) { return b < a; });
  for (Face f : order) {
    if (f.size() < 2) break;
    s = refine_stellar(s, translate(f, v, s.total()), stellar_vertex_name(v, f));
  }
  return s;
}

/// σ(E1 ∪ E2) = σ1(E1) ∪ σ2(E2) on the joins.
inline SubdivisionMap join_subdivision(const SubdivisionMap& s1, const SubdivisionMap& s2) {
  SimplicialComplex total = join(s1.total(), s2.total());
  SimplicialComplex base = join(s1.base(), s2.base());
  const std::size_t tshift = s1.total().ground_size();
  const std::size_t bshift = s1.base().ground_size();
  const Face low = Face::range(tshift);
  return SubdivisionMap(total, base, [&](Face e) {
    const Face e1 = e & low;
    const Face e2(tshift >= 64 ? 0 : (e - low).bits() >> tshift);
    const Face c2 = s2.carrier(e2);
    return s1.carrier(e1) | Face(bshift >= 64 ? 0 : c2.bits() << bshift);
  });
}

/// σ_F(E) = σ(E ∪ F) ∖ F on link_{Δ′}(F) → link_Δ(F), for a common face with σ(F) = F.
inline SubdivisionMap link_subdivision(const SubdivisionMap& s, const NameSet& face) {
  const Face ft = s.total().face_of(face);
  const Face fb = s.base().face_of(face);
  if (!s.total().contains(ft) || !s.base().contains(fb))
    throw Error(Errc::NotAFace, "link face must be a face of both complexes");
  if (s.carrier(ft) != translate(ft, s.total(), s.base()))
    throw Error(Errc::CarrierMismatch, "carrier of the link face is not the face itself");
  SimplicialComplex total = link(s.total(), ft);
  SimplicialComplex base = link(s.base(), fb);
  return SubdivisionMap(total, base, [&](Face e) {
    const Face c = s.carrier(translate(e, total, s.total()) | ft) - fb;
    return translate(c, s.base(), base);
  });
}

}  // namespace flagsub
