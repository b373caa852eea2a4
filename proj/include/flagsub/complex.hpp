#pragma once

// Finite abstract simplicial complexes over a labeled ground set.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flagsub/error.hpp"
#include "flagsub/face.hpp"

namespace flagsub {

using FaceList = std::vector<Face>;
using NameSet = std::vector<std::string>;

/// Face counts (f_{-1}, f_0, ..., f_{dim}); f_{-1} = 1.
struct FVector {
  std::vector<long long> counts;
  bool operator==(const FVector&) const = default;
};

/// An immutable, downward-closed family of subsets of a labeled ground set.
/// Facets and the full face list are computed eagerly, so a complex can be
/// shared freely between threads.
class SimplicialComplex {
 public:
  /// The complex {∅} on an empty ground set.
  SimplicialComplex() : SimplicialComplex(std::vector<std::string>{}, FaceList{Face{}}) {}

  /// Downward closure of the generators. Dominated generators are dropped.
  SimplicialComplex(std::vector<std::string> labels, const FaceList& generators) {
    init_labels(std::move(labels));
    FaceList gens = generators;
    if (gens.empty()) gens.push_back(Face{});
    const Face ground = Face::range(labels_.size());
    for (Face g : gens)
      if (!g.subset_of(ground)) throw Error(Errc::UnknownVertex, "generator outside ground set");
    std::sort(gens.begin(), gens.end(), [](Face a, Face b) { return b < a; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (Face g : gens) {
      bool dominated = std::any_of(facets_.begin(), facets_.end(), [g](Face f) { return g.subset_of(f); });
      if (!dominated) facets_.push_back(g);
    }
    std::sort(facets_.begin(), facets_.end());
    std::unordered_set<Face, FaceHash> seen;
    for (Face f : facets_) f.for_each_subset([&](Face s) { seen.insert(s); });
    faces_.assign(seen.begin(), seen.end());
    std::sort(faces_.begin(), faces_.end());
  }

  /// Builds a complex from names. Throws UnknownVertex / DuplicateLabel / GroundSetTooLarge.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       const std::vector<NameSet>& generators) {
    SimplicialComplex probe;
    probe.init_labels(labels);
    FaceList gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(probe.face_of(g));
    return SimplicialComplex(std::move(labels), gens);
  }

  /// Builds a complex from an explicit downward-closed face family.
  static SimplicialComplex from_face_set(std::vector<std::string> labels, FaceList faces) {
    SimplicialComplex out;
    out.facets_.clear();
    out.init_labels(std::move(labels));
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.empty() || !faces.front().empty())
      throw Error(Errc::NotDownwardClosed, "face family must contain the empty face");
    const Face ground = Face::range(out.labels_.size());
    auto has = [&faces](Face f) { return std::binary_search(faces.begin(), faces.end(), f); };
    for (Face f : faces) {
      if (!f.subset_of(ground)) throw Error(Errc::UnknownVertex, "face outside ground set");
      for (std::size_t v : f.members())
        if (!has(f.without(v))) throw Error(Errc::NotDownwardClosed, "missing a codimension-one face");
    }
    for (Face f : faces) {
      bool maximal = true;
      for (std::size_t v = 0; v < out.labels_.size() && maximal; ++v)
        if (!f.contains(v) && has(f.with(v))) maximal = false;
      if (maximal) out.facets_.push_back(f);
    }
    out.faces_ = std::move(faces);
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t ground_size() const { return labels_.size(); }
  Face ground() const { return Face::range(labels_.size()); }
  const FaceList& facets() const { return facets_; }
  /// All faces including ∅, in (cardinality, bit pattern) order.
  const FaceList& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }

  bool contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

  int dimension() const { return faces_.back().dimension(); }

  bool is_pure() const {
    const int d = dimension();
    return std::all_of(facets_.begin(), facets_.end(), [d](Face f) { return f.dimension() == d; });
  }

  /// Union of all vertices that are faces.
  Face vertex_set() const {
    Face out;
    for (Face f : facets_) out = out | f;
    return out;
  }

  FaceList faces_of_size(int k) const {
    FaceList out;
    for (Face f : faces_)
      if (f.size() == k) out.push_back(f);
    return out;
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Face face_of(const NameSet& names) const {
    Face f;
    for (const auto& n : names) {
      auto i = index_of(n);
      if (!i) throw Error(Errc::UnknownVertex, "unknown vertex '" + n + "'");
      f = f.with(*i);
    }
    return f;
  }

  /// Member names in ground-set order.
  NameSet names(Face f) const {
    NameSet out;
    for (std::size_t i : f.members()) out.push_back(labels_.at(i));
    return out;
  }

  /// Member names joined by ',' in ground-set order; "" for ∅.
  std::string key(Face f) const {
    std::string out;
    for (std::size_t i : f.members()) {
      if (!out.empty()) out += ',';
      out += i < labels_.size() ? labels_[i] : "#" + std::to_string(i);  // outside the ground set
    }
    return out;
  }

  /// The same complex on the subset of labels that are vertices.
  SimplicialComplex compacted() const {
    const Face used = vertex_set();
    if (used == ground()) return *this;
    std::vector<std::string> labels;
    for (std::size_t i : used.members()) labels.push_back(labels_[i]);
    FaceList facets;
    for (Face f : facets_) facets.push_back(reindex(f, used));
    return SimplicialComplex(std::move(labels), facets);
  }

  /// Same labels (as a set) and the same facets by name.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.canonical() == b.canonical();
  }

 private:
  void init_labels(std::vector<std::string> labels) {
    if (labels.size() > kMaxGroundSet)
      throw Error(Errc::GroundSetTooLarge, std::to_string(labels.size()) + " labels exceed the 64-vertex width");
    labels_ = std::move(labels);
    index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty() || labels_[i].find(',') != std::string::npos)
        throw Error(Errc::InvalidLabel, "label '" + labels_[i] + "' is empty or contains ','");
      if (!index_.emplace(labels_[i], i).second)
        throw Error(Errc::DuplicateLabel, "duplicate label '" + labels_[i] + "'");
    }
  }

  // Renumbers the bits of f (a subset of `used`) to consecutive positions.
  static Face reindex(Face f, Face used) {
    Face out;
    std::size_t pos = 0;
    for (std::size_t i : used.members()) {
      if (f.contains(i)) out = out.with(pos);
      ++pos;
    }
    return out;
  }

  std::pair<NameSet, std::vector<NameSet>> canonical() const {
    NameSet labels = labels_;
    std::sort(labels.begin(), labels.end());
    std::vector<NameSet> facets;
    for (Face f : facets_) {
      NameSet n = names(f);
      std::sort(n.begin(), n.end());
      facets.push_back(std::move(n));
    }
    std::sort(facets.begin(), facets.end());
    return {std::move(labels), std::move(facets)};
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  FaceList facets_;
  FaceList faces_;
};

/// Translates a face between two complexes by vertex name.
inline Face translate(Face f, const SimplicialComplex& from, const SimplicialComplex& to) {
  Face out;
  for (std::size_t i : f.members()) {
    auto j = to.index_of(from.labels()[i]);
    if (!j) throw Error(Errc::UnknownVertex, "vertex '" + from.labels()[i] + "' missing in target ground set");
    out = out.with(*j);
  }
  return out;
}

inline FVector f_vector(const SimplicialComplex& k) {
  FVector out;
  out.counts.assign(static_cast<std::size_t>(k.dimension() + 2), 0);
  for (Face f : k.faces()) ++out.counts[static_cast<std::size_t>(f.size())];
  return out;
}

/// The simplex 2^V on the given labels.
inline SimplicialComplex simplex(std::vector<std::string> labels) {
  Face all = Face::range(labels.size());
  return SimplicialComplex(std::move(labels), FaceList{all});
}

/// ∂(2^V) = 2^V ∖ {V}.
inline SimplicialComplex simplex_boundary(std::vector<std::string> labels) {
  FaceList gens;
  for (std::size_t i = 0; i < labels.size(); ++i) gens.push_back(Face::range(labels.size()).without(i));
  return SimplicialComplex(std::move(labels), gens);
}

/// Faces of k contained in the vertex set `vertices`, on the used vertices.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& k, Face vertices) {
  FaceList faces;
  for (Face f : k.faces())
    if (f.subset_of(vertices)) faces.push_back(f);
  return SimplicialComplex::from_face_set(k.labels(), std::move(faces)).compacted();
}

/// A downward-closed sub-family of k's faces, on the vertices it uses.
inline SimplicialComplex subcomplex(const SimplicialComplex& k, FaceList faces) {
  return SimplicialComplex::from_face_set(k.labels(), std::move(faces)).compacted();
}

/// link(F) = { G ∖ F : F ⊆ G ∈ K }.
inline SimplicialComplex link(const SimplicialComplex& k, Face f) {
  if (!k.contains(f)) throw Error(Errc::NotAFace, "link of a non-face {" + k.key(f) + "}");
  FaceList gens;
  for (Face g : k.facets())
    if (f.subset_of(g)) gens.push_back(g - f);
  return SimplicialComplex(k.labels(), gens).compacted();
}

/// Faces of k that contain F. Not downward closed.
inline FaceList open_star(const SimplicialComplex& k, Face f) {
  if (!k.contains(f)) throw Error(Errc::NotAFace, "open star of a non-face {" + k.key(f) + "}");
  FaceList out;
  for (Face g : k.faces())
    if (f.subset_of(g)) out.push_back(g);
  return out;
}

inline SimplicialComplex closed_star(const SimplicialComplex& k, Face f) {
  if (!k.contains(f)) throw Error(Errc::NotAFace, "closed star of a non-face {" + k.key(f) + "}");
  FaceList gens;
  for (Face g : k.facets())
    if (f.subset_of(g)) gens.push_back(g);
  return SimplicialComplex(k.labels(), gens).compacted();
}

/// Simplicial join on disjoint ground sets; labels of k1 come first.
inline SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  std::vector<std::string> labels = k1.labels();
  for (const auto& l : k2.labels()) {
    if (k1.index_of(l)) throw Error(Errc::GroundSetOverlap, "label '" + l + "' appears in both complexes");
    labels.push_back(l);
  }
  if (labels.size() > kMaxGroundSet) throw Error(Errc::GroundSetTooLarge, "join exceeds the 64-vertex width");
  const std::size_t shift = k1.ground_size();
  FaceList gens;
  for (Face a : k1.facets())
    for (Face b : k2.facets()) gens.push_back(a | Face(shift >= 64 ? 0 : b.bits() << shift));
  return SimplicialComplex(std::move(labels), gens);
}

inline SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
  return join(k, simplex({apex}));
}

/// Inclusion-minimal subsets of the ground set that are not faces.
inline FaceList minimal_non_faces(const SimplicialComplex& k) {
  std::unordered_set<Face, FaceHash> found;
  const std::size_t n = k.ground_size();
  for (Face g : k.faces()) {
    for (std::size_t x = 0; x < n; ++x) {
      if (g.contains(x)) continue;
      Face s = g.with(x);
      if (k.contains(s) || found.count(s)) continue;
      bool minimal = true;
      for (std::size_t y : g.members())
        if (!k.contains(s.without(y))) {
          minimal = false;
          break;
        }
      if (minimal) found.insert(s);
    }
  }
  FaceList out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_flag(const SimplicialComplex& k) {
  for (Face f : minimal_non_faces(k))
    if (f.size() != 2) return false;
  return true;
}

/// Σ_{d-1}: faces of {u1..ud, v1..vd} meeting each pair {ui, vi} at most once.
inline SimplicialComplex cross_polytope(int d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "cross_polytope needs d >= 1");
  if (2 * static_cast<std::size_t>(d) > kMaxGroundSet) throw Error(Errc::GroundSetTooLarge, "cross polytope too wide");
  std::vector<std::string> labels;
  for (int i = 1; i <= d; ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 1; i <= d; ++i) labels.push_back("v" + std::to_string(i));
  FaceList gens;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << d); ++choice) {
    Face f;
    for (int i = 0; i < d; ++i) f = f.with((choice >> i) & 1U ? static_cast<std::size_t>(d + i) : static_cast<std::size_t>(i));
    gens.push_back(f);
  }
  return SimplicialComplex(std::move(labels), gens);
}

}  // namespace flagsub
