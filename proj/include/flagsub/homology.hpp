#pragma once

// Reduced simplicial homology over a field and homology ball/sphere recognition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagsub/complex.hpp"
#include "flagsub/error.hpp"
#include "flagsub/polynomial.hpp"

namespace flagsub {

class FieldSpec {
 public:
  enum class Kind { GF2, GFp, Rationals };

  static FieldSpec gf2() { return FieldSpec(Kind::GF2, 2); }
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec gf(std::uint32_t p) {
    if (p < 2 || p >= (1U << 31)) throw Error(Errc::InvalidArgument, "characteristic out of range");
    for (std::uint32_t q = 2; q * q <= p; ++q)
      if (p % q == 0) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
    return p == 2 ? gf2() : FieldSpec(Kind::GFp, p);
  }

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const {
    switch (kind_) {
      case Kind::GF2: return "gf2";
      case Kind::GFp: return "gf" + std::to_string(p_);
      case Kind::Rationals: return "q";
    }
    return "?";
  }
  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

namespace detail {

// Sparse boundary column: (row index, ±1) pairs.
using Column = std::vector<std::pair<std::size_t, int>>;

inline std::size_t rank_gf2(const std::vector<Column>& cols, std::size_t rows) {
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(rows);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(words);
  for (const auto& col : cols) {
    std::fill(v.begin(), v.end(), 0);
    for (auto [r, s] : col) v[r / 64] ^= std::uint64_t{1} << (r % 64);
    while (true) {
      std::size_t w = words;
      while (w > 0 && v[w - 1] == 0) --w;
      if (w == 0) break;
      const std::size_t low = (w - 1) * 64 + (63 - static_cast<std::size_t>(std::countl_zero(v[w - 1])));
      if (pivots[low].empty()) {
        pivots[low] = v;
        ++rank;
        break;
      }
      for (std::size_t i = 0; i < words; ++i) v[i] ^= pivots[low][i];
    }
  }
  return rank;
}

inline std::size_t rank_gfp(const std::vector<Column>& cols, std::size_t rows, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> pivots(rows);
  std::size_t rank = 0;
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::uint64_t> v(rows);
  for (const auto& col : cols) {
    std::fill(v.begin(), v.end(), 0);
    for (auto [r, s] : col) v[r] = (v[r] + (s > 0 ? 1 : p - 1)) % p;
    while (true) {
      std::size_t low = rows;
      while (low > 0 && v[low - 1] == 0) --low;
      if (low == 0) break;
      --low;
      if (pivots[low].empty()) {
        const std::uint64_t inv = inverse(v[low]);
        for (auto& x : v) x = x * inv % p;
        pivots[low] = v;
        ++rank;
        break;
      }
      const std::uint64_t factor = v[low];
      for (std::size_t i = 0; i <= low; ++i) v[i] = (v[i] + (p - factor) * pivots[low][i]) % p;
    }
  }
  return rank;
}

// Fraction-free (Bareiss) elimination over the integers gives the rank over ℚ.
inline std::size_t rank_rational(const std::vector<Column>& cols, std::size_t rows) {
  const std::size_t n = cols.size();
  if (n == 0 || rows == 0) return 0;
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (auto [r, s] : cols[c]) m[r][c] += s;
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < n && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < n; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Reduced Betti numbers β̃_{-1}, …, β̃_{dim}.
struct BettiVector {
  std::vector<long long> reduced_betti;  // reduced_betti[i + 1] = β̃_i

  long long at(int i) const {
    const auto idx = static_cast<std::size_t>(i + 1);
    return i >= -1 && idx < reduced_betti.size() ? reduced_betti[idx] : 0;
  }
  int top_index() const { return static_cast<int>(reduced_betti.size()) - 2; }
  bool acyclic() const {
    return std::all_of(reduced_betti.begin(), reduced_betti.end(), [](long long b) { return b == 0; });
  }
  /// β̃ is 1 in degree `deg` and 0 elsewhere.
  bool concentrated_in(int deg) const {
    for (int i = -1; i <= top_index(); ++i)
      if (at(i) != (i == deg ? 1 : 0)) return false;
    return deg <= top_index();
  }
  bool operator==(const BettiVector&) const = default;
};

/// Rank of the boundary map from faces of cardinality k to faces of cardinality k-1.
inline std::size_t boundary_rank(const SimplicialComplex& k, int size, const FieldSpec& field) {
  if (size < 1) return 0;
  std::unordered_map<Face, std::size_t, FaceHash> row_index;
  for (Face f : k.faces())
    if (f.size() == size - 1) row_index.emplace(f, row_index.size());
  std::vector<detail::Column> cols;
  for (Face g : k.faces()) {
    if (g.size() != size) continue;
    detail::Column col;
    int sign = 1;
    for (std::size_t v : g.members()) {
      col.emplace_back(row_index.at(g.without(v)), sign);
      sign = -sign;
    }
    cols.push_back(std::move(col));
  }
  switch (field.kind()) {
    case FieldSpec::Kind::GF2: return detail::rank_gf2(cols, row_index.size());
    case FieldSpec::Kind::GFp: return detail::rank_gfp(cols, row_index.size(), field.characteristic());
    case FieldSpec::Kind::Rationals: return detail::rank_rational(cols, row_index.size());
  }
  return 0;
}

/// β̃_i = dim ker ∂_i − rank ∂_{i+1}, with the augmented chain complex (C_{-1} = 𝕜·∅).
inline BettiVector reduced_betti(const SimplicialComplex& k, const FieldSpec& field = FieldSpec::gf2()) {
  const int top = k.dimension();
  std::vector<long long> n(static_cast<std::size_t>(top + 2), 0);
  for (Face f : k.faces()) ++n[static_cast<std::size_t>(f.size())];
  // rank[s] = rank of ∂ from cardinality s to s-1; rank[0] = rank[top+2] = 0.
  std::vector<long long> rank(static_cast<std::size_t>(top + 3), 0);
  for (int s = 1; s <= top + 1; ++s) rank[static_cast<std::size_t>(s)] = static_cast<long long>(boundary_rank(k, s, field));
  BettiVector out;
  for (int s = 0; s <= top + 1; ++s) {
    const auto u = static_cast<std::size_t>(s);
    out.reduced_betti.push_back(n[u] - rank[u] - rank[u + 1]);
  }
  return out;
}

enum class Verdict { Sphere, Ball, Other };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Sphere: return "sphere";
    case Verdict::Ball: return "ball";
    case Verdict::Other: return "other";
  }
  return "?";
}

struct HomologyClass {
  Verdict verdict = Verdict::Other;
  int dimension = -1;
  /// Ball only: the boundary subcomplex, on the labels of the classified complex.
  std::optional<SimplicialComplex> boundary;
  /// Sphere: every face. Ball: faces off the boundary. Other: empty.
  FaceList interior;
  BettiVector betti;
  /// Reduced Betti numbers of every face link, keyed by face.
  std::map<Face, BettiVector> evidence;
  std::string reason;

  bool is_sphere(int d) const { return verdict == Verdict::Sphere && dimension == d; }
  bool is_ball(int d) const { return verdict == Verdict::Ball && dimension == d; }
};

/// Decides Sphere(d-1) / Ball(d-1) / Other from the link conditions on every face.
inline HomologyClass classify(const SimplicialComplex& k, const FieldSpec& field = FieldSpec::gf2()) {
  HomologyClass out;
  out.dimension = k.dimension();
  const int dim = k.dimension();
  for (Face f : k.faces()) out.evidence.emplace(f, reduced_betti(link(k, f), field));
  out.betti = out.evidence.at(Face{});
  if (!k.is_pure()) {
    out.reason = "facets of unequal dimension";
    return out;
  }

  bool sphere = true;
  for (const auto& [f, b] : out.evidence)
    if (!b.concentrated_in(dim - f.size())) {
      sphere = false;
      out.reason = "link of {" + k.key(f) + "} is not a homology sphere of the top dimension";
      break;
    }
  if (sphere) {
    out.verdict = Verdict::Sphere;
    out.interior = k.faces();
    out.reason.clear();
    return out;
  }

  // Candidate boundary: closure of the codimension-one faces lying in exactly one facet.
  FaceList ridges;
  for (Face r : k.faces()) {
    if (r.size() != dim) continue;
    int count = 0;
    for (Face f : k.facets())
      if (r.subset_of(f)) ++count;
    if (count == 1) ridges.push_back(r);
  }
  if (ridges.empty()) return out;
  SimplicialComplex boundary(k.labels(), ridges);
  HomologyClass bclass = classify(boundary.compacted(), field);
  if (!bclass.is_sphere(dim - 1)) {
    out.reason = "candidate boundary is not a homology sphere of dimension " + std::to_string(dim - 1);
    return out;
  }
  for (const auto& [f, b] : out.evidence) {
    const bool on_boundary = boundary.contains(f);
    const bool ok = on_boundary ? b.acyclic() : b.concentrated_in(dim - f.size());
    if (!ok) {
      out.reason = "link of {" + k.key(f) + "} violates the ball condition";
      return out;
    }
  }
  out.verdict = Verdict::Ball;
  for (Face f : k.faces())
    if (!boundary.contains(f)) out.interior.push_back(f);
  out.boundary = std::move(boundary);
  out.reason.clear();
  return out;
}

}  // namespace flagsub
