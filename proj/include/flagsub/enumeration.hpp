#pragma once

// h-polynomials, Euler characteristics and the γ basis change.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "flagsub/complex.hpp"
#include "flagsub/error.hpp"
#include "flagsub/polynomial.hpp"

namespace flagsub {

/// Σ_i count_i · x^i (1-x)^{d-i}, where count_i counts faces of cardinality i.
inline IntPolynomial face_sum(const std::vector<long long>& counts_by_size, int d) {
  IntPolynomial out;
  for (std::size_t i = 0; i < counts_by_size.size(); ++i) {
    if (counts_by_size[i] == 0) continue;
    const int k = static_cast<int>(i);
    out += BigInt(counts_by_size[i]) * IntPolynomial::one_minus_x_pow(d - k).shifted(i);
  }
  return out;
}

/// h(K, x) = Σ_{F ∈ K} x^{|F|} (1-x)^{d-|F|} with d = dim K + 1.
inline IntPolynomial h_polynomial(const SimplicialComplex& k) {
  return face_sum(f_vector(k).counts, k.dimension() + 1);
}

/// The face sum restricted to `interior`, with d = dim K + 1.
inline IntPolynomial interior_h_polynomial(const SimplicialComplex& k, const FaceList& interior) {
  const int d = k.dimension() + 1;
  std::vector<long long> counts(static_cast<std::size_t>(d + 1), 0);
  for (Face f : interior) {
    if (!k.contains(f)) throw Error(Errc::InteriorNotSubset, "interior face {" + k.key(f) + "} is not a face");
    ++counts[static_cast<std::size_t>(f.size())];
  }
  return face_sum(counts, d);
}

/// χ̃(K) = Σ_{F ∈ K} (-1)^{|F|-1}.
inline long long reduced_euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (Face f : k.faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

/// Every link (including link(∅) = K) has χ̃ = (-1)^{dim link}.
inline bool is_eulerian(const SimplicialComplex& k) {
  for (Face f : k.faces()) {
    // χ̃(link F) = Σ_{G ⊇ F} (-1)^{|G∖F|-1}; no need to build the link.
    long long chi = 0;
    int top = -1;
    for (Face g : k.faces()) {
      if (!f.subset_of(g)) continue;
      const int s = g.size() - f.size();
      chi += (s % 2 == 1) ? 1 : -1;
      top = std::max(top, s - 1);
    }
    if (chi != ((top % 2 == 0) ? 1 : -1)) return false;
  }
  return true;
}

struct GammaVector {
  int d = 0;
  std::vector<BigInt> gammas;  // γ_0 … γ_{⌊d/2⌋}

  /// Σ γ_i x^i as a polynomial.
  IntPolynomial polynomial() const { return IntPolynomial(gammas); }
  bool nonnegative() const {
    for (const auto& g : gammas)
      if (g < 0) return false;
    return true;
  }
  bool operator==(const GammaVector&) const = default;
};

/// First pair (i, d-i) with h_i ≠ h_{d-i}.
struct SymmetryFailure {
  int i = 0;
  int j = 0;
  bool operator==(const SymmetryFailure&) const = default;
};

using GammaResult = std::variant<GammaVector, SymmetryFailure>;

/// Σ γ_i x^i (1+x)^{d-2i}.
inline IntPolynomial expand_gamma(const std::vector<BigInt>& gammas, int d) {
  IntPolynomial out;
  for (std::size_t i = 0; i < gammas.size(); ++i)
    out += gammas[i] * IntPolynomial::one_plus_x_pow(d - 2 * static_cast<int>(i)).shifted(i);
  return out;
}

inline IntPolynomial expand_gamma(const GammaVector& g) { return expand_gamma(g.gammas, g.d); }

/// Solves h = Σ γ_i x^i (1+x)^{d-2i} by elimination from γ_0 upward.
inline GammaResult gamma_from_symmetric(const IntPolynomial& h, int d) {
  if (d < 0 || h.degree() > d)
    throw Error(Errc::InvalidArgument, "degree " + std::to_string(h.degree()) + " exceeds d = " + std::to_string(d));
  for (int i = 0; i <= d / 2; ++i)
    if (h.at(i) != h.at(d - i)) return SymmetryFailure{i, d - i};
  GammaVector out;
  out.d = d;
  IntPolynomial residual = h;
  for (int i = 0; i <= d / 2; ++i) {
    BigInt gi = residual.at(i);
    residual -= gi * IntPolynomial::one_plus_x_pow(d - 2 * i).shifted(static_cast<std::size_t>(i));
    out.gammas.push_back(std::move(gi));
  }
  return out;
}

/// γ(K) of an Eulerian complex, or the symmetry failure of its h-vector.
inline GammaResult gamma_vector(const SimplicialComplex& k) {
  return gamma_from_symmetric(h_polynomial(k), k.dimension() + 1);
}

}  // namespace flagsub
