#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace flagsub {

/// Maximum number of labels in a ground set.
inline constexpr std::size_t kMaxGroundSet = 64;

/// A set of vertex indices over a ground set of at most 64 labels.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  static constexpr Face singleton(std::size_t i) { return Face(std::uint64_t{1} << i); }
  /// The full set {0, ..., n-1}.
  static constexpr Face range(std::size_t n) {
    return Face(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dimension() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
  constexpr Face with(std::size_t i) const { return Face(bits_ | (std::uint64_t{1} << i)); }
  constexpr Face without(std::size_t i) const { return Face(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr bool operator==(const Face&) const = default;

  /// Canonical face order: by cardinality, then by bit pattern.
  constexpr std::strong_ordering operator<=>(const Face& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// Calls fn on every subset of this face, including the empty set and the face itself.
  template <class Fn>
  void for_each_subset(Fn&& fn) const {
    std::uint64_t sub = bits_;
    while (true) {
      fn(Face(sub));
      if (sub == 0) break;
      sub = (sub - 1) & bits_;
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

struct FaceHash {
  std::size_t operator()(Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};

}  // namespace flagsub
