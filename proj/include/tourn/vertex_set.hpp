#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tourn {

/// Largest vertex count a Tournament can hold; vertex sets are 32-bit masks.
inline constexpr int kMaxVertices = 32;

/// A subset of the vertices 0..n-1 of some tournament, stored as a bitmask.
struct VertexSet {
  std::uint32_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t mask) : bits(mask) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.bits |= std::uint32_t{1} << v;
    return s;
  }
  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.bits |= std::uint32_t{1} << v;
    return s;
  }
  static constexpr VertexSet singleton(int v) { return VertexSet{std::uint32_t{1} << v}; }
  /// {0, ..., n-1}
  static constexpr VertexSet full(int n) {
    return VertexSet{n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1};
  }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int v) const { return (bits >> v) & 1u; }
  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
  /// E and F overlap: they meet and neither contains the other.
  constexpr bool overlaps(VertexSet o) const {
    return intersects(o) && !subset_of(o) && !o.subset_of(*this);
  }
  /// Smallest member; the set must be nonempty.
  constexpr int first() const { return std::countr_zero(bits); }
  constexpr VertexSet complement(int n) const { return VertexSet{full(n).bits & ~bits}; }

  constexpr VertexSet with(int v) const { return VertexSet{bits | (std::uint32_t{1} << v)}; }
  constexpr VertexSet without(int v) const { return VertexSet{bits & ~(std::uint32_t{1} << v)}; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = bits; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
};

/// Lexicographic order on the ascending member lists ({0} < {0,1} < {1}).
bool lex_less(VertexSet a, VertexSet b);

/// Orders by cardinality first, then lexicographically.
bool size_then_lex_less(VertexSet a, VertexSet b);

}  // namespace tourn
