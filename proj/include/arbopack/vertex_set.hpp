#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace arbopack {

using VertexId = std::size_t;

/// Set of dense vertex indices backed by a 64-bit mask.
class VertexSet {
 public:
  using Bits = std::uint64_t;
  static constexpr std::size_t kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> members) {
    for (VertexId v : members) bits_ |= Bits{1} << v;
  }

  static constexpr VertexSet singleton(VertexId v) { return VertexSet(Bits{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= kCapacity ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(VertexId v) const { return v < kCapacity && ((bits_ >> v) & 1U) != 0; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr VertexId lowest() const { return static_cast<VertexId>(std::countr_zero(bits_)); }

  constexpr VertexSet with(VertexId v) const { return VertexSet(bits_ | (Bits{1} << v)); }
  constexpr VertexSet without(VertexId v) const { return VertexSet(bits_ & ~(Bits{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Numeric mask order; used as the canonical order of sets.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (Bits b = bits_; b != 0; b &= b - 1) fn(static_cast<VertexId>(std::countr_zero(b)));
  }

 private:
  Bits bits_ = 0;
};

}  // namespace arbopack
