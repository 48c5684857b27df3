#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace reslat {

/// Largest carrier the library handles. Every filter of a finite residuated
/// lattice is principal and every prime is a distinct filter, so filters,
/// primes and elements all fit in one machine word.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of {0, ..., 63} stored as a bitmask. The tag keeps sets over
/// different universes (lattice elements, spectrum points) from mixing.
template <typename Tag>
class SmallSet {
 public:
  constexpr SmallSet() = default;
  constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}
  constexpr SmallSet(std::initializer_list<std::size_t> items) {
    for (auto i : items) insert(i);
  }

  static constexpr SmallSet range(std::size_t n) {
    return SmallSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr SmallSet single(std::size_t i) { return SmallSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(SmallSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(SmallSet o) const { return (bits_ & o.bits_) != 0; }
  /// Lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr SmallSet operator|(SmallSet o) const { return SmallSet(bits_ | o.bits_); }
  constexpr SmallSet operator&(SmallSet o) const { return SmallSet(bits_ & o.bits_); }
  constexpr SmallSet operator-(SmallSet o) const { return SmallSet(bits_ & ~o.bits_); }
  constexpr SmallSet& operator|=(SmallSet o) { bits_ |= o.bits_; return *this; }
  constexpr SmallSet& operator&=(SmallSet o) { bits_ &= o.bits_; return *this; }
  constexpr SmallSet& operator-=(SmallSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr auto operator<=>(const SmallSet&) const = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// Calls f(i) for every member in increasing order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

struct ElementTag {};
struct PointTag {};

/// Subset of a lattice carrier. Filters, ideals and coannihilators are all
/// ElementSets.
using ElementSet = SmallSet<ElementTag>;
/// Subset of the points of a finite space (indices into a prime list, a pure
/// spectrum, or a set of equivalence classes).
using PointSet = SmallSet<PointTag>;

using Element = std::size_t;

}  // namespace reslat
