#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mskw {

/// Dense subset of {0, ..., universe-1}, stored as a bitset.
///
/// Used both for vertex sets of a relation and element sets of a group.
/// Binary operations require equal universes.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe);

  static IndexSet full(std::size_t universe);
  static IndexSet singleton(std::size_t universe, std::uint32_t i);
  /// Throws ValidationError when a member lies outside the universe.
  static IndexSet from_members(std::size_t universe, std::span<const std::uint32_t> members);
  static IndexSet from_members(std::size_t universe, std::initializer_list<std::uint32_t> members);
  /// Requires universe <= 64.
  static IndexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(std::uint32_t i) const {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void insert(std::uint32_t i);
  void erase(std::uint32_t i);

  /// Members in increasing order.
  std::vector<std::uint32_t> members() const;
  /// Requires universe <= 64.
  std::uint64_t to_mask() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  IndexSet complement() const;
  bool is_subset_of(const IndexSet& other) const;
  bool intersects(const IndexSet& other) const;

  IndexSet& operator|=(const IndexSet& other);
  IndexSet& operator&=(const IndexSet& other);
  IndexSet& operator-=(const IndexSet& other);

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  void require_same_universe(const IndexSet& other) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Order by cardinality, then lexicographically on the sorted member lists.
/// This is the canonical ordering for every reported list of sets.
bool canonical_less(const IndexSet& a, const IndexSet& b);

/// Same ordering for 64-bit masks.
inline bool canonical_mask_less(std::uint64_t a, std::uint64_t b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  // The set holding the lowest differing element comes first.
  return ((a >> std::countr_zero(diff)) & 1U) != 0;
}

}  // namespace mskw
