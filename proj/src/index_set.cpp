#include "mskw/index_set.hpp"

#include <algorithm>
#include <string>

#include "mskw/errors.hpp"

namespace mskw {

IndexSet::IndexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

IndexSet IndexSet::singleton(std::size_t universe, std::uint32_t i) {
  IndexSet s(universe);
  s.insert(i);
  return s;
}

IndexSet IndexSet::from_members(std::size_t universe, std::span<const std::uint32_t> members) {
  IndexSet s(universe);
  for (const auto m : members) s.insert(m);
  return s;
}

IndexSet IndexSet::from_members(std::size_t universe, std::initializer_list<std::uint32_t> members) {
  return from_members(universe, std::span<const std::uint32_t>(members.begin(), members.size()));
}

IndexSet IndexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw UsageError("mask conversion requires a universe of at most 64");
  IndexSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  s.trim();
  return s;
}

std::size_t IndexSet::size() const {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool IndexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void IndexSet::insert(std::uint32_t i) {
  if (i >= universe_) {
    throw ValidationError("index " + std::to_string(i) + " outside universe of size " +
                          std::to_string(universe_));
  }
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void IndexSet::erase(std::uint32_t i) {
  if (i < universe_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::vector<std::uint32_t> IndexSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

std::uint64_t IndexSet::to_mask() const {
  if (universe_ > 64) throw UsageError("mask conversion requires a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

IndexSet IndexSet::complement() const {
  IndexSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void IndexSet::require_same_universe(const IndexSet& other) const {
  if (universe_ != other.universe_) {
    throw UsageError("set operation on universes of different sizes (" + std::to_string(universe_) +
                     " vs " + std::to_string(other.universe_) + ")");
  }
}

void IndexSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

bool canonical_less(const IndexSet& a, const IndexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  if (ma.size() != mb.size()) return ma.size() < mb.size();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace mskw
