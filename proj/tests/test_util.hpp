#pragma once

#include <set>
#include <vector>

#include "mskw/group.hpp"
#include "mskw/relation.hpp"

namespace testutil {

inline mskw::GroupPtr cyclic(std::uint32_t n) { return mskw::build_group(mskw::GroupSpec::cyclic(n)); }

inline mskw::GroupSubset subset(const mskw::GroupPtr& g, std::initializer_list<std::uint32_t> xs) {
  return mskw::GroupSubset(g, mskw::IndexSet::from_members(g->order(), xs));
}

inline mskw::Relation cyclic_cayley(std::uint32_t n, std::initializer_list<std::uint32_t> s) {
  return mskw::cayley(subset(cyclic(n), s));
}

inline std::set<int> as_set(const mskw::IndexSet& s) {
  std::set<int> out;
  for (const auto x : s.members()) out.insert(static_cast<int>(x));
  return out;
}

inline std::vector<std::uint32_t> v(std::initializer_list<std::uint32_t> xs) { return xs; }

}  // namespace testutil
