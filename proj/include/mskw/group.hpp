#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mskw/index_set.hpp"

namespace mskw {

using Element = std::uint32_t;

/// Description of a group to construct. Mirrors the group JSON format:
///   {"type":"cyclic","n":12} | {"type":"dihedral","n":6} | {"type":"symmetric","n":4}
///   | {"type":"quaternion"} | {"type":"product","factors":[...]} | {"type":"table","table":[[...]]}
struct GroupSpec {
  enum class Kind { kCyclic, kDihedral, kSymmetric, kQuaternion, kProduct, kTable };

  Kind kind = Kind::kCyclic;
  std::uint32_t n = 1;
  std::vector<GroupSpec> factors;
  std::vector<std::vector<Element>> table;

  static GroupSpec cyclic(std::uint32_t n);
  /// Symmetries of the regular n-gon; order 2n.
  static GroupSpec dihedral(std::uint32_t n);
  static GroupSpec symmetric(std::uint32_t n);
  static GroupSpec quaternion();
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec explicit_table(std::vector<std::vector<Element>> table);

  /// Short human name, e.g. "Z5", "D4", "S3", "Q8", "Z2xZ4".
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupSpec& spec);

/// A finite group materialized as its multiplication table. Element 0 is the
/// identity. Immutable once built.
class GroupTable {
 public:
  static constexpr std::size_t kMaxOrder = 5040;

  /// Validates the group axioms and re-indexes so the identity is element 0.
  /// Throws ValidationError naming the failed axiom.
  static GroupTable from_table(std::vector<std::vector<Element>> table,
                               std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element multiply(Element x, Element y) const { return product_[x * order_ + y]; }
  Element inverse(Element x) const { return inverse_[x]; }
  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<Element>> table() const;
  bool is_abelian() const;

  /// The spec this table was built from (an explicit-table spec when built directly).
  const GroupSpec& spec() const { return spec_; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.product_ == b.product_;
  }

 private:
  friend std::shared_ptr<const GroupTable> build_group(const GroupSpec& spec);

  GroupTable(std::size_t order, std::vector<Element> product, std::vector<std::string> labels,
             GroupSpec spec);

  std::size_t order_;
  std::vector<Element> product_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  GroupSpec spec_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Throws ValidationError for malformed specs and CapacityError above kMaxOrder.
GroupPtr build_group(const GroupSpec& spec);

/// A subset of a specific group.
class GroupSubset {
 public:
  GroupSubset(GroupPtr parent, IndexSet members);
  GroupSubset(GroupPtr parent, std::span<const Element> members);

  static GroupSubset empty(GroupPtr parent);
  static GroupSubset whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const IndexSet& members() const { return members_; }
  std::vector<Element> elements() const { return members_.members(); }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const { return members_.contains(x); }

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.members_ == b.members_ && (a.parent_ == b.parent_ || *a.parent_ == *b.parent_);
  }

 private:
  GroupPtr parent_;
  IndexSet members_;
};

/// {ab : a in A, b in B}. Throws UsageError when the parents differ.
GroupSubset product_set(const GroupSubset& a, const GroupSubset& b);
GroupSubset inverse_set(const GroupSubset& a);
GroupSubset complement_set(const GroupSubset& a);

}  // namespace mskw
