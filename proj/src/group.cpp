#include "mskw/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>

#include "mskw/errors.hpp"

namespace mskw {

namespace {

using Table = std::vector<std::vector<Element>>;

std::string join_labels(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) s += ",";
    s += parts[i];
  }
  return s + ")";
}

void require_order(std::size_t order) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (order > GroupTable::kMaxOrder) {
    throw CapacityError("group order " + std::to_string(order) + " exceeds the limit of " +
                        std::to_string(GroupTable::kMaxOrder));
  }
}

struct RawGroup {
  Table table;
  std::vector<std::string> labels;
};

RawGroup cyclic_table(std::uint32_t n) {
  RawGroup g;
  g.table.assign(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i) {
    g.labels.push_back(std::to_string(i));
    for (Element j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  }
  return g;
}

// Element f*n + k stands for s^f r^k; s r s = r^-1.
RawGroup dihedral_table(std::uint32_t n) {
  const std::uint32_t order = 2 * n;
  RawGroup g;
  g.table.assign(order, std::vector<Element>(order));
  for (Element x = 0; x < order; ++x) {
    const std::uint32_t a = x / n;
    const std::uint32_t b = x % n;
    g.labels.push_back(std::string(a ? "s" : "") + (a && b ? " " : "") +
                       (b || !a ? "r^" + std::to_string(b) : ""));
    for (Element y = 0; y < order; ++y) {
      const std::uint32_t c = y / n;
      const std::uint32_t d = y % n;
      const std::uint32_t rot = (c == 0 ? b + d : (n - b) + d) % n;
      g.table[x][y] = ((a + c) % 2) * n + rot;
    }
  }
  return g;
}

// Permutations in lexicographic order of their one-line notation; (xy)(i) = x(y(i)).
RawGroup symmetric_table(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<std::uint32_t>& q) {
    const auto it = std::lower_bound(perms.begin(), perms.end(), q);
    return static_cast<Element>(it - perms.begin());
  };

  RawGroup g;
  const auto order = perms.size();
  g.table.assign(order, std::vector<Element>(order));
  std::vector<std::uint32_t> composed(n);
  for (std::size_t x = 0; x < order; ++x) {
    std::string label;
    for (auto v : perms[x]) label += std::to_string(v);
    g.labels.push_back(n == 0 ? "()" : label);
    for (std::size_t y = 0; y < order; ++y) {
      for (std::uint32_t i = 0; i < n; ++i) composed[i] = perms[x][perms[y][i]];
      g.table[x][y] = index_of(composed);
    }
  }
  return g;
}

// Index 2u + s stands for (-1)^s * unit[u], unit = 1, i, j, k.
RawGroup quaternion_table() {
  // unit_product[u][v] = {sign, unit}
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> kUnit = {{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  static const std::array<const char*, 4> kNames = {"1", "i", "j", "k"};
  RawGroup g;
  g.table.assign(8, std::vector<Element>(8));
  for (Element x = 0; x < 8; ++x) {
    g.labels.push_back(std::string(x % 2 ? "-" : "") + kNames[x / 2]);
    for (Element y = 0; y < 8; ++y) {
      const auto& [sign, unit] = kUnit[x / 2][y / 2];
      const int total = (static_cast<int>(x % 2) + static_cast<int>(y % 2) + sign) % 2;
      g.table[x][y] = static_cast<Element>(2 * unit + total);
    }
  }
  return g;
}

// Mixed-radix order with the first factor most significant.
RawGroup product_table(const std::vector<GroupPtr>& factors) {
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= f->order();
    require_order(order);
  }
  RawGroup g;
  g.table.assign(order, std::vector<Element>(order));
  const std::size_t k = factors.size();
  auto digits = [&](std::size_t x) {
    std::vector<Element> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<Element>(x % factors[i]->order());
      x /= factors[i]->order();
    }
    return d;
  };
  std::vector<std::vector<Element>> digit_cache(order);
  for (std::size_t x = 0; x < order; ++x) {
    digit_cache[x] = digits(x);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(factors[i]->label(digit_cache[x][i]));
    g.labels.push_back(join_labels(parts));
  }
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t z = 0;
      for (std::size_t i = 0; i < k; ++i) {
        z = z * factors[i]->order() + factors[i]->multiply(digit_cache[x][i], digit_cache[y][i]);
      }
      g.table[x][y] = static_cast<Element>(z);
    }
  }
  return g;
}

std::string elem(std::size_t x) { return std::to_string(x); }

// Checks closure, identity, inverses, Latin property and associativity, in that
// order. Returns the identity element of the table.
Element validate_group_table(const Table& table) {
  const std::size_t n = table.size();
  require_order(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw ValidationError("closure: row " + elem(x) + " has " + elem(table[x].size()) +
                            " entries, expected " + elem(n));
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] >= n) {
        throw ValidationError("closure: product of " + elem(x) + " and " + elem(y) + " is " +
                              elem(table[x][y]) + ", outside the group");
      }
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError("identity: no two-sided identity element");

  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) found = table[x][y] == *identity && table[y][x] == *identity;
    if (!found) throw ValidationError("inverse: no inverse for element " + elem(x));
  }

  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[table[x][y]]++) throw ValidationError("latin: row " + elem(x) + " repeats an element");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[table[y][x]]++) throw ValidationError("latin: column " + elem(x) + " repeats an element");
    }
  }

  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    if (table[table[x][y]][z] != table[x][table[y][z]]) {
      throw ValidationError("associativity: fails for (" + elem(x) + ", " + elem(y) + ", " + elem(z) + ")");
    }
  };
  if (n <= 64) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) check(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed'a550c1a7eULL);
    for (int t = 0; t < 200000; ++t) check(rng() % n, rng() % n, rng() % n);
  }
  return *identity;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint32_t n) { return {Kind::kCyclic, n, {}, {}}; }
GroupSpec GroupSpec::dihedral(std::uint32_t n) { return {Kind::kDihedral, n, {}, {}}; }
GroupSpec GroupSpec::symmetric(std::uint32_t n) { return {Kind::kSymmetric, n, {}, {}}; }
GroupSpec GroupSpec::quaternion() { return {Kind::kQuaternion, 8, {}, {}}; }
GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  return {Kind::kProduct, 0, std::move(factors), {}};
}
GroupSpec GroupSpec::explicit_table(std::vector<std::vector<Element>> table) {
  const auto n = static_cast<std::uint32_t>(table.size());
  return {Kind::kTable, n, {}, std::move(table)};
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::kCyclic: return "Z" + std::to_string(n);
    case Kind::kDihedral: return "D" + std::to_string(n);
    case Kind::kSymmetric: return "S" + std::to_string(n);
    case Kind::kQuaternion: return "Q8";
    case Kind::kTable: return "T" + std::to_string(table.size());
    case Kind::kProduct: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].name();
      return s.empty() ? "Z1" : s;
    }
  }
  return "?";
}

GroupSpec group_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ValidationError("group spec must be an object with a string \"type\"");
  }
  const auto type = j["type"].get<std::string>();
  auto get_n = [&]() -> std::uint32_t {
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
      throw ValidationError("group spec of type \"" + type + "\" needs a nonnegative integer \"n\"");
    }
    const auto n = j["n"].get<long long>();
    if (n > static_cast<long long>(GroupTable::kMaxOrder)) {
      throw CapacityError("group parameter n=" + std::to_string(n) + " exceeds the order limit");
    }
    return static_cast<std::uint32_t>(n);
  };
  if (type == "cyclic") return GroupSpec::cyclic(get_n());
  if (type == "dihedral") return GroupSpec::dihedral(get_n());
  if (type == "symmetric") return GroupSpec::symmetric(get_n());
  if (type == "quaternion") return GroupSpec::quaternion();
  if (type == "product") {
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty()) {
      throw ValidationError("product group spec needs a nonempty \"factors\" array");
    }
    std::vector<GroupSpec> factors;
    for (const auto& f : j["factors"]) factors.push_back(group_spec_from_json(f));
    return GroupSpec::product(std::move(factors));
  }
  if (type == "table") {
    if (!j.contains("table") || !j["table"].is_array()) {
      throw ValidationError("table group spec needs a \"table\" array of rows");
    }
    std::vector<std::vector<Element>> table;
    for (const auto& row : j["table"]) {
      if (!row.is_array()) throw ValidationError("table rows must be arrays");
      auto& out = table.emplace_back();
      for (const auto& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          throw ValidationError("table entries must be nonnegative integers");
        }
        out.push_back(v.get<Element>());
      }
    }
    return GroupSpec::explicit_table(std::move(table));
  }
  throw ValidationError("unknown group type \"" + type + "\"");
}

nlohmann::json to_json(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::kCyclic: return {{"type", "cyclic"}, {"n", spec.n}};
    case K::kDihedral: return {{"type", "dihedral"}, {"n", spec.n}};
    case K::kSymmetric: return {{"type", "symmetric"}, {"n", spec.n}};
    case K::kQuaternion: return {{"type", "quaternion"}};
    case K::kTable: return {{"type", "table"}, {"table", spec.table}};
    case K::kProduct: {
      auto factors = nlohmann::json::array();
      for (const auto& f : spec.factors) factors.push_back(to_json(f));
      return {{"type", "product"}, {"factors", factors}};
    }
  }
  return nullptr;
}

GroupTable::GroupTable(std::size_t order, std::vector<Element> product, std::vector<std::string> labels,
                       GroupSpec spec)
    : order_(order),
      product_(std::move(product)),
      inverse_(order),
      labels_(std::move(labels)),
      spec_(std::move(spec)) {
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      if (multiply(x, y) == 0) {
        inverse_[x] = y;
        break;
      }
    }
  }
  if (labels_.size() != order_) {
    labels_.clear();
    for (std::size_t x = 0; x < order_; ++x) labels_.push_back(std::to_string(x));
  }
}

GroupTable GroupTable::from_table(std::vector<std::vector<Element>> table, std::vector<std::string> labels) {
  const Element e = validate_group_table(table);
  const std::size_t n = table.size();
  // Swap e and 0 so the identity sits at index 0.
  auto relabel = [e](Element x) -> Element { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<Element> product(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) product[relabel(x) * n + relabel(y)] = relabel(table[x][y]);
  if (labels.size() == n) std::swap(labels[0], labels[e]);
  auto spec = GroupSpec::explicit_table(std::move(table));
  return GroupTable(n, std::move(product), std::move(labels), std::move(spec));
}

std::vector<std::vector<Element>> GroupTable::table() const {
  std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y) t[x][y] = multiply(x, y);
  return t;
}

bool GroupTable::is_abelian() const {
  for (Element x = 0; x < order_; ++x)
    for (Element y = x + 1; y < order_; ++y)
      if (multiply(x, y) != multiply(y, x)) return false;
  return true;
}

GroupPtr build_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  RawGroup raw;
  switch (spec.kind) {
    case K::kCyclic:
      require_order(spec.n);
      raw = cyclic_table(spec.n);
      break;
    case K::kDihedral:
      if (spec.n < 3) throw ValidationError("dihedral group needs n >= 3");
      require_order(2 * static_cast<std::size_t>(spec.n));
      raw = dihedral_table(spec.n);
      break;
    case K::kSymmetric:
      if (spec.n > 5) throw CapacityError("symmetric groups are supported up to n = 5");
      raw = symmetric_table(spec.n);
      break;
    case K::kQuaternion:
      raw = quaternion_table();
      break;
    case K::kProduct: {
      if (spec.factors.empty()) throw ValidationError("product group needs at least one factor");
      std::vector<GroupPtr> factors;
      for (const auto& f : spec.factors) factors.push_back(build_group(f));
      raw = product_table(factors);
      break;
    }
    case K::kTable: {
      auto g = GroupTable::from_table(spec.table);
      return std::make_shared<const GroupTable>(std::move(g));
    }
  }
  const std::size_t n = raw.table.size();
  std::vector<Element> product(n * n);
  for (std::size_t x = 0; x < n; ++x)
    std::copy(raw.table[x].begin(), raw.table[x].end(), product.begin() + static_cast<std::ptrdiff_t>(x * n));
  return std::shared_ptr<const GroupTable>(new GroupTable(n, std::move(product), std::move(raw.labels), spec));
}

GroupSubset::GroupSubset(GroupPtr parent, IndexSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw UsageError("group subset needs a parent group");
  if (members_.universe() != parent_->order()) {
    throw ValidationError("subset universe does not match the group order");
  }
}

GroupSubset::GroupSubset(GroupPtr parent, std::span<const Element> members)
    : GroupSubset(parent, IndexSet::from_members(parent ? parent->order() : 0, members)) {}

GroupSubset GroupSubset::empty(GroupPtr parent) {
  const auto n = parent->order();
  return GroupSubset(std::move(parent), IndexSet(n));
}

GroupSubset GroupSubset::whole(GroupPtr parent) {
  const auto n = parent->order();
  return GroupSubset(std::move(parent), IndexSet::full(n));
}

GroupSubset product_set(const GroupSubset& a, const GroupSubset& b) {
  if (a.parent() != b.parent() && !(*a.parent() == *b.parent())) {
    throw UsageError("product_set: subsets belong to different groups");
  }
  const auto& g = *a.parent();
  IndexSet out(g.order());
  const auto bs = b.elements();
  a.members().for_each([&](Element x) {
    for (const auto y : bs) out.insert(g.multiply(x, y));
  });
  return GroupSubset(a.parent(), std::move(out));
}

GroupSubset inverse_set(const GroupSubset& a) {
  IndexSet out(a.parent()->order());
  a.members().for_each([&](Element x) { out.insert(a.parent()->inverse(x)); });
  return GroupSubset(a.parent(), std::move(out));
}

GroupSubset complement_set(const GroupSubset& a) { return GroupSubset(a.parent(), a.members().complement()); }

}  // namespace mskw
