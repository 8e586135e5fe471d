// Brute-force reference implementations used only by the tests. They work on
// plain adjacency matrices and std::set so they share no code with the library.
#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "mskw/relation.hpp"

namespace oracle {

using Set = std::set<int>;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const mskw::Relation& r) {
  const int n = static_cast<int>(r.vertex_count());
  Matrix m(n, std::vector<bool>(n, false));
  for (const auto& [x, y] : r.edges()) m[x][y] = true;
  return m;
}

// Cayley matrix from an arbitrary multiplication and inverse.
inline Matrix cayley(int n, const std::function<int(int, int)>& mul, const std::function<int(int)>& inv,
                     const Set& s) {
  Matrix m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[x][y] = s.count(mul(inv(x), y)) != 0;
  return m;
}

inline Matrix cyclic_cayley(int n, const Set& s) {
  return cayley(n, [n](int a, int b) { return (a + b) % n; }, [n](int a) { return (n - a) % n; }, s);
}

inline Set from_mask(int n, std::uint64_t mask) {
  Set s;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1U) s.insert(i);
  return s;
}

inline Set image(const Matrix& m, const Set& x) {
  Set out;
  for (int a : x)
    for (int b = 0; b < static_cast<int>(m.size()); ++b)
      if (m[a][b]) out.insert(b);
  return out;
}

inline Set preimage(const Matrix& m, const Set& x) {
  Set out;
  for (int b : x)
    for (int a = 0; a < static_cast<int>(m.size()); ++a)
      if (m[a][b]) out.insert(a);
  return out;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Set boundary(const Matrix& m, const Set& x) { return minus(image(m, x), x); }

struct Kappa {
  int kappa = INT_MAX;
  Set k;  // intersection of all minimizers
  std::vector<Set> minimizers;
};

// min |boundary(F)| over F containing v with preimage(v) & F = {v}.
inline Kappa kappa_v(const Matrix& m, int v) {
  const int n = static_cast<int>(m.size());
  const Set pre = preimage(m, {v});
  Kappa out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> v) & 1U)) continue;
    const Set f = from_mask(n, mask);
    bool ok = true;
    for (int p : pre)
      if (p != v && f.count(p)) ok = false;
    if (!ok) continue;
    const int b = static_cast<int>(boundary(m, f).size());
    if (b < out.kappa) {
      out.kappa = b;
      out.minimizers.clear();
    }
    if (b == out.kappa) out.minimizers.push_back(f);
  }
  out.k = out.minimizers.front();
  for (const auto& f : out.minimizers) {
    Set meet;
    std::set_intersection(out.k.begin(), out.k.end(), f.begin(), f.end(), std::inserter(meet, meet.end()));
    out.k = meet;
  }
  return out;
}

struct Weak {
  int kappa = INT_MAX;
  std::vector<Set> atoms;  // minimum-cardinality minimizers
};

inline Weak weak(const Matrix& m, bool proper_subset) {
  const int n = static_cast<int>(m.size());
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  Weak out;
  std::vector<Set> minimizers;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (proper_subset && mask == full && n > 1) continue;
    const Set f = from_mask(n, mask);
    const int b = static_cast<int>(boundary(m, f).size());
    if (b < out.kappa) {
      out.kappa = b;
      minimizers.clear();
    }
    if (b == out.kappa) minimizers.push_back(f);
  }
  std::size_t smallest = SIZE_MAX;
  for (const auto& f : minimizers) smallest = std::min(smallest, f.size());
  for (const auto& f : minimizers)
    if (f.size() == smallest) out.atoms.push_back(f);
  return out;
}

// Smallest k with some product of k elements of s equal to the identity 0.
inline int min_product_length(int n, const std::function<int(int, int)>& mul, const Set& s) {
  Set reach = {0};
  for (int k = 1; k <= n; ++k) {
    Set next;
    for (int x : reach)
      for (int y : s) next.insert(mul(x, y));
    if (next.count(0)) return k;
    reach = next;
  }
  return -1;
}

// Length of the shortest directed cycle through v in a loopless matrix.
inline int girth_through(const Matrix& m, int v) {
  const int n = static_cast<int>(m.size());
  std::vector<int> dist(n, -1);
  std::vector<int> queue = {v};
  dist[v] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (int y = 0; y < n; ++y) {
      if (!m[x][y]) continue;
      if (y == v) return dist[x] + 1;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return -1;
}

}  // namespace oracle
