#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mskw::detail {

inline std::uint64_t low_bits(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::uint64_t image_mask(const std::vector<std::uint64_t>& succ, std::uint64_t x) {
  std::uint64_t img = 0;
  while (x != 0) {
    img |= succ[static_cast<std::size_t>(std::countr_zero(x))];
    x &= x - 1;
  }
  return img;
}

/// Depth-first enumeration of X = required | T over all T within `optional`,
/// visiting every accepted X whose boundary |Gamma(X) \ X| is at most the
/// best accepted value seen so far (starting from `bound`). Branches whose
/// boundary lower bound exceeds the incumbent are pruned. `accept(X)` filters
/// the admissible range; `visit(X, b)` sees candidates in DFS order.
template <typename Accept, typename Visit>
class MinBoundarySearch {
 public:
  MinBoundarySearch(const std::vector<std::uint64_t>& succ, std::uint64_t required, std::uint64_t optional,
                    int bound, Accept accept, Visit visit)
      : succ_(succ), accept_(accept), visit_(visit), best_(bound) {
    const std::uint64_t all = low_bits(succ.size());
    optional &= ~required;
    for (std::uint64_t o = optional; o != 0; o &= o - 1) order_.push_back(std::countr_zero(o));
    descend(0, required, image_mask(succ, required), all & ~(required | optional));
  }

  int best() const { return best_; }

 private:
  void descend(std::size_t depth, std::uint64_t x, std::uint64_t img, std::uint64_t excluded) {
    if (std::popcount(img & excluded) > best_) return;
    if (depth == order_.size()) {
      if (!accept_(x)) return;
      const int b = std::popcount(img & ~x);
      if (b <= best_) {
        best_ = b;
        visit_(x, b);
      }
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << order_[depth];
    descend(depth + 1, x | bit, img | succ_[static_cast<std::size_t>(order_[depth])], excluded);
    descend(depth + 1, x, img, excluded | bit);
  }

  const std::vector<std::uint64_t>& succ_;
  Accept accept_;
  Visit visit_;
  int best_;
  std::vector<int> order_;
};

template <typename Accept, typename Visit>
int min_boundary_search(const std::vector<std::uint64_t>& succ, std::uint64_t required, std::uint64_t optional,
                        int bound, Accept accept, Visit visit) {
  return MinBoundarySearch<Accept, Visit>(succ, required, optional, bound, accept, visit).best();
}

}  // namespace mskw::detail
