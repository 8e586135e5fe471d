#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mskw/relation.hpp"

namespace mskw {

enum class KappaMethod { kEnumeration, kFlow, kBothAgree };

std::string to_string(KappaMethod m);
KappaMethod kappa_method_from_string(const std::string& s);

/// Result of minimizing |boundary(X)| over the v-Moser sets X.
struct MoserReport {
  Vertex vertex = 0;
  int kappa_v = 0;
  /// K_v: the intersection of all v-fragments, itself a v-fragment.
  VertexSet minimal_fragment;
  /// Up to kFragmentSampleSize v-fragments in canonical order.
  std::vector<VertexSet> fragments_sample;
  KappaMethod method = KappaMethod::kEnumeration;

  static constexpr std::size_t kFragmentSampleSize = 32;
};

struct KappaOptions {
  std::size_t enumeration_cap = 22;
};

/// Gamma^-(v) & F == {v}.
bool is_moser_set(const Relation& r, Vertex v, const VertexSet& f);

/// Exact kappa_v and K_v. kBothAgree runs both engines and throws
/// ConsistencyError if they differ.
MoserReport kappa_v(const Relation& r, Vertex v, KappaMethod method = KappaMethod::kEnumeration,
                    const KappaOptions& options = {});

/// Every v-fragment in canonical order, at most `limit` (enumeration).
std::vector<VertexSet> all_v_fragments(const Relation& r, Vertex v, std::size_t limit,
                                       const KappaOptions& options = {});

/// The auxiliary subgraph Theta (edges (x, y) with y in K_x) and the map
/// Psi(x) = {y in Theta^-(x) : K_x subset of K_y}.
struct ThetaPsi {
  Relation theta;
  std::vector<VertexSet> psi;
  std::vector<VertexSet> minimal_fragments;
  std::vector<int> kappa;
};

ThetaPsi build_theta_psi(const Relation& r, const KappaOptions& options = {});

struct InclusionCheck {
  bool holds = true;
  /// First (x, y) with y in Theta^-(x) \ Psi(x) but outside boundary(K_x) \ Gamma(x).
  std::optional<std::pair<Vertex, Vertex>> counterexample;
};

/// Theta^-(x) \ Psi(x) is contained in boundary(K_x) \ Gamma(x) for every x.
InclusionCheck mader_lemma_check(const Relation& r, const ThetaPsi& tp);
InclusionCheck mader_lemma_check(const Relation& r, const KappaOptions& options = {});

/// Some u with |Theta(u)| <= |Theta^-(u)|; always exists by edge counting.
std::optional<Vertex> theta_counting_witness(const ThetaPsi& tp);

enum class SetSide { kFinite, kCofinite };

struct MainCheck {
  bool holds = false;
  int boundary_size = 0;
  /// |Gamma(v)| - 1 on the finite side, |Gamma^-(v)| - 1 on the cofinite side.
  int bound = 0;
  int margin = 0;
  /// Cofinite side only: R = (V \ Gamma(F)) | {v} in the reversed relation.
  /// Its in-boundary is contained in boundary(F) and is itself bounded below.
  std::optional<int> reverse_boundary_size;
  std::optional<bool> reverse_inclusion_holds;
};

/// Lower bound check on |Gamma(F) \ F| for a v-Moser set F. On the cofinite
/// side `set` holds the complement V \ F. Throws UsageError when the
/// hypothesis on F fails.
MainCheck theorem_main_check(const Relation& r, Vertex v, const VertexSet& set, SetSide side);

struct SphereStep {
  std::size_t j = 0;
  std::size_t size = 0;
  std::size_t previous_size = 0;
  /// Gamma^{j-1}(v) & Gamma^-(v) == {v}.
  bool admissible = false;
  /// previous_size + |Gamma(v)| - 1
  std::size_t bound = 0;
  long margin = 0;
  bool holds = true;
};

/// Sphere growth steps j = 1, 2, ... up to max_j or until Gamma^j(v) stops growing.
std::vector<SphereStep> sphere_growth(const Relation& r, Vertex v, std::size_t max_j);

}  // namespace mskw
