#pragma once

// GIT-fan computation: a-faces up to symmetry, orbit cones, GIT-cones and
// the fan traversal with and without symmetry.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gitfan/cone.hpp"
#include "gitfan/groebner.hpp"
#include "gitfan/saturation.hpp"
#include "gitfan/symmetry.hpp"

namespace gitfan {

struct AfaceOrbit {
  FaceIndexSet representative;  // smallest mask of the orbit
  std::size_t length = 0;
};

struct AfaceOptions {
  AfaceMethod method = AfaceMethod::Fast;
  std::size_t threads = 1;
};

/// a-face orbit representatives in ascending mask order.
std::vector<AfaceOrbit> enumerate_afaces(const Ideal& ideal, const SymmetryGroup& g, const AfaceOptions& opts = {});
std::size_t total_afaces(const std::vector<AfaceOrbit>& orbits);

/// Q(gamma_0) = cone(q_i : i in gamma_0).
Cone project_face(const IntMatrix& q, FaceIndexSet face);

/// A G-stable set of cones sorted by canonical key, with the permutation of
/// indices induced by each group element: cones[perms[g][i]] = A_g cones[i].
struct OrbitConeTable {
  std::vector<Cone> cones;
  std::vector<std::string> keys;
  std::vector<std::vector<std::size_t>> perms;

  [[nodiscard]] std::size_t size() const { return cones.size(); }
  [[nodiscard]] bool empty() const { return cones.empty(); }
  /// Index of the cone with this key, or size().
  [[nodiscard]] std::size_t index_of(const std::string& key) const;
  [[nodiscard]] OrbitConeTable subtable(const std::vector<std::size_t>& indices) const;
};

/// Omega: the G-translates of the projected a-faces, deduplicated.
OrbitConeTable project_orbit_cones(const std::vector<AfaceOrbit>& afaces, const IntMatrix& q, const SymmetryGroup& g);
/// Omega(k): the full-dimensional members.
OrbitConeTable full_dimensional(const OrbitConeTable& table, std::size_t k);
/// Omega(k)_min: full-dimensional members containing no other full-dimensional member.
OrbitConeTable minimal_full_dim(const OrbitConeTable& table, std::size_t k);

/// Omega_1 collects the projections of the a-face orbits that are minimal
/// for G.gamma_0 <= G.gamma_1 (some translate of gamma_0 lies in gamma_1)
/// among orbits with full-dimensional projection; Omega_2 keeps the
/// inclusion-minimal cones of Omega_1.
struct OrbitReduction {
  OrbitConeTable omega1;
  OrbitConeTable omega2;
};
OrbitReduction reduce_by_orbit_inclusion(const std::vector<AfaceOrbit>& afaces, const IntMatrix& q,
                                         const SymmetryGroup& g);

/// Everything the traversal needs besides the fan state.
struct FanContext {
  std::size_t k = 0;
  IntMatrix q;
  OrbitConeTable table;  // usually Omega(k)_min
  Cone support;          // Q(gamma)
  std::optional<Cone> restriction;
  SymmetryGroup group;
  std::vector<QMatrix> induced;

  /// The domain of the traversal: the restriction if set, else the support.
  [[nodiscard]] const Cone& domain() const { return restriction ? *restriction : support; }
};

/// Builds a context from a grading, a group and a table; the support is
/// cone(q_1, ..., q_r).
FanContext make_context(const IntMatrix& q, const SymmetryGroup& g, OrbitConeTable table,
                        std::optional<Cone> restriction = std::nullopt);

/// lambda(w): intersection of the table cones containing w. Throws
/// ComputationError(OutsideSupport) if w is not in the support.
Cone gitcone_at(const FanContext& ctx, const QVector& w);
/// Same over an explicit table, without the support check.
Cone gitcone_at(const OrbitConeTable& table, std::size_t k, const QVector& w);

/// Bit i is set iff lambda is contained in table.cones[i] (exact
/// containment of generators; needs the V-description of lambda).
Integer hash_of(const OrbitConeTable& table, const Cone& lambda);
/// Bit i is set iff w lies in table.cones[i]. For w in the relative interior
/// of a GIT-cone lambda this equals hash_of(table, lambda).
Integer hash_at(const OrbitConeTable& table, const QVector& w);
/// (g.h)[perm[i]] = h[i].
Integer act_on_hash(const std::vector<std::size_t>& perm, const Integer& h);

struct Neighbor {
  QVector w;
  Cone cone;
};
/// The full-dimensional GIT-cone across the facet of lambda with inner normal
/// v through the facet point p: w = p - eps v with eps halved from 1.
Neighbor find_neighbor(const FanContext& ctx, const Cone& lambda, const IntVector& v, const QVector& p);

/// First point of the deterministic start schedule with a full-dimensional
/// GIT-cone in the interior of the domain. Throws NoFullDimStart.
QVector start_point(const FanContext& ctx);

struct AdjacencyEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t count = 0;  // facets of representatives[from] whose neighbor lies in orbit `to`
};

struct FanStatistics {
  std::size_t total_cones = 0;
  std::size_t facets_processed = 0;
  std::size_t neighbors_computed = 0;
  std::optional<std::size_t> fan_rays;
  std::map<std::size_t, std::size_t> orbit_length_histogram;
};

struct GitFanResult {
  /// One cone per orbit, the member with the smallest hash; sorted by hash.
  std::vector<Cone> representatives;
  std::vector<std::size_t> orbit_lengths;
  std::vector<Integer> hashes;
  std::vector<QVector> interior_points;
  std::vector<AdjacencyEdge> adjacency;
  Cone support;
  FanStatistics stats;
  bool complete = true;
};

struct TraversalOptions {
  std::size_t threads = 1;
  /// Stop (incomplete) after this many frontier entries have been processed.
  std::optional<std::size_t> stop_after;
  std::string checkpoint_path;
  std::size_t checkpoint_every = 0;  // 0: only when stopping
  bool resume = false;
  std::string dataset_digest;
  bool compute_adjacency = true;
  bool compute_rays = true;
};

/// Symmetric traversal (one cone per G-orbit).
GitFanResult traverse_symmetric(const FanContext& ctx, const TraversalOptions& opts = {});
/// Plain traversal: every maximal cone, trivial group.
GitFanResult traverse_plain(const FanContext& ctx, const TraversalOptions& opts = {});

/// All cones of the orbits of the representatives, sorted by canonical key.
std::vector<Cone> expand_orbits(const FanContext& ctx, const GitFanResult& result);

/// Intersection of the leave-one-out cones cone(q_j : j != i).
Cone moving_cone(const IntMatrix& q);

struct SemiampleMori {
  Cone semiample;
  Cone mori;
};
/// Throws ComputationError(NoUniqueFixedOrbit) unless exactly one orbit has length 1.
SemiampleMori extract_semiample_and_mori(const GitFanResult& result);

struct OrbitGraph {
  std::vector<std::size_t> orbit_lengths;
  /// Unordered pairs a <= b of orbits sharing a facet, with the number of
  /// facet incidences counted from both sides.
  std::vector<AdjacencyEdge> edges;
  [[nodiscard]] bool connected() const;
};
OrbitGraph orbit_adjacency_graph(const GitFanResult& result);

}  // namespace gitfan
