#include "gitfan/gitfan.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace gitfan {

namespace {

using json = nlohmann::json;

template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

bool has_bit(const Integer& h, std::size_t i) { return mpz_tstbit(h.get_mpz_t(), i) != 0; }
void set_bit(Integer& h, std::size_t i) { mpz_setbit(h.get_mpz_t(), i); }

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

QVector times(const QMatrix& a, const QVector& v) { return a * v; }

}  // namespace

// ---- a-faces and orbit cones -------------------------------------------------------

std::vector<AfaceOrbit> enumerate_afaces(const Ideal& ideal, const SymmetryGroup& g, const AfaceOptions& opts) {
  if (g.degree() > 30) {
    // Too many subsets to list; test representatives as they are streamed.
    std::vector<AfaceOrbit> out;
    for_each_subset_representative(g, [&](FaceIndexSet s) {
      if (is_aface(ideal, s, opts.method)) out.push_back(AfaceOrbit{s, orbit_of_subset(g, s).size()});
      return true;
    });
    return out;
  }
  const auto reps = subset_orbit_representatives(g);
  std::vector<char> verdict(reps.size(), 0);
  parallel_for(reps.size(), opts.threads,
               [&](std::size_t i) { verdict[i] = is_aface(ideal, reps[i], opts.method) ? 1 : 0; });
  std::vector<AfaceOrbit> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (verdict[i]) out.push_back(AfaceOrbit{reps[i], orbit_of_subset(g, reps[i]).size()});
  }
  return out;
}

std::size_t total_afaces(const std::vector<AfaceOrbit>& orbits) {
  std::size_t n = 0;
  for (const auto& o : orbits) n += o.length;
  return n;
}

Cone project_face(const IntMatrix& q, FaceIndexSet face) {
  std::vector<IntVector> rays;
  for (auto i : face.indices()) rays.push_back(q.col(i - 1));
  return Cone::from_rays(q.rows(), std::move(rays));
}

std::size_t OrbitConeTable::index_of(const std::string& key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it != keys.end() && *it == key) return static_cast<std::size_t>(it - keys.begin());
  return keys.size();
}

OrbitConeTable OrbitConeTable::subtable(const std::vector<std::size_t>& indices) const {
  std::vector<std::size_t> idx = indices;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<std::size_t> renum(size(), size());
  OrbitConeTable out;
  for (std::size_t n = 0; n < idx.size(); ++n) {
    renum[idx[n]] = n;
    out.cones.push_back(cones[idx[n]]);
    out.keys.push_back(keys[idx[n]]);
  }
  for (const auto& p : perms) {
    std::vector<std::size_t> np(idx.size());
    for (std::size_t n = 0; n < idx.size(); ++n) {
      const std::size_t img = renum[p[idx[n]]];
      if (img == size()) throw std::logic_error("subtable: index set is not stable under the group");
      np[n] = img;
    }
    out.perms.push_back(std::move(np));
  }
  return out;
}

OrbitConeTable project_orbit_cones(const std::vector<AfaceOrbit>& afaces, const IntMatrix& q, const SymmetryGroup& g) {
  std::map<std::string, Cone> by_key;
  std::unordered_map<std::uint64_t, std::string> face_key;
  for (const auto& o : afaces) {
    for (const auto& f : orbit_of_subset(g, o.representative)) {
      Cone c = project_face(q, f);
      const std::string& key = c.canonical_key();
      face_key.emplace(f.bits(), key);
      by_key.emplace(key, std::move(c));
    }
  }
  OrbitConeTable t;
  for (auto& [k, c] : by_key) {
    t.keys.push_back(k);
    t.cones.push_back(c);
  }
  t.perms.assign(g.size(), std::vector<std::size_t>(t.size(), t.size()));
  for (const auto& [mask, key] : face_key) {
    const std::size_t from = t.index_of(key);
    for (std::size_t e = 0; e < g.size(); ++e) {
      const auto it = face_key.find(g[e].apply_mask(mask));
      if (it == face_key.end()) throw std::logic_error("project_orbit_cones: a-face set is not G-stable");
      t.perms[e][from] = t.index_of(it->second);
    }
  }
  return t;
}

OrbitConeTable full_dimensional(const OrbitConeTable& table, std::size_t k) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.cones[i].dim() == k) idx.push_back(i);
  }
  return table.subtable(idx);
}

namespace {

std::vector<std::size_t> inclusion_minimal(const OrbitConeTable& t) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < t.size() && minimal; ++j) {
      if (j != i && t.cones[i].contains(t.cones[j])) minimal = false;
    }
    if (minimal) idx.push_back(i);
  }
  return idx;
}

}  // namespace

OrbitConeTable minimal_full_dim(const OrbitConeTable& table, std::size_t k) {
  const OrbitConeTable full = full_dimensional(table, k);
  return full.subtable(inclusion_minimal(full));
}

OrbitReduction reduce_by_orbit_inclusion(const std::vector<AfaceOrbit>& afaces, const IntMatrix& q,
                                         const SymmetryGroup& g) {
  const std::size_t k = q.rows();
  std::vector<AfaceOrbit> full;
  for (const auto& o : afaces) {
    if (project_face(q, o.representative).dim() == k) full.push_back(o);
  }
  std::vector<AfaceOrbit> minimal;
  for (std::size_t b = 0; b < full.size(); ++b) {
    const std::uint64_t mb = full[b].representative.bits();
    bool is_min = true;
    for (std::size_t a = 0; a < full.size() && is_min; ++a) {
      if (a == b) continue;
      for (const auto& f : orbit_of_subset(g, full[a].representative)) {
        if ((f.bits() & ~mb) == 0) {
          is_min = false;
          break;
        }
      }
    }
    if (is_min) minimal.push_back(full[b]);
  }
  OrbitReduction out;
  out.omega1 = project_orbit_cones(minimal, q, g);
  out.omega2 = out.omega1.subtable(inclusion_minimal(out.omega1));
  return out;
}

// ---- GIT-cones -----------------------------------------------------------------------

FanContext make_context(const IntMatrix& q, const SymmetryGroup& g, OrbitConeTable table,
                        std::optional<Cone> restriction) {
  FanContext ctx;
  ctx.k = q.rows();
  ctx.q = q;
  ctx.table = std::move(table);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < q.cols(); ++j) cols.push_back(q.col(j));
  ctx.support = Cone::from_rays(ctx.k, std::move(cols));
  ctx.restriction = std::move(restriction);
  ctx.group = g;
  ctx.induced = induced_matrices(g, q);
  if (ctx.table.perms.size() != g.size()) throw std::invalid_argument("make_context: table was built for another group");
  return ctx;
}

Cone gitcone_at(const OrbitConeTable& table, std::size_t k, const QVector& w) {
  std::set<IntVector> ineqs;
  std::set<IntVector> eqs;
  bool strict = true;
  for (const auto& c : table.cones) {
    if (!c.contains(w)) continue;
    for (const auto& a : c.inequalities()) {
      ineqs.insert(a);
      if (dot(a, w) <= 0) strict = false;
    }
    for (const auto& e : c.equations()) {
      eqs.insert(e);
      strict = false;
    }
  }
  std::vector<IntVector> iv(ineqs.begin(), ineqs.end());
  std::vector<IntVector> ev(eqs.begin(), eqs.end());
  if (strict) return Cone::from_inequalities_with_interior(k, std::move(iv), {}, w);
  return Cone::from_inequalities(k, std::move(iv), std::move(ev));
}

Cone gitcone_at(const FanContext& ctx, const QVector& w) {
  if (!ctx.support.contains(w)) {
    throw ComputationError(ComputationError::Kind::OutsideSupport, "point " + to_string(w) + " is outside the support");
  }
  return gitcone_at(ctx.table, ctx.k, w);
}

Integer hash_of(const OrbitConeTable& table, const Cone& lambda) {
  Integer h = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.cones[i].contains(lambda)) set_bit(h, i);
  }
  return h;
}

Integer hash_at(const OrbitConeTable& table, const QVector& w) {
  Integer h = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.cones[i].contains(w)) set_bit(h, i);
  }
  return h;
}

Integer act_on_hash(const std::vector<std::size_t>& perm, const Integer& h) {
  Integer out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (has_bit(h, i)) set_bit(out, perm[i]);
  }
  return out;
}

Neighbor find_neighbor(const FanContext& ctx, const Cone& lambda, const IntVector& v, const QVector& p) {
  const IntVector outward = primitive(negated(v));
  Rational eps = 1;
  for (int attempt = 0; attempt < 256; ++attempt, eps /= 2) {
    QVector w = p;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= eps * v[i];
    if (!ctx.domain().contains(w)) continue;
    Cone c = gitcone_at(ctx.table, ctx.k, w);
    if (!c.is_full_dimensional() || !c.contains(p)) continue;
    const auto& ineqs = c.inequalities();
    if (!std::binary_search(ineqs.begin(), ineqs.end(), outward)) continue;
    return Neighbor{std::move(w), std::move(c)};
  }
  (void)lambda;
  throw ComputationError(ComputationError::Kind::NoNeighbor, "no neighbor found across the facet with normal " +
                                                                 to_string(v));
}

QVector start_point(const FanContext& ctx) {
  QVector base(ctx.k);
  if (ctx.restriction) {
    base = strict_interior_point(*ctx.restriction);
  } else {
    for (const auto& c : ctx.table.cones) {
      const QVector p = c.relative_interior_point();
      for (std::size_t i = 0; i < ctx.k; ++i) base[i] += p[i];
    }
  }
  for (std::size_t j = 0; j <= 64; ++j) {
    QVector w = base;
    if (j > 0) {
      Rational scale(1);
      scale /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(j));
      Integer pw = 1;
      for (std::size_t i = 0; i < ctx.k; ++i) {
        w[i] += scale * pw;
        pw *= static_cast<long>(j + 1);
      }
    }
    if (!ctx.domain().contains_in_relint(w) || !ctx.support.contains(w)) continue;
    if (gitcone_at(ctx.table, ctx.k, w).is_full_dimensional()) return w;
  }
  throw ComputationError(ComputationError::Kind::NoFullDimStart, "no start point with a full-dimensional GIT-cone");
}

// ---- traversal -------------------------------------------------------------------

namespace {

struct FrontierEntry {
  IntVector normal;
  QVector point;
  std::size_t owner = 0;
};

struct Rep {
  Cone cone;
  QVector point;
  Integer hash;
};

struct TraversalState {
  std::vector<Rep> reps;
  std::vector<Integer> hashes;  // sorted
  std::map<std::string, FrontierEntry> frontier;
  std::size_t processed = 0;
  std::size_t neighbors = 0;
};

json vec_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}
json vec_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}
json vecs_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}
IntVector int_vec(const json& a) {
  IntVector v;
  for (const auto& x : a) v.emplace_back(x.get<std::string>());
  return v;
}
QVector q_vec(const json& a) {
  QVector v;
  for (const auto& x : a) {
    Rational r(x.get<std::string>());
    r.canonicalize();
    v.push_back(r);
  }
  return v;
}
std::vector<IntVector> int_vecs(const json& a) {
  std::vector<IntVector> v;
  for (const auto& x : a) v.push_back(int_vec(x));
  return v;
}

void write_checkpoint(const std::string& path, const FanContext& ctx, const TraversalOptions& opts,
                      const TraversalState& st) {
  json j;
  j["format"] = "gitfan-checkpoint";
  j["version"] = 1;
  j["digest"] = opts.dataset_digest;
  j["omega"] = ctx.table.keys;
  j["processed"] = st.processed;
  j["neighbors"] = st.neighbors;
  json reps = json::array();
  for (const auto& r : st.reps) {
    reps.push_back({{"inequalities", vecs_json(r.cone.inequalities())},
                    {"equations", vecs_json(r.cone.equations())},
                    {"point", vec_json(r.point)},
                    {"hash", r.hash.get_str()}});
  }
  j["representatives"] = reps;
  json hs = json::array();
  for (const auto& h : st.hashes) hs.push_back(h.get_str());
  j["hashes"] = hs;
  json fr = json::array();
  for (const auto& [key, e] : st.frontier) {
    fr.push_back({{"key", key}, {"normal", vec_json(e.normal)}, {"point", vec_json(e.point)}, {"owner", e.owner}});
  }
  j["frontier"] = fr;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ComputationError(ComputationError::Kind::Checkpoint, "cannot write checkpoint " + tmp);
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

TraversalState read_checkpoint(const std::string& path, const FanContext& ctx, const TraversalOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ComputationError(ComputationError::Kind::Checkpoint, "cannot read checkpoint " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ComputationError(ComputationError::Kind::Checkpoint, std::string("malformed checkpoint: ") + e.what());
  }
  try {
    if (j.at("format") != "gitfan-checkpoint" || j.at("version") != 1) {
      throw ComputationError(ComputationError::Kind::Checkpoint, "unsupported checkpoint format");
    }
    if (j.at("digest").get<std::string>() != opts.dataset_digest) {
      throw ComputationError(ComputationError::Kind::Checkpoint, "checkpoint belongs to another dataset");
    }
    if (j.at("omega").get<std::vector<std::string>>() != ctx.table.keys) {
      throw ComputationError(ComputationError::Kind::Checkpoint, "checkpoint was computed with other orbit cones");
    }
    TraversalState st;
    st.processed = j.at("processed").get<std::size_t>();
    st.neighbors = j.at("neighbors").get<std::size_t>();
    for (const auto& r : j.at("representatives")) {
      st.reps.push_back(Rep{Cone::from_irredundant(ctx.k, int_vecs(r.at("inequalities")), int_vecs(r.at("equations"))),
                            q_vec(r.at("point")), Integer(r.at("hash").get<std::string>())});
    }
    for (const auto& h : j.at("hashes")) st.hashes.emplace_back(h.get<std::string>());
    for (const auto& e : j.at("frontier")) {
      st.frontier.emplace(e.at("key").get<std::string>(),
                          FrontierEntry{int_vec(e.at("normal")), q_vec(e.at("point")), e.at("owner").get<std::size_t>()});
    }
    return st;
  } catch (const json::exception& e) {
    throw ComputationError(ComputationError::Kind::Checkpoint, std::string("malformed checkpoint: ") + e.what());
  }
}

class Traversal {
 public:
  Traversal(const FanContext& ctx, const TraversalOptions& opts) : ctx_(ctx), opts_(opts) {}

  GitFanResult run() {
    if (ctx_.table.empty()) throw ComputationError(ComputationError::Kind::NoFullDimStart, "empty orbit cone table");
    if (opts_.resume) {
      st_ = read_checkpoint(opts_.checkpoint_path, ctx_, opts_);
    } else {
      const QVector w0 = start_point(ctx_);
      add(gitcone_at(ctx_.table, ctx_.k, w0));
    }
    bool stopped = false;
    while (!st_.frontier.empty()) {
      if (opts_.stop_after && st_.processed >= *opts_.stop_after) {
        stopped = true;
        break;
      }
      step();
      if (opts_.checkpoint_every > 0 && !opts_.checkpoint_path.empty() && st_.processed % opts_.checkpoint_every == 0) {
        write_checkpoint(opts_.checkpoint_path, ctx_, opts_, st_);
      }
    }
    if (stopped && !opts_.checkpoint_path.empty()) write_checkpoint(opts_.checkpoint_path, ctx_, opts_, st_);
    return finish(!stopped);
  }

 private:
  struct Computed {
    std::string key;
    FrontierEntry entry;
    std::optional<Neighbor> nb;
  };

  void add(Cone c) {
    const QVector p = strict_interior_point(c);
    Integer h = hash_at(ctx_.table, p);
    st_.hashes.insert(std::lower_bound(st_.hashes.begin(), st_.hashes.end(), h), h);
    const std::size_t owner = st_.reps.size();
    st_.reps.push_back(Rep{c, p, h});
    for (const auto& v : c.inequalities()) {
      if (!is_interior_facet(v, ctx_.domain())) continue;
      const QVector fp = facet_interior_point(c, v);
      std::string key = facet_key(c, v, fp);
      auto it = st_.frontier.find(key);
      if (it != st_.frontier.end()) {
        st_.frontier.erase(it);
      } else {
        st_.frontier.emplace(std::move(key), FrontierEntry{v, fp, owner});
      }
    }
  }

  bool known_orbit(const Integer& h) const {
    for (const auto& perm : ctx_.table.perms) {
      if (std::binary_search(st_.hashes.begin(), st_.hashes.end(), act_on_hash(perm, h))) return true;
    }
    return false;
  }

  void step() {
    // Neighbors of the first `threads` entries are computed concurrently and
    // consumed in key order while their entry is unchanged.
    std::vector<Computed> batch;
    for (auto it = st_.frontier.begin(); it != st_.frontier.end() && batch.size() < std::max<std::size_t>(1, opts_.threads);
         ++it) {
      batch.push_back(Computed{it->first, it->second, std::nullopt});
    }
    parallel_for(batch.size(), opts_.threads, [&](std::size_t i) {
      const auto& e = batch[i].entry;
      batch[i].nb = find_neighbor(ctx_, st_.reps[e.owner].cone, e.normal, e.point);
    });
    for (auto& b : batch) {
      auto it = st_.frontier.find(b.key);
      if (it == st_.frontier.end() || it->second.owner != b.entry.owner) continue;
      ++st_.neighbors;
      Cone& c = b.nb->cone;
      const Integer h = hash_at(ctx_.table, strict_interior_point(c));
      if (!known_orbit(h)) {
        add(std::move(c));
        if (st_.frontier.contains(b.key)) throw std::logic_error("traversal: shared facet has inconsistent keys");
      } else {
        st_.frontier.erase(b.key);
      }
      ++st_.processed;
      if (opts_.stop_after && st_.processed >= *opts_.stop_after) break;
    }
  }

  // Orbit member with the smallest hash.
  std::tuple<Integer, std::size_t, std::size_t> canonical(const Integer& h) const {
    Integer best;
    std::size_t arg = 0;
    std::set<Integer> orbit;
    for (std::size_t g = 0; g < ctx_.table.perms.size(); ++g) {
      Integer gh = act_on_hash(ctx_.table.perms[g], h);
      if (g == 0 || gh < best) {
        best = gh;
        arg = g;
      }
      orbit.insert(std::move(gh));
    }
    return {best, arg, orbit.size()};
  }

  GitFanResult finish(bool complete) {
    GitFanResult res;
    res.complete = complete;
    res.support = ctx_.domain();
    struct Out {
      Integer hash;
      Cone cone;
      QVector point;
      std::size_t length;
    };
    std::vector<Out> outs;
    for (const auto& r : st_.reps) {
      auto [h, g, len] = canonical(r.hash);
      outs.push_back(Out{h, act_on_cone(ctx_.induced[g], r.cone), times(ctx_.induced[g], r.point), len});
    }
    std::sort(outs.begin(), outs.end(), [](const Out& a, const Out& b) { return a.hash < b.hash; });
    for (auto& o : outs) {
      res.hashes.push_back(o.hash);
      res.representatives.push_back(o.cone);
      res.interior_points.push_back(o.point);
      res.orbit_lengths.push_back(o.length);
      res.stats.total_cones += o.length;
      ++res.stats.orbit_length_histogram[o.length];
    }
    res.stats.facets_processed = st_.processed;
    res.stats.neighbors_computed = st_.neighbors;
    if (!complete) return res;

    if (opts_.compute_adjacency) {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;
      for (std::size_t i = 0; i < res.representatives.size(); ++i) {
        const Cone& c = res.representatives[i];
        for (const auto& v : c.inequalities()) {
          if (!is_interior_facet(v, ctx_.domain())) continue;
          const auto nb = find_neighbor(ctx_, c, v, facet_interior_point(c, v));
          const Integer h = std::get<0>(canonical(hash_at(ctx_.table, strict_interior_point(nb.cone))));
          const auto it = std::lower_bound(res.hashes.begin(), res.hashes.end(), h);
          if (it == res.hashes.end() || *it != h) throw std::logic_error("adjacency: neighbor orbit not found");
          ++edges[{i, static_cast<std::size_t>(it - res.hashes.begin())}];
        }
      }
      for (const auto& [e, n] : edges) res.adjacency.push_back(AdjacencyEdge{e.first, e.second, n});
    }
    if (opts_.compute_rays) {
      std::set<IntVector> rays;
      for (const auto& c : expand_orbits(ctx_, res)) {
        for (const auto& r : c.rays()) rays.insert(r);
      }
      res.stats.fan_rays = rays.size();
    }
    return res;
  }

  const FanContext& ctx_;
  const TraversalOptions& opts_;
  TraversalState st_;
};

}  // namespace

GitFanResult traverse_symmetric(const FanContext& ctx, const TraversalOptions& opts) {
  return Traversal(ctx, opts).run();
}

GitFanResult traverse_plain(const FanContext& ctx, const TraversalOptions& opts) {
  FanContext plain = ctx;
  plain.group = SymmetryGroup::trivial(ctx.q.cols());
  plain.induced = {QMatrix::identity(ctx.k)};
  std::vector<std::size_t> id(ctx.table.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  plain.table.perms = {id};
  return Traversal(plain, opts).run();
}

std::vector<Cone> expand_orbits(const FanContext& ctx, const GitFanResult& result) {
  std::map<std::string, Cone> all;
  for (const auto& c : result.representatives) {
    for (const auto& a : ctx.induced) {
      Cone img = act_on_cone(a, c);
      all.emplace(img.canonical_key(), img);
    }
  }
  std::vector<Cone> out;
  for (auto& [k, c] : all) out.push_back(c);
  return out;
}

// ---- derived cones --------------------------------------------------------------

Cone moving_cone(const IntMatrix& q) {
  const std::size_t k = q.rows();
  const std::size_t r = q.cols();
  std::set<IntVector> ineqs;
  std::set<IntVector> eqs;
  std::set<IntVector> seen_columns;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) gens.push_back(q.col(j));
    }
    // Leaving out a repeated column gives the same cone.
    if (!seen_columns.insert(primitive(q.col(i))).second) continue;
    const Cone c = Cone::from_rays(k, std::move(gens));
    ineqs.insert(c.inequalities().begin(), c.inequalities().end());
    eqs.insert(c.equations().begin(), c.equations().end());
  }
  std::vector<IntVector> iv(ineqs.begin(), ineqs.end());
  std::vector<IntVector> ev(eqs.begin(), eqs.end());
  if (ev.empty()) {
    // The sum of all degrees is fixed by every symmetry and usually interior;
    // otherwise an interior point comes from a slack LP when that is small.
    std::optional<QVector> z;
    QVector sum(k);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < k; ++i) sum[i] += q(i, j);
    const auto strict = [&](const QVector& p) {
      return std::all_of(iv.begin(), iv.end(), [&](const IntVector& a) { return dot(a, p) > 0; });
    };
    if (strict(sum)) {
      z = sum;
    } else if (iv.size() <= 2000) {
      try {
        QVector p = strict_interior_point(Cone::from_irredundant(k, iv, {}));
        if (strict(p)) z = std::move(p);
      } catch (const ComputationError&) {
      }
    }
    if (z) return Cone::from_inequalities_with_interior(k, std::move(iv), {}, *z);
  }
  return Cone::from_inequalities(k, std::move(iv), std::move(ev));
}

SemiampleMori extract_semiample_and_mori(const GitFanResult& result) {
  std::optional<std::size_t> fixed;
  for (std::size_t i = 0; i < result.orbit_lengths.size(); ++i) {
    if (result.orbit_lengths[i] != 1) continue;
    if (fixed) throw ComputationError(ComputationError::Kind::NoUniqueFixedOrbit, "more than one orbit of length 1");
    fixed = i;
  }
  if (!fixed) throw ComputationError(ComputationError::Kind::NoUniqueFixedOrbit, "no orbit of length 1");
  const Cone& s = result.representatives[*fixed];
  return SemiampleMori{s, s.dual()};
}

OrbitGraph orbit_adjacency_graph(const GitFanResult& result) {
  OrbitGraph g;
  g.orbit_lengths = result.orbit_lengths;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;
  for (const auto& e : result.adjacency) edges[{std::min(e.from, e.to), std::max(e.from, e.to)}] += e.count;
  for (const auto& [p, n] : edges) g.edges.push_back(AdjacencyEdge{p.first, p.second, n});
  return g;
}

bool OrbitGraph::connected() const {
  const std::size_t n = orbit_lengths.size();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.from)] = find(e.to);
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

}  // namespace gitfan
