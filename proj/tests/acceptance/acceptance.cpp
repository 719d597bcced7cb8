// Acceptance checks. Prints one PASS/FAIL line per criterion; with an
// argument N only criterion N runs. Exit status is nonzero if any check fails.

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gitfan/io.hpp"
#include "oracles.hpp"

using namespace gitfan;

namespace {

// Tolerances: every comparison is exact; these are the wall-clock limits.
constexpr double kCubeSeconds = 1.0;
constexpr double kG25Seconds = 300.0;
constexpr double kSaturationSeconds = 600.0;
constexpr double kLemmaSeconds = 60.0;
constexpr double kMovingConeSeconds = 4.0 * 3600.0;
constexpr double kM06ValidationSeconds = 600.0;

class Report {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  [[nodiscard]] bool ok() const { return ok_; }
  [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Pipeline {
  io::ProblemSpec spec;
  std::vector<AfaceOrbit> afaces;
  OrbitConeTable omega;
  OrbitConeTable omega_k;
  OrbitConeTable omega_min;
  FanContext ctx;
  GitFanResult symmetric;
  GitFanResult plain;
  std::vector<QMatrix> induced;
};

Pipeline run(const std::string& name, bool plain = true) {
  Pipeline p;
  p.spec = io::load_dataset(name);
  p.afaces = enumerate_afaces(p.spec.ideal(), p.spec.group);
  p.omega = project_orbit_cones(p.afaces, p.spec.q, p.spec.group);
  p.omega_k = full_dimensional(p.omega, p.spec.k());
  p.omega_min = minimal_full_dim(p.omega, p.spec.k());
  p.ctx = make_context(p.spec.q, p.spec.group, p.omega_min);
  p.induced = p.ctx.induced;
  p.symmetric = traverse_symmetric(p.ctx);
  if (plain) p.plain = traverse_plain(p.ctx);
  return p;
}

std::vector<std::size_t> table_orbit_lengths(const OrbitConeTable& t) {
  std::vector<bool> seen(t.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit;
    for (const auto& perm : t.perms) orbit.insert(perm[i]);
    for (auto j : orbit) seen[j] = true;
    out.push_back(orbit.size());
  }
  return sorted(out);
}

// cone(columns of the row-major matrix).
Cone column_cone(const std::vector<std::vector<long>>& rows) {
  const IntMatrix m = int_matrix(rows);
  std::vector<IntVector> rays;
  for (std::size_t j = 0; j < m.cols(); ++j) rays.push_back(m.col(j));
  return Cone::from_rays(m.rows(), rays);
}

// Indices of the cones in `cones` that lie in the G-orbit of c.
std::vector<std::size_t> equivalent_to(const std::vector<QMatrix>& induced, const Cone& c,
                                       const std::vector<Cone>& cones) {
  std::set<std::string> orbit;
  for (const auto& a : induced) orbit.insert(act_on_cone(a, c).canonical_key());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (orbit.count(cones[i].canonical_key())) out.push_back(i);
  }
  return out;
}

// ---- 1 --------------------------------------------------------------------------------

void criterion1(Report& rep) {
  const auto t0 = Clock::now();
  const Pipeline p = run("cube");
  const auto& g = p.spec.group;
  auto face = [](std::vector<std::size_t> idx) { return FaceIndexSet::from_indices(idx); };

  std::map<std::uint64_t, std::size_t> got;
  for (const auto& o : p.afaces) got[o.representative.bits()] = o.length;
  const std::map<std::uint64_t, std::size_t> expected = {
      {face({}).bits(), 1}, {face({1}).bits(), 4}, {face({1, 2}).bits(), 4}, {face({1, 2, 3, 4}).bits(), 1}};
  rep.check(got == expected, "a-face orbits are {g0}, G.g1 (4), G.g2 (4), {g4}");
  rep.check(!is_aface(p.spec.ideal(), face({1, 3})) && orbit_of_subset(g, face({1, 3})).size() == 2,
            "orbit of {1,3} (length 2) rejected");
  rep.check(!is_aface(p.spec.ideal(), face({1, 2, 3})) && orbit_of_subset(g, face({1, 2, 3})).size() == 4,
            "orbit of {1,2,3} (length 4) rejected");
  rep.check(gitcone_at(p.ctx, {Rational(0), Rational(1)}) == project_face(p.spec.q, face({1, 2})),
            "lambda(0,1) = Q(g2)");
  rep.check(p.symmetric.representatives.size() == 1 && p.symmetric.orbit_lengths == std::vector<std::size_t>{4},
            "symmetric traversal: 1 representative of orbit length 4");
  rep.check(p.plain.representatives.size() == 4, "plain traversal: 4 chambers");
  const QMatrix a1 = induced_matrix(parse_permutation("(1,2)(3,4)", 4), p.spec.q);
  const QMatrix a2 = induced_matrix(parse_permutation("(1,2,3,4)", 4), p.spec.q);
  rep.check(a1 == to_rational(int_matrix({{-1, 0}, {0, 1}})), "A_(1,2)(3,4) = [-1 0; 0 1]");
  rep.check(a2 == to_rational(int_matrix({{0, -1}, {1, 0}})), "A_(1,2,3,4) = [0 -1; 1 0]");
  const double t = seconds_since(t0);
  rep.check(t < kCubeSeconds, "time < 1 s");
  rep.note("a-face orbits " + std::to_string(p.afaces.size()) + ", chambers " +
           std::to_string(p.plain.representatives.size()) + ", " + std::to_string(t) + " s");
}

// ---- 2 -----------------------------------------------------------------------------------

void criterion2(Report& rep) {
  const auto t0 = Clock::now();
  const Pipeline p = run("g25", false);
  const std::size_t subset_reps = subset_orbit_representatives(p.spec.group).size();
  rep.check(subset_reps == 34, "34 subset orbit representatives (got " + std::to_string(subset_reps) + ")");
  std::vector<std::size_t> lens;
  for (const auto& o : p.afaces) lens.push_back(o.length);
  rep.check(total_afaces(p.afaces) == 172 && p.afaces.size() == 14, "172 a-faces in 14 orbits");
  rep.check(sorted(lens) == std::vector<std::size_t>{1, 1, 5, 5, 10, 10, 10, 10, 10, 15, 15, 20, 30, 30},
            "a-face orbit lengths");
  rep.check(p.omega.size() == 82, "|Omega| = 82 (got " + std::to_string(p.omega.size()) + ")");
  rep.check(p.omega_k.size() == 36, "36 full-dimensional orbit cones (got " + std::to_string(p.omega_k.size()) + ")");
  rep.check(table_orbit_lengths(p.omega_k) == std::vector<std::size_t>{1, 10, 10, 15},
            "full-dimensional orbit lengths 1,10,10,15 (got " + join(table_orbit_lengths(p.omega_k)) + ")");

  const std::vector<Cone> thetas = {
      column_cone({{1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                   {0, 0, 1, 0, 0, 1, 1, 1, 0, 0},
                   {0, 1, 0, 1, 1, 0, 0, -1, 0, 0},
                   {1, 1, 0, 0, 0, -1, 0, 0, 1, 0},
                   {1, 0, 0, 1, 0, 0, -1, 0, 0, 1}}),
      column_cone({{1, 1, 1, 0, 0, 0, 1},
                   {0, 0, 0, 1, 1, 1, 1},
                   {1, 1, 0, -1, 0, 0, 0},
                   {0, 1, 1, 0, 0, -1, 0},
                   {1, 0, 1, 0, -1, 0, 0}}),
      column_cone({{1, 1, 1, 1, 0, 0, 0, 0, 0},
                   {0, 0, 1, 0, 1, 1, 1, 0, 0},
                   {1, 0, 0, 1, 0, -1, 0, 0, 1},
                   {0, 1, 0, 1, 0, 0, -1, 1, 0},
                   {1, 1, 0, 0, -1, 0, 0, 0, 0}}),
      column_cone({{1, 1, 0, 0, 0, 0, 1, 1},
                   {0, 1, 1, 0, 1, 0, 0, 0},
                   {1, 0, -1, 0, 0, 1, 1, 0},
                   {1, 0, 0, 1, -1, 0, 0, 1},
                   {0, 0, 0, 0, 0, 0, 1, 1}}),
  };
  const std::vector<std::size_t> theta_lengths = {1, 10, 10, 15};
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto hits = equivalent_to(p.induced, thetas[i], p.omega_k.cones);
    rep.check(hits.size() == theta_lengths[i],
              "theta_" + std::to_string(i + 1) + " orbit of length " + std::to_string(theta_lengths[i]) +
                  " in Omega(5) (got " + std::to_string(hits.size()) + ")");
  }

  rep.check(sorted(p.symmetric.orbit_lengths) == std::vector<std::size_t>{1, 5, 10, 10, 20, 30},
            "6 chamber orbits of lengths 1,5,10,10,20,30 (got " + join(sorted(p.symmetric.orbit_lengths)) + ")");
  const std::vector<Cone> lambdas = {
      column_cone({{1, 1, 1, 2, 1, 1, 1, 1, 1, 0},
                   {1, 1, 2, 1, 1, 1, 1, 1, 0, 1},
                   {0, 1, 0, 1, 1, 1, 0, 0, 1, 0},
                   {1, 1, 0, 1, 0, 0, 1, 0, 1, 0},
                   {0, 0, 0, 1, 0, 1, 1, 1, 1, 0}}),
      column_cone({{0, 1, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 1, 1, 1, 0}, {1, 1, 0, 1, 0}, {0, 0, 0, 0, -1}}),
      column_cone({{1, 1, 1, 1, 0, 0}, {1, 2, 1, 1, 1, 1}, {1, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, -1}}),
      column_cone({{0, 0, 0, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, -1, 0, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, -1}}),
      column_cone({{0, 0, 0, 1, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, -1}}),
      column_cone({{0, 0, 1, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, 1, 0, 0}, {1, 0, 1, 1, 0}, {0, 0, 0, 0, -1}}),
  };
  std::set<std::size_t> matched;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto hits = equivalent_to(p.induced, lambdas[i], p.symmetric.representatives);
    rep.check(hits.size() == 1, "lambda_" + std::to_string(i + 1) + " equivalent to exactly one representative");
    if (hits.size() == 1) matched.insert(hits.front());
  }
  rep.check(matched.size() == 6, "lambda_1..lambda_6 match distinct representatives");
  const auto graph = orbit_adjacency_graph(p.symmetric);
  rep.check(graph.orbit_lengths.size() == 6 && graph.connected(), "orbit adjacency graph connected on 6 vertices");
  const double t = seconds_since(t0);
  rep.check(t < kG25Seconds, "time < 5 min");
  rep.note("|Omega| = " + std::to_string(p.omega.size()) + ", |Omega(5)| = " + std::to_string(p.omega_k.size()) +
           ", |Omega(5)_min| = " + std::to_string(p.omega_min.size()) + ", " + std::to_string(t) + " s");
}

// ---- 3 -------------------------------------------------------------------------------------

void criterion3(Report& rep) {
  const auto t0 = Clock::now();
  std::size_t candidates = 0;
  for (const auto* name : {"cube", "g25"}) {
    const auto spec = io::load_dataset(name);
    for (const auto& face : subset_orbit_representatives(spec.group)) {
      ++candidates;
      const Ideal restricted = restrict_to_face(spec.ideal(), face);
      const bool fast = is_aface(spec.ideal(), face, AfaceMethod::Fast);
      const bool sat = is_aface(spec.ideal(), face, AfaceMethod::Sat);
      const bool ra = is_aface(spec.ideal(), face, AfaceMethod::Rabinowitsch);
      rep.check(fast == sat && sat == ra, std::string(name) + " verdicts agree on " + face.to_string());
      if (restricted.is_zero() || face.size() == 0) continue;
      const auto w = positive_face_weight(restricted, face);
      rep.check(w.has_value(), std::string(name) + " positive weight on " + face.to_string());
      if (!w) continue;
      std::vector<std::size_t> vars;
      for (auto i : face.indices()) vars.push_back(i - 1);
      const Ideal a(restricted.ring(), saturate_product(restricted, vars, *w));
      const Ideal b = saturate_iterated_quotient(restricted, face);
      rep.check(a == b, std::string(name) + " saturations agree on " + face.to_string());
    }
  }
  std::mt19937 rng(20240601);
  const int random_ideals = 120;
  for (int it = 0; it < random_ideals; ++it) {
    const auto inst = oracle::random_homogeneous(rng);
    const Ideal i(inst.ring, inst.gens);
    std::vector<std::size_t> one_based;
    for (auto v : inst.vars) one_based.push_back(v + 1);
    const auto vars = FaceIndexSet::from_indices(one_based);
    const Ideal a(inst.ring, saturate_product(i, inst.vars, inst.weight));
    const Ideal b = saturate_iterated_quotient(i, vars);
    rep.check(a == b, "random ideal " + std::to_string(it) + ": saturations agree");
    rep.check(contains_monomial_rabinowitsch(i, vars) == b.is_unit() && a.is_unit() == b.is_unit(),
              "random ideal " + std::to_string(it) + ": verdicts agree");
  }
  const double t = seconds_since(t0);
  rep.check(t < kSaturationSeconds, "time < 10 min");
  rep.note(std::to_string(candidates) + " dataset candidates, " + std::to_string(random_ideals) + " random ideals, " +
           std::to_string(t) + " s");
}

// ---- 4 -----------------------------------------------------------------------------------

void criterion4(Report& rep) {
  const auto t0 = Clock::now();
  std::mt19937 rng(47);
  for (const auto* name : {"cube", "g25"}) {
    const auto spec = io::load_dataset(name);
    const auto afaces = enumerate_afaces(spec.ideal(), spec.group);
    const auto omega = project_orbit_cones(afaces, spec.q, spec.group);
    const auto full = full_dimensional(omega, spec.k());
    const auto minimal = minimal_full_dim(omega, spec.k());
    for (int t = 0; t < 100; ++t) {
      // Positive combination of all columns: an interior point of the support.
      QVector w(spec.k());
      for (std::size_t j = 0; j < spec.r(); ++j) {
        const Rational c(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 7));
        for (std::size_t i = 0; i < spec.k(); ++i) w[i] += c * Rational(spec.q(i, j));
      }
      rep.check(gitcone_at(minimal, spec.k(), w) == gitcone_at(full, spec.k(), w),
                std::string(name) + " point " + std::to_string(t));
    }
  }
  const double t = seconds_since(t0);
  rep.check(t < kLemmaSeconds, "time < 1 min");
  rep.note("200 points, " + std::to_string(t) + " s");
}

// ---- 5 ----------------------------------------------------------------------------------

void criterion5(Report& rep) {
  std::size_t checks = 0;
  for (const auto* name : {"cube", "g25"}) {
    const Pipeline p = run(name);
    const auto& table = p.ctx.table;
    std::set<Integer> seen;
    for (const auto& c : p.plain.representatives) {
      const Integer h = hash_of(table, c);
      rep.check(seen.insert(h).second, std::string(name) + " hash collision");
      rep.check(h == hash_at(table, c.relative_interior_point()), std::string(name) + " hash at interior point");
      for (std::size_t g = 0; g < p.spec.group.size(); ++g) {
        rep.check(act_on_hash(table.perms[g], h) == hash_of(table, act_on_cone(p.induced[g], c)),
                  std::string(name) + " equivariance");
        ++checks;
      }
    }
  }
  rep.note(std::to_string(checks) + " (g, chamber) pairs");
}

// ---- 6 ------------------------------------------------------------------------------------

void criterion6(Report& rep) {
  for (const auto* name : {"cube", "g25"}) {
    const Pipeline p = run(name);
    std::set<std::string> a;
    std::set<std::string> b;
    for (const auto& c : expand_orbits(p.ctx, p.symmetric)) a.insert(c.canonical_key());
    for (const auto& c : p.plain.representatives) b.insert(c.canonical_key());
    rep.check(a == b, std::string(name) + ": G.(symmetric) = plain");
    rep.note(std::string(name) + " " + std::to_string(a.size()) + " cones");
  }
}

// ---- 7 -------------------------------------------------------------------------------------

void criterion7(Report& rep) {
  const auto t0 = Clock::now();
  const auto spec = io::load_dataset("m06raw");
  const Cone mov = moving_cone(spec.q);
  const std::size_t facets = mov.inequalities().size();
  rep.check(facets == 110, "110 irredundant facets (got " + std::to_string(facets) + ")");
  rep.check(mov.is_full_dimensional(), "full-dimensional");
  const double t = seconds_since(t0);
  rep.check(t < kMovingConeSeconds, "time < 4 h");
  rep.note("facets " + std::to_string(facets) + ", " + std::to_string(t) + " s; ray enumeration skipped");
}

// ---- 8 --------------------------------------------------------------------------------------

void criterion8(Report& rep) {
  const auto t0 = Clock::now();
  const auto spec = io::load_dataset("m06raw");
  rep.check(rank(spec.q) == 16, "rank Q = 16");
  rep.check(spec.group.generators().size() == 5, "five generators");
  for (std::size_t i = 0; i < spec.group.generators().size(); ++i) {
    bool ok = true;
    try {
      (void)induced_matrix(spec.group.generators()[i], spec.q);
    } catch (const ComputationError&) {
      ok = false;
    }
    rep.check(ok, "induced matrix for sigma_" + std::to_string(i + 1));
  }
  const auto i1 = spec.part("I1");
  const auto i2 = spec.part("I2");
  rep.check(i1.size() == 6 && i2.size() == 15, "6 + 15 generators");
  rep.check(is_homogeneous(Ideal(spec.ring, i1), spec.q), "I1 homogeneous");
  rep.check(is_homogeneous(Ideal(spec.ring, i2), spec.q), "I2 homogeneous");
  const double t = seconds_since(t0);
  rep.check(t < kM06ValidationSeconds, "time < 10 min");
  rep.note("|G| = " + std::to_string(spec.group.size()) + ", " + std::to_string(t) + " s");
}

// ---- 9 ----------------------------------------------------------------------------------------

std::string result_text(const GitFanResult& r) {
  return io::emit_result_json(r, io::ResultMeta{"g25", "symmetric", false}, true);
}

void criterion9(Report& rep) {
  rep.note("the full M06 fan (176512180 cones) is declared out of desk scale; checking checkpoint/resume instead");
  const Pipeline p = run("g25", false);
  const std::string reference = result_text(p.symmetric);
  const auto dir = std::filesystem::temp_directory_path();

  // In-process interruption at several points.
  const std::size_t total = p.symmetric.stats.facets_processed;
  for (std::size_t stop : {std::size_t{1}, total / 2, total - 1}) {
    const auto path = (dir / ("gitfan_acceptance_stop" + std::to_string(stop) + ".json")).string();
    std::filesystem::remove(path);
    TraversalOptions o;
    o.checkpoint_path = path;
    o.dataset_digest = "g25";
    o.stop_after = stop;
    const auto partial = traverse_symmetric(p.ctx, o);
    rep.check(!partial.complete, "stop after " + std::to_string(stop) + " leaves the run incomplete");
    o.stop_after.reset();
    o.resume = true;
    rep.check(result_text(traverse_symmetric(p.ctx, o)) == reference,
              "resume after " + std::to_string(stop) + " matches the uninterrupted run");
    std::filesystem::remove(path);
  }

  // A child process killed while checkpointing after every facet.
  const auto path = (dir / "gitfan_acceptance_kill.json").string();
  std::filesystem::remove(path);
  std::cout.flush();
  const pid_t pid = fork();
  if (pid == 0) {
    TraversalOptions o;
    o.checkpoint_path = path;
    o.checkpoint_every = 1;
    o.dataset_digest = "g25";
    o.compute_rays = false;
    o.compute_adjacency = false;
    (void)traverse_symmetric(p.ctx, o);
    _exit(0);
  }
  while (!std::filesystem::exists(path)) std::this_thread::sleep_for(std::chrono::microseconds(200));
  kill(pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);
  const bool killed = WIFSIGNALED(status);
  rep.note(killed ? "child killed mid-run" : "child finished before the kill signal");
  TraversalOptions o;
  o.checkpoint_path = path;
  o.dataset_digest = "g25";
  o.resume = true;
  rep.check(result_text(traverse_symmetric(p.ctx, o)) == reference, "resume after SIGKILL matches");
  std::filesystem::remove(path);
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Report&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "cube: a-faces, chambers, induced matrices", criterion1},
      {2, "G(2,5): a-faces, orbit cones, chambers, adjacency", criterion2},
      {3, "saturation methods agree", criterion3},
      {4, "minimal orbit cones give the same GIT-cones", criterion4},
      {5, "hash injectivity and equivariance", criterion5},
      {6, "symmetric and plain traversals agree", criterion6},
      {7, "moving cone of M06 has 110 facets", criterion7},
      {8, "M06 input validation", criterion8},
      {9, "M06 fan declared out of scale; checkpoint/resume", criterion9},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool ok = true;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    Report rep;
    const auto t0 = Clock::now();
    try {
      c.run(rep);
    } catch (const std::exception& e) {
      rep.check(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    std::cout << (rep.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t << " s)\n";
    for (const auto& n : rep.notes()) std::cout << "    " << n << "\n";
    std::set<std::string> shown;
    for (const auto& f : rep.failures()) {
      if (shown.insert(f).second) std::cout << "    failed: " << f << "\n";
    }
    std::cout.flush();
    ok = ok && rep.ok();
  }
  return ok ? 0 : 1;
}
