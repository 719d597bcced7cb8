// Command line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gitfan/io.hpp"

using namespace gitfan;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kComputation = 3;

struct Common {
  std::string source;
  std::string method;
  std::size_t threads = 0;
};

void add_source(CLI::App* cmd, Common& c) {
  cmd->add_option("problem", c.source, "problem file, or @name for a bundled dataset")->required();
}

void add_compute(CLI::App* cmd, Common& c) {
  cmd->add_option("--method", c.method, "a-face test")->check(CLI::IsMember({"fast", "sat", "ra"}));
  cmd->add_option("--threads", c.threads, "worker threads");
}

AfaceOptions aface_options(const Common& c, const io::ProblemSpec& s) {
  AfaceOptions o;
  o.method = s.options.method;
  if (c.method == "fast") o.method = AfaceMethod::Fast;
  if (c.method == "sat") o.method = AfaceMethod::Sat;
  if (c.method == "ra") o.method = AfaceMethod::Rabinowitsch;
  o.threads = c.threads > 0 ? c.threads : s.options.threads;
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(ValidationError::Kind::Shape, "cannot write " + path);
  out << text;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

// Orbit lengths of a G-stable table.
std::vector<std::size_t> table_orbits(const OrbitConeTable& t) {
  std::vector<bool> seen(t.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (seen[i]) continue;
    std::size_t n = 0;
    for (const auto& p : t.perms) {
      if (!seen[p[i]]) {
        seen[p[i]] = true;
        ++n;
      }
    }
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_validate(const Common& c, bool deep) {
  const auto s = io::load_problem(c.source, {.deep = deep});
  std::cout << "ok: " << (s.name.empty() ? c.source : s.name) << " r=" << s.r() << " k=" << s.k()
            << " generators=" << s.generators.size() << " |G|=" << s.group.size()
            << " digest=" << io::source_digest(c.source) << "\n";
  return kOk;
}

int cmd_afaces(const Common& c) {
  const auto s = io::load_problem(c.source);
  const auto orbits = enumerate_afaces(s.ideal(), s.group, aface_options(c, s));
  std::cout << "a-face orbits: " << orbits.size() << "\n";
  std::cout << "total a-faces: " << total_afaces(orbits) << "\n";
  for (const auto& o : orbits) std::cout << o.representative.to_string() << " length " << o.length << "\n";
  return kOk;
}

int cmd_orbitcones(const Common& c) {
  const auto s = io::load_problem(c.source);
  const auto orbits = enumerate_afaces(s.ideal(), s.group, aface_options(c, s));
  const auto omega = project_orbit_cones(orbits, s.q, s.group);
  const auto full = full_dimensional(omega, s.k());
  const auto minimal = minimal_full_dim(omega, s.k());
  const auto fo = table_orbits(full);
  std::cout << "orbit cones: " << omega.size() << "\n";
  std::cout << "full-dimensional: " << full.size() << " in " << fo.size() << " orbits (lengths " << join(fo) << ")\n";
  std::cout << "minimal full-dimensional: " << minimal.size() << "\n";
  return kOk;
}

struct FanArgs {
  bool plain = false;
  bool restrict_moving = false;
  bool huge = false;
  bool resume = false;
  bool no_rays = false;
  std::string checkpoint;
  std::size_t checkpoint_every = 0;
  std::optional<std::size_t> stop_after;
  std::string output;
  std::string dot;
};

int cmd_gitfan(const Common& c, const FanArgs& a) {
  const auto s = io::load_problem(c.source);
  const bool huge = s.r() > 30 || s.name.starts_with("m06");
  if (huge && !a.huge) {
    throw ValidationError(ValidationError::Kind::Shape,
                          "this problem is far beyond desk scale; pass --i-know-this-is-huge and --checkpoint PATH");
  }
  if (huge && a.checkpoint.empty()) {
    throw ValidationError(ValidationError::Kind::Shape, "a checkpoint path is mandatory for this problem");
  }
  if (a.resume && a.checkpoint.empty()) {
    throw ValidationError(ValidationError::Kind::Shape, "--resume needs --checkpoint");
  }
  const AfaceOptions ao = aface_options(c, s);
  const auto orbits = enumerate_afaces(s.ideal(), s.group, ao);
  const auto table = minimal_full_dim(project_orbit_cones(orbits, s.q, s.group), s.k());
  const bool restricted = a.restrict_moving || s.options.restrict_moving;
  std::optional<Cone> restriction;
  if (restricted) restriction = moving_cone(s.q);
  const FanContext ctx = make_context(s.q, s.group, table, restriction);

  TraversalOptions to;
  to.threads = ao.threads;
  to.stop_after = a.stop_after;
  to.checkpoint_path = a.checkpoint.empty() ? s.options.checkpoint : a.checkpoint;
  to.checkpoint_every = a.checkpoint_every > 0 ? a.checkpoint_every : (huge ? 1000 : 0);
  to.resume = a.resume;
  to.dataset_digest = io::source_digest(c.source);
  to.compute_rays = !a.no_rays && !huge;
  const GitFanResult r = a.plain ? traverse_plain(ctx, to) : traverse_symmetric(ctx, to);

  std::cout << "orbits: " << r.representatives.size() << " (lengths " << join(r.orbit_lengths) << ")\n";
  std::cout << "maximal cones: " << r.stats.total_cones << "\n";
  if (r.stats.fan_rays) std::cout << "fan rays: " << *r.stats.fan_rays << "\n";
  std::cout << "complete: " << (r.complete ? "yes" : "no") << "\n";
  if (!a.output.empty()) {
    const io::ResultMeta meta{s.name, a.plain ? "plain" : "symmetric", restricted};
    write_text(a.output, io::emit_result_json(r, meta, to.compute_rays));
  }
  if (!a.dot.empty()) write_text(a.dot, io::emit_dot(orbit_adjacency_graph(r)));
  return kOk;
}

int cmd_movingcone(const Common& c, bool json, bool rays) {
  const auto s = io::load_problem(c.source);
  const Cone mov = moving_cone(s.q);
  std::cout << "moving cone: dim " << mov.dim() << ", " << mov.inequalities().size() << " facets";
  if (rays) std::cout << ", " << mov.rays().size() << " rays";
  std::cout << "\n";
  if (json) std::cout << io::emit_cone_json(mov, rays);
  return kOk;
}

int cmd_dual(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(ValidationError::Kind::Shape, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::cout << io::emit_cone_json(io::parse_cone_json(ss.str()).dual(), true);
  return kOk;
}

int cmd_build_m06(const std::string& source, const std::string& output) {
  io::ProblemSpec raw = io::load_problem(source);
  const auto gens = io::build_m06_ideal(raw, {.verbose = true});
  io::ProblemSpec m06 = raw;
  m06.name = "m06";
  m06.parts.clear();
  m06.options.raw = false;
  m06.ideal_source.clear();
  const MonomialOrder ord = MonomialOrder::degrevlex(raw.r());
  for (const auto& f : gens) m06.ideal_source.push_back(f.primitive(ord).to_string(ord));
  const std::string text = io::emit_problem(m06);
  write_text(output, text);
  std::cerr << "m06: " << gens.size() << " generators, digest " << io::digest_hex(io::fnv1a64(text)) << "\n";
  return kOk;
}

int cmd_dataset(const std::string& name, bool digest, bool list) {
  if (list) {
    for (const auto& d : io::datasets()) std::cout << d.name << " " << io::digest_hex(d.digest) << "\n";
    return kOk;
  }
  const io::DatasetInfo* d = io::find_dataset(name);
  if (d == nullptr) throw ValidationError(ValidationError::Kind::Shape, "unknown dataset \"" + name + "\"");
  if (digest) {
    std::cout << io::digest_hex(io::fnv1a64(d->text)) << "\n";
  } else {
    std::cout << d->text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GIT-fans of torus actions on affine varieties, computed up to symmetry"};
  app.require_subcommand(1);

  Common common;
  bool deep = false;
  auto* validate = app.add_subcommand("validate", "parse and check a problem");
  add_source(validate, common);
  validate->add_flag("--deep", deep, "also check that the ideal contains no monomial");

  auto* afaces = app.add_subcommand("afaces", "a-face orbit representatives and lengths");
  add_source(afaces, common);
  add_compute(afaces, common);

  auto* orbitcones = app.add_subcommand("orbitcones", "orbit cone statistics");
  add_source(orbitcones, common);
  add_compute(orbitcones, common);

  FanArgs fan;
  std::size_t stop_after = 0;
  auto* gitfan = app.add_subcommand("gitfan", "maximal cones of the GIT-fan up to symmetry");
  add_source(gitfan, common);
  add_compute(gitfan, common);
  gitfan->add_flag("--plain", fan.plain, "enumerate every maximal cone without symmetry");
  gitfan->add_flag("--restrict-moving", fan.restrict_moving, "traverse only the moving cone");
  gitfan->add_option("--checkpoint", fan.checkpoint, "checkpoint file");
  gitfan->add_option("--checkpoint-every", fan.checkpoint_every, "write the checkpoint every N facets");
  gitfan->add_flag("--resume", fan.resume, "continue from the checkpoint");
  auto* stop_opt = gitfan->add_option("--stop-after", stop_after, "stop after N facets (writes the checkpoint)");
  gitfan->add_option("--output", fan.output, "result JSON file (- for stdout)");
  gitfan->add_option("--dot", fan.dot, "orbit adjacency graph in DOT (- for stdout)");
  gitfan->add_flag("--no-rays", fan.no_rays, "skip ray computations");
  gitfan->add_flag("--i-know-this-is-huge", fan.huge, "allow problems far beyond desk scale");

  bool mov_json = false;
  bool mov_rays = false;
  auto* movingcone = app.add_subcommand("movingcone", "moving cone of the grading");
  add_source(movingcone, common);
  movingcone->add_flag("--json", mov_json, "print the cone as JSON");
  movingcone->add_flag("--rays", mov_rays, "also enumerate rays");

  std::string cone_path;
  auto* dual = app.add_subcommand("dual", "dual of a cone given as JSON");
  dual->add_option("cone", cone_path, "cone JSON file")->required();

  std::string raw_source = "@m06raw";
  std::string m06_output = "m06.json";
  auto* build = app.add_subcommand("build-m06", "saturate the raw M06 ideal and write the m06 problem file");
  build->add_option("--source", raw_source, "raw problem");
  build->add_option("--output", m06_output, "output problem file");

  std::string dataset_name;
  bool dataset_digest = false;
  bool dataset_list = false;
  auto* dataset = app.add_subcommand("dataset", "print a bundled dataset");
  dataset->add_option("name", dataset_name, "cube, g25 or m06raw");
  dataset->add_flag("--digest", dataset_digest, "print the digest instead");
  dataset->add_flag("--list", dataset_list, "list datasets with digests");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  if (*stop_opt) fan.stop_after = stop_after;

  try {
    if (*validate) return cmd_validate(common, deep);
    if (*afaces) return cmd_afaces(common);
    if (*orbitcones) return cmd_orbitcones(common);
    if (*gitfan) return cmd_gitfan(common, fan);
    if (*movingcone) return cmd_movingcone(common, mov_json, mov_rays);
    if (*dual) return cmd_dual(cone_path);
    if (*build) return cmd_build_m06(raw_source, m06_output);
    if (*dataset) return cmd_dataset(dataset_name, dataset_digest, dataset_list);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kValidation;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}
