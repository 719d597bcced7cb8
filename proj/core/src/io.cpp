#include "gitfan/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gitfan/lp.hpp"

namespace gitfan::io {

namespace detail {
std::string_view embedded_dataset(std::string_view name);
}

namespace {

using json = nlohmann::ordered_json;
using VK = ValidationError::Kind;

// Byte offset to 1-based line and column.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the offset one past the offending byte.
    const auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON", line, col);
  }
}

[[noreturn]] void shape(const std::string& what) { throw ValidationError(VK::Shape, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) shape(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Integer json_integer(const json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) shape("bad integer \"" + v.get<std::string>() + "\"");
    return out;
  }
  shape("expected an integer, got " + v.dump());
}

Rational json_rational(const json& v) {
  if (v.is_string()) {
    Rational out;
    if (out.set_str(v.get<std::string>(), 10) != 0) shape("bad rational \"" + v.get<std::string>() + "\"");
    out.canonicalize();
    return out;
  }
  return Rational(json_integer(v));
}

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json vector_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

json vectors_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

json rational_vector_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.get_den() == 1) {
      a.push_back(integer_json(x.get_num()));
    } else {
      a.push_back(x.get_str());
    }
  }
  return a;
}

std::vector<IntVector> json_vectors(const json& a, const char* what) {
  if (!a.is_array()) shape(std::string(what) + " must be an array of rows");
  std::vector<IntVector> out;
  for (const auto& row : a) {
    if (!row.is_array()) shape(std::string(what) + " must be an array of rows");
    IntVector v;
    for (const auto& x : row) v.push_back(json_integer(x));
    out.push_back(std::move(v));
  }
  return out;
}

std::string method_name(AfaceMethod m) {
  switch (m) {
    case AfaceMethod::Fast:
      return "fast";
    case AfaceMethod::Sat:
      return "sat";
    case AfaceMethod::Rabinowitsch:
      return "ra";
  }
  return "fast";
}

AfaceMethod parse_method(const std::string& s) {
  if (s == "fast") return AfaceMethod::Fast;
  if (s == "sat") return AfaceMethod::Sat;
  if (s == "ra") return AfaceMethod::Rabinowitsch;
  shape("unknown method \"" + s + "\" (expected fast, sat or ra)");
}

QVector parse_sign_vector(const json& v, std::size_t r) {
  if (v.is_string()) return expand_run_length(v.get<std::string>(), r);
  if (!v.is_array()) throw ValidationError(VK::BadSigns, "sign vector must be an array or a run-length string");
  QVector out;
  for (const auto& x : v) out.push_back(json_rational(x));
  if (out.size() != r) {
    throw ValidationError(VK::BadSigns, "sign vector has " + std::to_string(out.size()) + " entries, expected " +
                                            std::to_string(r));
  }
  return out;
}

// Validations that need the parsed pieces.
void validate(ProblemSpec& s, const ParseOptions& opts) {
  const std::size_t r = s.vars.size();
  if (r == 0) shape("no variables");
  if (r > 64) shape("at most 64 variables are supported");
  {
    std::set<std::string> seen(s.vars.begin(), s.vars.end());
    if (seen.size() != r) shape("duplicate variable names");
  }
  if (s.q.rows() == 0) shape("Q has no rows");
  if (s.q.cols() != r) {
    shape("Q has " + std::to_string(s.q.cols()) + " columns but there are " + std::to_string(r) + " variables");
  }
  if (rank(s.q) != s.q.rows()) {
    throw ValidationError(VK::FullRank, "Q has rank " + std::to_string(rank(s.q)) + " < " +
                                            std::to_string(s.q.rows()) + " rows");
  }

  s.ring = make_ring(s.vars);
  s.generators.clear();
  for (std::size_t i = 0; i < s.ideal_source.size(); ++i) {
    Polynomial f;
    try {
      f = parse_polynomial(s.ideal_source[i], s.ring);
    } catch (const ParseError& e) {
      throw ParseError("ideal[" + std::to_string(i) + "]: " + s.ideal_source[i] + ":", e.line(), e.column());
    }
    if (f.is_zero()) continue;
    if (f.size() == 1) {
      throw ValidationError(VK::MonomialGenerator, "ideal[" + std::to_string(i) + "] is a monomial");
    }
    const IntVector d = multidegree(f.terms().front().m, s.q);
    for (const auto& t : f.terms()) {
      if (multidegree(t.m, s.q) != d) {
        throw ValidationError(VK::NotHomogeneous, "ideal[" + std::to_string(i) + "] is not Q-homogeneous");
      }
    }
    s.generators.push_back(std::move(f));
  }

  std::size_t total = 0;
  for (const auto& [name, count] : s.parts) total += count;
  if (!s.parts.empty() && total != s.ideal_source.size()) {
    throw ValidationError(VK::DataLength, "parts cover " + std::to_string(total) + " of " +
                                              std::to_string(s.ideal_source.size()) + " generators");
  }

  if (!s.signs.empty() && s.signs.size() != s.perms.size()) {
    throw ValidationError(VK::BadSigns, "expected one sign vector per permutation");
  }
  std::vector<SignedPermutation> gens;
  for (std::size_t i = 0; i < s.perms.size(); ++i) {
    SignedPermutation p = parse_permutation(s.perms[i], r);
    if (!s.signs.empty()) p = with_signs(std::move(p), s.signs[i]);
    gens.push_back(std::move(p));
  }
  s.group = SymmetryGroup(gens, r);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      (void)induced_matrix(gens[i], s.q);
    } catch (const ComputationError&) {
      throw ValidationError(VK::NotASymmetry, "permutation " + s.perms[i] + " is not compatible with Q");
    }
  }
  if (!s.options.raw && !gens.empty() && !verify_ideal_invariance(s.group, s.ideal())) {
    throw ValidationError(VK::NotInvariant, "the ideal is not invariant under the group");
  }
  if (opts.deep && !is_aface(s.ideal(), FaceIndexSet::full(r))) {
    throw ValidationError(VK::ContainsMonomial, "the ideal contains a monomial");
  }
}

}  // namespace

std::vector<Polynomial> ProblemSpec::part(const std::string& name) const {
  std::size_t start = 0;
  for (const auto& [n, count] : parts) {
    if (n == name) {
      std::vector<Polynomial> out;
      for (std::size_t i = start; i < start + count; ++i) {
        out.push_back(parse_polynomial(ideal_source[i], ring));
      }
      return out;
    }
    start += count;
  }
  throw ValidationError(VK::Shape, "no generator block named \"" + name + "\"");
}

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  return a.name == b.name && a.vars == b.vars && a.ideal_source == b.ideal_source && a.q == b.q &&
         a.perms == b.perms && a.signs == b.signs && a.parts == b.parts && a.options == b.options;
}

QVector expand_run_length(std::string_view text, std::size_t expected) {
  QVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw ValidationError(VK::BadSigns, "empty entry in run-length signs");
    std::size_t times = 1;
    const auto caret = item.find('^');
    std::string value = item.substr(0, caret);
    if (caret != std::string::npos) {
      const std::string count = item.substr(caret + 1);
      if (count.empty() || !std::all_of(count.begin(), count.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ValidationError(VK::BadSigns, "bad repeat count in \"" + item + "\"");
      }
      times = std::stoul(count);
    }
    Rational v;
    if (v.set_str(value, 10) != 0) throw ValidationError(VK::BadSigns, "bad sign \"" + value + "\"");
    v.canonicalize();
    out.insert(out.end(), times, v);
    pos = end + 1;
  }
  if (out.size() != expected) {
    throw ValidationError(VK::DataLength, "run-length signs expand to " + std::to_string(out.size()) +
                                              " entries, expected " + std::to_string(expected));
  }
  return out;
}

ProblemSpec parse_problem(std::string_view text, const ParseOptions& opts) {
  const json j = parse_json(text);
  if (!j.is_object()) shape("problem must be a JSON object");
  ProblemSpec s;
  try {
    if (j.contains("name")) s.name = j.at("name").get<std::string>();
    for (const auto& v : field(j, "vars")) s.vars.push_back(v.get<std::string>());
    for (const auto& f : field(j, "ideal")) s.ideal_source.push_back(f.get<std::string>());
  } catch (const json::type_error& e) {
    shape(std::string("wrong field type: ") + e.what());
  }
  const auto rows = json_vectors(field(j, "Q"), "Q");
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) shape("Q has rows of different length");
  }
  s.q = IntMatrix::from_rows(rows);

  if (j.contains("group")) {
    const json& g = j.at("group");
    if (g.contains("perms")) {
      for (const auto& p : g.at("perms")) {
        if (!p.is_string()) throw ValidationError(VK::BadPermutation, "permutations are cycle strings");
        s.perms.push_back(p.get<std::string>());
      }
    }
    if (g.contains("signs")) {
      for (const auto& v : g.at("signs")) s.signs.push_back(parse_sign_vector(v, s.vars.size()));
    }
  }
  if (j.contains("parts")) {
    for (const auto& [name, count] : j.at("parts").items()) {
      if (!count.is_number_unsigned()) shape("part sizes must be nonnegative integers");
      s.parts.emplace_back(name, count.get<std::size_t>());
    }
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    if (!o.is_object()) shape("options must be an object");
    for (const auto& [key, v] : o.items()) {
      try {
        if (key == "restrict_moving") {
          s.options.restrict_moving = v.get<bool>();
        } else if (key == "method") {
          s.options.method = parse_method(v.get<std::string>());
        } else if (key == "threads") {
          s.options.threads = v.get<std::size_t>();
        } else if (key == "checkpoint") {
          s.options.checkpoint = v.get<std::string>();
        } else if (key == "raw") {
          s.options.raw = v.get<bool>();
        } else {
          shape("unknown option \"" + key + "\"");
        }
      } catch (const json::type_error&) {
        shape("option \"" + key + "\" has the wrong type");
      }
    }
  }
  validate(s, opts);
  return s;
}

std::string emit_problem(const ProblemSpec& s) {
  json j;
  j["name"] = s.name;
  j["vars"] = s.vars;
  j["ideal"] = s.ideal_source;
  json q = json::array();
  for (std::size_t i = 0; i < s.q.rows(); ++i) q.push_back(vector_json(s.q.row(i)));
  j["Q"] = q;
  json g = json::object();
  g["perms"] = s.perms;
  if (!s.signs.empty()) {
    json signs = json::array();
    for (const auto& v : s.signs) signs.push_back(rational_vector_json(v));
    g["signs"] = signs;
  }
  j["group"] = g;
  if (!s.parts.empty()) {
    json parts = json::object();
    for (const auto& [name, count] : s.parts) parts[name] = count;
    j["parts"] = parts;
  }
  json o = json::object();
  const ProblemOptions d;
  if (s.options.restrict_moving != d.restrict_moving) o["restrict_moving"] = s.options.restrict_moving;
  if (s.options.method != d.method) o["method"] = method_name(s.options.method);
  if (s.options.threads != d.threads) o["threads"] = s.options.threads;
  if (s.options.checkpoint != d.checkpoint) o["checkpoint"] = s.options.checkpoint;
  if (s.options.raw != d.raw) o["raw"] = s.options.raw;
  j["options"] = o;
  return j.dump(2) + "\n";
}

// ---- datasets ---------------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::uint64_t d) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
  return buf;
}

const std::vector<DatasetInfo>& datasets() {
  static const std::vector<DatasetInfo> all = {
      {"cube", detail::embedded_dataset("cube"), 0xbca5035847451873ULL},
      {"g25", detail::embedded_dataset("g25"), 0x5ec9d0c3547edcd1ULL},
      {"m06raw", detail::embedded_dataset("m06raw"), 0x47d4f90876a4ce40ULL},
  };
  return all;
}

const DatasetInfo* find_dataset(std::string_view name) {
  for (const auto& d : datasets()) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

ProblemSpec load_dataset(std::string_view name, const ParseOptions& opts) {
  const DatasetInfo* d = find_dataset(name);
  if (d == nullptr) throw ValidationError(VK::Shape, "unknown dataset \"" + std::string(name) + "\"");
  if (fnv1a64(d->text) != d->digest) {
    throw ValidationError(VK::Digest, "dataset " + d->name + " has digest " + digest_hex(fnv1a64(d->text)) +
                                          ", expected " + digest_hex(d->digest));
  }
  return parse_problem(d->text, opts);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(VK::Shape, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ProblemSpec load_problem(const std::string& source, const ParseOptions& opts) {
  if (source.starts_with('@')) return load_dataset(source.substr(1), opts);
  return parse_problem(read_file(source), opts);
}

std::string source_digest(const std::string& source) {
  if (source.starts_with('@')) {
    const DatasetInfo* d = find_dataset(source.substr(1));
    if (d == nullptr) throw ValidationError(VK::Shape, "unknown dataset \"" + source.substr(1) + "\"");
    return digest_hex(fnv1a64(d->text));
  }
  return digest_hex(fnv1a64(read_file(source)));
}

// ---- M06 -----------------------------------------------------------------------------------

std::vector<std::string> m06_i1_formula() {
  static constexpr std::array<std::array<int, 6>, 6> tuples = {{
      {1, 2, 3, 4, 5, 6},
      {1, 2, 3, 5, 4, 6},
      {1, 2, 3, 6, 4, 5},
      {1, 2, 4, 5, 3, 6},
      {1, 2, 4, 6, 3, 5},
      {1, 2, 5, 6, 3, 4},
  }};
  auto x = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return "x" + std::to_string(a) + std::to_string(b);
  };
  // z variables are indexed by 3-subsets of {1..6} up to complement; the
  // representative contains 1.
  auto z = [](int a, int b, int c) {
    std::array<int, 3> s = {a, b, c};
    std::sort(s.begin(), s.end());
    if (s[0] != 1) {
      std::array<int, 3> t{};
      std::size_t n = 0;
      for (int v = 1; v <= 6; ++v) {
        if (v != s[0] && v != s[1] && v != s[2]) t[n++] = v;
      }
      s = t;
    }
    return "z" + std::to_string(s[0]) + std::to_string(s[1]) + std::to_string(s[2]);
  };
  std::vector<std::string> out;
  for (const auto& t : tuples) {
    const int i = t[0], j = t[1], k = t[2], l = t[3], n = t[5];
    out.push_back(x(i, j) + "*" + x(k, l) + "*" + z(i, j, n) + "*" + z(k, l, n) + " - " + x(i, k) + "*" + x(j, l) +
                  "*" + z(i, k, n) + "*" + z(j, l, n) + " + " + x(i, l) + "*" + x(j, k) + "*" + z(i, l, n) + "*" +
                  z(j, k, n));
  }
  return out;
}

namespace {

// Variable weights u.q_j >= 1 for some u; the grading makes every
// Q-homogeneous ideal homogeneous for them.
QVector positive_grading_weight(const IntMatrix& q) {
  lp::Problem p;
  p.nvars = q.rows();
  p.free.assign(q.rows(), true);
  for (std::size_t j = 0; j < q.cols(); ++j) {
    p.rows.push_back({to_rational(q.col(j)), lp::Sense::GreaterEq, Rational(1)});
  }
  p.objective = QVector(q.rows(), Rational(0));
  p.maximize = false;
  const lp::Result res = lp::solve(p);
  if (res.status != lp::Status::Optimal) {
    throw ComputationError(ComputationError::Kind::NonPositiveWeight, "the grading has no positive weight");
  }
  QVector w(q.cols());
  for (std::size_t j = 0; j < q.cols(); ++j) w[j] = dot(q.col(j), res.x);
  return w;
}

}  // namespace

std::vector<Polynomial> build_m06_ideal(const ProblemSpec& raw, const M06BuildOptions& opts) {
  const QVector w = positive_grading_weight(raw.q);
  std::vector<std::size_t> all(raw.r());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto log = [&](const std::string& msg) {
    if (opts.verbose) std::cerr << "build-m06: " << msg << std::endl;
  };

  const auto i1 = saturate_product(Ideal(raw.ring, raw.part("I1")), all, w);
  log("I1 saturated, " + std::to_string(i1.size()) + " generators");
  const auto i2 = saturate_product(Ideal(raw.ring, raw.part("I2")), all, w);
  log("I2 saturated, " + std::to_string(i2.size()) + " generators");

  // The product of all variables is G-invariant up to sign, so G applied to
  // the saturation of I2 generates the saturation of G.I2.
  const MonomialOrder ord = MonomialOrder::weighted(w);
  std::vector<Polynomial> sum = i1;
  std::set<std::string> seen;
  for (const auto& f : i1) seen.insert(f.primitive(ord).to_string(ord));
  for (const auto& g : raw.group.elements()) {
    for (const auto& f : i2) {
      Polynomial h = act_on_polynomial(g, f).primitive(ord);
      if (seen.insert(h.to_string(ord)).second) sum.push_back(std::move(h));
    }
  }
  log("sum has " + std::to_string(sum.size()) + " generators");
  auto out = saturate_product(Ideal(raw.ring, sum), all, w);
  log("saturated sum, " + std::to_string(out.size()) + " generators");
  return out;
}

// ---- output ------------------------------------------------------------------------------

namespace {

json cone_json(const Cone& c, bool with_rays) {
  json j;
  if (with_rays) {
    j["rays"] = vectors_json(c.rays());
    j["lineality"] = vectors_json(c.lineality());
  }
  j["inequalities"] = vectors_json(c.inequalities());
  j["equations"] = vectors_json(c.equations());
  return j;
}

}  // namespace

std::string emit_cone_json(const Cone& c, bool with_rays) { return cone_json(c, with_rays).dump(2) + "\n"; }

Cone parse_cone_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) shape("cone must be a JSON object");
  auto dim_of = [](const std::vector<IntVector>& vs, std::size_t& dim) {
    for (const auto& v : vs) {
      if (dim == 0) dim = v.size();
      if (v.size() != dim) shape("cone vectors of different length");
    }
  };
  std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : 0;
  if (j.contains("rays") || j.contains("lineality")) {
    auto rays = j.contains("rays") ? json_vectors(j.at("rays"), "rays") : std::vector<IntVector>{};
    auto lin = j.contains("lineality") ? json_vectors(j.at("lineality"), "lineality") : std::vector<IntVector>{};
    dim_of(rays, dim);
    dim_of(lin, dim);
    if (dim == 0) shape("cannot infer the dimension; add \"dim\"");
    return Cone::from_rays(dim, std::move(rays), std::move(lin));
  }
  auto ineqs = j.contains("inequalities") ? json_vectors(j.at("inequalities"), "inequalities") : std::vector<IntVector>{};
  auto eqs = j.contains("equations") ? json_vectors(j.at("equations"), "equations") : std::vector<IntVector>{};
  dim_of(ineqs, dim);
  dim_of(eqs, dim);
  if (dim == 0) shape("cannot infer the dimension; add \"dim\"");
  return Cone::from_inequalities(dim, std::move(ineqs), std::move(eqs));
}

std::string emit_result_json(const GitFanResult& result, const ResultMeta& meta, bool with_rays) {
  json j;
  j["format"] = "gitfan-result";
  j["version"] = 1;
  j["dataset"] = meta.dataset;
  j["mode"] = meta.mode;
  j["restricted"] = meta.restricted;
  j["complete"] = result.complete;
  j["support"] = cone_json(result.support, with_rays);
  j["orbit_lengths"] = result.orbit_lengths;
  j["total_cones"] = result.stats.total_cones;
  json reps = json::array();
  for (std::size_t i = 0; i < result.representatives.size(); ++i) {
    json r;
    r["orbit_length"] = result.orbit_lengths[i];
    r["hash"] = result.hashes[i].get_str();
    r["interior_point"] = rational_vector_json(result.interior_points[i]);
    r["cone"] = cone_json(result.representatives[i], with_rays);
    reps.push_back(std::move(r));
  }
  j["representatives"] = reps;
  json adj = json::array();
  for (const auto& e : result.adjacency) adj.push_back({{"from", e.from}, {"to", e.to}, {"count", e.count}});
  j["adjacency"] = adj;
  json st;
  st["facets_processed"] = result.stats.facets_processed;
  st["neighbors_computed"] = result.stats.neighbors_computed;
  if (result.stats.fan_rays) st["fan_rays"] = *result.stats.fan_rays;
  json hist = json::object();
  for (const auto& [len, count] : result.stats.orbit_length_histogram) hist[std::to_string(len)] = count;
  st["orbit_length_histogram"] = hist;
  j["statistics"] = st;
  return j.dump(2) + "\n";
}

std::string emit_dot(const OrbitGraph& graph) {
  std::ostringstream out;
  out << "graph gitfan {\n";
  for (std::size_t i = 0; i < graph.orbit_lengths.size(); ++i) {
    out << "  o" << i << " [label=\"" << graph.orbit_lengths[i] << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  o" << e.from << " -- o" << e.to << " [label=\"" << e.count << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gitfan::io
