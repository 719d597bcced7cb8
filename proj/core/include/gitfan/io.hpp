#pragma once

// Problem files, bundled datasets and result serialization.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gitfan/gitfan.hpp"

namespace gitfan::io {

struct ProblemOptions {
  bool restrict_moving = false;
  AfaceMethod method = AfaceMethod::Fast;
  std::size_t threads = 1;
  std::string checkpoint;
  /// The ideal is construction input (not saturated, not G-invariant);
  /// validation skips the invariance check.
  bool raw = false;

  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

/// Problem file:
///   {"name": "...", "vars": [...], "ideal": ["poly", ...], "Q": [[int]],
///    "group": {"perms": ["(1,2)(3,4)", ...], "signs": [[1,-1,...] or "1^3,-1^2", ...]},
///    "parts": {"I1": 6, ...}, "options": {...}}
/// "parts" optionally names consecutive blocks of ideal generators.
struct ProblemSpec {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> ideal_source;
  IntMatrix q;
  std::vector<std::string> perms;
  std::vector<QVector> signs;  // empty, or one vector per permutation
  std::vector<std::pair<std::string, std::size_t>> parts;
  ProblemOptions options;

  // Derived by parse_problem.
  RingPtr ring;
  std::vector<Polynomial> generators;
  SymmetryGroup group;

  [[nodiscard]] Ideal ideal() const { return Ideal(ring, generators); }
  /// Generators of a named block.
  [[nodiscard]] std::vector<Polynomial> part(const std::string& name) const;
  [[nodiscard]] std::size_t r() const { return vars.size(); }
  [[nodiscard]] std::size_t k() const { return q.rows(); }

  /// Equality of the source fields.
  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b);
};

struct ParseOptions {
  /// Also run the monomial containment test on the whole ideal.
  bool deep = false;
};

/// Parses and validates. Throws ParseError (JSON or polynomial syntax) or
/// ValidationError.
ProblemSpec parse_problem(std::string_view text, const ParseOptions& opts = {});
std::string emit_problem(const ProblemSpec& spec);

/// Expands "1^7,-1^2,1" into a vector and checks its length.
/// Throws ValidationError(DataLength).
QVector expand_run_length(std::string_view text, std::size_t expected);

// ---- bundled datasets ---------------------------------------------------------------

struct DatasetInfo {
  std::string name;
  std::string_view text;
  std::uint64_t digest;  // pinned FNV-1a 64 of the text
};

std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::uint64_t d);
const std::vector<DatasetInfo>& datasets();
/// Returns nullptr if unknown.
const DatasetInfo* find_dataset(std::string_view name);
/// Parsed dataset; checks the pinned digest first (ValidationError(Digest)).
ProblemSpec load_dataset(std::string_view name, const ParseOptions& opts = {});

/// Loads "@name" as a bundled dataset, anything else as a file path.
ProblemSpec load_problem(const std::string& source, const ParseOptions& opts = {});
/// Digest of the problem text behind a source, for checkpoints.
std::string source_digest(const std::string& source);

// ---- M06 construction -----------------------------------------------------------------

/// I_1 generators from the index tuples (x_ij x_kl z_ijn z_kln - ...).
std::vector<std::string> m06_i1_formula();

struct M06BuildOptions {
  bool verbose = false;
};
/// (I_1 + G.I_2) : (product of all variables)^infinity, saturating I_1 and I_2
/// first. Requires the m06raw dataset (parts I1 and I2).
std::vector<Polynomial> build_m06_ideal(const ProblemSpec& raw, const M06BuildOptions& opts = {});

// ---- output ---------------------------------------------------------------------

std::string emit_cone_json(const Cone& c, bool with_rays);
/// Reads {"rays", "lineality"} or {"inequalities", "equations"}.
Cone parse_cone_json(std::string_view text);

struct ResultMeta {
  std::string dataset;
  std::string mode;  // "symmetric" or "plain"
  bool restricted = false;
};
std::string emit_result_json(const GitFanResult& result, const ResultMeta& meta, bool with_rays);
std::string emit_dot(const OrbitGraph& graph);

}  // namespace gitfan::io
