#include "gitfan/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "gitfan/error.hpp"

namespace gitfan {

SignedPermutation SignedPermutation::identity(std::size_t r) {
  SignedPermutation s;
  s.perm.resize(r);
  for (std::size_t i = 0; i < r; ++i) s.perm[i] = i;
  s.signs.assign(r, Rational(1));
  return s;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != i || signs[i] != 1) return false;
  }
  return true;
}

std::uint64_t SignedPermutation::apply_mask(std::uint64_t mask) const {
  std::uint64_t out = 0;
  while (mask != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    mask &= mask - 1;
    out |= std::uint64_t{1} << perm[i];
  }
  return out;
}

FaceIndexSet SignedPermutation::apply(FaceIndexSet s) const { return FaceIndexSet(apply_mask(s.bits())); }

std::string SignedPermutation::cycles() const {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.perm != b.perm) return a.perm < b.perm;
  for (std::size_t i = 0; i < a.signs.size() && i < b.signs.size(); ++i) {
    if (a.signs[i] != b.signs[i]) return a.signs[i] < b.signs[i];
  }
  return a.signs.size() < b.signs.size();
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: permutations of different degree");
  SignedPermutation out;
  out.perm.resize(a.size());
  out.signs.resize(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out.perm[j] = a.perm[b.perm[j]];
    out.signs[j] = b.signs[j] * a.signs[b.perm[j]];
  }
  return out;
}

SignedPermutation inverse(const SignedPermutation& s) {
  SignedPermutation out;
  out.perm.resize(s.size());
  out.signs.resize(s.size());
  // s(T_j) = c_j T_{s(j)}, so s^{-1}(T_{s(j)}) = T_j / c_j.
  for (std::size_t j = 0; j < s.size(); ++j) {
    out.perm[s.perm[j]] = j;
    out.signs[s.perm[j]] = 1 / s.signs[j];
  }
  return out;
}

SignedPermutation parse_permutation(std::string_view text, std::size_t r) {
  using Kind = ValidationError::Kind;
  SignedPermutation s = SignedPermutation::identity(r);
  std::vector<bool> used(r, false);
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& why) {
    throw ValidationError(Kind::BadPermutation, "permutation '" + std::string(text) + "': " + why);
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    skip();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip();
      continue;
    }
    for (;;) {
      skip();
      std::size_t v = 0;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > r) fail("index out of range");
        ++pos;
      }
      if (pos == start) fail("expected an index");
      if (v == 0 || v > r) fail("index out of range");
      if (used[v - 1]) fail("index " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) s.perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return s;
}

SignedPermutation with_signs(SignedPermutation s, const QVector& signs) {
  if (signs.size() != s.size()) {
    throw ValidationError(ValidationError::Kind::BadSigns, "sign vector has length " + std::to_string(signs.size()) +
                                                               ", expected " + std::to_string(s.size()));
  }
  for (const auto& c : signs) {
    if (c == 0) throw ValidationError(ValidationError::Kind::BadSigns, "sign vector has a zero entry");
  }
  s.signs = signs;
  return s;
}

SymmetryGroup::SymmetryGroup(std::vector<SignedPermutation> generators, std::size_t r, std::size_t bound)
    : r_(r), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != r) throw std::invalid_argument("SymmetryGroup: generator of wrong degree");
  }
  std::set<SignedPermutation> seen;
  std::deque<std::size_t> queue;
  elements_.push_back(SignedPermutation::identity(r));
  seen.insert(elements_.front());
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      SignedPermutation p = compose(g, elements_[i]);
      if (seen.contains(p)) continue;
      if (elements_.size() >= bound) {
        throw ComputationError(ComputationError::Kind::BoundExceeded,
                               "group closure exceeds " + std::to_string(bound) + " elements");
      }
      seen.insert(p);
      elements_.push_back(std::move(p));
      queue.push_back(elements_.size() - 1);
    }
  }
  sorted_.resize(elements_.size());
  for (std::size_t i = 0; i < sorted_.size(); ++i) sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
}

std::size_t SymmetryGroup::index_of(const SignedPermutation& s) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), s,
                             [&](std::size_t a, const SignedPermutation& v) { return elements_[a] < v; });
  if (it != sorted_.end() && elements_[*it] == s) return *it;
  return elements_.size();
}

SymmetryGroup group_closure(std::vector<SignedPermutation> generators, std::size_t r, std::size_t bound) {
  return SymmetryGroup(std::move(generators), r, bound);
}

QMatrix induced_matrix(const SignedPermutation& s, const IntMatrix& q) {
  if (s.size() != q.cols()) throw std::invalid_argument("induced_matrix: degree differs from the number of columns");
  QMatrix qq = to_rational(q);
  QMatrix b(q.rows(), q.cols());
  for (std::size_t j = 0; j < q.cols(); ++j)
    for (std::size_t i = 0; i < q.rows(); ++i) b(i, j) = qq(i, s.perm[j]);
  std::optional<QMatrix> a;
  try {
    a = solve_right(qq, b);
  } catch (const std::invalid_argument&) {
    throw ValidationError(ValidationError::Kind::FullRank, "grading matrix is not of full row rank");
  }
  if (!a) {
    throw ComputationError(ComputationError::Kind::NotASymmetry,
                           "permutation " + s.cycles() + " does not map ker(Q) into itself");
  }
  return *a;
}

std::vector<QMatrix> induced_matrices(const SymmetryGroup& g, const IntMatrix& q) {
  std::vector<QMatrix> out;
  out.reserve(g.size());
  for (const auto& s : g.elements()) out.push_back(induced_matrix(s, q));
  return out;
}

Polynomial act_on_polynomial(const SignedPermutation& s, const Polynomial& f) { return f.substitute(s.perm, s.signs); }

Ideal act_on_ideal(const SignedPermutation& s, const Ideal& i) {
  std::vector<Polynomial> gens;
  gens.reserve(i.generators().size());
  for (const auto& f : i.generators()) gens.push_back(act_on_polynomial(s, f));
  return Ideal(i.ring(), std::move(gens));
}

bool verify_ideal_invariance(const SymmetryGroup& g, const Ideal& i) {
  for (const auto& s : g.generators()) {
    for (const auto& f : i.generators()) {
      if (!i.contains(act_on_polynomial(s, f))) return false;
    }
  }
  return true;
}

std::vector<FaceIndexSet> orbit_of_subset(const SymmetryGroup& g, FaceIndexSet s) {
  std::set<FaceIndexSet> out;
  for (const auto& e : g.elements()) out.insert(e.apply(s));
  return {out.begin(), out.end()};
}

FaceIndexSet orbit_representative(const SymmetryGroup& g, FaceIndexSet s) {
  std::uint64_t best = s.bits();
  for (const auto& e : g.elements()) best = std::min(best, e.apply_mask(s.bits()));
  return FaceIndexSet(best);
}

void for_each_subset_representative(const SymmetryGroup& g, const std::function<bool(FaceIndexSet)>& visit) {
  const std::size_t r = g.degree();
  if (r > 63) throw std::invalid_argument("subset representatives: at most 63 variables");
  const std::uint64_t end = std::uint64_t{1} << r;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    bool minimal = true;
    for (const auto& e : g.elements()) {
      if (e.apply_mask(mask) < mask) {
        minimal = false;
        break;
      }
    }
    if (minimal && !visit(FaceIndexSet(mask))) return;
  }
}

std::vector<FaceIndexSet> subset_orbit_representatives(const SymmetryGroup& g) {
  if (g.degree() > 30) {
    throw ComputationError(ComputationError::Kind::BoundExceeded,
                           "too many subsets to list; use the streaming enumeration");
  }
  std::vector<FaceIndexSet> out;
  for_each_subset_representative(g, [&](FaceIndexSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Cone> orbit_of_cone(const std::vector<QMatrix>& induced, const Cone& c) {
  std::map<std::string, Cone> seen;
  for (const auto& a : induced) {
    Cone img = act_on_cone(a, c);
    seen.emplace(img.canonical_key(), img);
  }
  std::vector<Cone> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

}  // namespace gitfan
