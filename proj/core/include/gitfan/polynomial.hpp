#pragma once

// Multivariate polynomials over Q, monomial orderings and orthant-face index sets.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gitfan/core_math.hpp"
#include "gitfan/error.hpp"

namespace gitfan {

/// Variable names of a polynomial ring. Variables are indexed from 0.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  [[nodiscard]] std::size_t nvars() const { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_[i]; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  /// Index of a named variable, or nvars() if absent.
  [[nodiscard]] std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// Ring with variables named T1..Tr.
RingPtr make_ring(std::size_t nvars);
/// Copy of the ring with one more variable appended.
RingPtr extend_ring(const RingPtr& ring, const std::string& name);

/// Exponent vector. `mask` has bit i set when variable i (i < 64) occurs.
struct Monomial {
  std::vector<std::uint32_t> e;
  std::uint64_t mask = 0;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1);

  [[nodiscard]] std::size_t size() const { return e.size(); }
  [[nodiscard]] bool is_one() const { return mask == 0 && total_degree() == 0; }
  [[nodiscard]] std::uint64_t total_degree() const;
  void update_mask();

  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e <=> b.e; }
};

/// Global monomial ordering: integer weight rows compared lexicographically
/// (higher weighted degree is larger), then a negative reverse lexicographic
/// tie-breaker: scanning the tie-break sequence from its last entry, the first
/// variable with differing exponents decides and the smaller exponent wins.
///
/// The last weight row must be strictly positive, which makes the ordering a
/// well-ordering with every non-constant monomial greater than 1.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<std::vector<std::int64_t>> rows, std::vector<std::size_t> tiebreak);

  /// w-weighted degree ordering with tie-break sequence `tiebreak` (a
  /// permutation of 0..n-1). Rational weights are scaled to integers.
  /// Throws ComputationError(NonPositiveWeight) unless every weight is > 0.
  static MonomialOrder weighted(const QVector& w, std::vector<std::size_t> tiebreak);
  /// Weighted ordering with ascending tie-break sequence 0..n-1.
  static MonomialOrder weighted(const QVector& w);
  /// Standard-degree ordering with ascending tie-break sequence.
  static MonomialOrder degrevlex(std::size_t n);

  [[nodiscard]] std::size_t nvars() const { return tiebreak_.size(); }
  [[nodiscard]] const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& tiebreak() const { return tiebreak_; }

  /// Negative, zero or positive as a <, =, > b.
  [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const;
  [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Stable textual description used to tag cached Groebner bases.
  [[nodiscard]] std::string key() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.rows_ == b.rows_ && a.tiebreak_ == b.tiebreak_;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> tiebreak_;
};

struct Term {
  Monomial m;
  Rational c;
};

/// Polynomial over Q. Terms are stored with nonzero coefficients, sorted by
/// descending exponent vector (a fixed storage order independent of any
/// monomial ordering); use `sorted_terms` for an ordering-specific view.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] std::vector<Term> sorted_terms(const MonomialOrder& ord) const;
  [[nodiscard]] Term leading_term(const MonomialOrder& ord) const;

  /// Rescaled so the leading coefficient under `ord` is 1.
  [[nodiscard]] Polynomial monic(const MonomialOrder& ord) const;
  /// Rescaled to integer coefficients with gcd 1 and positive leading
  /// coefficient under `ord`.
  [[nodiscard]] Polynomial primitive(const MonomialOrder& ord) const;

  /// Substitute 0 for every variable outside `keep` (bit i = variable i).
  [[nodiscard]] Polynomial restrict(std::uint64_t keep) const;
  /// Substitute T_j -> c_j * T_{perm[j]} (0-based perm).
  [[nodiscard]] Polynomial substitute(const std::vector<std::size_t>& perm, const QVector& c) const;
  /// Same polynomial viewed in a ring with more variables (appended at the end).
  [[nodiscard]] Polynomial embed(const RingPtr& bigger) const;
  /// Drop trailing variables; requires that they do not occur.
  [[nodiscard]] Polynomial project(const RingPtr& smaller) const;
  /// Exact division by a monomial dividing every term.
  [[nodiscard]] Polynomial divide(const Monomial& m) const;
  /// Largest monomial dividing every term, restricted to the variables in `vars`.
  [[nodiscard]] Monomial monomial_content(std::uint64_t vars) const;

  /// Canonical text: terms in descending `ord` order, reduced fractions.
  [[nodiscard]] std::string to_string(const MonomialOrder& ord) const;
  /// Text under the standard-degree ordering.
  [[nodiscard]] std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  [[nodiscard]] Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parse a polynomial. Variables are ring names or `T(i)` for the i-th
/// (1-based) variable; operators + - * ^ and parentheses; integer
/// coefficients; implicit multiplication is rejected.
/// Throws ParseError with 1-based positions relative to `text`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Q-degree of a monomial: sum of exponent_i * column_i.
IntVector multidegree(const Monomial& m, const IntMatrix& q);

/// Subset of {1,...,r} as a bitset; index i is stored in bit i-1. r <= 64.
class FaceIndexSet {
 public:
  FaceIndexSet() = default;
  explicit FaceIndexSet(std::uint64_t bits) : bits_(bits) {}
  /// From 1-based indices.
  static FaceIndexSet from_indices(const std::vector<std::size_t>& one_based);
  static FaceIndexSet full(std::size_t r);

  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  /// Membership of the 1-based index i.
  [[nodiscard]] bool contains(std::size_t i) const { return (bits_ >> (i - 1)) & 1U; }
  [[nodiscard]] std::size_t size() const;
  /// Sorted 1-based indices.
  [[nodiscard]] std::vector<std::size_t> indices() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(FaceIndexSet a, FaceIndexSet b) { return a.bits_ == b.bits_; }
  friend auto operator<=>(FaceIndexSet a, FaceIndexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace gitfan
