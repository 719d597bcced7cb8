#pragma once

// Finite groups of signed variable permutations and their induced actions.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gitfan/cone.hpp"
#include "gitfan/core_math.hpp"
#include "gitfan/groebner.hpp"
#include "gitfan/polynomial.hpp"

namespace gitfan {

/// sigma(T_j) = signs[j] * T_{perm[j]}, indices 0-based. Acts on Q^r by
/// e_j -> e_{perm[j]}; the signs only matter for the action on polynomials.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  QVector signs;

  static SignedPermutation identity(std::size_t r);

  [[nodiscard]] std::size_t size() const { return perm.size(); }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] FaceIndexSet apply(FaceIndexSet s) const;
  [[nodiscard]] std::uint64_t apply_mask(std::uint64_t mask) const;
  /// Cycle notation with 1-based indices, "()" for the identity.
  [[nodiscard]] std::string cycles() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b);
};

/// a after b: (a b)(j) = a(b(j)), signs c_j = c^b_j * c^a_{b(j)}.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& s);

/// Parses cycle notation such as "(1,5,9,10,3)(2,7,8,4,6)" on {1..r}.
/// Throws ValidationError(BadPermutation).
SignedPermutation parse_permutation(std::string_view text, std::size_t r);
/// Attaches a sign vector; throws ValidationError(BadSigns) on a length
/// mismatch or a zero entry.
SignedPermutation with_signs(SignedPermutation s, const QVector& signs);

class SymmetryGroup {
 public:
  static constexpr std::size_t kDefaultBound = 10000;

  SymmetryGroup() = default;
  /// Closure of the generators; the identity comes first, then elements in
  /// breadth-first order. Throws ComputationError(BoundExceeded).
  SymmetryGroup(std::vector<SignedPermutation> generators, std::size_t r, std::size_t bound = kDefaultBound);

  static SymmetryGroup trivial(std::size_t r) { return SymmetryGroup({}, r); }

  [[nodiscard]] std::size_t degree() const { return r_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<SignedPermutation>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<SignedPermutation>& elements() const { return elements_; }
  [[nodiscard]] const SignedPermutation& operator[](std::size_t i) const { return elements_[i]; }
  /// Index of an element, or size() if absent.
  [[nodiscard]] std::size_t index_of(const SignedPermutation& s) const;

 private:
  std::size_t r_ = 0;
  std::vector<SignedPermutation> generators_;
  std::vector<SignedPermutation> elements_;
  std::vector<std::size_t> sorted_;  // element indices sorted by value
};

SymmetryGroup group_closure(std::vector<SignedPermutation> generators, std::size_t r,
                            std::size_t bound = SymmetryGroup::kDefaultBound);

/// A_sigma with A_sigma Q = Q P_sigma, i.e. A_sigma q_j = q_{sigma(j)}.
/// Throws ComputationError(NotASymmetry) if sigma does not preserve ker(Q).
QMatrix induced_matrix(const SignedPermutation& s, const IntMatrix& q);
/// Induced matrices of every group element, in element order.
std::vector<QMatrix> induced_matrices(const SymmetryGroup& g, const IntMatrix& q);

Polynomial act_on_polynomial(const SignedPermutation& s, const Polynomial& f);
Ideal act_on_ideal(const SignedPermutation& s, const Ideal& i);
/// Every generator image of every group generator lies in I.
bool verify_ideal_invariance(const SymmetryGroup& g, const Ideal& i);

std::vector<FaceIndexSet> orbit_of_subset(const SymmetryGroup& g, FaceIndexSet s);
/// Smallest mask in the orbit of s.
FaceIndexSet orbit_representative(const SymmetryGroup& g, FaceIndexSet s);
/// Orbit representatives of all 2^r subsets (each the smallest mask of its
/// orbit), ascending. Requires r <= 30.
std::vector<FaceIndexSet> subset_orbit_representatives(const SymmetryGroup& g);
/// Streaming variant for larger r; stops when the visitor returns false.
void for_each_subset_representative(const SymmetryGroup& g, const std::function<bool(FaceIndexSet)>& visit);

/// Orbit under the induced matrices, deduplicated by canonical key, sorted by key.
std::vector<Cone> orbit_of_cone(const std::vector<QMatrix>& induced, const Cone& c);

}  // namespace gitfan
