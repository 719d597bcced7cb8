#pragma once

// Exact rational linear programming (two-phase primal simplex, Bland's rule).

#include <span>
#include <vector>

#include "gitfan/core_math.hpp"

namespace gitfan::lp {

enum class Sense { LessEq, Equal, GreaterEq };

struct Constraint {
  QVector a;
  Sense sense = Sense::LessEq;
  Rational b;
};

struct Problem {
  std::size_t nvars = 0;
  /// Variables marked free are unrestricted; all others are >= 0.
  std::vector<bool> free;
  std::vector<Constraint> rows;
  QVector objective;
  bool maximize = true;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  QVector x;
  Rational value;
};

Result solve(const Problem& p);

/// Decides target in cone(generators). On success `lambda` holds
/// nonnegative coefficients; otherwise `certificate` is an x with
/// x . g >= 0 for every generator and x . target < 0.
struct MembershipResult {
  bool member = false;
  QVector lambda;
  QVector certificate;
};

MembershipResult cone_membership(std::span<const IntVector> generators, const QVector& target);

}  // namespace gitfan::lp
