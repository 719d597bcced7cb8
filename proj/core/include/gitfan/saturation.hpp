#pragma once

// Saturation at products of variables and the a-face test.

#include <cstdint>
#include <vector>

#include "gitfan/groebner.hpp"

namespace gitfan {

/// Given a Groebner basis G with Y_m | f <=> Y_m | LM(f) for all f in G,
/// returns {f / Y_m^i : i maximal}, a Groebner basis of I : Y_m^inf.
/// `m` is 0-based. Throws ComputationError(HypothesisViolated).
std::vector<Polynomial> saturate_variable(const std::vector<Polynomial>& g, std::size_t m, const MonomialOrder& ord);

struct SaturationOptions {
  /// Run the first pass for every variable concurrently and keep the order
  /// of the fastest one. Off by default for reproducible output.
  bool heuristic_order = false;
  /// Stop once a constant appears (enough to decide unit saturation).
  bool stop_on_unit = false;
};

/// Saturation of a w-homogeneous ideal at the product of the given variables
/// by the pass-per-variable modified Buchberger algorithm. Returns a reduced
/// Groebner basis for the ordering of the final pass.
/// Throws ComputationError(NotHomogeneous / NonPositiveWeight).
std::vector<Polynomial> saturate_product(const Ideal& ideal, const std::vector<std::size_t>& vars, const QVector& w,
                                         const SaturationOptions& opts = {});
/// Saturation at the product of the first m variables.
std::vector<Polynomial> saturate_product(const Ideal& ideal, std::size_t m, const QVector& w,
                                         const SaturationOptions& opts = {});

/// Ordering of the final pass of saturate_product: w-weighted with the
/// tie-break sequence that places the last saturated variable last.
MonomialOrder final_saturation_order(const QVector& w, const std::vector<std::size_t>& vars);

/// I : (prod vars)^inf by repeated ideal quotients (elimination of an
/// auxiliary variable) until the ideal stabilizes.
Ideal saturate_iterated_quotient(const Ideal& ideal, FaceIndexSet vars);

/// I : f for a polynomial f, via I cap <f> computed by elimination.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);

/// True iff prod vars lies in the radical of I, i.e. 1 in I + <1 - t prod vars>.
bool contains_monomial_rabinowitsch(const Ideal& ideal, FaceIndexSet vars);

/// Generators with every variable outside the face set to zero; zero
/// generators are dropped.
Ideal restrict_to_face(const Ideal& ideal, FaceIndexSet face);

/// True iff every generator is homogeneous for the grading by the columns of Q.
bool is_homogeneous(const Ideal& ideal, const IntMatrix& q);
/// Same for a weight vector (a 1 x r grading).
bool is_homogeneous(const Ideal& ideal, const QVector& w);

enum class AfaceMethod { Fast, Sat, Rabinowitsch };

/// Strictly positive weight w on the face variables with every restricted
/// generator w-homogeneous; empty when none exists. Entries outside the face
/// are set to 1.
std::optional<QVector> positive_face_weight(const Ideal& restricted, FaceIndexSet face);

/// 1 not in I_face : (prod face vars)^inf.
bool is_aface(const Ideal& ideal, FaceIndexSet face, AfaceMethod method = AfaceMethod::Fast);

}  // namespace gitfan
