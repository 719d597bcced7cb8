#pragma once

// Rational polyhedral cones with lazily computed canonical H- and
// V-descriptions.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gitfan/core_math.hpp"
#include "gitfan/error.hpp"
#include "gitfan/polynomial.hpp"

namespace gitfan {

/// Generators of {x : A x >= 0, E x = 0}: a basis of the lineality space in
/// canonical row form and the extreme rays of the pointed part, primitive,
/// lying in the orthogonal complement of the lineality space, sorted.
struct VRepresentation {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

/// Double description method: lineality split, one simplicial start cone,
/// rows added in lexicographic order, combinatorial adjacency test.
VRepresentation double_description(std::size_t dim, const std::vector<IntVector>& inequalities,
                                   const std::vector<IntVector>& equations);

/// Irredundant subset of `candidates` (inner normals lying in ker(E), primitive,
/// pairwise non-parallel) for the cone {x : E x = 0, a . x >= 0}, given a point
/// z with E z = 0 and a . z > 0 for every candidate. Clarkson's algorithm with
/// lexicographically perturbed ray shooting; each LP is a cone-membership test.
std::vector<IntVector> clarkson_irredundant(const std::vector<IntVector>& candidates,
                                            const std::vector<IntVector>& equations, const QVector& interior);

class Cone;

struct Facet {
  std::string parent_key;
  IntVector normal;  // inner normal of the parent vanishing on the facet
  std::shared_ptr<const Cone> cone;
};

class Cone {
 public:
  /// The zero cone in Q^0; only useful as a placeholder.
  Cone();

  static Cone from_rays(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality = {});
  static Cone from_inequalities(std::size_t dim, std::vector<IntVector> inequalities,
                                std::vector<IntVector> equations = {});
  /// Fast path without double description: `interior` must satisfy every
  /// equation exactly and every inequality strictly, so that the cone spans
  /// ker(E). Redundant inequalities are removed by Clarkson's algorithm.
  static Cone from_inequalities_with_interior(std::size_t dim, std::vector<IntVector> inequalities,
                                              std::vector<IntVector> equations, const QVector& interior);
  /// Trusted constructor: the inequalities are known to be irredundant and
  /// the equations to span the orthogonal complement of the cone's span.
  static Cone from_irredundant(std::size_t dim, std::vector<IntVector> inequalities,
                               std::vector<IntVector> equations);
  static Cone zero(std::size_t dim);
  static Cone full_space(std::size_t dim);

  [[nodiscard]] std::size_t ambient_dim() const;
  /// Dimension of the linear span.
  [[nodiscard]] std::size_t dim() const;
  [[nodiscard]] std::size_t lineality_dim() const;
  [[nodiscard]] bool is_full_dimensional() const { return dim() == ambient_dim(); }
  [[nodiscard]] bool is_pointed() const { return lineality_dim() == 0; }

  /// Canonical H-description: irredundant primitive inner normals lying in
  /// the span of the cone, sorted; equations in canonical row form.
  [[nodiscard]] const std::vector<IntVector>& inequalities() const;
  [[nodiscard]] const std::vector<IntVector>& equations() const;
  /// Canonical V-description (computes it by double description if needed).
  [[nodiscard]] const std::vector<IntVector>& rays() const;
  [[nodiscard]] const std::vector<IntVector>& lineality() const;
  [[nodiscard]] bool has_rays() const;

  /// Equal for equal sets; built from the canonical H-description.
  [[nodiscard]] const std::string& canonical_key() const;

  /// Sum of the canonical extreme rays (lineality contributes nothing).
  [[nodiscard]] QVector relative_interior_point() const;

  [[nodiscard]] bool contains(const QVector& w) const;
  [[nodiscard]] bool contains(const IntVector& w) const;
  [[nodiscard]] bool contains_in_relint(const QVector& w) const;
  [[nodiscard]] bool contains(const Cone& other) const;

  /// One facet per irredundant inequality.
  [[nodiscard]] std::vector<Facet> facets() const;

  [[nodiscard]] Cone dual() const;

  friend Cone intersect(const Cone& a, const Cone& b);
  friend bool operator==(const Cone& a, const Cone& b) { return a.canonical_key() == b.canonical_key(); }

 private:
  struct Data;
  explicit Cone(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  void ensure_h() const;
  void ensure_v() const;

  std::shared_ptr<Data> d_;
};

Cone intersect(const Cone& a, const Cone& b);

/// cone(e_i : i in face) in Q^r.
Cone orthant_face(FaceIndexSet face, std::size_t r);

/// Image of a cone under an invertible linear map (rays x -> A x).
Cone act_on_cone(const QMatrix& a, const Cone& c);

/// Canonical key of the facet {x in c : v . x = 0} of a full-dimensional
/// cone c with inner normal v among its inequalities; `facet_point` is a
/// point of the facet's relative interior.
std::string facet_key(const Cone& c, const IntVector& v, const QVector& facet_point);
/// A relative interior point of the facet of full-dimensional c with normal v.
QVector facet_interior_point(const Cone& c, const IntVector& v);

/// Facet with inner normal v of a full-dimensional cone is interior to the
/// full-dimensional support iff v is not an inequality of the support.
bool is_interior_facet(const IntVector& normal, const Cone& support);
bool is_interior_facet(const Facet& facet, const Cone& support);

/// A point satisfying every equation and every inequality of c strictly
/// (found by maximizing a bounded slack); for cones whose inequalities are
/// irredundant this is a relative interior point.
QVector strict_interior_point(const Cone& c);

/// Key text for a list of integer vectors, e.g. "1,0;0,1".
std::string vectors_key(const std::vector<IntVector>& v);

}  // namespace gitfan
