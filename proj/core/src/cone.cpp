#include "gitfan/cone.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "gitfan/lp.hpp"

namespace gitfan {

namespace {

// Fixed-size bitset over constraint indices.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  [[nodiscard]] bool contains(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if ((o.w_[i] & ~w_[i]) != 0) return false;
    }
    return true;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] &= b.w_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct DDRay {
  IntVector v;
  Bits zeros;
};

IntVector mat_times(const std::vector<IntVector>& basis, const IntVector& y, std::size_t n) {
  IntVector x(n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (y[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) x[i] += y[k] * basis[k][i];
  }
  return x;
}

std::vector<IntVector> sorted_unique(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_dims(std::size_t dim, const std::vector<IntVector>& vs) {
  for (const auto& v : vs) {
    if (v.size() != dim) throw ComputationError(ComputationError::Kind::DimensionMismatch, "vector length differs from ambient dimension");
  }
}

// DD on a pointed cone {y in Q^p : A y >= 0} with rank(A) = p.
std::vector<IntVector> pointed_dd(std::vector<IntVector> a, std::size_t p) {
  // Start from p independent rows.
  std::vector<std::size_t> start;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < a.size() && start.size() < p; ++i) {
    chosen.push_back(a[i]);
    if (rank(chosen, p) == chosen.size()) {
      start.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (start.size() != p) throw std::logic_error("double_description: constraint matrix is not of full column rank");
  const std::size_t m = a.size();
  QMatrix s(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) s(i, j) = a[start[i]][j];
  const QMatrix inv = *inverse(s);
  std::vector<DDRay> rays;
  for (std::size_t j = 0; j < p; ++j) {
    DDRay r{primitive(inv.col(j)), Bits(m)};
    for (std::size_t i = 0; i < p; ++i) {
      if (i != j) r.zeros.set(start[i]);
    }
    rays.push_back(std::move(r));
  }
  std::vector<bool> used(m, false);
  for (auto i : start) used[i] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (used[row]) continue;
    const IntVector& ar = a[row];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(ar, rays[k].v);
      if (val[k] > 0) pos.push_back(k);
      if (val[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (val[k] == 0) rays[k].zeros.set(row);
      }
      continue;
    }
    std::vector<DDRay> next;
    for (auto pk : pos) {
      for (auto nk : neg) {
        Bits common = rays[pk].zeros & rays[nk].zeros;
        if (common.count() + 2 < p) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == pk || k == nk) continue;
          if (rays[k].zeros.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(p);
        for (std::size_t i = 0; i < p; ++i) v[i] = val[pk] * rays[nk].v[i] - val[nk] * rays[pk].v[i];
        common.set(row);
        next.push_back(DDRay{primitive(std::move(v)), std::move(common)});
      }
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] > 0) {
        next.push_back(std::move(rays[k]));
      } else if (val[k] == 0) {
        rays[k].zeros.set(row);
        next.push_back(std::move(rays[k]));
      }
    }
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

// Canonical H-description of a cone given by its input inequalities A,
// equations E and its V-description.
void facets_from_v(std::size_t n, const std::vector<IntVector>& a, const VRepresentation& v,
                   std::vector<IntVector>& ineqs, std::vector<IntVector>& eqs) {
  std::vector<IntVector> span = v.rays;
  span.insert(span.end(), v.lineality.begin(), v.lineality.end());
  if (span.empty()) {
    eqs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      eqs.push_back(std::move(e));
    }
    ineqs.clear();
    return;
  }
  IntMatrix sm(span.size(), n);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) sm(i, j) = span[i][j];
  eqs = canonical_row_basis(kernel_basis(sm), n);
  const std::size_t d = n - eqs.size();
  std::set<IntVector> found;
  for (const auto& row : a) {
    std::vector<IntVector> zero = v.lineality;
    bool positive_somewhere = false;
    for (const auto& r : v.rays) {
      if (dot(row, r) == 0) {
        zero.push_back(r);
      } else {
        positive_somewhere = true;
      }
    }
    if (!positive_somewhere) continue;
    if (rank(zero, n) + 1 != d) continue;
    found.insert(primitive(project_out(to_rational(row), eqs)));
  }
  ineqs.assign(found.begin(), found.end());
}

// Sign of (t_b - t_c) for the perturbed ray shooting, see clarkson_irredundant.
int compare_hits(const IntVector& b, const Rational& ab, const Rational& bx, const IntVector& c, const Rational& ac,
                 const Rational& cx) {
  const Rational bb = ab - bx;
  const Rational bc = ac - cx;
  const Rational d0 = ab * bc - ac * bb;
  if (d0 != 0) return d0 < 0 ? -1 : 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Rational di = c[i] * bx - b[i] * cx;
    if (di != 0) return di < 0 ? -1 : 1;
  }
  return 0;
}

std::vector<IntVector> normalized_inequalities(const std::vector<IntVector>& ineqs, const std::vector<IntVector>& eqs) {
  std::set<IntVector> out;
  for (const auto& a : ineqs) {
    IntVector p = eqs.empty() ? primitive(a) : primitive(project_out(to_rational(a), eqs));
    if (!is_zero(p)) out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

}  // namespace

VRepresentation double_description(std::size_t n, const std::vector<IntVector>& inequalities,
                                   const std::vector<IntVector>& equations) {
  check_dims(n, inequalities);
  check_dims(n, equations);
  VRepresentation out;
  std::vector<IntVector> all = inequalities;
  all.insert(all.end(), equations.begin(), equations.end());
  if (all.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      out.lineality.push_back(std::move(e));
    }
    return out;
  }
  IntMatrix am(all.size(), n);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) am(i, j) = all[i][j];
  out.lineality = canonical_row_basis(kernel_basis(am), n);

  // Basis of W = ker(E) intersected with the complement of the lineality.
  std::vector<IntVector> wrows = equations;
  wrows.insert(wrows.end(), out.lineality.begin(), out.lineality.end());
  std::vector<IntVector> basis;
  if (wrows.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    IntMatrix wm(wrows.size(), n);
    for (std::size_t i = 0; i < wrows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) wm(i, j) = wrows[i][j];
    basis = kernel_basis(wm);
  }
  const std::size_t p = basis.size();
  if (p == 0) return out;

  std::set<IntVector> reduced;
  for (const auto& a : inequalities) {
    IntVector r(p);
    for (std::size_t k = 0; k < p; ++k) r[k] = dot(a, basis[k]);
    if (!is_zero(r)) reduced.insert(primitive(std::move(r)));
  }
  std::vector<IntVector> rows(reduced.begin(), reduced.end());
  std::vector<IntVector> rays = pointed_dd(std::move(rows), p);
  for (auto& y : rays) out.rays.push_back(primitive(mat_times(basis, y, n)));
  out.rays = sorted_unique(std::move(out.rays));
  return out;
}

std::vector<IntVector> clarkson_irredundant(const std::vector<IntVector>& candidates,
                                            const std::vector<IntVector>& equations, const QVector& interior) {
  const std::size_t m = candidates.size();
  std::vector<Rational> alpha(m);
  for (std::size_t i = 0; i < m; ++i) {
    alpha[i] = dot(candidates[i], interior);
    if (alpha[i] <= 0) throw std::invalid_argument("clarkson_irredundant: point is not strictly interior");
  }
  std::vector<IntVector> gens;
  for (const auto& e : equations) {
    gens.push_back(e);
    IntVector ne = e;
    for (auto& x : ne) x = -x;
    gens.push_back(std::move(ne));
  }
  enum : char { Undecided, Irredundant, Redundant };
  std::vector<char> status(m, Undecided);
  for (std::size_t idx = 0; idx < m; ++idx) {
    while (status[idx] == Undecided) {
      const auto res = lp::cone_membership(gens, to_rational(candidates[idx]));
      if (res.member) {
        status[idx] = Redundant;
        break;
      }
      // Shoot from the interior point towards the certificate x.
      const QVector& x = res.certificate;
      std::size_t best = m;
      Rational best_x;
      for (std::size_t b = 0; b < m; ++b) {
        if (status[b] != Undecided) continue;
        Rational bx = dot(candidates[b], x);
        if (bx >= 0) continue;
        if (best == m || compare_hits(candidates[b], alpha[b], bx, candidates[best], alpha[best], best_x) < 0) {
          best = b;
          best_x = std::move(bx);
        }
      }
      if (best == m) throw std::logic_error("clarkson_irredundant: ray shooting found no hyperplane");
      status[best] = Irredundant;
      gens.push_back(candidates[best]);
    }
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (status[i] == Irredundant) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Cone ------------------------------------------------------------------------

struct Cone::Data {
  std::size_t n = 0;
  bool v_input = false;
  std::vector<IntVector> in1;  // rays or inequalities
  std::vector<IntVector> in2;  // lineality or equations
  std::once_flag h_flag;
  std::once_flag v_flag;
  std::vector<IntVector> ineqs;
  std::vector<IntVector> eqs;
  std::vector<IntVector> rays;
  std::vector<IntVector> lin;
  std::string key;
  bool v_ready = false;
};

Cone::Cone() : d_(std::make_shared<Data>()) {
  std::call_once(d_->h_flag, [] {});
  std::call_once(d_->v_flag, [] {});
  d_->v_ready = true;
  d_->key = "n=0|E:|I:";
}

Cone Cone::from_rays(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality) {
  check_dims(dim, rays);
  check_dims(dim, lineality);
  auto d = std::make_shared<Data>();
  d->n = dim;
  d->v_input = true;
  d->in1 = std::move(rays);
  d->in2 = std::move(lineality);
  return Cone(std::move(d));
}

Cone Cone::from_inequalities(std::size_t dim, std::vector<IntVector> inequalities, std::vector<IntVector> equations) {
  check_dims(dim, inequalities);
  check_dims(dim, equations);
  auto d = std::make_shared<Data>();
  d->n = dim;
  d->in1 = std::move(inequalities);
  d->in2 = std::move(equations);
  return Cone(std::move(d));
}

Cone Cone::from_inequalities_with_interior(std::size_t dim, std::vector<IntVector> inequalities,
                                           std::vector<IntVector> equations, const QVector& interior) {
  check_dims(dim, inequalities);
  check_dims(dim, equations);
  auto eqs = canonical_row_basis(equations, dim);
  auto cands = normalized_inequalities(inequalities, eqs);
  auto ineqs = clarkson_irredundant(cands, eqs, interior);
  auto d = std::make_shared<Data>();
  d->n = dim;
  d->in1 = ineqs;
  d->in2 = eqs;
  std::call_once(d->h_flag, [&] {
    d->ineqs = std::move(ineqs);
    d->eqs = std::move(eqs);
  });
  return Cone(std::move(d));
}

Cone Cone::from_irredundant(std::size_t dim, std::vector<IntVector> inequalities, std::vector<IntVector> equations) {
  check_dims(dim, inequalities);
  check_dims(dim, equations);
  auto eqs = canonical_row_basis(equations, dim);
  auto ineqs = normalized_inequalities(inequalities, eqs);
  auto d = std::make_shared<Data>();
  d->n = dim;
  d->in1 = ineqs;
  d->in2 = eqs;
  std::call_once(d->h_flag, [&] {
    d->ineqs = std::move(ineqs);
    d->eqs = std::move(eqs);
  });
  return Cone(std::move(d));
}

Cone Cone::zero(std::size_t dim) { return from_rays(dim, {}); }

Cone Cone::full_space(std::size_t dim) { return from_irredundant(dim, {}, {}); }

void Cone::ensure_v() const {
  std::call_once(d_->v_flag, [this] {
    Data& d = *d_;
    if (!d.v_input) {
      // H input: the DD output is the canonical V-description.
      VRepresentation v = double_description(d.n, d.in1, d.in2);
      d.rays = std::move(v.rays);
      d.lin = std::move(v.lineality);
    } else {
      // Extreme rays of C are the facets of the dual cone.
      std::vector<IntVector> dual_rows = d.in1;
      for (const auto& l : d.in2) {
        dual_rows.push_back(l);
        IntVector nl = l;
        for (auto& x : nl) x = -x;
        dual_rows.push_back(std::move(nl));
      }
      VRepresentation dv = double_description(d.n, dual_rows, {});
      std::vector<IntVector> ext;
      std::vector<IntVector> lin;
      facets_from_v(d.n, dual_rows, dv, ext, lin);
      d.rays = std::move(ext);
      d.lin = std::move(lin);
    }
    d.v_ready = true;
  });
}

void Cone::ensure_h() const {
  std::call_once(d_->h_flag, [this] {
    Data& d = *d_;
    if (!d.v_input) {
      ensure_v();
      facets_from_v(d.n, d.in1, VRepresentation{d.lin, d.rays}, d.ineqs, d.eqs);
    } else {
      ensure_v();
      // Facet normals of C are the extreme rays of the dual cone, whose
      // lineality space is the orthogonal complement of span(C).
      std::vector<IntVector> dual_rows = d.rays;
      for (const auto& l : d.lin) {
        dual_rows.push_back(l);
        IntVector nl = l;
        for (auto& x : nl) x = -x;
        dual_rows.push_back(std::move(nl));
      }
      VRepresentation dv = double_description(d.n, dual_rows, {});
      d.ineqs = std::move(dv.rays);
      d.eqs = std::move(dv.lineality);
    }
  });
}

std::size_t Cone::ambient_dim() const { return d_->n; }

std::size_t Cone::dim() const {
  ensure_h();
  return d_->n - d_->eqs.size();
}

std::size_t Cone::lineality_dim() const {
  ensure_h();
  std::vector<IntVector> all = d_->ineqs;
  all.insert(all.end(), d_->eqs.begin(), d_->eqs.end());
  return d_->n - rank(all, d_->n);
}

const std::vector<IntVector>& Cone::inequalities() const {
  ensure_h();
  return d_->ineqs;
}

const std::vector<IntVector>& Cone::equations() const {
  ensure_h();
  return d_->eqs;
}

const std::vector<IntVector>& Cone::rays() const {
  ensure_v();
  return d_->rays;
}

const std::vector<IntVector>& Cone::lineality() const {
  ensure_v();
  return d_->lin;
}

bool Cone::has_rays() const { return d_->v_ready; }

std::string vectors_key(const std::vector<IntVector>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      if (j) s += ',';
      s += v[i][j].get_str();
    }
  }
  return s;
}

const std::string& Cone::canonical_key() const {
  ensure_h();
  // The key is derived from immutable canonical data; build it once.
  static std::mutex key_mutex;
  std::lock_guard lock(key_mutex);
  if (d_->key.empty()) {
    d_->key = "n=" + std::to_string(d_->n) + "|E:" + vectors_key(d_->eqs) + "|I:" + vectors_key(d_->ineqs);
  }
  return d_->key;
}

QVector Cone::relative_interior_point() const {
  QVector p(d_->n);
  for (const auto& r : rays()) {
    for (std::size_t i = 0; i < d_->n; ++i) p[i] += r[i];
  }
  return p;
}

bool Cone::contains(const QVector& w) const {
  if (w.size() != d_->n) throw ComputationError(ComputationError::Kind::DimensionMismatch, "contains: dimension mismatch");
  ensure_h();
  for (const auto& e : d_->eqs) {
    if (dot(e, w) != 0) return false;
  }
  for (const auto& a : d_->ineqs) {
    if (dot(a, w) < 0) return false;
  }
  return true;
}

bool Cone::contains(const IntVector& w) const { return contains(to_rational(w)); }

bool Cone::contains_in_relint(const QVector& w) const {
  if (w.size() != d_->n) throw ComputationError(ComputationError::Kind::DimensionMismatch, "contains: dimension mismatch");
  ensure_h();
  for (const auto& e : d_->eqs) {
    if (dot(e, w) != 0) return false;
  }
  for (const auto& a : d_->ineqs) {
    if (dot(a, w) <= 0) return false;
  }
  return true;
}

bool Cone::contains(const Cone& other) const {
  ensure_h();
  for (const auto& r : other.rays()) {
    if (!contains(r)) return false;
  }
  for (const auto& l : other.lineality()) {
    for (const auto& e : d_->eqs) {
      if (dot(e, l) != 0) return false;
    }
    for (const auto& a : d_->ineqs) {
      if (dot(a, l) != 0) return false;
    }
  }
  return true;
}

std::vector<Facet> Cone::facets() const {
  ensure_h();
  std::vector<Facet> out;
  for (const auto& a : d_->ineqs) {
    auto eqs = d_->eqs;
    eqs.push_back(a);
    out.push_back(Facet{canonical_key(), a, std::make_shared<const Cone>(from_inequalities(d_->n, d_->ineqs, eqs))});
  }
  return out;
}

Cone Cone::dual() const {
  ensure_h();
  auto d = std::make_shared<Data>();
  d->n = d_->n;
  d->v_input = true;
  d->in1 = d_->ineqs;
  d->in2 = d_->eqs;
  std::call_once(d->v_flag, [&] {
    d->rays = d_->ineqs;
    d->lin = d_->eqs;
    d->v_ready = true;
  });
  if (d_->v_ready) {
    std::call_once(d->h_flag, [&] {
      d->ineqs = d_->rays;
      d->eqs = d_->lin;
    });
  }
  return Cone(std::move(d));
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw ComputationError(ComputationError::Kind::DimensionMismatch, "intersect: dimension mismatch");
  }
  auto ineqs = a.inequalities();
  ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
  auto eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_dim(), std::move(ineqs), std::move(eqs));
}

Cone orthant_face(FaceIndexSet face, std::size_t r) {
  std::vector<IntVector> rays;
  for (auto i : face.indices()) {
    if (i > r) throw std::invalid_argument("orthant_face: index exceeds r");
    IntVector e(r);
    e[i - 1] = 1;
    rays.push_back(std::move(e));
  }
  return Cone::from_rays(r, std::move(rays));
}

Cone act_on_cone(const QMatrix& a, const Cone& c) {
  const auto inv = inverse(a);
  if (!inv) throw std::invalid_argument("act_on_cone: matrix not invertible");
  const std::size_t n = c.ambient_dim();
  const auto row_times = [&](const IntVector& v) {
    QVector out(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] != 0) out[j] += v[i] * (*inv)(i, j);
      }
    return primitive(out);
  };
  std::vector<IntVector> ineqs;
  std::vector<IntVector> eqs;
  for (const auto& v : c.inequalities()) ineqs.push_back(row_times(v));
  for (const auto& v : c.equations()) eqs.push_back(row_times(v));
  return Cone::from_irredundant(n, std::move(ineqs), std::move(eqs));
}

QVector facet_interior_point(const Cone& c, const IntVector& v) {
  const std::size_t n = c.ambient_dim();
  // max t  s.t.  v.x = 0, a.x >= t for the other facets, t <= 1.
  lp::Problem p;
  p.nvars = n + 1;
  p.free.assign(n + 1, true);
  p.objective.assign(n + 1, Rational(0));
  p.objective[n] = 1;
  for (const auto& e : c.equations()) {
    QVector row = to_rational(e);
    row.push_back(0);
    p.rows.push_back({row, lp::Sense::Equal, Rational(0)});
  }
  {
    QVector row = to_rational(v);
    row.push_back(0);
    p.rows.push_back({row, lp::Sense::Equal, Rational(0)});
  }
  for (const auto& a : c.inequalities()) {
    if (a == v) continue;
    QVector row = to_rational(a);
    row.push_back(-1);
    p.rows.push_back({row, lp::Sense::GreaterEq, Rational(0)});
  }
  QVector cap(n + 1);
  cap[n] = 1;
  p.rows.push_back({cap, lp::Sense::LessEq, Rational(1)});
  const auto res = lp::solve(p);
  if (res.status != lp::Status::Optimal || res.value <= 0) {
    throw ComputationError(ComputationError::Kind::EmptyCone, "facet_interior_point: normal does not define a facet");
  }
  return QVector(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
}

QVector strict_interior_point(const Cone& c) {
  const std::size_t n = c.ambient_dim();
  lp::Problem p;
  p.nvars = n + 1;
  p.free.assign(n + 1, true);
  p.objective.assign(n + 1, Rational(0));
  p.objective[n] = 1;
  for (const auto& e : c.equations()) {
    QVector row = to_rational(e);
    row.push_back(0);
    p.rows.push_back({row, lp::Sense::Equal, Rational(0)});
  }
  for (const auto& a : c.inequalities()) {
    QVector row = to_rational(a);
    row.push_back(-1);
    p.rows.push_back({row, lp::Sense::GreaterEq, Rational(0)});
  }
  QVector cap(n + 1);
  cap[n] = 1;
  p.rows.push_back({cap, lp::Sense::LessEq, Rational(1)});
  const auto res = lp::solve(p);
  if (res.status != lp::Status::Optimal || (!c.inequalities().empty() && res.value <= 0)) {
    throw ComputationError(ComputationError::Kind::EmptyCone, "strict_interior_point: no strictly feasible point");
  }
  return QVector(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
}

std::string facet_key(const Cone& c, const IntVector& v, const QVector& facet_point) {
  std::vector<IntVector> others;
  for (const auto& a : c.inequalities()) {
    if (a != v) others.push_back(a);
  }
  auto eqs = c.equations();
  eqs.push_back(v);
  return Cone::from_inequalities_with_interior(c.ambient_dim(), std::move(others), std::move(eqs), facet_point)
      .canonical_key();
}

bool is_interior_facet(const IntVector& normal, const Cone& support) {
  const IntVector v = primitive(normal);
  const auto& s = support.inequalities();
  return !std::binary_search(s.begin(), s.end(), v);
}

bool is_interior_facet(const Facet& facet, const Cone& support) { return is_interior_facet(facet.normal, support); }

}  // namespace gitfan
