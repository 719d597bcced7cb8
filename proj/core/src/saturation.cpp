#include "gitfan/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "gitfan/lp.hpp"

namespace gitfan {

namespace {

std::uint64_t var_mask(const std::vector<std::size_t>& vars) {
  std::uint64_t mask = 0;
  for (auto v : vars) {
    if (v >= 64) throw std::invalid_argument("saturation: variable index beyond 64");
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

std::vector<std::size_t> pass_sequence(std::size_t n, std::size_t last) {
  std::vector<std::size_t> seq;
  seq.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != last) seq.push_back(j);
  }
  seq.push_back(last);
  return seq;
}

bool unit_basis(const std::vector<Polynomial>& g) { return g.size() == 1 && g.front().is_constant(); }

Monomial product_monomial(std::size_t n, FaceIndexSet vars) {
  Monomial m(n);
  for (auto i : vars.indices()) m.e[i - 1] = 1;
  m.update_mask();
  return m;
}

// Exact quotient g / f; throws if f does not divide g.
Polynomial exact_quotient(Polynomial g, const Polynomial& f) {
  const MonomialOrder ord = MonomialOrder::degrevlex(f.ring()->nvars());
  const Term lf = f.leading_term(ord);
  Polynomial q(f.ring());
  while (!g.is_zero()) {
    const Term lg = g.leading_term(ord);
    if (!lf.m.divides(lg.m)) throw std::logic_error("exact_quotient: not divisible");
    const Polynomial t = Polynomial::monomial(f.ring(), lg.m / lf.m, lg.c / lf.c);
    q = q + t;
    g = g - t * f;
  }
  return q;
}

}  // namespace

std::vector<Polynomial> saturate_variable(const std::vector<Polynomial>& g, std::size_t m, const MonomialOrder& ord) {
  std::vector<Polynomial> out;
  out.reserve(g.size());
  for (const auto& f : g) {
    const Monomial content = f.monomial_content(std::uint64_t{1} << m);
    const bool divides_f = content.e[m] > 0;
    const bool divides_lm = f.leading_term(ord).m.e[m] > 0;
    if (divides_f != divides_lm) {
      throw ComputationError(ComputationError::Kind::HypothesisViolated,
                             "saturate_variable: variable divides the leading monomial but not the polynomial");
    }
    out.push_back(divides_f ? f.divide(content) : f);
  }
  return out;
}

MonomialOrder final_saturation_order(const QVector& w, const std::vector<std::size_t>& vars) {
  const std::size_t last = vars.empty() ? w.size() - 1 : vars.back();
  return MonomialOrder::weighted(w, pass_sequence(w.size(), last));
}

std::vector<Polynomial> saturate_product(const Ideal& ideal, const std::vector<std::size_t>& vars, const QVector& w,
                                         const SaturationOptions& opts) {
  const std::size_t n = ideal.ring()->nvars();
  if (w.size() != n) throw std::invalid_argument("saturate_product: weight length mismatch");
  for (const auto& x : w) {
    if (x <= 0) throw ComputationError(ComputationError::Kind::NonPositiveWeight, "saturate_product: weight must be positive");
  }
  if (!is_homogeneous(ideal, w)) {
    throw ComputationError(ComputationError::Kind::NotHomogeneous, "saturate_product: generators are not w-homogeneous");
  }
  BuchbergerOptions bo;
  bo.divide_mask = var_mask(vars);
  bo.stop_on_unit = opts.stop_on_unit;

  std::vector<Polynomial> g = ideal.generators();
  if (g.empty()) return g;
  std::vector<std::size_t> order = vars;

  if (opts.heuristic_order && vars.size() > 1) {
    std::atomic<bool> done{false};
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> winner;
    std::size_t winner_var = vars.front();
    std::vector<std::thread> workers;
    for (auto v : vars) {
      workers.emplace_back([&, v] {
        BuchbergerOptions local = bo;
        local.cancel = &done;
        auto res = buchberger(g, MonomialOrder::weighted(w, pass_sequence(n, v)), local);
        if (!res) return;
        std::lock_guard lock(mutex);
        if (!winner) {
          winner = std::move(res);
          winner_var = v;
          done = true;
        }
      });
    }
    for (auto& t : workers) t.join();
    g = std::move(*winner);
    if (unit_basis(g)) return g;
    order.erase(std::find(order.begin(), order.end(), winner_var));
    for (auto v : order) g = *buchberger(g, MonomialOrder::weighted(w, pass_sequence(n, v)), bo);
    return g;
  }

  for (auto v : order) {
    g = *buchberger(g, MonomialOrder::weighted(w, pass_sequence(n, v)), bo);
    if (unit_basis(g)) return g;
  }
  return g;
}

std::vector<Polynomial> saturate_product(const Ideal& ideal, std::size_t m, const QVector& w,
                                         const SaturationOptions& opts) {
  std::vector<std::size_t> vars(m);
  for (std::size_t i = 0; i < m; ++i) vars[i] = i;
  return saturate_product(ideal, vars, w, opts);
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero()) return Ideal(ring);
  if (f.is_constant()) return ideal;
  const std::size_t n = ring->nvars();
  const RingPtr ext = extend_ring(ring, "_t");
  const Polynomial t = Polynomial::variable(ext, n);
  const Polynomial fe = f.embed(ext);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * g.embed(ext));
  gens.push_back((Polynomial::constant(ext, 1) - t) * fe);

  std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(n + 1, 1));
  std::fill(rows[0].begin(), rows[0].end(), 0);
  rows[0][n] = 1;
  std::vector<std::size_t> seq(n + 1);
  for (std::size_t i = 0; i <= n; ++i) seq[i] = i;
  const MonomialOrder elim(std::move(rows), std::move(seq));
  std::vector<Polynomial> quotient;
  for (const auto& g : buchberger(gens, elim)) {
    bool has_t = false;
    for (const auto& term : g.terms()) has_t = has_t || term.m.e[n] != 0;
    if (has_t) continue;
    quotient.push_back(exact_quotient(g.project(ring), f));
  }
  return Ideal(ring, std::move(quotient));
}

Ideal saturate_iterated_quotient(const Ideal& ideal, FaceIndexSet vars) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero() || vars.size() == 0) return ideal;
  const Polynomial f = Polynomial::monomial(ring, product_monomial(ring->nvars(), vars));
  Ideal current = ideal;
  for (;;) {
    Ideal next = ideal_quotient(current, f);
    if (current.contains(next)) return current;
    current = Ideal(ring, next.groebner_basis());
  }
}

bool contains_monomial_rabinowitsch(const Ideal& ideal, FaceIndexSet vars) {
  if (ideal.is_zero()) return false;
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  const RingPtr ext = extend_ring(ring, "_t");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext));
  Monomial tm = product_monomial(n + 1, vars);
  tm.e[n] = 1;
  tm.update_mask();
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::monomial(ext, tm));
  BuchbergerOptions bo;
  bo.stop_on_unit = true;
  return unit_basis(*buchberger(gens, MonomialOrder::degrevlex(n + 1), bo));
}

Ideal restrict_to_face(const Ideal& ideal, FaceIndexSet face) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.restrict(face.bits()));
  return Ideal(ideal.ring(), std::move(gens));
}

bool is_homogeneous(const Ideal& ideal, const IntMatrix& q) {
  if (q.cols() != ideal.ring()->nvars()) throw std::invalid_argument("is_homogeneous: Q column count mismatch");
  for (const auto& g : ideal.generators()) {
    const IntVector d0 = multidegree(g.terms().front().m, q);
    for (const auto& t : g.terms()) {
      if (multidegree(t.m, q) != d0) return false;
    }
  }
  return true;
}

bool is_homogeneous(const Ideal& ideal, const QVector& w) {
  for (const auto& g : ideal.generators()) {
    const auto weight = [&](const Monomial& m) {
      Rational s = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.e[i]) s += w[i] * m.e[i];
      }
      return s;
    };
    const Rational d0 = weight(g.terms().front().m);
    for (const auto& t : g.terms()) {
      if (weight(t.m) != d0) return false;
    }
  }
  return true;
}

std::optional<QVector> positive_face_weight(const Ideal& restricted, FaceIndexSet face) {
  const std::size_t n = restricted.ring()->nvars();
  QVector ones(n, Rational(1));
  if (is_homogeneous(restricted, ones)) return ones;
  // w_j >= 1 on the face and (alpha_k - alpha_0) . w = 0 for every generator.
  lp::Problem p;
  p.nvars = n;
  p.objective.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    QVector row(n);
    row[j] = 1;
    p.rows.push_back({row, face.contains(j + 1) ? lp::Sense::GreaterEq : lp::Sense::Equal, Rational(1)});
  }
  for (const auto& g : restricted.generators()) {
    const auto& t0 = g.terms().front().m;
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      QVector row(n);
      const auto& tk = g.terms()[k].m;
      for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<long>(tk.e[j]) - static_cast<long>(t0.e[j]);
      p.rows.push_back({row, lp::Sense::Equal, Rational(0)});
    }
  }
  const auto res = lp::solve(p);
  if (res.status != lp::Status::Optimal) return std::nullopt;
  return res.x;
}

bool is_aface(const Ideal& ideal, FaceIndexSet face, AfaceMethod method) {
  const Ideal restricted = restrict_to_face(ideal, face);
  if (restricted.is_zero()) return true;
  switch (method) {
    case AfaceMethod::Fast: {
      const auto w = positive_face_weight(restricted, face);
      if (!w) return !saturate_iterated_quotient(restricted, face).is_unit();
      std::vector<std::size_t> vars;
      for (auto i : face.indices()) vars.push_back(i - 1);
      SaturationOptions opts;
      opts.stop_on_unit = true;
      return !unit_basis(saturate_product(restricted, vars, *w, opts));
    }
    case AfaceMethod::Sat:
      return !saturate_iterated_quotient(restricted, face).is_unit();
    case AfaceMethod::Rabinowitsch:
      return !contains_monomial_rabinowitsch(restricted, face);
  }
  return false;
}

}  // namespace gitfan
