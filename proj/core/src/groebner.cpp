#include "gitfan/groebner.hpp"

#include <algorithm>

namespace gitfan {

namespace {

// Integer polynomial with terms sorted descending under a fixed ordering.
struct IPoly {
  std::vector<Monomial> m;
  std::vector<Integer> c;

  [[nodiscard]] bool empty() const { return m.empty(); }
  [[nodiscard]] const Monomial& lm() const { return m.front(); }
};

Integer content(const IPoly& p) {
  Integer g = 0;
  for (const auto& x : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.c.front() < 0) g = -g;
  if (g != 1) {
    for (auto& x : p.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Returns the integer polynomial and the factor s with result = s * f.
IPoly to_ipoly(const Polynomial& f, const MonomialOrder& ord, Rational* scale = nullptr) {
  IPoly p;
  Integer l = 1;
  for (const auto& t : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  auto terms = f.sorted_terms(ord);
  p.m.reserve(terms.size());
  p.c.reserve(terms.size());
  for (auto& t : terms) {
    p.m.push_back(std::move(t.m));
    p.c.push_back(t.c.get_num() * (l / t.c.get_den()));
  }
  if (scale) *scale = Rational(l);
  return p;
}

Polynomial to_polynomial(const IPoly& p, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(p.m.size());
  for (std::size_t i = 0; i < p.m.size(); ++i) terms.push_back(Term{p.m[i], Rational(p.c[i])});
  return Polynomial(ring, std::move(terms));
}

// a * x[xs..] - b * mult * y, where the leading terms x[xs] and mult * y[0]
// are known to cancel and are skipped.
IPoly combine(const IPoly& x, std::size_t xs, const Integer& a, const IPoly& y, const Integer& b,
              const Monomial& mult, const MonomialOrder& ord) {
  IPoly out;
  out.m.reserve(x.m.size() - xs + y.m.size());
  out.c.reserve(x.m.size() - xs + y.m.size());
  std::size_t i = xs + 1;
  std::size_t j = 1;
  Monomial shifted;
  bool have_shifted = false;
  while (i < x.m.size() || j < y.m.size()) {
    if (j < y.m.size() && !have_shifted) {
      shifted = y.m[j] * mult;
      have_shifted = true;
    }
    int cmp;
    if (i == x.m.size()) {
      cmp = -1;
    } else if (j == y.m.size()) {
      cmp = 1;
    } else {
      cmp = ord.compare(x.m[i], shifted);
    }
    if (cmp > 0) {
      out.m.push_back(x.m[i]);
      out.c.push_back(a * x.c[i]);
      ++i;
    } else if (cmp < 0) {
      out.m.push_back(std::move(shifted));
      out.c.push_back(-b * y.c[j]);
      ++j;
      have_shifted = false;
    } else {
      Integer v = a * x.c[i] - b * y.c[j];
      if (v != 0) {
        out.m.push_back(std::move(shifted));
        out.c.push_back(std::move(v));
      }
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

const IPoly* find_reducer(const Monomial& t, const std::vector<const IPoly*>& basis) {
  for (const auto* g : basis) {
    if (g->lm().divides(t)) return g;
  }
  return nullptr;
}

// Full reduction of f modulo basis. On return, remainder = scale * f mod basis
// with the integer remainder primitive up to `scale`.
IPoly reduce(IPoly f, const std::vector<const IPoly*>& basis, const MonomialOrder& ord, Rational* scale = nullptr) {
  IPoly rem;
  Rational s = 1;
  std::size_t steps = 0;
  std::size_t pos = 0;
  while (pos < f.m.size()) {
    const IPoly* g = find_reducer(f.m[pos], basis);
    if (!g) {
      rem.m.push_back(std::move(f.m[pos]));
      rem.c.push_back(std::move(f.c[pos]));
      ++pos;
      continue;
    }
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.c[pos].get_mpz_t(), g->c.front().get_mpz_t());
    const Integer fa = g->c.front() / d;
    const Integer ga = f.c[pos] / d;
    const Monomial mult = f.m[pos] / g->lm();
    f = combine(f, pos, fa, *g, ga, mult, ord);
    pos = 0;
    if (fa != 1) {
      for (auto& x : rem.c) x *= fa;
      s *= fa;
    }
    if (++steps % 8 == 0) {
      Integer cg = content(f);
      for (const auto& x : rem.c) {
        if (cg == 1) break;
        mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), x.get_mpz_t());
      }
      if (cg > 1) {
        for (auto& x : f.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cg.get_mpz_t());
        for (auto& x : rem.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cg.get_mpz_t());
        s /= cg;
      }
    }
  }
  if (scale) *scale = s;
  return rem;
}

IPoly spoly_int(const IPoly& f, const IPoly& g, const MonomialOrder& ord) {
  const Monomial l = lcm(f.lm(), g.lm());
  Integer d;
  mpz_gcd(d.get_mpz_t(), f.c.front().get_mpz_t(), g.c.front().get_mpz_t());
  const Integer fa = g.c.front() / d;
  const Integer ga = f.c.front() / d;
  // (l / lm f) * (fa * f) - ga * (l / lm g) * g, computed by shifting f first.
  IPoly fs;
  const Monomial mf = l / f.lm();
  fs.m.reserve(f.m.size());
  for (const auto& m : f.m) fs.m.push_back(m * mf);
  fs.c = f.c;
  return combine(fs, 0, fa, g, ga, l / g.lm(), ord);
}

void divide_content(IPoly& p, std::uint64_t mask) {
  if (mask == 0 || p.empty()) return;
  const std::size_t n = p.m.front().size();
  for (std::size_t v = 0; v < n && v < 64; ++v) {
    if (((mask >> v) & 1U) == 0) continue;
    std::uint32_t k = p.m.front().e[v];
    for (const auto& m : p.m) {
      if (k == 0) break;
      k = std::min(k, m.e[v]);
    }
    if (k == 0) continue;
    for (auto& m : p.m) {
      m.e[v] -= k;
      if (m.e[v] == 0) m.mask &= ~(std::uint64_t{1} << v);
    }
  }
}

bool is_unit(const IPoly& p) { return p.m.size() == 1 && p.m.front().is_one(); }

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerRun {
 public:
  BuchbergerRun(const MonomialOrder& ord, const BuchbergerOptions& opts) : ord_(ord), opts_(opts) {}

  // Returns false when cancelled.
  bool run(const std::vector<Polynomial>& gens) {
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      IPoly p = to_ipoly(f, ord_);
      if (!insert(std::move(p))) return true;
    }
    while (!pairs_.empty()) {
      if (opts_.cancel && opts_.cancel->load(std::memory_order_relaxed)) return false;
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (ord_.compare(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
      }
      const Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      IPoly s = spoly_int(basis_[p.i], basis_[p.j], ord_);
      if (!insert(std::move(s))) return true;
    }
    return true;
  }

  bool unit() const { return unit_; }

  std::vector<IPoly> reduced_basis() const {
    if (unit_) return {};
    std::vector<IPoly> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i]) continue;
      std::vector<const IPoly*> others;
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (j != i && active_[j]) others.push_back(&basis_[j]);
      }
      IPoly tail = basis_[i];
      IPoly head;
      head.m.push_back(tail.m.front());
      head.c.push_back(tail.c.front());
      tail.m.erase(tail.m.begin());
      tail.c.erase(tail.c.begin());
      Rational s;
      IPoly r = reduce(std::move(tail), others, ord_, &s);
      // head * s + r keeps the ratio of the original polynomial.
      IPoly full;
      full.m.push_back(head.m.front());
      Rational hc = s * Rational(head.c.front());
      Integer l = hc.get_den();
      full.c.push_back(hc.get_num());
      for (std::size_t k = 0; k < r.m.size(); ++k) {
        full.m.push_back(r.m[k]);
        full.c.push_back(r.c[k] * l);
      }
      make_primitive(full);
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const IPoly& a, const IPoly& b) { return ord_.greater(a.lm(), b.lm()); });
    return out;
  }

 private:
  std::vector<const IPoly*> active_list() const {
    std::vector<const IPoly*> a;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) a.push_back(&basis_[i]);
    }
    return a;
  }

  // Reduce, strip the monomial content of the masked variables, repeat
  // until stable, then add to the basis. Returns false on a unit.
  bool insert(IPoly p) {
    for (;;) {
      divide_content(p, opts_.divide_mask);
      IPoly r = reduce(std::move(p), active_list(), ord_);
      if (r.empty()) return true;
      const Monomial before = r.lm();
      divide_content(r, opts_.divide_mask);
      if (r.lm() == before) {
        p = std::move(r);
        break;
      }
      p = std::move(r);
    }
    make_primitive(p);
    if (is_unit(p)) {
      unit_ = true;
      if (opts_.stop_on_unit) {
        pairs_.clear();
        return false;
      }
    }
    update(std::move(p));
    return true;
  }

  // Gebauer-Moeller style update of pairs and basis.
  void update(IPoly h) {
    const std::size_t hi = basis_.size();
    const Monomial lh = h.lm();
    basis_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> c;
    for (std::size_t i = 0; i < hi; ++i) {
      if (active_[i]) c.push_back(Pair{i, hi, lcm(basis_[i].lm(), lh)});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = basis_[p.i].lm().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) {
          if (c[q].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t q = 0; q < d.size() && keep; ++q) {
          if (d[q].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      const bool chain = lh.divides(p.lcm) && lcm(basis_[p.i].lm(), lh) != p.lcm &&
                         lcm(basis_[p.j].lm(), lh) != p.lcm;
      if (!chain) kept.push_back(p);
    }
    for (auto& p : d) {
      if (!basis_[p.i].lm().coprime(lh)) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (std::size_t i = 0; i < hi; ++i) {
      if (active_[i] && lh.divides(basis_[i].lm())) active_[i] = false;
    }
  }

  const MonomialOrder& ord_;
  const BuchbergerOptions& opts_;
  std::vector<IPoly> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& ord) {
  std::vector<IPoly> gi;
  gi.reserve(g.size());
  for (const auto& x : g) {
    if (!x.is_zero()) gi.push_back(to_ipoly(x, ord));
  }
  std::vector<const IPoly*> ptrs;
  for (const auto& x : gi) ptrs.push_back(&x);
  Rational s0;
  IPoly fi = to_ipoly(f, ord, &s0);
  Rational s;
  IPoly r = reduce(std::move(fi), ptrs, ord, &s);
  return (1 / (s * s0)) * to_polynomial(r, f.ring());
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term tf = f.leading_term(ord);
  const Term tg = g.leading_term(ord);
  const Monomial l = lcm(tf.m, tg.m);
  const RingPtr& ring = f.ring();
  return Polynomial::monomial(ring, l / tf.m, 1 / tf.c) * f - Polynomial::monomial(ring, l / tg.m, 1 / tg.c) * g;
}

std::optional<std::vector<Polynomial>> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                                  const BuchbergerOptions& opts) {
  RingPtr ring;
  for (const auto& f : gens) {
    if (f.ring()) ring = f.ring();
  }
  BuchbergerRun run(ord, opts);
  if (!run.run(gens)) return std::nullopt;
  if (run.unit()) return std::vector<Polynomial>{Polynomial::constant(ring, 1)};
  std::vector<Polynomial> out;
  for (const auto& p : run.reduced_basis()) out.push_back(to_polynomial(p, ring).monic(ord));
  return out;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  return *buchberger(gens, ord, BuchbergerOptions{});
}

bool is_groebner_basis(const std::vector<Polynomial>& g, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(spoly(g[i], g[j], ord), g, ord).is_zero()) return false;
    }
  }
  return true;
}

// ---- Ideal -----------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& f : gens) {
    if (!f.is_zero()) gens_.push_back(std::move(f));
  }
}

void Ideal::add_generator(const Polynomial& f) {
  if (f.is_zero()) return;
  gens_.push_back(f);
  cache_ = std::make_shared<Cache>();
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
  const std::string key = ord.key();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, ord));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(gb));
  return *it->second;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  return groebner_basis(MonomialOrder::degrevlex(ring_->nvars()));
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(f, groebner_basis(), MonomialOrder::degrevlex(ring_->nvars())).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& f) { return contains(f); });
}

bool Ideal::is_unit() const {
  if (gens_.empty()) return false;
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

}  // namespace gitfan
