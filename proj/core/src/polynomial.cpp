#include "gitfan/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace gitfan {

// ---- Ring ------------------------------------------------------------------

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<Ring>(std::move(names)); }

RingPtr make_ring(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("T" + std::to_string(i));
  return make_ring(std::move(names));
}

RingPtr extend_ring(const RingPtr& ring, const std::string& name) {
  auto names = ring->names();
  names.push_back(name);
  return make_ring(std::move(names));
}

// ---- Monomial ----------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) { update_mask(); }

Monomial Monomial::variable(std::size_t n, std::size_t i, std::uint32_t power) {
  Monomial m(n);
  m.e[i] = power;
  m.update_mask();
  return m;
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

void Monomial::update_mask() {
  mask = 0;
  for (std::size_t i = 0; i < e.size() && i < 64; ++i) {
    if (e[i] != 0) mask |= std::uint64_t{1} << i;
  }
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask & ~other.mask) != 0) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > other.e[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if (e.size() <= 64) return (mask & other.mask) == 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0 && other.e[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] + b.e[i];
  m.mask = a.mask | b.mask;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] - b.e[i];
  m.update_mask();
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  m.mask = a.mask | b.mask;
  return m;
}

// ---- MonomialOrder -------------------------------------------------------------

MonomialOrder::MonomialOrder(std::vector<std::vector<std::int64_t>> rows, std::vector<std::size_t> tiebreak)
    : rows_(std::move(rows)), tiebreak_(std::move(tiebreak)) {
  const std::size_t n = tiebreak_.size();
  std::vector<bool> seen(n, false);
  for (auto v : tiebreak_) {
    if (v >= n || seen[v]) throw std::invalid_argument("MonomialOrder: tie-break sequence is not a permutation");
    seen[v] = true;
  }
  if (rows_.empty()) throw std::invalid_argument("MonomialOrder: no weight rows");
  for (const auto& r : rows_) {
    if (r.size() != n) throw std::invalid_argument("MonomialOrder: weight row length mismatch");
  }
  for (auto x : rows_.back()) {
    if (x <= 0) throw ComputationError(ComputationError::Kind::NonPositiveWeight, "last weight row must be positive");
  }
}

MonomialOrder MonomialOrder::weighted(const QVector& w, std::vector<std::size_t> tiebreak) {
  for (const auto& x : w) {
    if (x <= 0) throw ComputationError(ComputationError::Kind::NonPositiveWeight, "weight vector must be positive");
  }
  const IntVector iw = gitfan::primitive(w);
  std::vector<std::int64_t> row;
  for (const auto& x : iw) {
    if (!x.fits_slong_p()) throw std::overflow_error("MonomialOrder: weight too large");
    row.push_back(x.get_si());
  }
  return MonomialOrder({std::move(row)}, std::move(tiebreak));
}

MonomialOrder MonomialOrder::weighted(const QVector& w) {
  std::vector<std::size_t> seq(w.size());
  std::iota(seq.begin(), seq.end(), 0);
  return weighted(w, std::move(seq));
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) { return weighted(QVector(n, Rational(1))); }

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : rows_) {
    std::int64_t da = 0;
    std::int64_t db = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      da += row[i] * static_cast<std::int64_t>(a.e[i]);
      db += row[i] * static_cast<std::int64_t>(b.e[i]);
    }
    if (da != db) return da > db ? 1 : -1;
  }
  for (std::size_t k = tiebreak_.size(); k-- > 0;) {
    const auto v = tiebreak_[k];
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  for (const auto& r : rows_) {
    os << 'w';
    for (auto x : r) os << ',' << x;
  }
  os << 't';
  for (auto v : tiebreak_) os << ',' << v;
  return os.str();
}

// ---- Polynomial ------------------------------------------------------------------

namespace {

bool storage_less(const Term& a, const Term& b) { return a.m.e > b.m.e; }

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    if (t.m.size() != ring_->nvars()) throw std::invalid_argument("Polynomial: monomial length mismatch");
    t.m.update_mask();
  }
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), storage_less);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().m == t.m) {
      merged.back().c += t.c;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.c == 0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  const auto n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  const auto n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial::variable(n, i), Rational(1)}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  return Polynomial(std::move(ring), {Term{m, c}});
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
  auto t = terms_;
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  return t;
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::invalid_argument("leading_term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (ord.greater(t.m, best->m)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return (1 / leading_term(ord).c) * *this;
}

Polynomial Polynomial::primitive(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  QVector c;
  c.reserve(terms_.size());
  for (const auto& t : terms_) c.push_back(t.c);
  const IntVector ic = gitfan::primitive(c);
  Polynomial p = *this;
  for (std::size_t i = 0; i < ic.size(); ++i) p.terms_[i].c = ic[i];
  if (p.leading_term(ord).c < 0) {
    for (auto& t : p.terms_) t.c = -t.c;
  }
  return p;
}

Polynomial Polynomial::restrict(std::uint64_t keep) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if ((t.m.mask & ~keep) == 0) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::substitute(const std::vector<std::size_t>& perm, const QVector& c) const {
  const auto n = ring_->nvars();
  if (perm.size() != n || c.size() != n) throw std::invalid_argument("substitute: length mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(n);
    Rational coef = t.c;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.m.e[j] == 0) continue;
      m.e[perm[j]] += t.m.e[j];
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), c[j].get_num_mpz_t(), t.m.e[j]);
      mpz_pow_ui(f.get_den_mpz_t(), c[j].get_den_mpz_t(), t.m.e[j]);
      f.canonicalize();
      coef *= f;
    }
    out.push_back(Term{std::move(m), coef});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::embed(const RingPtr& bigger) const {
  const auto n = bigger->nvars();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = t.m.e;
    e.resize(n, 0);
    out.push_back(Term{Monomial(std::move(e)), t.c});
  }
  return Polynomial(bigger, std::move(out));
}

Polynomial Polynomial::project(const RingPtr& smaller) const {
  const auto n = smaller->nvars();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = n; i < t.m.size(); ++i) {
      if (t.m.e[i] != 0) throw std::invalid_argument("project: eliminated variable occurs");
    }
    out.push_back(Term{Monomial(std::vector<std::uint32_t>(t.m.e.begin(), t.m.e.begin() + static_cast<std::ptrdiff_t>(n))), t.c});
  }
  return Polynomial(smaller, std::move(out));
}

Polynomial Polynomial::divide(const Monomial& m) const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.m)) throw std::invalid_argument("divide: monomial does not divide every term");
    p.terms_.push_back(Term{t.m / m, t.c});
  }
  return p;
}

Monomial Polynomial::monomial_content(std::uint64_t vars) const {
  const auto n = ring_->nvars();
  Monomial g(n);
  if (terms_.empty()) return g;
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    if (((vars >> i) & 1U) == 0) continue;
    std::uint32_t v = terms_.front().m.e[i];
    for (const auto& t : terms_) v = std::min(v, t.m.e[i]);
    g.e[i] = v;
  }
  g.update_mask();
  return g;
}

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : sorted_terms(ord)) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      std::string f = ring_->name(i);
      if (t.m.e[i] > 1) f += "^" + std::to_string(t.m.e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::string Polynomial::to_string() const { return to_string(MonomialOrder::degrevlex(ring_->nvars())); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> t;
  t.reserve(a.terms_.size() + b.terms_.size());
  t.insert(t.end(), a.terms_.begin(), a.terms_.end());
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial(a.ring_ ? a.ring_ : b.ring_, std::move(t));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) t.push_back(Term{x.m * y.m, x.c * y.c});
  return Polynomial(a.ring_ ? a.ring_ : b.ring_, std::move(t));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  if (s == 0) return Polynomial(a.ring_);
  Polynomial p = a;
  for (auto& t : p.terms_) t.c *= s;
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

// ---- parser -------------------------------------------------------------------

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expression() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = product();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
        continue;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        fail("implicit multiplication is not allowed");
      }
      break;
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
      const Integer k = number();
      if (!k.fits_uint_p() || k > 1000000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(k.get_ui()));
    }
    return base;
  }

  Integer number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    const char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, Rational(number()));
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const std::size_t idx = ring_->index_of(name);
      if (name == "T" && peek() == '(' && idx == ring_->nvars()) {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        const Integer i = number();
        skip_space();
        if (peek() != ')') fail("expected ')'");
        if (i < 1 || i > ring_->nvars()) fail("variable index out of range");
        ++pos_;
        return Polynomial::variable(ring_, i.get_ui() - 1);
      }
      if (idx == ring_->nvars()) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolynomialParser(text, ring).parse(); }

IntVector multidegree(const Monomial& m, const IntMatrix& q) {
  IntVector d(q.rows());
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.e[j] == 0) continue;
    for (std::size_t i = 0; i < q.rows(); ++i) d[i] += q(i, j) * m.e[j];
  }
  return d;
}

// ---- FaceIndexSet ----------------------------------------------------------------

FaceIndexSet FaceIndexSet::from_indices(const std::vector<std::size_t>& one_based) {
  std::uint64_t b = 0;
  for (auto i : one_based) {
    if (i < 1 || i > 64) throw std::invalid_argument("FaceIndexSet: index out of range");
    b |= std::uint64_t{1} << (i - 1);
  }
  return FaceIndexSet(b);
}

FaceIndexSet FaceIndexSet::full(std::size_t r) {
  if (r > 64) throw std::invalid_argument("FaceIndexSet: more than 64 variables");
  return FaceIndexSet(r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1);
}

std::size_t FaceIndexSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> FaceIndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((bits_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

std::string FaceIndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto i : indices()) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace gitfan
