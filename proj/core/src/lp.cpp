#include "gitfan/lp.hpp"

#include <stdexcept>

namespace gitfan::lp {

namespace {

// Dense tableau for  min c.x  s.t.  T x = rhs, x >= 0, with a feasible basis.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows, QVector(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][n_]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  [[nodiscard]] std::size_t rows() const { return m_; }
  [[nodiscard]] std::size_t cols() const { return n_; }
  [[nodiscard]] const QVector& reduced_costs() const { return r_; }

  void set_objective(const QVector& c) {
    r_.assign(n_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) r_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (t_[i][j] != 0) r_[j] -= cb * t_[i][j];
      }
    }
  }

  // Minimizes the current objective over columns with allowed[j].
  Status run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (allowed[j] && r_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return Status::Optimal;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][n_] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_[row][col];
    for (auto& x : t_[row]) {
      if (x != 0) x *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j <= n_; ++j) {
        if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
      }
    }
    if (r_[col] != 0) {
      const Rational f = r_[col];
      for (std::size_t j = 0; j <= n_; ++j) {
        if (t_[row][j] != 0) r_[j] -= f * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  [[nodiscard]] QVector solution() const {
    QVector x(n_);
    for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = t_[i][n_];
    return x;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<QVector> t_;
  std::vector<std::size_t> basis_;
  QVector r_;
};

struct StandardForm {
  Tableau tab;
  std::size_t structural = 0;  // columns before slacks
  std::size_t first_artificial = 0;
  std::vector<bool> flipped;   // row multiplied by -1
  std::vector<std::size_t> artificial_of_row;
};

// Builds [A | slacks | artificials] with nonnegative right-hand sides.
StandardForm build(const std::vector<QVector>& a, const std::vector<Sense>& sense, const QVector& b,
                   std::size_t ncols) {
  const std::size_t m = a.size();
  std::size_t nslack = 0;
  for (auto s : sense) {
    if (s != Sense::Equal) ++nslack;
  }
  // Every row gets an artificial column so the initial basis is the identity
  // and the phase-one reduced costs of artificials expose the duals.
  StandardForm sf{Tableau(m, ncols + nslack + m), ncols, ncols + nslack, std::vector<bool>(m), std::vector<std::size_t>(m)};
  std::size_t slack = ncols;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    sf.flipped[i] = flip;
    for (std::size_t j = 0; j < ncols; ++j) sf.tab.at(i, j) = flip ? -a[i][j] : a[i][j];
    if (sense[i] != Sense::Equal) {
      const Rational s = sense[i] == Sense::LessEq ? 1 : -1;
      sf.tab.at(i, slack++) = flip ? -s : s;
    }
    sf.tab.rhs(i) = flip ? -b[i] : b[i];
    const std::size_t art = sf.first_artificial + i;
    sf.tab.at(i, art) = 1;
    sf.tab.basic(i) = art;
    sf.artificial_of_row[i] = art;
  }
  return sf;
}

// Phase one; returns false if infeasible. Leaves artificials out of the basis
// where possible.
bool phase_one(StandardForm& sf) {
  Tableau& t = sf.tab;
  QVector c(t.cols());
  for (std::size_t j = sf.first_artificial; j < t.cols(); ++j) c[j] = 1;
  t.set_objective(c);
  std::vector<bool> allowed(t.cols(), true);
  t.run(allowed);
  if (t.reduced_costs()[t.cols()] != 0) return false;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basic(i) < sf.first_artificial) continue;
    for (std::size_t j = 0; j < sf.first_artificial; ++j) {
      if (t.at(i, j) != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }
  return true;
}

}  // namespace

Result solve(const Problem& p) {
  const std::size_t n = p.nvars;
  std::vector<bool> is_free = p.free;
  is_free.resize(n, false);
  // Free variables are split as x = x+ - x-.
  std::vector<std::size_t> neg_col(n, 0);
  std::size_t ncols = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_free[j]) neg_col[j] = ncols++;
  }
  std::vector<QVector> a;
  std::vector<Sense> sense;
  QVector b;
  for (const auto& row : p.rows) {
    if (row.a.size() != n) throw std::invalid_argument("lp::solve: constraint length mismatch");
    QVector r(ncols);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = row.a[j];
      if (is_free[j]) r[neg_col[j]] = -row.a[j];
    }
    a.push_back(std::move(r));
    sense.push_back(row.sense);
    b.push_back(row.b);
  }
  StandardForm sf = build(a, sense, b, ncols);
  Result res;
  if (!phase_one(sf)) {
    res.status = Status::Infeasible;
    return res;
  }
  Tableau& t = sf.tab;
  QVector c(t.cols());
  for (std::size_t j = 0; j < n && j < p.objective.size(); ++j) {
    const Rational v = p.maximize ? -p.objective[j] : p.objective[j];
    c[j] = v;
    if (is_free[j]) c[neg_col[j]] = -v;
  }
  t.set_objective(c);
  std::vector<bool> allowed(t.cols(), true);
  for (std::size_t j = sf.first_artificial; j < t.cols(); ++j) allowed[j] = false;
  const Status st = t.run(allowed);
  res.status = st;
  if (st != Status::Optimal) return res;
  const QVector full = t.solution();
  res.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    res.x[j] = full[j];
    if (is_free[j]) res.x[j] -= full[neg_col[j]];
  }
  res.value = 0;
  for (std::size_t j = 0; j < n && j < p.objective.size(); ++j) res.value += p.objective[j] * res.x[j];
  return res;
}

MembershipResult cone_membership(std::span<const IntVector> generators, const QVector& target) {
  const std::size_t k = target.size();
  const std::size_t n = generators.size();
  std::vector<QVector> a(k, QVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (generators[j].size() != k) throw std::invalid_argument("cone_membership: dimension mismatch");
    for (std::size_t i = 0; i < k; ++i) a[i][j] = generators[j][i];
  }
  StandardForm sf = build(a, std::vector<Sense>(k, Sense::Equal), target, n);
  MembershipResult res;
  if (phase_one(sf)) {
    res.member = true;
    const QVector full = sf.tab.solution();
    res.lambda.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
    return res;
  }
  // Phase-one duals y_i = 1 - r(artificial_i) satisfy y.A_j <= 0 and y.b > 0
  // on the sign-normalized rows.
  const QVector& r = sf.tab.reduced_costs();
  res.certificate.assign(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    Rational y = 1 - r[sf.artificial_of_row[i]];
    if (sf.flipped[i]) y = -y;
    res.certificate[i] = -y;
  }
  return res;
}

}  // namespace gitfan::lp
