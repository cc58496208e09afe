#include "ubckit/simplex.hpp"

#include "ubckit/errors.hpp"

namespace ubckit::lp {

namespace {

class RevisedSimplex {
 public:
  explicit RevisedSimplex(const StandardForm& p) : p_(p), m_(p.rows), n_(p.cols()) {
    if (static_cast<int>(p.rhs.size()) != m_ || static_cast<int>(p.cost.size()) != n_)
      throw InputError("standard form: dimension mismatch");
    sign_.assign(m_, 1);
    for (int i = 0; i < m_; ++i)
      if (p.rhs[i] < 0) sign_[i] = -1;
    basis_.resize(m_);
    is_basic_.assign(n_ + m_, 0);
    binv_.assign(m_, std::vector<Rational>(m_));
    xb_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      is_basic_[n_ + i] = 1;
      binv_[i][i] = 1;
      xb_[i] = sign_[i] * p.rhs[i];
    }
  }

  LpSolution run() {
    LpSolution out;
    std::vector<Rational> phase1(n_ + m_);
    for (int i = 0; i < m_; ++i) phase1[n_ + i] = 1;
    iterate(phase1);
    Rational infeasibility = 0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= n_) infeasibility += xb_[i];
    if (infeasibility > 0) {
      out.status = LpStatus::Infeasible;
      out.dual = unsigned_dual(phase1);
      out.objective = 0;
      out.pivots = pivots_;
      return out;
    }
    drive_out_artificials();

    std::vector<Rational> phase2(n_ + m_);
    for (int j = 0; j < n_; ++j) phase2[j] = p_.cost[j];
    if (!iterate(phase2)) {
      out.status = LpStatus::Unbounded;
      out.pivots = pivots_;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.x.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.x[basis_[i]] = xb_[i];
    out.dual = unsigned_dual(phase2);
    out.objective = 0;
    for (int j = 0; j < n_; ++j)
      if (out.x[j] != 0) out.objective += p_.cost[j] * out.x[j];
    out.pivots = pivots_;
    return out;
  }

 private:
  // Simplex multipliers in the sign-normalized row space.
  std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int k = 0; k < m_; ++k)
        if (binv_[i][k] != 0) y[k] += cb * binv_[i][k];
    }
    return y;
  }

  std::vector<Rational> unsigned_dual(const std::vector<Rational>& cost) const {
    std::vector<Rational> y = multipliers(cost);
    for (int i = 0; i < m_; ++i)
      if (sign_[i] < 0) y[i] = -y[i];
    return y;
  }

  Rational reduced_cost(int j, const std::vector<Rational>& cost, const std::vector<Rational>& y) const {
    Rational d = cost[j];
    for (const auto& e : p_.columns[j])
      if (y[e.row] != 0) d -= sign_[e.row] * e.value * y[e.row];
    return d;
  }

  std::vector<Rational> ftran(int j) const {
    std::vector<Rational> u(m_);
    for (const auto& e : p_.columns[j]) {
      const Rational a = sign_[e.row] * e.value;
      for (int i = 0; i < m_; ++i)
        if (binv_[i][e.row] != 0) u[i] += binv_[i][e.row] * a;
    }
    return u;
  }

  void pivot(int row, int entering, const std::vector<Rational>& u) {
    const Rational theta = xb_[row] / u[row];
    for (int i = 0; i < m_; ++i)
      if (i != row && u[i] != 0) xb_[i] -= theta * u[i];
    xb_[row] = theta;

    const Rational inv = 1 / u[row];
    auto& pivot_row = binv_[row];
    for (auto& v : pivot_row)
      if (v != 0) v *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || u[i] == 0) continue;
      const Rational factor = u[i];
      for (int k = 0; k < m_; ++k)
        if (pivot_row[k] != 0) binv_[i][k] -= factor * pivot_row[k];
    }
    is_basic_[basis_[row]] = 0;
    basis_[row] = entering;
    is_basic_[entering] = 1;
    ++pivots_;
  }

  // Returns false on unboundedness.
  bool iterate(const std::vector<Rational>& cost) {
    for (;;) {
      const std::vector<Rational> y = multipliers(cost);
      int entering = -1;
      for (int j = 0; j < n_; ++j) {
        if (is_basic_[j]) continue;
        if (reduced_cost(j, cost, y) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      const std::vector<Rational> u = ftran(entering);
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (u[i] <= 0) continue;
        const Rational ratio = xb_[i] / u[i];
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, entering, u);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (is_basic_[j]) continue;
        Rational entry = 0;
        for (const auto& e : p_.columns[j])
          if (binv_[r][e.row] != 0) entry += binv_[r][e.row] * sign_[e.row] * e.value;
        if (entry != 0) {
          pivot(r, j, ftran(j));
          break;
        }
      }
      // Otherwise the row is redundant; the artificial stays basic at zero.
    }
  }

  const StandardForm& p_;
  int m_;
  int n_;
  std::vector<int> sign_;
  std::vector<int> basis_;
  std::vector<char> is_basic_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  long pivots_ = 0;
};

}  // namespace

LpSolution solve_standard_form(const StandardForm& problem) { return RevisedSimplex(problem).run(); }

}  // namespace ubckit::lp
