#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qtet/modrep.hpp"
#include "qtet/split.hpp"

namespace qtet {

namespace detail {

// Solves sum_p L_p Y R_p = RHS constraints for an n x n unknown Y restricted
// to base + pattern entries. Each constraint is linear in Y, so the whole
// schedule reduces to one exact RREF per generator. Free unknowns are fixed
// to 1 (a gauge / evaluation-parameter choice), making the output
// deterministic.
template <class K>
class PatternSolver {
 public:
  PatternSolver(Matrix<K> base, std::vector<std::pair<int, int>> pattern)
      : n_(base.rows()), base_(std::move(base)), pattern_(std::move(pattern)) {}

  void add_constraint(const std::vector<std::pair<Matrix<K>, Matrix<K>>>& terms,
                      const Matrix<K>& rhs) {
    Matrix<K> adjusted = rhs;
    for (const auto& [l, r] : terms) adjusted = adjusted - l * base_ * r;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::vector<K> row(pattern_.size() + 1, K(0));
        bool nonzero = false;
        for (std::size_t u = 0; u < pattern_.size(); ++u) {
          auto [k, l_idx] = pattern_[u];
          K coeff(0);
          for (const auto& [l, r] : terms) coeff = coeff + l(i, k) * r(l_idx, j);
          row[u] = coeff;
          if (!(coeff == K(0))) nonzero = true;
        }
        row.back() = adjusted(i, j);
        if (nonzero || !(row.back() == K(0))) rows_.push_back(std::move(row));
      }
  }

  std::optional<Matrix<K>> solve() const {
    int u = static_cast<int>(pattern_.size());
    Matrix<K> aug(static_cast<int>(rows_.size()), u + 1);
    for (int i = 0; i < aug.rows(); ++i)
      for (int j = 0; j <= u; ++j) aug(i, j) = rows_[static_cast<std::size_t>(i)][j];
    int rank = rref_in_place(aug);
    std::vector<K> x(u, K(1));  // free unknowns default to 1
    std::vector<int> pivot_col;
    for (int i = 0; i < rank; ++i) {
      int j = 0;
      while (j <= u && aug(i, j) == K(0)) ++j;
      if (j == u) return std::nullopt;  // 0 = nonzero: inconsistent
      pivot_col.push_back(j);
    }
    std::vector<bool> is_pivot(u, false);
    for (int p : pivot_col) is_pivot[p] = true;
    for (int i = 0; i < rank; ++i) {
      K val = aug(i, u);
      for (int j = pivot_col[i] + 1; j < u; ++j)
        if (!is_pivot[j]) val = val - aug(i, j);
      x[pivot_col[i]] = val;
    }
    Matrix<K> out = base_;
    for (std::size_t p = 0; p < pattern_.size(); ++p)
      out(pattern_[p].first, pattern_[p].second) = out(pattern_[p].first, pattern_[p].second) + x[p];
    return out;
  }

 private:
  int n_;
  Matrix<K> base_;
  std::vector<std::pair<int, int>> pattern_;
  std::vector<std::vector<K>> rows_;
};

// L,R term lists for the two relation families, with Y the unknown factor.
template <class K>
std::vector<std::pair<Matrix<K>, Matrix<K>>> t2_terms_left_known(const QParam<K>& q,
                                                                 const Matrix<K>& x) {
  // q X Y - q^{-1} Y X
  K qi = K(1) / q.value();
  return {{q.value() * x, Matrix<K>::identity(x.rows())},
          {(-qi) * Matrix<K>::identity(x.rows()), x}};
}

template <class K>
std::vector<std::pair<Matrix<K>, Matrix<K>>> t2_terms_right_known(const QParam<K>& q,
                                                                  const Matrix<K>& x) {
  // q Y X - q^{-1} X Y
  K qi = K(1) / q.value();
  return {{q.value() * Matrix<K>::identity(x.rows()), x},
          {(-qi) * x, Matrix<K>::identity(x.rows())}};
}

template <class K>
std::vector<std::pair<Matrix<K>, Matrix<K>>> qserre_terms(const QParam<K>& q, const Matrix<K>& x) {
  // X^3 Y - [3] X^2 Y X + [3] X Y X^2 - Y X^3
  K three = q_bracket(q, 3);
  Matrix<K> i = Matrix<K>::identity(x.rows());
  Matrix<K> x2 = x * x;
  Matrix<K> x3 = x2 * x;
  return {{x3, i}, {(-three) * x2, x}, {three * x, x2}, {K(-1) * i, x3}};
}

}  // namespace detail

/// The one-dimensional module: every generator acts as [eps].
template <class K>
ModuleRep<K> trivial_module(const QParam<K>& q, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("type must be +1 or -1");
  GenAssignment<K> a(1);
  Matrix<K> m(1, 1);
  m(0, 0) = K(eps);
  for (const auto& g : all_generators()) a.set(g, m);
  auto check = verify_module(q, a);
  if (!check.module) throw std::logic_error("trivial module failed certification");
  return *check.module;
}

/// Deterministic type-1 module of diameter d and dimension d+1 (shape all
/// ones). The [1,2] decomposition is pinned to the coordinate lines
/// (x_12 = diag(q^{d-2i})); the remaining generators carry the banded
/// patterns the action tables force in that basis, and their entries are
/// found by successive linear solves of the defining relations. Unresolved
/// entries are fixed to 1.
template <class K>
ModuleRep<K> evaluation_module(const QParam<K>& q, int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("evaluation_module: d must be in 1..4");
  int n = d + 1;
  std::vector<K> diag_down(n), diag_up(n);
  for (int i = 0; i < n; ++i) {
    diag_down[i] = q_power(q, d - 2 * i);
    diag_up[i] = q_power(q, 2 * i - d);
  }
  Matrix<K> x12 = diagonal(diag_down);
  Matrix<K> x01 = diagonal(diag_up);
  for (int i = 1; i < n; ++i) x01(i - 1, i) = K(1);  // diagonal gauge fixed

  K qi = K(1) / q.value();
  Matrix<K> ident = Matrix<K>::identity(n);
  Matrix<K> t2_rhs = (q.value() - qi) * ident;
  Matrix<K> zero(n, n);
  auto fail = [](const char* step) -> ModuleRep<K> {
    throw std::runtime_error(std::string("evaluation_module: ansatz system inconsistent at ") + step);
  };

  // x23: diag q^{2i-d} plus unknown subdiagonal; pinned by the q-Serre
  // relation against x01 (the t2 relation with x12 holds identically).
  std::vector<std::pair<int, int>> subdiag;
  for (int i = 1; i < n; ++i) subdiag.emplace_back(i, i - 1);
  detail::PatternSolver<K> s23(diagonal(diag_up), subdiag);
  s23.add_constraint(detail::t2_terms_left_known(q, x12), t2_rhs);
  s23.add_constraint(detail::qserre_terms(q, x01), zero);
  auto x23 = s23.solve();
  if (!x23) return fail("x23");

  // x30: tridiagonal, fully unknown.
  std::vector<std::pair<int, int>> tridiag;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j) tridiag.emplace_back(i, j);
  detail::PatternSolver<K> s30(zero, tridiag);
  s30.add_constraint(detail::t2_terms_left_known(q, *x23), t2_rhs);
  s30.add_constraint(detail::t2_terms_right_known(q, x01), t2_rhs);
  s30.add_constraint(detail::qserre_terms(q, x12), zero);
  auto x30 = s30.solve();
  if (!x30) return fail("x30");

  // x13: upper triangular with diagonal q^{d-2i}.
  std::vector<std::pair<int, int>> strict_upper;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) strict_upper.emplace_back(i, j);
  detail::PatternSolver<K> s13(diagonal(diag_down), strict_upper);
  s13.add_constraint(detail::t2_terms_left_known(q, x01), t2_rhs);
  s13.add_constraint(detail::t2_terms_right_known(q, *x30), t2_rhs);
  auto x13 = s13.solve();
  if (!x13) return fail("x13");

  // x20: diag q^{2i-d} plus unknown subdiagonal.
  detail::PatternSolver<K> s20(diagonal(diag_up), subdiag);
  s20.add_constraint(detail::t2_terms_left_known(q, x12), t2_rhs);
  s20.add_constraint(detail::t2_terms_right_known(q, x01), t2_rhs);
  auto x20 = s20.solve();
  if (!x20) return fail("x20");

  auto x02 = inverse(*x20);
  auto x31 = inverse(*x13);
  if (!x02 || !x31) return fail("inversion");

  GenAssignment<K> a(n);
  a.set(GenIndex(0, 1), x01);
  a.set(GenIndex(1, 2), x12);
  a.set(GenIndex(2, 3), *x23);
  a.set(GenIndex(3, 0), *x30);
  a.set(GenIndex(0, 2), *x02);
  a.set(GenIndex(1, 3), *x13);
  a.set(GenIndex(2, 0), *x20);
  a.set(GenIndex(3, 1), *x31);
  auto check = verify_module(q, a);
  if (!check.module)
    throw std::runtime_error("evaluation_module: solved assignment failed certification:\n" +
                             check.report.summary());
  return *check.module;
}

/// Basis change: every generator X -> T X T^{-1}; re-certifies.
template <class K>
ModuleRep<K> conjugate(const ModuleRep<K>& m, const Matrix<K>& t) {
  auto tinv = inverse(t);
  if (!tinv) throw std::invalid_argument("conjugate: singular matrix");
  GenAssignment<K> a(m.dim());
  for (const auto& g : all_generators()) a.set(g, t * m.generator(g) * *tinv);
  auto check = verify_module(m.q(), a);
  if (!check.module) throw std::logic_error("conjugation broke certification:\n" + check.report.summary());
  return *check.module;
}

/// Perturbs one entry of one generator; the result is an uncertified
/// assignment for negative testing.
template <class K>
GenAssignment<K> corrupt(const ModuleRep<K>& m, const GenIndex& g, int i, int j, const K& delta) {
  GenAssignment<K> a = m.assignment();
  a.at(g)(i, j) = a.at(g)(i, j) + delta;
  return a;
}

}  // namespace qtet
