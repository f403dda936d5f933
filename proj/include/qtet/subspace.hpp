#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qtet/matrix.hpp"

namespace qtet {

// Subspace of F^n stored as a reduced row-echelon basis with no zero rows.
// The representation is unique, so operator== decides subspace equality.
template <class K>
class Subspace {
 public:
  static Subspace span(int ambient, Matrix<K> rows) {
    if (rows.cols() != ambient) throw std::invalid_argument("spanning rows: ambient mismatch");
    int rank = rref_in_place(rows);
    Matrix<K> basis(rank, ambient);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < ambient; ++j) basis(i, j) = rows(i, j);
    return Subspace(ambient, std::move(basis));
  }

  static Subspace span_rows(const std::vector<std::vector<K>>& rows, int ambient) {
    Matrix<K> m(static_cast<int>(rows.size()), ambient);
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != ambient)
        throw std::invalid_argument("spanning rows: ambient mismatch");
      for (int j = 0; j < ambient; ++j) m(i, j) = rows[i][j];
    }
    return span(ambient, std::move(m));
  }

  static Subspace zero(int ambient) { return Subspace(ambient, Matrix<K>(0, ambient)); }
  static Subspace full(int ambient) { return Subspace(ambient, Matrix<K>::identity(ambient)); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Reduces v against the basis; nonzero residual means v is outside.
  bool contains(std::vector<K> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!(x == K(0))) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
    for (int i = 0; i < other.dim(); ++i) {
      std::vector<K> v(ambient_);
      for (int j = 0; j < ambient_; ++j) v[j] = other.basis_(i, j);
      if (!contains(std::move(v))) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(int ambient, Matrix<K> basis) : ambient_(ambient), basis_(std::move(basis)) {}

  void reduce(std::vector<K>& v) const {
    for (int i = 0; i < basis_.rows(); ++i) {
      int lead = leading_col(i);
      if (!(v[lead] == K(0))) {
        K f = v[lead];
        for (int j = lead; j < ambient_; ++j) v[j] = v[j] - f * basis_(i, j);
      }
    }
  }

  int leading_col(int row) const {
    for (int j = 0; j < ambient_; ++j)
      if (!(basis_(row, j) == K(0))) return j;
    return ambient_;  // unreachable for a valid basis
  }

  int ambient_;
  Matrix<K> basis_;
};

template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
  Matrix<K> r = m;
  int rank = rref_in_place(r);
  int n = m.cols();
  std::vector<int> pivot_col(rank);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) {
    int j = 0;
    while (r(i, j) == K(0)) ++j;
    pivot_col[i] = j;
    is_pivot[j] = true;
  }
  std::vector<std::vector<K>> rows;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(n, K(0));
    v[f] = K(1);
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -r(i, f);
    rows.push_back(std::move(v));
  }
  return Subspace<K>::span_rows(rows, n);
}

template <class K>
Subspace<K> eigenspace(const Matrix<K>& m, const K& lambda) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenspace of non-square matrix");
  Matrix<K> shifted = m;
  for (int i = 0; i < m.rows(); ++i) shifted(i, i) = shifted(i, i) - lambda;
  return kernel(shifted);
}

/// Image of a subspace under a linear map: row vectors go through M^T.
template <class K>
Subspace<K> image_under(const Matrix<K>& m, const Subspace<K>& s) {
  return Subspace<K>::span(m.rows(), s.basis() * transpose(m));
}

template <class K>
Subspace<K> subspace_sum(const std::vector<Subspace<K>>& parts) {
  if (parts.empty()) throw std::invalid_argument("subspace_sum of empty list");
  int n = parts[0].ambient();
  int total = 0;
  for (const auto& s : parts) {
    if (s.ambient() != n) throw std::invalid_argument("ambient mismatch");
    total += s.dim();
  }
  Matrix<K> stacked(total, n);
  int row = 0;
  for (const auto& s : parts)
    for (int i = 0; i < s.dim(); ++i, ++row)
      for (int j = 0; j < n; ++j) stacked(row, j) = s.basis()(i, j);
  return Subspace<K>::span(n, std::move(stacked));
}

/// Zassenhaus: rref of [A|A; B|0] — rows with zero left block carry the
/// intersection in the right block.
template <class K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  int n = a.ambient();
  Matrix<K> z(a.dim() + b.dim(), 2 * n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  rref_in_place(z);
  std::vector<std::vector<K>> rows;
  for (int i = 0; i < z.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!(z(i, j) == K(0))) left_zero = false;
    if (!left_zero) continue;
    std::vector<K> v(n);
    for (int j = 0; j < n; ++j) v[j] = z(i, n + j);
    rows.push_back(std::move(v));
  }
  return Subspace<K>::span_rows(rows, n);
}

template <class K>
bool is_decomposition(const std::vector<Subspace<K>>& parts) {
  if (parts.empty()) return false;
  int n = parts[0].ambient();
  int total = 0;
  for (const auto& s : parts) {
    if (s.ambient() != n) throw std::invalid_argument("ambient mismatch");
    if (s.dim() == 0) return false;
    total += s.dim();
  }
  return total == n && subspace_sum(parts).dim() == n;
}

// Ordered direct-sum decomposition of the ambient space; components nonzero.
template <class K>
class Decomposition {
 public:
  static std::optional<Decomposition> make(std::vector<Subspace<K>> components) {
    if (!is_decomposition(components)) return std::nullopt;
    return Decomposition(std::move(components));
  }

  int ambient() const { return components_[0].ambient(); }
  int diameter() const { return static_cast<int>(components_.size()) - 1; }
  const Subspace<K>& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<Subspace<K>>& components() const { return components_; }

  std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& c : components_) s.push_back(c.dim());
    return s;
  }

  Decomposition inversion() const {
    std::vector<Subspace<K>> rev(components_.rbegin(), components_.rend());
    return Decomposition(std::move(rev));
  }

  /// Sum of components lo..hi, clamped; empty range gives the zero subspace.
  Subspace<K> partial_sum(int lo, int hi) const {
    lo = std::max(lo, 0);
    hi = std::min(hi, diameter());
    if (lo > hi) return Subspace<K>::zero(ambient());
    std::vector<Subspace<K>> parts(components_.begin() + lo, components_.begin() + hi + 1);
    return subspace_sum(parts);
  }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.components_ == b.components_;
  }
  friend bool operator!=(const Decomposition& a, const Decomposition& b) { return !(a == b); }

 private:
  explicit Decomposition(std::vector<Subspace<K>> components)
      : components_(std::move(components)) {}
  std::vector<Subspace<K>> components_;
};

// Nested chain F_0 < F_1 < ... < F_d with F_d the ambient space.
template <class K>
class Flag {
 public:
  static std::optional<Flag> make(std::vector<Subspace<K>> components) {
    if (components.empty()) return std::nullopt;
    int n = components[0].ambient();
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (components[i].ambient() != n) return std::nullopt;
      if (i > 0 && !(components[i].contains(components[i - 1]) &&
                     components[i].dim() > components[i - 1].dim()))
        return std::nullopt;
    }
    if (components[0].dim() == 0 || !components.back().is_full()) return std::nullopt;
    return Flag(std::move(components));
  }

  int ambient() const { return components_[0].ambient(); }
  int diameter() const { return static_cast<int>(components_.size()) - 1; }
  const Subspace<K>& component(int i) const { return components_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Flag& a, const Flag& b) { return a.components_ == b.components_; }
  friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }

 private:
  explicit Flag(std::vector<Subspace<K>> components) : components_(std::move(components)) {}
  std::vector<Subspace<K>> components_;
};

template <class K>
Flag<K> induced_flag(const Decomposition<K>& d) {
  std::vector<Subspace<K>> comps;
  for (int i = 0; i <= d.diameter(); ++i) comps.push_back(d.partial_sum(0, i));
  auto f = Flag<K>::make(std::move(comps));
  if (!f) throw std::logic_error("decomposition failed to induce a flag");
  return *f;
}

/// Recovers the unique decomposition with U_i = F_i ∩ F'_{d-i} when the two
/// flags are opposite; empty otherwise. Also demands F_i ∩ F'_j = 0 for i+j<d.
template <class K>
std::optional<Decomposition<K>> flags_opposite(const Flag<K>& f, const Flag<K>& g) {
  if (f.diameter() != g.diameter()) throw std::invalid_argument("flag diameter mismatch");
  if (f.ambient() != g.ambient()) throw std::invalid_argument("ambient mismatch");
  int d = f.diameter();
  std::vector<Subspace<K>> u;
  for (int i = 0; i <= d; ++i) u.push_back(intersect(f.component(i), g.component(d - i)));
  auto dec = Decomposition<K>::make(std::move(u));
  if (!dec) return std::nullopt;
  if (induced_flag(*dec) != f) return std::nullopt;
  if (induced_flag(dec->inversion()) != g) return std::nullopt;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j < d; ++j)
      if (!intersect(f.component(i), g.component(j)).is_zero()) return std::nullopt;
  return dec;
}

namespace detail {

// Incremental row-space accumulator kept in reduced form.
template <class K>
class RowSpan {
 public:
  explicit RowSpan(int width) : width_(width) {}

  int dim() const { return static_cast<int>(rows_.size()); }

  // Returns true if the row enlarged the span.
  bool insert(std::vector<K> v) {
    for (const auto& [lead, row] : rows_) {
      if (!(v[lead] == K(0))) {
        K f = v[lead];
        for (int j = lead; j < width_; ++j) v[j] = v[j] - f * row[j];
      }
    }
    int lead = -1;
    for (int j = 0; j < width_; ++j)
      if (!(v[j] == K(0))) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    K inv = K(1) / v[lead];
    for (int j = lead; j < width_; ++j) v[j] = inv * v[j];
    rows_.emplace_back(lead, std::move(v));
    return true;
  }

 private:
  int width_;
  std::vector<std::pair<int, std::vector<K>>> rows_;
};

template <class K>
std::vector<K> flatten(const Matrix<K>& m) {
  std::vector<K> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace detail

/// Dimension of the unital matrix algebra generated by gens: seed with I and
/// the generators, right-multiply the frontier by each generator until the
/// span stops growing (fixpoint, not a word-length cap). Absolute
/// irreducibility holds iff the result is n^2 (Burnside).
template <class K>
int algebra_closure_dim(const std::vector<Matrix<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("algebra_closure_dim: empty generator list");
  int n = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator size mismatch");
  detail::RowSpan<K> span(n * n);
  std::vector<Matrix<K>> frontier;
  auto push = [&](const Matrix<K>& m) {
    if (span.insert(detail::flatten(m))) frontier.push_back(m);
  };
  push(Matrix<K>::identity(n));
  for (const auto& g : gens) push(g);
  while (!frontier.empty()) {
    std::vector<Matrix<K>> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        Matrix<K> prod = m * g;
        if (span.insert(detail::flatten(prod))) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return span.dim();
}

/// Projections F_i onto the components of a decomposition (F_i acts as the
/// identity on component i and kills the others).
template <class K>
std::vector<Matrix<K>> projections(const Decomposition<K>& dec) {
  int n = dec.ambient();
  Matrix<K> basis_cols(n, n);
  std::vector<int> offsets;
  int col = 0;
  for (int i = 0; i <= dec.diameter(); ++i) {
    offsets.push_back(col);
    const auto& b = dec.component(i).basis();
    for (int r = 0; r < b.rows(); ++r, ++col)
      for (int j = 0; j < n; ++j) basis_cols(j, col) = b(r, j);
  }
  offsets.push_back(col);
  auto inv = inverse(basis_cols);
  if (!inv) throw std::logic_error("decomposition basis not invertible");
  std::vector<Matrix<K>> projs;
  for (int i = 0; i <= dec.diameter(); ++i) {
    Matrix<K> sel(n, n);
    for (int c = offsets[i]; c < offsets[i + 1]; ++c) sel(c, c) = K(1);
    projs.push_back(basis_cols * sel * *inv);
  }
  return projs;
}

/// The unique operator acting as eigs[i] on component i of the decomposition.
template <class K>
Matrix<K> semisimple_operator(const Decomposition<K>& dec, const std::vector<K>& eigs) {
  if (static_cast<int>(eigs.size()) != dec.diameter() + 1)
    throw std::invalid_argument("eigenvalue count mismatch");
  auto projs = projections(dec);
  Matrix<K> s(dec.ambient(), dec.ambient());
  for (std::size_t i = 0; i < projs.size(); ++i) s = s + eigs[i] * projs[i];
  return s;
}

}  // namespace qtet
