#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtet/report.hpp"
#include "qtet/subspace.hpp"
#include "qtet/tetra.hpp"

namespace qtet {

// Eigenstructure of one generator: semisimple with eigenvalues
// {eps * q^{d-2i} | 0 <= i <= d}, every eigenspace nonzero.
template <class K>
struct SpectrumProfile {
  int eps = 1;
  int d = 0;
  std::vector<Subspace<K>> eigenspaces;  // ordered by eigenvalue q^d, q^{d-2}, ...
};

/// Scans eigenvalues eps*q^m for |m| <= dim-1 (the alphabet is known a
/// priori, so no characteristic polynomial is needed). eps=+1 is tried first.
template <class K>
std::optional<SpectrumProfile<K>> detect_spectrum(const QParam<K>& q, const Matrix<K>& m) {
  int n = m.rows();
  for (int eps : {1, -1}) {
    std::vector<int> exps;
    std::vector<Subspace<K>> spaces;
    int total = 0;
    for (int e = n - 1; e >= 1 - n; --e) {
      K lambda = q_power(q, e);
      if (eps < 0) lambda = -lambda;
      Subspace<K> es = eigenspace(m, lambda);
      if (!es.is_zero()) {
        exps.push_back(e);
        spaces.push_back(std::move(es));
        total += spaces.back().dim();
      }
    }
    if (exps.empty() || total != n) continue;
    int d = exps.front();
    if (exps.back() != -d) continue;
    bool contiguous = static_cast<int>(exps.size()) == d + 1;
    for (std::size_t i = 0; contiguous && i < exps.size(); ++i)
      if (exps[i] != d - 2 * static_cast<int>(i)) contiguous = false;
    if (!contiguous) continue;
    return SpectrumProfile<K>{eps, d, std::move(spaces)};
  }
  return std::nullopt;
}

// A certified finite-dimensional irreducible module: all relations hold,
// every generator has the prescribed semisimple spectrum, and the joint
// action is absolutely irreducible. Only constructible through verify_module.
template <class K>
class ModuleRep {
 public:
  const QParam<K>& q() const { return q_; }
  const GenAssignment<K>& assignment() const { return assign_; }
  const Matrix<K>& generator(const GenIndex& g) const { return assign_.at(g); }
  int type() const { return eps_; }
  int diameter() const { return d_; }
  int dim() const { return assign_.dim(); }

  friend bool operator==(const ModuleRep& a, const ModuleRep& b) {
    return a.assign_ == b.assign_ && a.eps_ == b.eps_ && a.d_ == b.d_;
  }

 private:
  ModuleRep(QParam<K> q, GenAssignment<K> assign, int eps, int d)
      : q_(std::move(q)), assign_(std::move(assign)), eps_(eps), d_(d) {}

  template <class K2>
  friend struct ModuleCheck;

  QParam<K> q_;
  GenAssignment<K> assign_;
  int eps_, d_;
};

template <class K>
struct ModuleCheck {
  std::optional<ModuleRep<K>> module;
  Report report;

  static ModuleCheck certified(QParam<K> q, GenAssignment<K> a, int eps, int d) {
    ModuleCheck c;
    c.module = ModuleRep<K>(std::move(q), std::move(a), eps, d);
    return c;
  }
};

template <class K>
std::string residual_summary(const Matrix<K>& m) {
  using qtet::to_string;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == K(0)))
        return "entry(" + std::to_string(i) + "," + std::to_string(j) + ")=" + to_string(m(i, j));
  return "zero";
}

/// Certification-on-construction for modules: relation residuals, spectrum
/// profile of every generator, and Burnside irreducibility.
template <class K>
ModuleCheck<K> verify_module(const QParam<K>& q, const GenAssignment<K>& a) {
  ModuleCheck<K> out;
  for (const auto& rel : all_relations()) {
    Matrix<K> res = relation_residual(q, a, rel);
    if (!res.is_zero())
      out.report.fail(rel.label(), "", residual_summary(res));
  }
  if (!out.report.ok()) return out;

  auto ref = detect_spectrum(q, a.at(GenIndex(0, 1)));
  if (!ref) {
    out.report.fail("Sec2.spectrum", "x01", "no admissible type/diameter profile");
    return out;
  }
  for (const auto& g : all_generators()) {
    auto prof = detect_spectrum(q, a.at(g));
    if (!prof || prof->eps != ref->eps || prof->d != ref->d) {
      out.report.fail("Sec2.spectrum", g.name(), "spectrum profile disagrees with x01");
      return out;
    }
  }

  std::vector<Matrix<K>> gens;
  for (const auto& g : all_generators()) gens.push_back(a.at(g));
  int n = a.dim();
  int closure = algebra_closure_dim(gens);
  if (closure != n * n) {
    out.report.fail("Sec2.irreducible", "",
                    "algebra closure dim " + std::to_string(closure) + " < " + std::to_string(n * n));
    return out;
  }
  return ModuleCheck<K>::certified(q, a, ref->eps, ref->d);
}

/// Replaces each generator by eps * generator; the result has type 1.
template <class K>
ModuleRep<K> normalize_type(const ModuleRep<K>& m) {
  if (m.type() == 1) return m;
  GenAssignment<K> a(m.dim());
  for (const auto& g : all_generators()) a.set(g, K(m.type()) * m.generator(g));
  auto check = verify_module(m.q(), a);
  if (!check.module) throw std::logic_error("normalize_type broke certification:\n" + check.report.summary());
  return *check.module;
}

/// Decomposition [r,s]: eigenspaces of x_rs ordered by eigenvalue
/// q^d, q^{d-2}, ..., q^{-d}.
template <class K>
Decomposition<K> decomposition_rs(const ModuleRep<K>& m, const GenIndex& g) {
  if (m.type() != 1) throw std::invalid_argument("decomposition_rs requires a type-1 module");
  std::vector<Subspace<K>> comps;
  for (int i = 0; i <= m.diameter(); ++i) {
    Subspace<K> es = eigenspace(m.generator(g), q_power(m.q(), m.diameter() - 2 * i));
    if (es.is_zero()) throw std::logic_error("certified module has an empty eigenspace");
    comps.push_back(std::move(es));
  }
  auto dec = Decomposition<K>::make(std::move(comps));
  if (!dec) throw std::logic_error("eigenspaces of a certified generator failed to decompose V");
  return *dec;
}

/// Component dimensions; identical for all 8 generators and palindromic.
template <class K>
std::vector<int> shape(const ModuleRep<K>& m) {
  std::optional<std::vector<int>> ref;
  for (const auto& g : all_generators()) {
    std::vector<int> s = decomposition_rs(m, g).shape();
    if (!ref)
      ref = s;
    else if (*ref != s)
      throw std::logic_error("shape disagrees between generators (module not certified?)");
  }
  int d = m.diameter();
  for (int i = 0; i <= d; ++i)
    if ((*ref)[i] != (*ref)[d - i]) throw std::logic_error("shape is not palindromic");
  return *ref;
}

template <class K>
struct FourFlags {
  std::vector<Flag<K>> flags;  // indexed by n in Z4
  Report report;
};

/// The flags [n], n in Z4: [r,s] induces [r] and its inversion induces [s];
/// all defining routes must agree, and the four flags must be mutually
/// opposite.
template <class K>
FourFlags<K> four_flags(const ModuleRep<K>& m) {
  FourFlags<K> out;
  for (int n = 0; n < 4; ++n) {
    std::vector<Flag<K>> candidates;
    candidates.push_back(induced_flag(decomposition_rs(m, GenIndex(n, n + 1))));
    candidates.push_back(induced_flag(decomposition_rs(m, GenIndex(n, n + 2))));
    candidates.push_back(induced_flag(decomposition_rs(m, GenIndex(n - 1, n)).inversion()));
    candidates.push_back(induced_flag(decomposition_rs(m, GenIndex(n + 2, n)).inversion()));
    for (std::size_t c = 1; c < candidates.size(); ++c)
      if (candidates[c] != candidates[0])
        out.report.fail("Thm7.7.inducing", "[" + std::to_string(n) + "] route " + std::to_string(c));
    out.flags.push_back(candidates[0]);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      if (!flags_opposite(out.flags[i], out.flags[j]))
        out.report.fail("Thm7.9.opposite", "[" + std::to_string(i) + "],[" + std::to_string(j) + "]");
    }
  return out;
}

/// Thm 7.10: component i of [r,s] equals flag[r]_i ∩ flag[s]_{d-i}.
template <class K>
Report check_flag_intersection(const ModuleRep<K>& m) {
  Report report;
  auto ff = four_flags(m);
  report.merge(ff.report);
  if (!report.ok()) return report;
  int d = m.diameter();
  for (const auto& g : all_generators()) {
    Decomposition<K> dec = decomposition_rs(m, g);
    for (int i = 0; i <= d; ++i) {
      Subspace<K> rhs = intersect(ff.flags[g.r].component(i), ff.flags[g.s].component(d - i));
      if (!(dec.component(i) == rhs))
        report.fail("Thm7.10", g.name() + ".i" + std::to_string(i));
    }
  }
  return report;
}

namespace detail {

// One row of the Thm 7.5 / 7.6 tables: the action of X on component U_i of a
// decomposition, phrased as (X - q^{shift}I)U_i ⊆ U_lo + ... + U_hi.
template <class K>
bool table_row_holds(const ModuleRep<K>& m, const Matrix<K>& x, const Decomposition<K>& dec,
                     int i, std::optional<int> shift_exp, int lo, int hi) {
  Matrix<K> op = x;
  if (shift_exp) {
    K lambda = q_power(m.q(), *shift_exp);
    for (int r = 0; r < op.rows(); ++r) op(r, r) = op(r, r) - lambda;
  }
  Subspace<K> image = image_under(op, dec.component(i));
  if (lo > hi) return image.is_zero();
  return dec.partial_sum(lo, hi).contains(image);
}

}  // namespace detail

/// Exhaustive check of both action tables (12 rows) for every r in Z4.
template <class K>
Report verify_action_tables(const ModuleRep<K>& m) {
  Report report;
  int d = m.diameter();
  auto run = [&](const std::string& row, const Matrix<K>& x, const GenIndex& dec_idx, auto spec) {
    Decomposition<K> dec = decomposition_rs(m, dec_idx);
    for (int i = 0; i <= d; ++i) {
      auto [shift, lo, hi] = spec(i);
      if (!detail::table_row_holds(m, x, dec, i, shift, lo, hi))
        report.fail(row, "dec " + dec_idx.name().substr(1) + ", i=" + std::to_string(i));
    }
  };
  using Row = std::tuple<std::optional<int>, int, int>;
  for (int r = 0; r < 4; ++r) {
    const Matrix<K>& x1 = m.generator(GenIndex(r, r + 1));
    std::string t5 = "Thm7.5.r" + std::to_string(r) + ".";
    run(t5 + "[r,r+1]", x1, GenIndex(r, r + 1),
        [&](int i) { return Row{d - 2 * i, 1, 0}; });
    run(t5 + "[r+1,r+2]", x1, GenIndex(r + 1, r + 2),
        [&](int i) { return Row{2 * i - d, i - 1, i - 1}; });
    run(t5 + "[r+2,r+3]", x1, GenIndex(r + 2, r + 3),
        [&](int i) { return Row{std::nullopt, i - 1, i + 1}; });
    run(t5 + "[r+3,r]", x1, GenIndex(r + 3, r),
        [&](int i) { return Row{2 * i - d, i + 1, i + 1}; });
    run(t5 + "[r,r+2]", x1, GenIndex(r, r + 2),
        [&](int i) { return Row{d - 2 * i, i - 1, i - 1}; });
    run(t5 + "[r+1,r+3]", x1, GenIndex(r + 1, r + 3),
        [&](int i) { return Row{2 * i - d, i - 1, i - 1}; });

    const Matrix<K>& x2 = m.generator(GenIndex(r, r + 2));
    std::string t6 = "Thm7.6.r" + std::to_string(r) + ".";
    run(t6 + "[r,r+1]", x2, GenIndex(r, r + 1),
        [&](int i) { return Row{d - 2 * i, 0, i - 1}; });
    run(t6 + "[r+1,r+2]", x2, GenIndex(r + 1, r + 2),
        [&](int i) { return Row{d - 2 * i, i + 1, d}; });
    run(t6 + "[r+2,r+3]", x2, GenIndex(r + 2, r + 3),
        [&](int i) { return Row{2 * i - d, i - 1, i - 1}; });
    run(t6 + "[r+3,r]", x2, GenIndex(r + 3, r),
        [&](int i) { return Row{2 * i - d, i + 1, i + 1}; });
    run(t6 + "[r,r+2]", x2, GenIndex(r, r + 2),
        [&](int i) { return Row{d - 2 * i, 1, 0}; });
    run(t6 + "[r+1,r+3]", x2, GenIndex(r + 1, r + 3),
        [&](int i) { return Row{std::nullopt, i - 1, d}; });
  }
  return report;
}

}  // namespace qtet
