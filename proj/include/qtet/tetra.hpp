#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtet/matrix.hpp"
#include "qtet/scalar.hpp"

namespace qtet {

inline int z4(int v) { return ((v % 4) + 4) % 4; }

// Index (r,s) of a generator x_rs, r,s in Z4 with s-r = 1 or 2. There are
// exactly eight.
struct GenIndex {
  int r, s;

  GenIndex(int r_, int s_) : r(z4(r_)), s(z4(s_)) {
    int diff = z4(s - r);
    if (diff != 1 && diff != 2) throw std::invalid_argument("invalid generator index");
  }

  int step() const { return z4(s - r); }

  std::string name() const { return "x" + std::to_string(r) + std::to_string(s); }

  static GenIndex from_name(const std::string& n) {
    if (n.size() == 3 && n[0] == 'x' && n[1] >= '0' && n[1] <= '3' && n[2] >= '0' && n[2] <= '3')
      return GenIndex(n[1] - '0', n[2] - '0');
    throw std::invalid_argument("invalid generator name: " + n);
  }

  friend bool operator==(const GenIndex& a, const GenIndex& b) { return a.r == b.r && a.s == b.s; }
};

// Serialization order of the eight generators.
inline const std::array<GenIndex, 8>& all_generators() {
  static const std::array<GenIndex, 8> gens = {
      GenIndex(0, 1), GenIndex(1, 2), GenIndex(2, 3), GenIndex(3, 0),
      GenIndex(0, 2), GenIndex(1, 3), GenIndex(2, 0), GenIndex(3, 1)};
  return gens;
}

inline int gen_slot(const GenIndex& g) {
  return g.step() == 1 ? g.r : 4 + g.r;
}

// Candidate action of the eight generators on F^dim.
template <class K>
class GenAssignment {
 public:
  explicit GenAssignment(int dim) : dim_(dim), mats_() {
    if (dim <= 0) throw std::invalid_argument("assignment dimension must be positive");
    mats_.fill(Matrix<K>(dim, dim));
  }

  int dim() const { return dim_; }

  Matrix<K>& at(const GenIndex& g) { return mats_[gen_slot(g)]; }
  const Matrix<K>& at(const GenIndex& g) const { return mats_[gen_slot(g)]; }

  void set(const GenIndex& g, Matrix<K> m) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("generator matrix size mismatch");
    mats_[gen_slot(g)] = std::move(m);
  }

  friend bool operator==(const GenAssignment& a, const GenAssignment& b) {
    return a.dim_ == b.dim_ && a.mats_ == b.mats_;
  }
  friend bool operator!=(const GenAssignment& a, const GenAssignment& b) { return !(a == b); }

 private:
  int dim_;
  std::array<Matrix<K>, 8> mats_;
};

/// (t1) residual: X_{r,r+2} X_{r+2,r} - I.
template <class K>
Matrix<K> residual_t1(const GenAssignment<K>& a, int r) {
  return a.at(GenIndex(r, r + 2)) * a.at(GenIndex(r + 2, r)) - Matrix<K>::identity(a.dim());
}

/// (t2) residual, normalized so zero means the relation holds:
/// (q X_rs X_st - q^{-1} X_st X_rs)/(q - q^{-1}) - I.
template <class K>
Matrix<K> residual_t2(const QParam<K>& q, const GenAssignment<K>& a, int r, int s, int t) {
  int d1 = z4(s - r), d2 = z4(t - s);
  bool valid = (d1 == 1 && d2 == 1) || (d1 == 1 && d2 == 2) || (d1 == 2 && d2 == 1);
  if (!valid) throw std::invalid_argument("invalid (t2) index pattern");
  const Matrix<K>& x = a.at(GenIndex(r, s));
  const Matrix<K>& y = a.at(GenIndex(s, t));
  K qv = q.value();
  K qi = K(1) / qv;
  K denom = qv - qi;
  return (K(1) / denom) * (qv * (x * y) - qi * (y * x)) - Matrix<K>::identity(a.dim());
}

/// (qserre) residual for X = x_{r,r+1}, Y = x_{r+2,r+3}:
/// X^3 Y - [3]_q X^2 Y X + [3]_q X Y X^2 - Y X^3.
template <class K>
Matrix<K> residual_qserre(const QParam<K>& q, const GenAssignment<K>& a, int r) {
  const Matrix<K>& x = a.at(GenIndex(r, r + 1));
  const Matrix<K>& y = a.at(GenIndex(r + 2, r + 3));
  K three = q_bracket(q, 3);
  Matrix<K> x2 = x * x;
  Matrix<K> x3 = x2 * x;
  return x3 * y - three * (x2 * (y * x)) + three * (x * (y * x2)) - y * x3;
}

struct RelationId {
  enum class Family { T1, T2, QSerre } family;
  int r, s, t;  // s,t meaningful for T2 only
  std::string label() const {
    switch (family) {
      case Family::T1:
        return "Def2.1.t1.r" + std::to_string(r);
      case Family::T2:
        return "Def2.1.t2.(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
      case Family::QSerre:
        return "Def2.1.qserre.r" + std::to_string(r);
    }
    return "";
  }
};

/// Enumerates all defining relations: 4 (t1), 12 (t2), 4 (qserre).
inline std::vector<RelationId> all_relations() {
  std::vector<RelationId> rels;
  for (int r = 0; r < 4; ++r) rels.push_back({RelationId::Family::T1, r, 0, 0});
  for (int r = 0; r < 4; ++r)
    for (auto [d1, d2] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}})
      rels.push_back({RelationId::Family::T2, r, z4(r + d1), z4(r + d1 + d2)});
  for (int r = 0; r < 4; ++r) rels.push_back({RelationId::Family::QSerre, r, 0, 0});
  return rels;
}

template <class K>
Matrix<K> relation_residual(const QParam<K>& q, const GenAssignment<K>& a, const RelationId& rel) {
  switch (rel.family) {
    case RelationId::Family::T1:
      return residual_t1(a, rel.r);
    case RelationId::Family::T2:
      return residual_t2(q, a, rel.r, rel.s, rel.t);
    case RelationId::Family::QSerre:
      return residual_qserre(q, a, rel.r);
  }
  throw std::logic_error("unreachable");
}

/// Automorphism rho: output at (r,s) is the input at (r-1,s-1); rho^4 = 1.
template <class K>
GenAssignment<K> apply_rho(const GenAssignment<K>& a) {
  GenAssignment<K> out(a.dim());
  for (const auto& g : all_generators())
    out.set(g, a.at(GenIndex(g.r - 1, g.s - 1)));
  return out;
}

/// Sign-flip automorphism: negate every generator matrix.
template <class K>
GenAssignment<K> apply_sign_flip(const GenAssignment<K>& a) {
  GenAssignment<K> out(a.dim());
  for (const auto& g : all_generators()) out.set(g, -a.at(g));
  return out;
}

}  // namespace qtet
