#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtet/scalar.hpp"

namespace qtet {

// Univariate polynomials over the rationals, coefficient of q^i at index i.
// Zero is the empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  Poly(Rat c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly var() { return Poly(std::vector<Rat>{0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& leading() const { return coeffs_.back(); }
  Rat coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rat(0);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Euclidean division; b must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r(a.coeffs_);
    std::vector<Rat> q;
    int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db) {
      int dr = static_cast<int>(r.size()) - 1;
      Rat f = r.back() / b.leading();
      if (static_cast<int>(q.size()) < dr - db + 1) q.resize(dr - db + 1, Rat(0));
      q[dr - db] = f;
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.coeffs_[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (r.empty()) break;
    }
    quo = Poly(std::move(q));
    rem = Poly(std::move(r));
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) {
      Rat lead = a.leading();
      for (auto& c : a.coeffs_) c /= lead;  // monic
    }
    return a;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (coeffs_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[i].str() + ")";
      if (i == 1)
        out += "*q";
      else if (i > 1)
        out += "*q^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

// Rational functions in q over the rationals: reduced ratio num/den with
// den monic and gcd(num,den)=1. Satisfies the same field interface as Rat,
// so every template in this library can run with the indeterminate q.
class RatFun {
 public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(int v) : num_(Rat(v)), den_(Rat(1)) {}
  RatFun(Rat v) : num_(std::move(v)), den_(Rat(1)) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RatFun var() { return RatFun(Poly::var(), Poly(Rat(1))); }

  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
  RatFun& operator/=(const RatFun& b) { return *this = *this / b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rat(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
    Rat lead = den_.leading();
    num_ = num_ * Poly(Rat(1) / lead);
    den_ = den_ * Poly(Rat(1) / lead);
  }

  Poly num_, den_;
};

inline std::string to_string(const RatFun& f) { return f.str(); }

}  // namespace qtet
