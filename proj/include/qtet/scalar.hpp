#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qtet {

// Exact rational scalar. cpp_rational keeps gcd(num,den)=1 and den>0 on
// every operation, so equality is bit-exact.
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& x) { return x.str(); }

/// Parses "p" or "p/q" with an optional leading minus. Throws on anything else.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar string");
  std::size_t i = 0;
  if (s[0] == '-') i = 1;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw std::invalid_argument("malformed scalar string: " + s);
    }
  }
  if (!digits) throw std::invalid_argument("malformed scalar string: " + s);
  Rat r(s);
  return r;
}

// The deformation parameter. Any rational with |q| not in {0,1} is
// automatically not a root of unity, which is all the theory needs.
template <class K>
class QParam {
 public:
  explicit QParam(K value) : q_(std::move(value)) {
    if (q_ == K(0) || q_ == K(1) || q_ == K(-1))
      throw std::invalid_argument("q must not be 0, 1 or -1");
  }

  const K& value() const { return q_; }

 private:
  K q_;
};

template <class K>
K q_power(const QParam<K>& p, long m) {
  K base = m >= 0 ? p.value() : K(1) / p.value();
  unsigned long e = m >= 0 ? static_cast<unsigned long>(m)
                           : static_cast<unsigned long>(-m);
  K acc(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1}).
template <class K>
K q_bracket(const QParam<K>& p, long n) {
  if (n < 0) throw std::invalid_argument("q_bracket: n must be nonnegative");
  K qi = K(1) / p.value();
  return (q_power(p, n) - q_power(p, -n)) / (p.value() - qi);
}

}  // namespace qtet
