#pragma once

#include <string>
#include <vector>

#include "uag/common.hpp"

namespace uag {

// Canonical element b^n a^m of the bicyclic monoid <a, b | ab = 1>.
struct Bicyclic {
  long long n = 0, m = 0;

  bool operator==(const Bicyclic& o) const { return n == o.n && m == o.m; }
  bool operator!=(const Bicyclic& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s;
    if (n == 1) s += "b";
    else if (n > 1) s += "b^" + std::to_string(n);
    if (m == 1) s += "a";
    else if (m > 1) s += "a^" + std::to_string(m);
    if (s.empty()) s = "1";
    return s;
  }
};

// (b^n1 a^m1)(b^n2 a^m2): the middle a^m1 b^n2 collapses through ab = 1,
// leaving whichever side is longer.
inline Bicyclic mul(const Bicyclic& x, const Bicyclic& y) {
  if (x.n < 0 || x.m < 0 || y.n < 0 || y.m < 0)
    throw Error(ErrorKind::BadArgument, "bicyclic exponents must be nonnegative");
  if (x.m <= y.n) return {x.n + y.n - x.m, y.m};
  return {x.n, x.m - y.n + y.m};
}

inline Bicyclic pow(const Bicyclic& x, long long k) {
  Bicyclic acc;  // identity
  for (long long i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

// Witness that the bicyclic monoid is not equationally Noetherian: at the
// point (x,y,z) = (b, a, b^n a^n) the equation x^i y^i z = z holds for all
// i <= n but fails at i = n+1.
struct BicyclicWitnessReport {
  long long n = 0;
  bool holds_up_to_n = true;
  bool fails_at_n_plus_1 = false;
  Bicyclic value_at_n_plus_1;  // value of x^{n+1} y^{n+1} z
  Bicyclic z;
};

inline BicyclicWitnessReport bicyclic_witness(long long n) {
  if (n < 0) throw Error(ErrorKind::BadArgument, "witness index must be nonnegative");
  BicyclicWitnessReport rep;
  rep.n = n;
  Bicyclic b{1, 0}, a{0, 1}, z{n, n};
  rep.z = z;
  for (long long i = 1; i <= n; ++i) {
    Bicyclic lhs = mul(mul(pow(b, i), pow(a, i)), z);
    if (lhs != z) rep.holds_up_to_n = false;
  }
  Bicyclic at = mul(mul(pow(b, n + 1), pow(a, n + 1)), z);
  rep.fails_at_n_plus_1 = at != z;
  rep.value_at_n_plus_1 = at;
  return rep;
}

}  // namespace uag
