#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "uag/finite_algebra.hpp"
#include "uag/intmat.hpp"

namespace uag {

// Finitely generated abelian group Z^rank + sum of Z_{p^e} factors.  Torsion
// factors are kept sorted by (p, e) for canonical comparison.
struct FGAbelianGroup {
  int rank = 0;
  std::vector<std::pair<Int, int>> torsion;  // (prime, exponent), sorted

  void canonicalize() { std::sort(torsion.begin(), torsion.end()); }

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool torsion_free() const { return torsion.empty(); }
  bool finite() const { return rank == 0; }

  Int torsion_order() const {
    Int n = 1;
    for (const auto& [p, e] : torsion)
      for (int i = 0; i < e; ++i) n *= p;
    return n;
  }

  bool operator==(const FGAbelianGroup& o) const {
    return rank == o.rank && torsion == o.torsion;
  }
  bool operator<(const FGAbelianGroup& o) const {
    if (rank != o.rank) return rank < o.rank;
    return torsion < o.torsion;
  }

  std::string to_string() const {
    if (trivial()) return "0";
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (const auto& [p, e] : torsion) {
      Int q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      if (!s.empty()) s += " + ";
      s += "Z_" + q.str();
    }
    return s;
  }
};

namespace detail {

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Writes q as p^e for a prime p, or fails.
inline std::pair<Int, int> prime_power(Int q) {
  if (q < 2) throw Error(ErrorKind::BadArgument, "torsion order must be >= 2");
  Int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1)
    throw Error(ErrorKind::BadArgument, "torsion order is not a prime power");
  return {p, e};
}

}  // namespace detail

// Parses literals like "Z^2 + Z_8 + Z_3", "Z", "Z_4", "0".
inline FGAbelianGroup parse_abelian_group(const std::string& text) {
  FGAbelianGroup g;
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '+') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  for (const auto& part : parts) {
    if (part.empty())
      throw Error(ErrorKind::Syntax, "empty summand in abelian group literal");
    if (part == "0") continue;
    if (part == "Z") {
      g.rank += 1;
      continue;
    }
    if (part.rfind("Z^", 0) == 0) {
      g.rank += std::stoi(part.substr(2));
      continue;
    }
    if (part.rfind("Z_", 0) == 0) {
      std::string num = part.substr(2);
      if (!num.empty() && num.front() == '{' && num.back() == '}')
        num = num.substr(1, num.size() - 2);
      g.torsion.push_back(detail::prime_power(Int(num)));
      continue;
    }
    throw Error(ErrorKind::Syntax, "cannot parse abelian summand '" + part + "'");
  }
  g.canonicalize();
  return g;
}

// Finite rendering as an explicit algebra in the language {add, neg, zero}.
inline FiniteAlgebra to_finite(const FGAbelianGroup& g) {
  if (!g.finite())
    throw Error(ErrorKind::BadArgument, "only finite groups have table renderings");
  FiniteAlgebra A = build_zn(1);
  A.name = g.to_string();
  for (const auto& [p, e] : g.torsion) {
    Int q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    A = direct_product(A, build_zn(static_cast<int>(q)));
  }
  A.name = g.trivial() ? "0" : g.to_string();
  return A;
}

// ---------------------------------------------------------------------------
// Lattice geometry over Z

// Radical of a homogeneous linear system over Z: the saturation of the row
// lattice, i.e. all integer equations vanishing on the solution subgroup.
inline IntMatrix radical_lattice(const IntMatrix& system) {
  return saturation_basis(system);
}

// Gamma_Z of the solution set of a homogeneous system in n variables is free
// of rank n - rank(saturation).
inline int coordinate_group_rank(const IntMatrix& system) {
  return static_cast<int>(system.cols - smith_normal_form(system).rank);
}

namespace detail {

// Whether the row v vanishes on every solution of the system G over the
// cyclic factor Z_q (q = 0 means the factor Z).  Over Z this is saturation
// membership; over Z_q it is membership in the lattice spanned by G and q*I.
inline bool consequence_over_factor(const IntMatrix& G, const std::vector<Int>& v,
                                    const Int& q) {
  if (q == 0) return in_row_lattice(saturation_basis(G), v);
  IntMatrix ext(G.rows + G.cols, G.cols);
  for (size_t i = 0; i < G.rows; ++i)
    for (size_t j = 0; j < G.cols; ++j) ext.at(i, j) = G.at(i, j);
  for (size_t j = 0; j < G.cols; ++j) ext.at(G.rows + j, j) = q;
  return in_row_lattice(ext, v);
}

}  // namespace detail

// Least i >= 1 such that the first i equations have the same solution set as
// the whole list in every power of A.  Checks each later equation against
// each cyclic factor of A (one Z factor stands in for any positive rank).
inline int minimal_equivalent_prefix(const IntMatrix& system, const FGAbelianGroup& A) {
  if (system.rows == 0)
    throw Error(ErrorKind::BadArgument, "prefix of an empty equation list");
  std::vector<Int> factors;
  if (A.rank > 0) factors.push_back(0);
  for (const auto& [p, e] : A.torsion) {
    Int q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    factors.push_back(q);
  }
  for (size_t i = 1; i <= system.rows; ++i) {
    IntMatrix prefix(i, system.cols);
    for (size_t r = 0; r < i; ++r)
      for (size_t c = 0; c < system.cols; ++c) prefix.at(r, c) = system.at(r, c);
    bool all = true;
    for (size_t j = i; j < system.rows && all; ++j) {
      auto v = system.row(j);
      for (const auto& q : factors)
        if (!detail::consequence_over_factor(prefix, v, q)) {
          all = false;
          break;
        }
    }
    if (all) return static_cast<int>(i);
  }
  return static_cast<int>(system.rows);
}

// ---------------------------------------------------------------------------
// Structure theory of coordinate groups

// Sub_plus(A): the nonzero subgroups of the direct summands of A, i.e. Z when
// the rank is positive, and Z_{p^j} for every p^e in the torsion and 1<=j<=e.
inline std::set<FGAbelianGroup> sub_oplus(const FGAbelianGroup& A) {
  std::set<FGAbelianGroup> out;
  if (A.rank > 0) {
    FGAbelianGroup z;
    z.rank = 1;
    out.insert(z);
  }
  for (const auto& [p, e] : A.torsion)
    for (int j = 1; j <= e; ++j) {
      FGAbelianGroup c;
      c.torsion.push_back({p, j});
      out.insert(c);
    }
  return out;
}

// B is a coordinate group of some algebraic set over A exactly when every
// direct summand of B lies in Sub_plus(A).
inline bool is_coordinate_abelian(const FGAbelianGroup& B, const FGAbelianGroup& A) {
  if (B.rank > 0 && A.rank == 0) return false;
  for (const auto& [p, e] : B.torsion) {
    bool found = false;
    for (const auto& [q, f] : A.torsion)
      if (q == p && f >= e) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

namespace detail {

// Finite abelian p-group embedding: the sorted exponent sequences must
// dominate componentwise, equivalently every rank of p^j-multiples is no
// larger in B than in A.
inline bool torsion_embeds(const FGAbelianGroup& B, const FGAbelianGroup& A) {
  std::set<Int> primes;
  for (const auto& [p, e] : B.torsion) primes.insert(p);
  for (const Int& p : primes) {
    std::vector<int> be, ae;
    for (const auto& [q, e] : B.torsion)
      if (q == p) be.push_back(e);
    for (const auto& [q, e] : A.torsion)
      if (q == p) ae.push_back(e);
    std::sort(be.rbegin(), be.rend());
    std::sort(ae.rbegin(), ae.rend());
    if (be.size() > ae.size()) return false;
    for (size_t i = 0; i < be.size(); ++i)
      if (be[i] > ae[i]) return false;
  }
  return true;
}

}  // namespace detail

// B is the coordinate group of an irreducible algebraic set over A exactly
// when the torsion of B embeds into the torsion of A, and B is torsion-free
// whenever A is (a rank-0 A admits no free part in irreducible coordinate
// groups either way: then B must embed into A wholesale).
inline bool is_irreducible_coordinate_abelian(const FGAbelianGroup& B,
                                              const FGAbelianGroup& A) {
  if (A.rank == 0 && B.rank > 0) return false;
  return detail::torsion_embeds(B, A);
}

// Diophantine case: coordinate groups over A with constants are exactly
// A + B' with B' a coordinate group in the plain sense.
inline bool is_coordinate_abelian_with_constants(const FGAbelianGroup& Bprime,
                                                 const FGAbelianGroup& A) {
  return is_coordinate_abelian(Bprime, A);
}

// Diophantine irreducible case: A + B' is the coordinate group of an
// irreducible set over the diophantine A exactly when B' is free (of any
// rank) if A has a free part, and trivial otherwise.
inline bool is_irreducible_coordinate_abelian_with_constants(const FGAbelianGroup& Bprime,
                                                             const FGAbelianGroup& A) {
  if (A.rank == 0) return Bprime.trivial();
  return Bprime.torsion_free();
}

// Two f.g. abelian groups are geometrically equivalent exactly when they
// yield the same Sub_plus sets.
inline bool geom_equiv_abelian(const FGAbelianGroup& A, const FGAbelianGroup& B) {
  return sub_oplus(A) == sub_oplus(B);
}

}  // namespace uag
