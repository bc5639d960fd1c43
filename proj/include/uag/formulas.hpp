#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "uag/abelian.hpp"
#include "uag/finite_algebra.hpp"

namespace uag {

struct Literal {
  Term lhs, rhs;
  bool positive = true;  // false: lhs != rhs

  std::string to_string() const {
    return term_to_string(lhs) + (positive ? " = " : " != ") + term_to_string(rhs);
  }
};

// Prenex-universal formula: conjunction of premise literals implies a
// disjunction of conclusion literals.  Quasi-identities are the special case
// of all-positive premises and a single positive conclusion.
struct Formula {
  std::vector<std::string> vars;
  std::vector<Literal> premises;
  std::vector<Literal> conclusions;

  bool is_quasi_identity() const {
    if (conclusions.size() != 1 || !conclusions.front().positive) return false;
    for (const auto& l : premises)
      if (!l.positive) return false;
    return true;
  }

  void check(const Language& lang) const {
    for (const auto& l : premises) {
      check_term(l.lhs, lang);
      check_term(l.rhs, lang);
    }
    for (const auto& l : conclusions) {
      check_term(l.lhs, lang);
      check_term(l.rhs, lang);
    }
  }

  std::string to_string() const {
    std::string s;
    if (premises.empty()) {
      s = "true";
    } else {
      for (size_t i = 0; i < premises.size(); ++i) {
        if (i) s += " & ";
        s += premises[i].to_string();
      }
    }
    s += " -> ";
    for (size_t i = 0; i < conclusions.size(); ++i) {
      if (i) s += " | ";
      s += conclusions[i].to_string();
    }
    return s;
  }
};

struct FormulaCheck {
  bool holds = true;
  std::optional<std::vector<int>> counterexample;  // lexicographically least
};

inline FormulaCheck holds_in(const Formula& f, const FiniteAlgebra& A,
                             const Limits& limits = {}) {
  f.check(A.language);
  size_t n = f.vars.size();
  long long total = 1;
  for (size_t i = 0; i < n; ++i) {
    total *= A.size;
    if (total > limits.tuple_cap)
      throw Error(ErrorKind::ResourceLimit, "tuple cap exceeded");
  }
  auto literal_true = [&](const Literal& l, const std::vector<int>& p) {
    bool eq = evaluate(l.lhs, A, f.vars, p) == evaluate(l.rhs, A, f.vars, p);
    return eq == l.positive;
  };
  std::vector<int> p(n, 0);
  while (true) {
    bool premises_hold = true;
    for (const auto& l : f.premises)
      if (!literal_true(l, p)) {
        premises_hold = false;
        break;
      }
    if (premises_hold) {
      bool concluded = false;
      for (const auto& l : f.conclusions)
        if (literal_true(l, p)) {
          concluded = true;
          break;
        }
      if (!concluded) return {false, p};
    }
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && p[i] == A.size - 1) p[i--] = 0;
    if (i < 0) break;
    ++p[i];
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Abelian formula families, over the additive language {add, neg, zero}.

namespace detail {

// k*x as a term: zero for k=0, x+x+...+x otherwise (k>0).
inline Term scalar_term(const Int& k, const std::string& var) {
  if (k == 0) return Term::app("zero");
  Term acc = Term::var(var);
  for (Int i = 1; i < k; ++i) acc = Term::app("add", {acc, Term::var(var)});
  return acc;
}

}  // namespace detail

// Sigma_{p,n} holds in A exactly when no torsion factor Z_{p^m} with m >= n
// is present (then p^n x = 0 already forces p^{n-1} x = 0).
inline bool sigma_pn_holds(const FGAbelianGroup& A, const Int& p, int n) {
  if (!detail::is_prime(p)) throw Error(ErrorKind::BadArgument, "p must be prime");
  if (n < 1) throw Error(ErrorKind::BadArgument, "n must be >= 1");
  for (const auto& [q, e] : A.torsion)
    if (q == p && e >= n) return false;
  return true;
}

inline Formula make_sigma_pn_formula(const Int& p, int n) {
  Int pn = 1, pn1 = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  for (int i = 0; i + 1 < n; ++i) pn1 *= p;
  Formula f;
  f.vars = {"x"};
  f.premises = {Literal{detail::scalar_term(pn, "x"), Term::app("zero"), true}};
  f.conclusions = {Literal{detail::scalar_term(pn1, "x"), Term::app("zero"), true}};
  return f;
}

// The quasi-identity window Sigma_A: the period identity when A is finite
// (period = lcm of the torsion orders) plus every Sigma_{p,n} with p <= p_max
// and n <= n_max that holds in A.
inline std::vector<Formula> sigma_A(const FGAbelianGroup& A, const Int& p_max, int n_max) {
  if (p_max < 2 || n_max < 1)
    throw Error(ErrorKind::BadArgument, "sigma window bounds must be positive");
  std::vector<Formula> out;
  if (A.finite()) {
    Int period = 1;
    for (const auto& [p, e] : A.torsion) {
      Int q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      period = period / boost::multiprecision::gcd(period, q) * q;  // lcm
    }
    Formula f;
    f.vars = {"x"};
    f.conclusions = {Literal{detail::scalar_term(period, "x"), Term::app("zero"), true}};
    out.push_back(f);
  }
  for (Int p = 2; p <= p_max; ++p) {
    if (!detail::is_prime(p)) continue;
    for (int n = 1; n <= n_max; ++n)
      if (sigma_pn_holds(A, p, n)) out.push_back(make_sigma_pn_formula(p, n));
  }
  return out;
}

// At most n elements of order exactly p^k: counted on the p-component via the
// divisor-count product (number of x with p^j x = 0 is prod p^min(e_i, j)).
inline bool phi_nk_holds(const FGAbelianGroup& A, const Int& p, int k, long long n) {
  if (!detail::is_prime(p)) throw Error(ErrorKind::BadArgument, "p must be prime");
  if (k < 1) throw Error(ErrorKind::BadArgument, "k must be >= 1");
  if (n < 0) throw Error(ErrorKind::BadArgument, "n must be >= 0");
  auto order_dividing = [&](int j) {
    Int count = 1;
    for (const auto& [q, e] : A.torsion) {
      if (q != p) continue;
      int m = std::min(e, j);
      for (int i = 0; i < m; ++i) count *= p;
    }
    return count;
  };
  Int exact = order_dividing(k) - order_dividing(k - 1);
  return exact <= n;
}

// The counting formula itself: n+1 witnesses of order exactly p^k force a
// repetition.  Uses negative premises p^{k-1} x_i != 0.
inline Formula make_phi_formula(const Int& p, int k, long long n) {
  Int pk = 1, pk1 = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  for (int i = 0; i + 1 < k; ++i) pk1 *= p;
  Formula f;
  for (long long i = 0; i <= n; ++i) f.vars.push_back("x" + std::to_string(i + 1));
  for (const auto& v : f.vars) {
    f.premises.push_back(Literal{detail::scalar_term(pk, v), Term::app("zero"), true});
    f.premises.push_back(Literal{detail::scalar_term(pk1, v), Term::app("zero"), false});
  }
  for (size_t i = 0; i < f.vars.size(); ++i)
    for (size_t j = i + 1; j < f.vars.size(); ++j)
      f.conclusions.push_back(
          Literal{Term::var(f.vars[i]), Term::var(f.vars[j]), true});
  return f;
}

}  // namespace uag
