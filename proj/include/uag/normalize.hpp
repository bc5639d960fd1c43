#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "uag/term.hpp"

namespace uag {

enum class Variety {
  Semigroup,
  Group,
  AbelianGroup,
  CommutativeMonoid,
  IdempotentSemigroup,
  Semilattice,
  RectangularBand,
  LeftZeroSemigroup,
  Unar,
};

inline const char* variety_name(Variety v) {
  switch (v) {
    case Variety::Semigroup: return "semigroup";
    case Variety::Group: return "group";
    case Variety::AbelianGroup: return "abelian-group";
    case Variety::CommutativeMonoid: return "commutative-monoid";
    case Variety::IdempotentSemigroup: return "idempotent-semigroup";
    case Variety::Semilattice: return "semilattice";
    case Variety::RectangularBand: return "rectangular-band";
    case Variety::LeftZeroSemigroup: return "left-zero";
    case Variety::Unar: return "unar";
  }
  return "?";
}

// Canonical form of a term modulo the defining identities of a variety.
// `key` is a total encoding: two terms are equivalent over the variety
// exactly when their keys match (for the word-problem-complete varieties
// handled here).  The typed fields carry enough structure to render a
// representative term back.
struct NormalForm {
  Variety variety;
  std::string key;
  // Semigroup / Group words: (variable, exponent), adjacent entries distinct.
  std::vector<std::pair<std::string, Int>> word;
  // AbelianGroup / CommutativeMonoid: variable -> coefficient.
  std::map<std::string, Int> coeffs;
  // Semilattice: sorted distinct variables; LeftZero: single variable;
  // RectangularBand: {first, last}; IdempotentSemigroup: canonical word.
  std::vector<std::string> vars;
  // Unar: f^iterations(vars[0]).
  Int iterations = 0;

  bool operator==(const NormalForm& o) const {
    return variety == o.variety && key == o.key;
  }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }
};

namespace detail {

inline void expect_symbol(const Term& t, const char* sym, size_t arity,
                          Variety v) {
  if (t.name != sym || t.args.size() != arity)
    throw Error(ErrorKind::VarietyMismatch,
                std::string("symbol '") + t.name + "' does not fit the " +
                    variety_name(v) + " shape");
}

// Flattens a {mul}-term into its variable sequence.
inline void flatten_mul(const Term& t, std::vector<std::string>& out, Variety v) {
  if (t.is_var()) {
    out.push_back(t.name);
    return;
  }
  expect_symbol(t, "mul", 2, v);
  flatten_mul(t.args[0], out, v);
  flatten_mul(t.args[1], out, v);
}

// Flattens a {mul, inv, one}-term into signed letters.
inline void flatten_group(const Term& t, int sign,
                          std::vector<std::pair<std::string, int>>& out) {
  if (t.is_var()) {
    out.push_back({t.name, sign});
    return;
  }
  if (t.name == "one" && t.args.empty()) return;
  if (t.name == "inv" && t.args.size() == 1) {
    flatten_group(t.args[0], -sign, out);
    return;
  }
  if (t.name == "mul" && t.args.size() == 2) {
    if (sign > 0) {
      flatten_group(t.args[0], sign, out);
      flatten_group(t.args[1], sign, out);
    } else {
      flatten_group(t.args[1], sign, out);
      flatten_group(t.args[0], sign, out);
    }
    return;
  }
  throw Error(ErrorKind::VarietyMismatch,
              "symbol '" + t.name + "' does not fit the group shape");
}

// Sums coefficients of a {add, neg, zero}- or {add, zero}-term.
inline void flatten_additive(const Term& t, Int sign, bool allow_neg,
                             std::map<std::string, Int>& out, Variety v) {
  if (t.is_var()) {
    out[t.name] += sign;
    return;
  }
  if (t.name == "zero" && t.args.empty()) return;
  if (allow_neg && t.name == "neg" && t.args.size() == 1) {
    flatten_additive(t.args[0], -sign, allow_neg, out, v);
    return;
  }
  if (t.name == "add" && t.args.size() == 2) {
    flatten_additive(t.args[0], sign, allow_neg, out, v);
    flatten_additive(t.args[1], sign, allow_neg, out, v);
    return;
  }
  throw Error(ErrorKind::VarietyMismatch,
              std::string("symbol '") + t.name + "' does not fit the " +
                  variety_name(v) + " shape");
}

inline std::vector<std::pair<std::string, Int>> run_length(
    const std::vector<std::string>& letters) {
  std::vector<std::pair<std::string, Int>> out;
  for (const auto& x : letters) {
    if (!out.empty() && out.back().first == x)
      out.back().second += 1;
    else
      out.push_back({x, 1});
  }
  return out;
}

// Canonical word of the free idempotent semigroup (free band): a word is
// determined by its letter content together with the canonical forms of the
// maximal prefix/suffix missing one letter, plus the letters completing the
// content from either side.  Recursing on those pieces yields a canonical
// representative word.
inline std::vector<std::string> band_canonical(const std::vector<std::string>& w) {
  std::set<std::string> content(w.begin(), w.end());
  if (content.size() <= 1) return {w.front()};
  // Scan forward until the last letter of the content first appears.
  std::set<std::string> seen;
  size_t cut_fwd = 0;
  std::string first_completing;
  for (size_t i = 0; i < w.size(); ++i) {
    seen.insert(w[i]);
    if (seen.size() == content.size()) {
      cut_fwd = i;
      first_completing = w[i];
      break;
    }
  }
  std::vector<std::string> prefix(w.begin(), w.begin() + cut_fwd);
  // Mirror scan from the right.
  seen.clear();
  size_t cut_bwd = 0;
  std::string last_completing;
  for (size_t i = w.size(); i-- > 0;) {
    seen.insert(w[i]);
    if (seen.size() == content.size()) {
      cut_bwd = i;
      last_completing = w[i];
      break;
    }
  }
  std::vector<std::string> suffix(w.begin() + cut_bwd + 1, w.end());
  std::vector<std::string> out = band_canonical(prefix);
  out.push_back(first_completing);
  out.push_back(last_completing);
  auto tail = band_canonical(suffix);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

inline std::string join_key(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    s += p;
    s += '.';
  }
  return s;
}

}  // namespace detail

inline NormalForm normalize(const Term& t, Variety v) {
  NormalForm nf;
  nf.variety = v;
  switch (v) {
    case Variety::Semigroup: {
      std::vector<std::string> letters;
      detail::flatten_mul(t, letters, v);
      nf.word = detail::run_length(letters);
      for (const auto& [x, e] : nf.word) nf.key += x + "^" + e.str() + ".";
      break;
    }
    case Variety::Group: {
      std::vector<std::pair<std::string, int>> letters;
      detail::flatten_group(t, +1, letters);
      // Free reduction: merge adjacent powers of the same letter, dropping
      // zero exponents (which may cascade).
      for (const auto& [x, s] : letters) {
        if (!nf.word.empty() && nf.word.back().first == x) {
          nf.word.back().second += s;
          if (nf.word.back().second == 0) nf.word.pop_back();
        } else {
          nf.word.push_back({x, s});
        }
      }
      for (const auto& [x, e] : nf.word) nf.key += x + "^" + e.str() + ".";
      break;
    }
    case Variety::AbelianGroup: {
      detail::flatten_additive(t, 1, /*allow_neg=*/true, nf.coeffs, v);
      for (auto it = nf.coeffs.begin(); it != nf.coeffs.end();)
        it = it->second == 0 ? nf.coeffs.erase(it) : std::next(it);
      for (const auto& [x, c] : nf.coeffs) nf.key += x + "*" + c.str() + ".";
      break;
    }
    case Variety::CommutativeMonoid: {
      detail::flatten_additive(t, 1, /*allow_neg=*/false, nf.coeffs, v);
      for (auto it = nf.coeffs.begin(); it != nf.coeffs.end();)
        it = it->second == 0 ? nf.coeffs.erase(it) : std::next(it);
      for (const auto& [x, c] : nf.coeffs) nf.key += x + "*" + c.str() + ".";
      break;
    }
    case Variety::IdempotentSemigroup: {
      std::vector<std::string> letters;
      detail::flatten_mul(t, letters, v);
      nf.vars = detail::band_canonical(letters);
      nf.key = detail::join_key(nf.vars);
      break;
    }
    case Variety::Semilattice: {
      std::vector<std::string> letters;
      detail::flatten_mul(t, letters, v);
      std::set<std::string> s(letters.begin(), letters.end());
      nf.vars.assign(s.begin(), s.end());
      nf.key = detail::join_key(nf.vars);
      break;
    }
    case Variety::RectangularBand: {
      std::vector<std::string> letters;
      detail::flatten_mul(t, letters, v);
      nf.vars = {letters.front(), letters.back()};
      nf.key = detail::join_key(nf.vars);
      break;
    }
    case Variety::LeftZeroSemigroup: {
      std::vector<std::string> letters;
      detail::flatten_mul(t, letters, v);
      nf.vars = {letters.front()};
      nf.key = detail::join_key(nf.vars);
      break;
    }
    case Variety::Unar: {
      const Term* cur = &t;
      Int n = 0;
      while (!cur->is_var()) {
        detail::expect_symbol(*cur, "f", 1, v);
        ++n;
        cur = &cur->args[0];
      }
      nf.vars = {cur->name};
      nf.iterations = n;
      nf.key = "f^" + n.str() + "(" + cur->name + ")";
      break;
    }
  }
  return nf;
}

// Renders a representative term.  normalize(render(nf), v) == nf.
inline Term render(const NormalForm& nf) {
  auto mul_chain = [](const std::vector<Term>& factors) {
    Term acc = factors.front();
    for (size_t i = 1; i < factors.size(); ++i)
      acc = Term::app("mul", {acc, factors[i]});
    return acc;
  };
  switch (nf.variety) {
    case Variety::Semigroup:
    case Variety::IdempotentSemigroup:
    case Variety::Semilattice:
    case Variety::RectangularBand:
    case Variety::LeftZeroSemigroup: {
      std::vector<Term> factors;
      if (!nf.word.empty()) {
        for (const auto& [x, e] : nf.word)
          for (Int i = 0; i < e; ++i) factors.push_back(Term::var(x));
      } else {
        for (const auto& x : nf.vars) factors.push_back(Term::var(x));
      }
      return mul_chain(factors);
    }
    case Variety::Group: {
      if (nf.word.empty()) return Term::app("one");
      std::vector<Term> factors;
      for (const auto& [x, e] : nf.word) {
        Term letter = e > 0 ? Term::var(x) : Term::app("inv", {Term::var(x)});
        Int count = e > 0 ? e : -e;
        for (Int i = 0; i < count; ++i) factors.push_back(letter);
      }
      return mul_chain(factors);
    }
    case Variety::AbelianGroup:
    case Variety::CommutativeMonoid: {
      std::vector<Term> summands;
      for (const auto& [x, c] : nf.coeffs) {
        Term letter = c > 0 ? Term::var(x) : Term::app("neg", {Term::var(x)});
        Int count = c > 0 ? c : -c;
        for (Int i = 0; i < count; ++i) summands.push_back(letter);
      }
      if (summands.empty()) return Term::app("zero");
      Term acc = summands.front();
      for (size_t i = 1; i < summands.size(); ++i)
        acc = Term::app("add", {acc, summands[i]});
      return acc;
    }
    case Variety::Unar: {
      Term acc = Term::var(nf.vars.front());
      for (Int i = 0; i < nf.iterations; ++i) acc = Term::app("f", {acc});
      return acc;
    }
  }
  throw Error(ErrorKind::BadArgument, "unhandled variety");
}

inline bool equivalent_over(const Term& a, const Term& b, Variety v) {
  return normalize(a, v) == normalize(b, v);
}

// Equation-level equivalence.  For commutative monoids the common part of the
// two sides is cancelled first, so e.g. x+y = y+x+z is equivalent to 0 = z.
inline bool equation_equivalent_over(const Equation& e1, const Equation& e2, Variety v) {
  if (v != Variety::CommutativeMonoid)
    return (equivalent_over(e1.lhs, e2.lhs, v) && equivalent_over(e1.rhs, e2.rhs, v)) ||
           (equivalent_over(e1.lhs, e2.rhs, v) && equivalent_over(e1.rhs, e2.lhs, v));
  auto reduce = [](const Equation& e) {
    auto l = normalize(e.lhs, Variety::CommutativeMonoid).coeffs;
    auto r = normalize(e.rhs, Variety::CommutativeMonoid).coeffs;
    for (auto& [x, c] : l) {
      auto it = r.find(x);
      if (it == r.end()) continue;
      Int common = std::min(c, it->second);
      c -= common;
      it->second -= common;
    }
    auto strip = [](std::map<std::string, Int>& m) {
      for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    };
    strip(l);
    strip(r);
    return std::make_pair(l, r);
  };
  auto [l1, r1] = reduce(e1);
  auto [l2, r2] = reduce(e2);
  return (l1 == l2 && r1 == r2) || (l1 == r2 && r1 == l2);
}

}  // namespace uag
