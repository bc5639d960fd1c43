#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "uag/term.hpp"

namespace uag {

// Finite algebra given by explicit operation tables.  Elements are indices
// 0..size-1; `labels` are cosmetic aliases used in file I/O.  Table index
// order is lexicographic with the leftmost argument most significant.
struct FiniteAlgebra {
  std::string name;
  Language language;
  int size = 0;
  std::map<std::string, std::vector<int>> tables;
  std::vector<std::string> labels;

  long long table_size(int arity) const {
    long long n = 1;
    for (int i = 0; i < arity; ++i) n *= size;
    return n;
  }

  int apply(const std::string& sym, const std::vector<int>& args) const {
    auto it = tables.find(sym);
    if (it == tables.end())
      throw Error(ErrorKind::UnknownSymbol, "no table for '" + sym + "'");
    long long idx = 0;
    for (int a : args) idx = idx * size + a;
    return it->second[static_cast<size_t>(idx)];
  }

  int constant(const std::string& sym) const { return apply(sym, {}); }

  std::string label(int e) const {
    if (e >= 0 && e < static_cast<int>(labels.size()) && !labels[e].empty())
      return labels[e];
    return std::to_string(e);
  }

  void validate() const {
    if (size <= 0) throw Error(ErrorKind::BadArgument, "empty carrier");
    for (const auto& [sym, ar] : language.symbols) {
      auto it = tables.find(sym);
      if (it == tables.end())
        throw Error(ErrorKind::LanguageMismatch, "missing table for '" + sym + "'");
      if (static_cast<long long>(it->second.size()) != table_size(ar))
        throw Error(ErrorKind::ArityMismatch, "table size mismatch for '" + sym + "'");
      for (int v : it->second)
        if (v < 0 || v >= size)
          throw Error(ErrorKind::BadArgument, "table entry out of carrier for '" + sym + "'");
    }
  }
};

inline int evaluate(const Term& t, const FiniteAlgebra& A,
                    const std::map<std::string, int>& point) {
  if (t.is_var()) {
    auto it = point.find(t.name);
    if (it == point.end())
      throw Error(ErrorKind::MissingBinding, "no value for variable '" + t.name + "'");
    return it->second;
  }
  std::vector<int> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(evaluate(a, A, point));
  return A.apply(t.name, args);
}

// Evaluation against a tuple indexed like `vars`.
inline int evaluate(const Term& t, const FiniteAlgebra& A,
                    const std::vector<std::string>& vars, const std::vector<int>& tuple) {
  if (t.is_var()) {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == t.name) return tuple[i];
    throw Error(ErrorKind::MissingBinding, "no value for variable '" + t.name + "'");
  }
  std::vector<int> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(evaluate(a, A, vars, tuple));
  return A.apply(t.name, args);
}

// ---------------------------------------------------------------------------
// Builders

namespace lang {

inline Language semigroup() {
  Language l;
  l.add("mul", 2);
  return l;
}

inline Language group_mul() {
  Language l;
  l.add("mul", 2);
  l.add("inv", 1);
  l.add("one", 0);
  return l;
}

inline Language abelian_group() {
  Language l;
  l.add("add", 2);
  l.add("neg", 1);
  l.add("zero", 0);
  return l;
}

inline Language ring(bool with_one = false) {
  Language l;
  l.add("add", 2);
  l.add("neg", 1);
  l.add("mul", 2);
  l.add("zero", 0);
  if (with_one) l.add("one", 0);
  return l;
}

inline Language unar() {
  Language l;
  l.add("f", 1);
  return l;
}

inline Language commutative_monoid() {
  Language l;
  l.add("add", 2);
  l.add("zero", 0);
  return l;
}

}  // namespace lang

namespace detail {

template <class Fn2>
inline std::vector<int> binary_table(int k, Fn2 f) {
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[static_cast<size_t>(a) * k + b] = f(a, b);
  return t;
}

template <class Fn1>
inline std::vector<int> unary_table(int k, Fn1 f) {
  std::vector<int> t(k);
  for (int a = 0; a < k; ++a) t[a] = f(a);
  return t;
}

}  // namespace detail

// Cyclic group of order n in the additive language {add, neg, zero}.
inline FiniteAlgebra build_zn(int n) {
  if (n <= 0) throw Error(ErrorKind::BadArgument, "Zn needs n >= 1");
  FiniteAlgebra A;
  A.name = "Z" + std::to_string(n);
  A.language = lang::abelian_group();
  A.size = n;
  A.tables["add"] = detail::binary_table(n, [n](int a, int b) { return (a + b) % n; });
  A.tables["neg"] = detail::unary_table(n, [n](int a) { return (n - a) % n; });
  A.tables["zero"] = {0};
  return A;
}

// Cyclic group of order n in the multiplicative language {mul, inv, one}.
inline FiniteAlgebra build_zn_mul(int n) {
  if (n <= 0) throw Error(ErrorKind::BadArgument, "Zn needs n >= 1");
  FiniteAlgebra A;
  A.name = "C" + std::to_string(n);
  A.language = lang::group_mul();
  A.size = n;
  A.tables["mul"] = detail::binary_table(n, [n](int a, int b) { return (a + b) % n; });
  A.tables["inv"] = detail::unary_table(n, [n](int a) { return (n - a) % n; });
  A.tables["one"] = {0};
  return A;
}

// Ring of integers modulo n; language {add, neg, mul, zero} plus `one` when
// requested.
inline FiniteAlgebra build_zn_ring(int n, bool with_one = false) {
  if (n <= 0) throw Error(ErrorKind::BadArgument, "Zn_ring needs n >= 1");
  FiniteAlgebra A;
  A.name = "Z" + std::to_string(n) + "ring";
  A.language = lang::ring(with_one);
  A.size = n;
  A.tables["add"] = detail::binary_table(n, [n](int a, int b) { return (a + b) % n; });
  A.tables["neg"] = detail::unary_table(n, [n](int a) { return (n - a) % n; });
  A.tables["mul"] = detail::binary_table(n, [n](int a, int b) { return (a * b) % n; });
  A.tables["zero"] = {0};
  if (with_one) A.tables["one"] = {1 % n};
  return A;
}

// Linearly ordered semilattice 0 < 1 < ... < n-1 under min.
inline FiniteAlgebra build_ln(int n) {
  if (n <= 0) throw Error(ErrorKind::BadArgument, "Ln needs n >= 1");
  FiniteAlgebra A;
  A.name = "L" + std::to_string(n);
  A.language = lang::semigroup();
  A.size = n;
  A.tables["mul"] = detail::binary_table(n, [](int a, int b) { return std::min(a, b); });
  return A;
}

// Left zero semigroup: xy = x.
inline FiniteAlgebra build_lzn(int n) {
  if (n <= 0) throw Error(ErrorKind::BadArgument, "LZn needs n >= 1");
  FiniteAlgebra A;
  A.name = "LZ" + std::to_string(n);
  A.language = lang::semigroup();
  A.size = n;
  A.tables["mul"] = detail::binary_table(n, [](int a, int b) { return a; });
  return A;
}

// Rectangular band on n*m pairs: (i,j)(i',j') = (i,j').  Element (i,j) has
// index i*m + j.
inline FiniteAlgebra build_rb(int n, int m) {
  if (n <= 0 || m <= 0) throw Error(ErrorKind::BadArgument, "RB needs n,m >= 1");
  FiniteAlgebra A;
  A.name = "RB" + std::to_string(n) + "x" + std::to_string(m);
  A.language = lang::semigroup();
  A.size = n * m;
  A.tables["mul"] = detail::binary_table(
      n * m, [m](int a, int b) { return (a / m) * m + (b % m); });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      A.labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return A;
}

// One-element algebra over an arbitrary language.
inline FiniteAlgebra build_trivial(const Language& lang) {
  FiniteAlgebra A;
  A.name = "trivial";
  A.language = lang;
  A.size = 1;
  for (const auto& [sym, ar] : lang.symbols)
    A.tables[sym] = std::vector<int>(A.table_size(ar), 0);
  return A;
}

// ---------------------------------------------------------------------------
// Direct product: carrier is the cartesian product with lexicographic index,
// leftmost factor most significant; all operations act componentwise.
inline FiniteAlgebra direct_product(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  if (A.language != B.language)
    throw Error(ErrorKind::LanguageMismatch, "direct product needs a common language");
  FiniteAlgebra P;
  P.name = A.name + "x" + B.name;
  P.language = A.language;
  P.size = A.size * B.size;
  for (const auto& [sym, ar] : A.language.symbols) {
    std::vector<int> table(P.table_size(ar));
    std::vector<int> args(ar, 0);
    long long total = P.table_size(ar);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = ar - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % P.size);
        rest /= P.size;
      }
      std::vector<int> a_args(ar), b_args(ar);
      for (int i = 0; i < ar; ++i) {
        a_args[i] = args[i] / B.size;
        b_args[i] = args[i] % B.size;
      }
      table[static_cast<size_t>(idx)] =
          A.apply(sym, a_args) * B.size + B.apply(sym, b_args);
    }
    P.tables[sym] = std::move(table);
  }
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < B.size; ++b)
      P.labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
  return P;
}

// ---------------------------------------------------------------------------
// Generated subalgebra.  Elements are listed in discovery order: the seeds in
// the given order, then breadth-first rounds scanning operations in language
// declaration order and argument tuples lexicographically.
struct Subalgebra {
  FiniteAlgebra algebra;        // re-indexed tables
  std::vector<int> inclusion;   // sub index -> parent index
};

inline Subalgebra generate_subalgebra(const FiniteAlgebra& A, const std::vector<int>& seeds,
                                      const Limits& limits = {}) {
  if (seeds.empty() && A.language.constants().empty())
    throw Error(ErrorKind::EmptySeedNoConstants,
                "no seeds and the language has no constants");
  std::vector<int> elems;                  // parent indices in discovery order
  std::vector<int> pos(A.size, -1);        // parent index -> sub index
  auto add = [&](int parent) {
    if (parent < 0 || parent >= A.size)
      throw Error(ErrorKind::BadArgument, "seed outside carrier");
    if (pos[parent] >= 0) return;
    pos[parent] = static_cast<int>(elems.size());
    elems.push_back(parent);
    if (static_cast<long long>(elems.size()) > limits.elem_cap)
      throw Error(ErrorKind::ResourceLimit, "subalgebra element cap exceeded");
  };
  for (int s : seeds) add(s);

  size_t old_size = 0;
  bool first_round = true;
  while (true) {
    size_t snapshot = elems.size();
    for (const auto& [sym, ar] : A.language.symbols) {
      const auto& table = A.tables.at(sym);
      if (ar == 0) {
        if (first_round) add(table[0]);
        continue;
      }
      if (snapshot == 0) continue;
      std::vector<int> idx(ar, 0);
      while (true) {
        // Skip tuples made entirely of pre-frontier elements; those were
        // already scanned in an earlier round.
        bool fresh = first_round;
        for (int i = 0; i < ar && !fresh; ++i) fresh = idx[i] >= static_cast<int>(old_size);
        if (fresh) {
          long long t = 0;
          for (int i = 0; i < ar; ++i) t = t * A.size + elems[idx[i]];
          add(table[static_cast<size_t>(t)]);
        }
        int i = ar - 1;
        while (i >= 0 && idx[i] == static_cast<int>(snapshot) - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
      }
    }
    first_round = false;
    if (elems.size() == snapshot) break;
    old_size = snapshot;
  }

  Subalgebra out;
  out.inclusion = elems;
  out.algebra.name = A.name + "_sub";
  out.algebra.language = A.language;
  out.algebra.size = static_cast<int>(elems.size());
  for (int e : elems) out.algebra.labels.push_back(A.label(e));
  for (const auto& [sym, ar] : A.language.symbols) {
    long long total = out.algebra.table_size(ar);
    std::vector<int> table(static_cast<size_t>(total));
    std::vector<int> idx(ar, 0);
    for (long long t = 0; t < total; ++t) {
      long long parent_idx = 0;
      long long rest = t;
      std::vector<int> digits(ar);
      for (int i = ar - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % out.algebra.size);
        rest /= out.algebra.size;
      }
      for (int i = 0; i < ar; ++i) parent_idx = parent_idx * A.size + elems[digits[i]];
      int res = A.tables.at(sym)[static_cast<size_t>(parent_idx)];
      table[static_cast<size_t>(t)] = pos[res];
    }
    out.algebra.tables[sym] = std::move(table);
  }
  return out;
}

// Extends the language with one fresh constant per element, each interpreted
// as that element.  Constant for element e is named c{e} (first unused name).
inline FiniteAlgebra diophantize(const FiniteAlgebra& A) {
  FiniteAlgebra D = A;
  D.name = A.name + "_dioph";
  for (int e = 0; e < A.size; ++e) {
    std::string base = "c" + std::to_string(e);
    std::string name = base;
    int suffix = 0;
    while (D.language.has(name)) name = base + "_" + std::to_string(++suffix);
    D.language.add(name, 0);
    D.tables[name] = {e};
  }
  return D;
}

}  // namespace uag
