#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uag/hom.hpp"
#include "uag/normalize.hpp"

namespace uag {

// An algebraic (or at least point-) set: tuples over A indexed by `vars`.
// Points are kept sorted lexicographically.
struct SolutionSet {
  FiniteAlgebra algebra;
  std::vector<std::string> vars;
  std::vector<std::vector<int>> points;

  bool operator==(const SolutionSet& o) const {
    return vars == o.vars && points == o.points;
  }
};

namespace detail {

inline void sort_points(std::vector<std::vector<int>>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

inline long long int_pow_capped(int base, size_t exp, long long cap) {
  long long v = 1;
  for (size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) throw Error(ErrorKind::ResourceLimit, "tuple cap exceeded");
  }
  return v;
}

// Subalgebra of a finite power A^width generated by the given tuples plus all
// constants, with one derivation per element.  Discovery order matches
// generate_subalgebra: seeds first, then breadth-first rounds over operations
// in declaration order and argument tuples in lexicographic order.
struct TupleAlgebra {
  struct Deriv {
    int seed = -1;          // >= 0 for seed elements
    int sym = -1;           // index into language.symbols otherwise
    std::vector<int> args;  // element ids
  };

  std::vector<std::vector<int>> elems;
  std::vector<Deriv> derivs;
  std::map<std::string, std::vector<int>> tables;  // closed tables over elems
};

inline TupleAlgebra generate_tuple_algebra(const FiniteAlgebra& A, size_t width,
                                           const std::vector<std::vector<int>>& seeds,
                                           const Limits& limits) {
  if (seeds.empty() && A.language.constants().empty())
    throw Error(ErrorKind::EmptySeedNoConstants,
                "no seeds and the language has no constants");
  TupleAlgebra out;
  std::map<std::vector<int>, int> pos;
  auto add = [&](const std::vector<int>& tuple, TupleAlgebra::Deriv deriv) {
    auto it = pos.find(tuple);
    if (it != pos.end()) return it->second;
    int id = static_cast<int>(out.elems.size());
    if (static_cast<long long>(id) + 1 > limits.elem_cap)
      throw Error(ErrorKind::ResourceLimit, "generated-algebra element cap exceeded");
    pos[tuple] = id;
    out.elems.push_back(tuple);
    out.derivs.push_back(std::move(deriv));
    return id;
  };
  auto apply_pointwise = [&](const std::string& sym, const std::vector<int>& arg_ids) {
    std::vector<int> tuple(width);
    std::vector<int> point_args(arg_ids.size());
    for (size_t c = 0; c < width; ++c) {
      for (size_t i = 0; i < arg_ids.size(); ++i)
        point_args[i] = out.elems[arg_ids[i]][c];
      tuple[c] = A.apply(sym, point_args);
    }
    return tuple;
  };

  for (size_t s = 0; s < seeds.size(); ++s) {
    if (seeds[s].size() != width)
      throw Error(ErrorKind::BadArgument, "seed tuple width mismatch");
    TupleAlgebra::Deriv d;
    d.seed = static_cast<int>(s);
    add(seeds[s], std::move(d));
  }

  size_t old_size = 0;
  bool first_round = true;
  while (true) {
    size_t snapshot = out.elems.size();
    for (size_t si = 0; si < A.language.symbols.size(); ++si) {
      const auto& [sym, ar] = A.language.symbols[si];
      if (ar == 0) {
        if (first_round) {
          std::vector<int> tuple(width, A.tables.at(sym)[0]);
          TupleAlgebra::Deriv d;
          d.sym = static_cast<int>(si);
          add(tuple, std::move(d));
        }
        continue;
      }
      if (snapshot == 0) continue;
      std::vector<int> idx(ar, 0);
      while (true) {
        bool fresh = first_round;
        for (int i = 0; i < ar && !fresh; ++i) fresh = idx[i] >= static_cast<int>(old_size);
        if (fresh) {
          TupleAlgebra::Deriv d;
          d.sym = static_cast<int>(si);
          d.args = idx;
          add(apply_pointwise(sym, idx), std::move(d));
        }
        int i = ar - 1;
        while (i >= 0 && idx[i] == static_cast<int>(snapshot) - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
      }
    }
    first_round = false;
    if (out.elems.size() == snapshot) break;
    old_size = snapshot;
  }

  // Closed tables over the generated carrier.
  int E = static_cast<int>(out.elems.size());
  for (const auto& [sym, ar] : A.language.symbols) {
    long long total = 1;
    for (int i = 0; i < ar; ++i) total *= E;
    std::vector<int> table(static_cast<size_t>(total));
    std::vector<int> digits(ar, 0);
    for (long long t = 0; t < total; ++t) {
      long long rest = t;
      for (int i = ar - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % E);
        rest /= E;
      }
      std::vector<int> tuple =
          ar == 0 ? std::vector<int>(width, A.tables.at(sym)[0]) : apply_pointwise(sym, digits);
      table[static_cast<size_t>(t)] = pos.at(tuple);
    }
    out.tables[sym] = std::move(table);
  }
  return out;
}

// Values of every generated element at an extra point, propagated through the
// derivations: seeds take the point's coordinates, derived elements apply the
// operation in A.
inline std::vector<int> derive_values(const TupleAlgebra& D, const FiniteAlgebra& A,
                                      const std::vector<int>& seed_values) {
  std::vector<int> phi(D.elems.size());
  std::vector<int> args;
  for (size_t e = 0; e < D.elems.size(); ++e) {
    const auto& d = D.derivs[e];
    if (d.seed >= 0) {
      phi[e] = seed_values[d.seed];
    } else {
      args.clear();
      for (int a : d.args) args.push_back(phi[a]);
      phi[e] = A.apply(A.language.symbols[d.sym].first, args);
    }
  }
  return phi;
}

// Whether phi is a homomorphism from the generated algebra to A.
inline bool values_respect_tables(const TupleAlgebra& D, const FiniteAlgebra& A,
                                  const std::vector<int>& phi) {
  int E = static_cast<int>(D.elems.size());
  for (const auto& [sym, ar] : A.language.symbols) {
    const auto& table = D.tables.at(sym);
    long long total = 1;
    for (int i = 0; i < ar; ++i) total *= E;
    std::vector<int> digits(ar, 0), mapped(ar);
    for (long long t = 0; t < total; ++t) {
      long long rest = t;
      for (int i = ar - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % E);
        rest /= E;
      }
      for (int i = 0; i < ar; ++i) mapped[i] = phi[digits[i]];
      if (A.apply(sym, mapped) != phi[table[static_cast<size_t>(t)]]) return false;
    }
  }
  return true;
}

inline std::vector<std::vector<int>> variable_tuples(
    const std::vector<std::vector<int>>& points, size_t nvars) {
  std::vector<std::vector<int>> seeds(nvars, std::vector<int>(points.size()));
  for (size_t i = 0; i < nvars; ++i)
    for (size_t j = 0; j < points.size(); ++j) seeds[i][j] = points[j][i];
  return seeds;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Solving

inline SolutionSet solve(const System& system, const FiniteAlgebra& A,
                         const Limits& limits = {},
                         std::optional<Variety> variety = std::nullopt) {
  system.check(A.language);
  SolutionSet out;
  out.algebra = A;
  out.vars = system.vars;

  std::vector<Equation> eqs = system.equations;
  if (variety) {
    for (auto& e : eqs) {
      e.lhs = render(normalize(e.lhs, *variety));
      e.rhs = render(normalize(e.rhs, *variety));
    }
  }
  // Cheap-first ordering: equations over fewer variables reject earlier.
  std::stable_sort(eqs.begin(), eqs.end(), [](const Equation& a, const Equation& b) {
    return free_vars(a).size() < free_vars(b).size();
  });

  size_t n = system.vars.size();
  detail::int_pow_capped(A.size, n, limits.tuple_cap);
  std::vector<int> point(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& e : eqs) {
      if (evaluate(e.lhs, A, system.vars, point) != evaluate(e.rhs, A, system.vars, point)) {
        ok = false;
        break;
      }
    }
    if (ok) out.points.push_back(point);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && point[i] == A.size - 1) point[i--] = 0;
    if (i < 0) break;
    ++point[i];
  }
  return out;
}

// Whether the equation holds at every point of the set (radical membership).
inline bool in_radical(const Equation& eq, const SolutionSet& Y) {
  check_term(eq.lhs, Y.algebra.language);
  check_term(eq.rhs, Y.algebra.language);
  for (const auto& v : free_vars(eq))
    if (std::find(Y.vars.begin(), Y.vars.end(), v) == Y.vars.end())
      throw Error(ErrorKind::UnknownSymbol, "variable '" + v + "' not in the set's scope");
  for (const auto& p : Y.points)
    if (evaluate(eq.lhs, Y.algebra, Y.vars, p) != evaluate(eq.rhs, Y.algebra, Y.vars, p))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Closure

// Points satisfying every equation that holds on Z.  A point p qualifies
// exactly when evaluation-at-p is a well-defined homomorphism from the
// coordinate algebra of Z, which the derivation check below decides without
// ever enumerating equations.  cl(empty) = empty by convention.
inline std::vector<std::vector<int>> closure_points(const std::vector<std::vector<int>>& Z,
                                                    size_t nvars, const FiniteAlgebra& A,
                                                    const Limits& limits = {}) {
  std::vector<std::vector<int>> base = Z;
  detail::sort_points(base);
  if (base.empty()) return {};
  auto seeds = detail::variable_tuples(base, nvars);
  auto D = detail::generate_tuple_algebra(A, base.size(), seeds, limits);
  // Two variables with identical coordinate tuples intern to one element, so
  // only the first seed derivation survives; record each variable's element id
  // and re-check the dropped seed constraints per candidate point.
  std::vector<int> gen(nvars);
  for (size_t i = 0; i < nvars; ++i) {
    auto it = std::find(D.elems.begin(), D.elems.end(), seeds[i]);
    gen[i] = static_cast<int>(it - D.elems.begin());
  }
  std::vector<std::vector<int>> out;
  detail::int_pow_capped(A.size, nvars, limits.tuple_cap);
  std::vector<int> p(nvars, 0);
  while (true) {
    if (std::binary_search(base.begin(), base.end(), p)) {
      out.push_back(p);  // extensivity holds by construction
    } else {
      auto phi = detail::derive_values(D, A, p);
      bool ok = true;
      for (size_t i = 0; i < nvars && ok; ++i) ok = phi[gen[i]] == p[i];
      if (ok && detail::values_respect_tables(D, A, phi)) out.push_back(p);
    }
    int i = static_cast<int>(nvars) - 1;
    while (i >= 0 && p[i] == A.size - 1) p[i--] = 0;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

inline SolutionSet closure(const SolutionSet& Z, const Limits& limits = {}) {
  SolutionSet out;
  out.algebra = Z.algebra;
  out.vars = Z.vars;
  out.points = closure_points(Z.points, Z.vars.size(), Z.algebra, limits);
  return out;
}

// Three-valued test for the algebraicity of the empty set in A^n: the empty
// set is algebraic exactly when some equation in n variables is unsatisfiable
// over A, i.e. when two elements of the full term universe over A^n differ in
// every coordinate.  Generation beyond the element cap yields Unknown.
inline Tribool empty_set_algebraic(const FiniteAlgebra& A, size_t nvars,
                                   const Limits& limits = {}) {
  long long total = detail::int_pow_capped(A.size, nvars, limits.tuple_cap);
  std::vector<std::vector<int>> points;
  std::vector<int> p(nvars, 0);
  for (long long t = 0; t < total; ++t) {
    points.push_back(p);
    int i = static_cast<int>(nvars) - 1;
    while (i >= 0 && p[i] == A.size - 1) p[i--] = 0;
    if (i >= 0) ++p[i];
  }
  detail::TupleAlgebra D;
  try {
    D = detail::generate_tuple_algebra(A, points.size(),
                                       detail::variable_tuples(points, nvars), limits);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ResourceLimit) return Tribool::Unknown;
    throw;
  }
  for (size_t i = 0; i < D.elems.size(); ++i)
    for (size_t j = i + 1; j < D.elems.size(); ++j) {
      bool everywhere = true;
      for (size_t c = 0; c < points.size() && everywhere; ++c)
        everywhere = D.elems[i][c] != D.elems[j][c];
      if (everywhere) return Tribool::True;
    }
  return Tribool::False;
}

inline Tribool is_algebraic(const SolutionSet& Y, const Limits& limits = {}) {
  if (Y.points.empty()) return empty_set_algebraic(Y.algebra, Y.vars.size(), limits);
  auto cl = closure_points(Y.points, Y.vars.size(), Y.algebra, limits);
  std::vector<std::vector<int>> base = Y.points;
  detail::sort_points(base);
  return cl == base ? Tribool::True : Tribool::False;
}

// ---------------------------------------------------------------------------
// Coordinate algebras

// The coordinate algebra of a point set: the subalgebra of A^|Y| generated by
// the per-variable coordinate tuples and all constants.  Each element carries
// a witness term over the set's variables.
struct CoordAlgebra {
  FiniteAlgebra algebra;
  std::vector<std::vector<int>> tuples;  // element -> value at each point of Y
  std::vector<int> generators;           // variable index -> element id
  std::vector<Term> witnesses;           // element id -> term
};

inline CoordAlgebra coordinate_algebra(const SolutionSet& Y, const Limits& limits = {}) {
  CoordAlgebra out;
  const FiniteAlgebra& A = Y.algebra;
  if (Y.points.empty()) {
    out.algebra = build_trivial(A.language);
    out.algebra.name = A.name + "_coord";
    out.tuples = {{}};
    out.generators.assign(Y.vars.size(), 0);
    auto consts = A.language.constants();
    out.witnesses = {consts.empty()
                         ? (Y.vars.empty() ? Term::var("x1") : Term::var(Y.vars.front()))
                         : Term::app(consts.front())};
    return out;
  }
  std::vector<std::vector<int>> base = Y.points;
  detail::sort_points(base);
  auto D = detail::generate_tuple_algebra(A, base.size(),
                                          detail::variable_tuples(base, Y.vars.size()),
                                          limits);
  out.algebra.name = A.name + "_coord";
  out.algebra.language = A.language;
  out.algebra.size = static_cast<int>(D.elems.size());
  out.algebra.tables = D.tables;
  out.tuples = D.elems;
  // Seed elements may coincide (two variables with identical tuples); map
  // each variable through the interning of its tuple.
  auto seeds = detail::variable_tuples(base, Y.vars.size());
  for (const auto& s : seeds) {
    auto it = std::find(D.elems.begin(), D.elems.end(), s);
    out.generators.push_back(static_cast<int>(it - D.elems.begin()));
  }
  for (size_t e = 0; e < D.elems.size(); ++e) {
    const auto& d = D.derivs[e];
    if (d.seed >= 0) {
      out.witnesses.push_back(Term::var(Y.vars[d.seed]));
    } else {
      std::vector<Term> args;
      for (int a : d.args) args.push_back(out.witnesses[a]);
      out.witnesses.push_back(Term::app(A.language.symbols[d.sym].first, std::move(args)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Irreducibility and components

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<std::vector<int>> witness;  // point with injective evaluation
};

// A nonempty algebraic set is irreducible exactly when evaluation at some of
// its points is injective on the coordinate algebra.
inline IrreducibilityResult is_irreducible(const SolutionSet& Y, const Limits& limits = {}) {
  if (Y.points.empty())
    throw Error(ErrorKind::EmptySet, "irreducibility is defined for nonempty sets");
  auto G = coordinate_algebra(Y, limits);
  std::vector<std::vector<int>> base = Y.points;
  detail::sort_points(base);
  std::vector<int> column(G.tuples.size());
  for (size_t j = 0; j < base.size(); ++j) {
    for (size_t e = 0; e < G.tuples.size(); ++e) column[e] = G.tuples[e][j];
    std::vector<int> sorted = column;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      return {true, base[j]};
  }
  return {false, std::nullopt};
}

// Maximal point-closures: every algebraic set is the union of the closures of
// its points, and the irreducible components are the maximal ones.  Returned
// in lexicographic order of their point lists.
inline std::vector<SolutionSet> irreducible_components(const SolutionSet& Y,
                                                       const Limits& limits = {}) {
  std::vector<std::vector<std::vector<int>>> closures;
  for (const auto& p : Y.points) {
    auto cl = closure_points({p}, Y.vars.size(), Y.algebra, limits);
    if (std::find(closures.begin(), closures.end(), cl) == closures.end())
      closures.push_back(cl);
  }
  std::vector<SolutionSet> out;
  for (size_t i = 0; i < closures.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < closures.size() && maximal; ++j) {
      if (i == j) continue;
      // closures is duplicate-free, so containment here is strict.
      maximal = !std::includes(closures[j].begin(), closures[j].end(),
                               closures[i].begin(), closures[i].end());
    }
    if (maximal) {
      SolutionSet c;
      c.algebra = Y.algebra;
      c.vars = Y.vars;
      c.points = closures[i];
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SolutionSet& a, const SolutionSet& b) { return a.points < b.points; });
  return out;
}

// ---------------------------------------------------------------------------
// Comparisons

inline bool systems_equivalent(const System& s1, const System& s2, const FiniteAlgebra& A,
                               const Limits& limits = {}) {
  if (s1.vars != s2.vars)
    throw Error(ErrorKind::BadArgument, "systems must share a variable list");
  return solve(s1, A, limits).points == solve(s2, A, limits).points;
}

// Mutual approximation; for finitely generated algebras this captures having
// the same quasi-identities, hence the same algebraic geometry.
inline bool geometrically_equivalent(const FiniteAlgebra& A, const FiniteAlgebra& B,
                                     const Limits& limits = {}) {
  return approximates(A, B, limits) && approximates(B, A, limits);
}

// ---------------------------------------------------------------------------
// Equational domains and co-domains

// A is an equational domain exactly when the 4-variable set
// M = V(x1=x2) ∪ V(x3=x4) is algebraic in A^4.
inline bool is_equational_domain(const FiniteAlgebra& A, const Limits& limits = {}) {
  std::vector<std::vector<int>> M;
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < A.size; ++b)
      for (int c = 0; c < A.size; ++c)
        for (int d = 0; d < A.size; ++d)
          if (a == b || c == d) M.push_back({a, b, c, d});
  auto cl = closure_points(M, 4, A, limits);
  return cl == M;  // M is built in lexicographic order already
}

struct CoDomainReport {
  bool counterexample_found = false;
  int dimension = 0;
  std::string kind;  // "full-space" or "equation"
  std::vector<std::vector<int>> set;
};

// Scans dimensions 1..n_max for a nonempty reducible algebraic set, looking
// at the full affine space and at solution sets of single equations.  Single
// equations are drawn from the term universe over A^n: every pair of distinct
// term functions u, v yields the set {P : u(P) = v(P)}.
inline CoDomainReport co_domain_scan(const FiniteAlgebra& A, int n_max,
                                     const Limits& limits = {}) {
  for (int m = 1; m <= n_max; ++m) {
    long long total = detail::int_pow_capped(A.size, static_cast<size_t>(m), limits.tuple_cap);
    std::vector<std::vector<int>> full;
    std::vector<int> p(m, 0);
    for (long long t = 0; t < total; ++t) {
      full.push_back(p);
      int i = m - 1;
      while (i >= 0 && p[i] == A.size - 1) p[i--] = 0;
      if (i >= 0) ++p[i];
    }
    SolutionSet space;
    space.algebra = A;
    for (int i = 0; i < m; ++i) space.vars.push_back("x" + std::to_string(i + 1));
    space.points = full;
    if (!is_irreducible(space, limits).irreducible)
      return {true, m, "full-space", full};
    auto D = detail::generate_tuple_algebra(
        A, full.size(), detail::variable_tuples(full, static_cast<size_t>(m)), limits);
    for (size_t i = 0; i < D.elems.size(); ++i) {
      for (size_t j = i + 1; j < D.elems.size(); ++j) {
        SolutionSet Y;
        Y.algebra = A;
        Y.vars = space.vars;
        for (size_t c = 0; c < full.size(); ++c)
          if (D.elems[i][c] == D.elems[j][c]) Y.points.push_back(full[c]);
        if (Y.points.empty()) continue;
        if (!is_irreducible(Y, limits).irreducible)
          return {true, m, "equation", Y.points};
      }
    }
  }
  return {};
}

}  // namespace uag
