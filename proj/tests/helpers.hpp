#pragma once

#include <random>
#include <string>
#include <vector>

#include "uag/uag.hpp"

namespace testutil {

using namespace uag;

// Independent tiny evaluator used as an oracle against the library one.
inline int eval_oracle(const Term& t, const FiniteAlgebra& A,
                       const std::vector<std::string>& vars,
                       const std::vector<int>& point) {
  if (t.is_var()) {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == t.name) return point[i];
    throw std::runtime_error("unknown var in oracle");
  }
  long long idx = 0;
  for (const auto& a : t.args) idx = idx * A.size + eval_oracle(a, A, vars, point);
  return A.tables.at(t.name)[static_cast<size_t>(idx)];
}

// Brute-force solution set: every tuple, every equation, no shortcuts.
inline std::vector<std::vector<int>> brute_solve(const System& s, const FiniteAlgebra& A) {
  std::vector<std::vector<int>> out;
  size_t n = s.vars.size();
  std::vector<int> p(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& e : s.equations)
      if (eval_oracle(e.lhs, A, s.vars, p) != eval_oracle(e.rhs, A, s.vars, p)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && p[i] == A.size - 1) p[i--] = 0;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

// Random term over the given operations (names with arities) and variables.
inline Term random_term(std::mt19937& rng, const Language& lang,
                        const std::vector<std::string>& vars, int depth) {
  std::vector<std::pair<std::string, int>> ops = lang.symbols;
  std::uniform_int_distribution<size_t> pick_var(0, vars.size() - 1);
  if (depth <= 0 || ops.empty() || std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    return Term::var(vars[pick_var(rng)]);
  const auto& [sym, ar] = ops[std::uniform_int_distribution<size_t>(0, ops.size() - 1)(rng)];
  std::vector<Term> args;
  for (int i = 0; i < ar; ++i) args.push_back(random_term(rng, lang, vars, depth - 1));
  return Term::app(sym, std::move(args));
}

inline System random_system(std::mt19937& rng, const Language& lang, int max_vars,
                            int max_eqs, int depth) {
  System s;
  int nv = std::uniform_int_distribution<int>(1, max_vars)(rng);
  for (int i = 0; i < nv; ++i) s.vars.push_back("x" + std::to_string(i + 1));
  int ne = std::uniform_int_distribution<int>(1, max_eqs)(rng);
  for (int i = 0; i < ne; ++i)
    s.equations.push_back(Equation{random_term(rng, lang, s.vars, depth),
                                   random_term(rng, lang, s.vars, depth)});
  return s;
}

}  // namespace testutil
