#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "uag/language.hpp"

namespace uag {

// First-order term over a functional language.  Variables are free-form
// identifiers; applications carry the operation symbol and argument list.
struct Term {
  enum class Kind { Var, App };

  Kind kind = Kind::Var;
  std::string name;        // variable name or operation symbol
  std::vector<Term> args;  // empty for variables and constants

  static Term var(std::string v) {
    Term t;
    t.kind = Kind::Var;
    t.name = std::move(v);
    return t;
  }

  static Term app(std::string sym, std::vector<Term> args = {}) {
    Term t;
    t.kind = Kind::App;
    t.name = std::move(sym);
    t.args = std::move(args);
    return t;
  }

  bool is_var() const { return kind == Kind::Var; }

  bool operator==(const Term& other) const {
    return kind == other.kind && name == other.name && args == other.args;
  }
  bool operator!=(const Term& other) const { return !(*this == other); }

  bool operator<(const Term& other) const {
    if (kind != other.kind) return kind < other.kind;
    if (name != other.name) return name < other.name;
    return args < other.args;
  }
};

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

// Checks that every applied symbol exists in `lang` with the right arity.
inline void check_term(const Term& t, const Language& lang) {
  if (t.is_var()) return;
  if (!lang.has(t.name))
    throw Error(ErrorKind::UnknownSymbol, "symbol '" + t.name + "' not in language");
  if (lang.arity(t.name) != static_cast<int>(t.args.size()))
    throw Error(ErrorKind::ArityMismatch,
                "symbol '" + t.name + "' expects " + std::to_string(lang.arity(t.name)) +
                    " arguments, got " + std::to_string(t.args.size()));
  for (const auto& a : t.args) check_term(a, lang);
}

// Simultaneous substitution; variables without a binding are left in place.
inline Term substitute(const Term& t, const std::map<std::string, Term>& binding) {
  if (t.is_var()) {
    auto it = binding.find(t.name);
    return it == binding.end() ? t : it->second;
  }
  Term out = Term::app(t.name);
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(substitute(a, binding));
  return out;
}

inline std::string term_to_string(const Term& t) {
  if (t.is_var()) return t.name;
  if (t.args.empty()) return t.name;
  std::string s = t.name + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ", ";
    s += term_to_string(t.args[i]);
  }
  s += ")";
  return s;
}

struct Equation {
  Term lhs, rhs;

  bool operator==(const Equation& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
  bool operator<(const Equation& other) const {
    if (lhs != other.lhs) return lhs < other.lhs;
    return rhs < other.rhs;
  }
};

inline std::string equation_to_string(const Equation& e) {
  return term_to_string(e.lhs) + " = " + term_to_string(e.rhs);
}

inline std::set<std::string> free_vars(const Equation& e) {
  std::set<std::string> out;
  collect_vars(e.lhs, out);
  collect_vars(e.rhs, out);
  return out;
}

// A finite system of equations over a declared variable list.  The variable
// order is the declaration order; every operation that enumerates points or
// prints tuples follows it.
struct System {
  std::vector<std::string> vars;
  std::vector<Equation> equations;

  int var_index(const std::string& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return static_cast<int>(i);
    return -1;
  }

  void check(const Language& lang) const {
    std::set<std::string> declared(vars.begin(), vars.end());
    if (declared.size() != vars.size())
      throw Error(ErrorKind::DuplicateSymbol, "duplicate variable declaration");
    for (const auto& e : equations) {
      check_term(e.lhs, lang);
      check_term(e.rhs, lang);
      for (const auto& v : free_vars(e))
        if (!declared.count(v))
          throw Error(ErrorKind::UnknownSymbol, "variable '" + v + "' not declared");
    }
  }
};

}  // namespace uag
