#pragma once

#include <map>
#include <string>
#include <vector>

#include "uag/common.hpp"

namespace uag {

// A functional signature: named operation symbols with fixed arities.
// Constants are arity-0 operations.  Declaration order is kept because
// several enumeration routines promise deterministic output.
struct Language {
  std::vector<std::pair<std::string, int>> symbols;  // declaration order

  bool has(const std::string& name) const {
    for (const auto& [s, a] : symbols)
      if (s == name) return true;
    return false;
  }

  int arity(const std::string& name) const {
    for (const auto& [s, a] : symbols)
      if (s == name) return a;
    throw Error(ErrorKind::UnknownSymbol, "no symbol '" + name + "' in language");
  }

  void add(const std::string& name, int arity) {
    if (has(name))
      throw Error(ErrorKind::DuplicateSymbol, "symbol '" + name + "' declared twice");
    if (arity < 0)
      throw Error(ErrorKind::BadArgument, "negative arity for '" + name + "'");
    symbols.emplace_back(name, arity);
  }

  std::vector<std::string> constants() const {
    std::vector<std::string> out;
    for (const auto& [s, a] : symbols)
      if (a == 0) out.push_back(s);
    return out;
  }

  bool operator==(const Language& other) const { return symbols == other.symbols; }
  bool operator!=(const Language& other) const { return !(*this == other); }

  // Order-insensitive comparison: same symbol/arity set.
  bool same_symbols(const Language& other) const {
    std::map<std::string, int> a(symbols.begin(), symbols.end());
    std::map<std::string, int> b(other.symbols.begin(), other.symbols.end());
    return a == b;
  }
};

}  // namespace uag
