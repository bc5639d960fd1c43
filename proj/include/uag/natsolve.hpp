#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "uag/common.hpp"

namespace uag {

// One linear equation over the commutative monoid N:
//   sum k_i x_i + a = sum k_j x_j + a'
struct NatEquation {
  std::map<std::string, Int> lhs, rhs;  // variable -> coefficient
  Int lconst = 0, rconst = 0;

  // Cancels the common part of the two sides so that the variable supports
  // and the constant parts are disjoint.
  NatEquation reduced() const {
    NatEquation e = *this;
    for (auto& [x, c] : e.lhs) {
      auto it = e.rhs.find(x);
      if (it == e.rhs.end()) continue;
      Int common = std::min(c, it->second);
      c -= common;
      it->second -= common;
    }
    auto strip = [](std::map<std::string, Int>& m) {
      for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    };
    strip(e.lhs);
    strip(e.rhs);
    Int common = std::min(e.lconst, e.rconst);
    e.lconst -= common;
    e.rconst -= common;
    return e;
  }

  bool satisfied(const std::vector<std::string>& vars,
                 const std::vector<Int>& point) const {
    auto side = [&](const std::map<std::string, Int>& m, const Int& c) {
      Int v = c;
      for (const auto& [x, k] : m) {
        auto it = std::find(vars.begin(), vars.end(), x);
        v += k * point[it - vars.begin()];
      }
      return v;
    };
    return side(lhs, lconst) == side(rhs, rconst);
  }
};

struct NatSystem {
  std::vector<std::string> vars;
  std::vector<NatEquation> equations;
};

// Parses "2x+3y+5z = 5" style linear equations; coefficients are decimal,
// juxtaposition binds coefficient to variable, summands joined by '+'.
inline NatEquation parse_nat_equation(const std::string& line,
                                      std::vector<std::string>& vars) {
  auto eqpos = line.find('=');
  if (eqpos == std::string::npos)
    throw Error(ErrorKind::Syntax, "expected '=' in equation: " + line);
  auto note_var = [&](const std::string& v) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  };
  auto parse_side = [&](const std::string& text, std::map<std::string, Int>& coeffs,
                        Int& constant) {
    size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool expect_term = true;
    while (true) {
      skip();
      if (i >= text.size()) {
        if (expect_term) throw Error(ErrorKind::Syntax, "dangling '+' in: " + line);
        break;
      }
      if (!expect_term) {
        if (text[i] != '+')
          throw Error(ErrorKind::Syntax, std::string("expected '+' before '") + text[i] +
                                             "' in: " + line);
        ++i;
        expect_term = true;
        continue;
      }
      Int coeff = 1;
      bool saw_digits = false;
      if (isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
          num += text[i++];
        coeff = Int(num);
        saw_digits = true;
        if (i < text.size() && text[i] == '*') ++i;  // optional 2*x form
      }
      skip();
      if (i < text.size() && (isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        std::string name;
        while (i < text.size() &&
               (isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
          name += text[i++];
        note_var(name);
        coeffs[name] += coeff;
      } else if (saw_digits) {
        constant += coeff;
      } else {
        throw Error(ErrorKind::Syntax, "expected a summand in: " + line);
      }
      expect_term = false;
    }
  };
  NatEquation e;
  parse_side(line.substr(0, eqpos), e.lhs, e.lconst);
  parse_side(line.substr(eqpos + 1), e.rhs, e.rconst);
  return e;
}

inline NatSystem parse_nat_system(const std::string& text) {
  NatSystem s;
  std::string line;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("vars:", 0) == 0) {
      std::string rest = line.substr(5);
      std::string cur;
      for (char ch : rest) {
        if (ch == ',' || isspace(static_cast<unsigned char>(ch))) {
          if (!cur.empty()) s.vars.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      if (!cur.empty()) s.vars.push_back(cur);
      continue;
    }
    if (line.rfind("eq:", 0) == 0) {
      s.equations.push_back(parse_nat_equation(line.substr(3), s.vars));
      continue;
    }
    s.equations.push_back(parse_nat_equation(line, s.vars));
  }
  return s;
}

struct NatSolutionSet {
  std::vector<std::string> vars;
  std::vector<std::vector<Int>> points;  // sorted lexicographically
};

// Bounded enumeration: every variable needs a bound from some reduced
// equation whose opposite side is constant.  Variables without such a bound
// raise Unbounded; the Hilbert-basis machinery for general homogeneous
// systems is deliberately out of scope.
inline NatSolutionSet solve_over_N(const NatSystem& system, const Limits& limits = {}) {
  NatSolutionSet out;
  out.vars = system.vars;
  size_t n = system.vars.size();
  std::vector<Int> bound(n, -1);
  bool infeasible = false;
  for (const auto& raw : system.equations) {
    NatEquation e = raw.reduced();
    auto apply_bounds = [&](const std::map<std::string, Int>& varside, const Int& varconst,
                            const std::map<std::string, Int>& otherside,
                            const Int& otherconst) {
      if (!otherside.empty()) return;
      // varside + varconst = otherconst with all coefficients positive.
      if (varconst > otherconst || (varside.empty() && varconst != otherconst)) {
        infeasible = true;
        return;
      }
      Int budget = otherconst - varconst;
      for (const auto& [x, k] : varside) {
        Int b = budget / k;
        size_t idx = std::find(system.vars.begin(), system.vars.end(), x) -
                     system.vars.begin();
        if (bound[idx] < 0 || b < bound[idx]) bound[idx] = b;
      }
    };
    apply_bounds(e.lhs, e.lconst, e.rhs, e.rconst);
    apply_bounds(e.rhs, e.rconst, e.lhs, e.lconst);
  }
  if (infeasible) return out;
  for (size_t i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw Error(ErrorKind::Unbounded,
                  "no finite bound for variable '" + system.vars[i] + "'");
  Int total = 1;
  for (size_t i = 0; i < n; ++i) {
    total *= bound[i] + 1;
    if (total > limits.tuple_cap)
      throw Error(ErrorKind::ResourceLimit, "tuple cap exceeded");
  }
  std::vector<Int> point(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& e : system.equations)
      if (!e.satisfied(system.vars, point)) {
        ok = false;
        break;
      }
    if (ok) out.points.push_back(point);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && point[i] == bound[i]) point[i--] = 0;
    if (i < 0) break;
    ++point[i];
  }
  return out;
}

}  // namespace uag
