#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "uag/finite_algebra.hpp"
#include "uag/formulas.hpp"
#include "uag/term.hpp"

namespace uag {

namespace detail {

struct TermParser {
  const std::string& text;
  const Language& lang;
  size_t pos = 0;

  TermParser(const std::string& t, const Language& l) : text(t), lang(l) {}

  void skip() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_str(const char* s) {
    skip();
    size_t len = std::char_traits<char>::length(s);
    if (text.compare(pos, len, s) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string ident() {
    skip();
    if (pos >= text.size() ||
        !(isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      throw Error(ErrorKind::Syntax, "expected identifier at '" + text.substr(pos) + "'");
    std::string out;
    while (pos < text.size() &&
           (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      out += text[pos++];
    return out;
  }

  Term factor() {
    skip();
    Term t;
    if (eat('(')) {
      t = term();
      if (!eat(')')) throw Error(ErrorKind::Syntax, "expected ')'");
    } else if (peek() == '0' || peek() == '1') {
      char lit = text[pos++];
      const char* sym = lit == '0' ? "zero" : "one";
      if (!lang.has(sym))
        throw Error(ErrorKind::Syntax,
                    std::string("literal '") + lit + "' needs symbol '" + sym +
                        "' in the language");
      t = Term::app(sym);
    } else {
      std::string name = ident();
      if (peek() == '(') {
        eat('(');
        std::vector<Term> args;
        if (peek() != ')') {
          args.push_back(term());
          while (eat(',')) args.push_back(term());
        }
        if (!eat(')')) throw Error(ErrorKind::Syntax, "expected ')'");
        t = Term::app(name, std::move(args));
      } else if (lang.has(name) && lang.arity(name) == 0) {
        t = Term::app(name);
      } else {
        t = Term::var(name);
      }
    }
    while (eat_str("^-1")) t = Term::app("inv", {t});
    return t;
  }

  Term term() {
    Term t = factor();
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        t = Term::app("mul", {t, factor()});
      } else if (pos < text.size() && text[pos] == '+') {
        ++pos;
        t = Term::app("add", {t, factor()});
      } else {
        break;
      }
    }
    return t;
  }
};

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    lines.push_back(start == std::string::npos ? "" : line.substr(start));
  }
  return lines;
}

inline std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> parse_var_list(const std::string& text) {
  std::vector<std::string> vars;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) vars.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) vars.push_back(cur);
  return vars;
}

}  // namespace detail

inline Term parse_term(const std::string& text, const Language& lang) {
  detail::TermParser p(text, lang);
  Term t = p.term();
  p.skip();
  if (p.pos != text.size())
    throw Error(ErrorKind::Syntax, "trailing input after term: '" + text.substr(p.pos) + "'");
  return t;
}

inline Equation parse_equation(const std::string& text, const Language& lang) {
  // Split at the first '=' that is not part of '!='.
  size_t pos = text.find('=');
  if (pos == std::string::npos || (pos > 0 && text[pos - 1] == '!'))
    throw Error(ErrorKind::Syntax, "expected '=' in equation: " + text);
  return Equation{parse_term(text.substr(0, pos), lang),
                  parse_term(text.substr(pos + 1), lang)};
}

// Language block: "op mul/2; op inv/1; const e" (entries ';'-separated).
inline Language parse_language(const std::string& text) {
  Language lang;
  for (const auto& raw : detail::split_list(text, ';')) {
    std::string entry = detail::trim(raw);
    if (entry.empty()) continue;
    if (entry.rfind("op ", 0) == 0) {
      std::string body = detail::trim(entry.substr(3));
      size_t slash = body.find('/');
      if (slash == std::string::npos)
        throw Error(ErrorKind::Syntax, "expected SYM/ARITY in '" + entry + "'");
      lang.add(detail::trim(body.substr(0, slash)),
               std::stoi(body.substr(slash + 1)));
    } else if (entry.rfind("const ", 0) == 0) {
      lang.add(detail::trim(entry.substr(6)), 0);
    } else {
      throw Error(ErrorKind::Syntax, "cannot parse language entry '" + entry + "'");
    }
  }
  return lang;
}

inline System parse_system(const std::string& text, const Language& lang) {
  System s;
  for (const auto& line : detail::split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("vars:", 0) == 0) {
      auto vs = detail::parse_var_list(line.substr(5));
      s.vars.insert(s.vars.end(), vs.begin(), vs.end());
    } else if (line.rfind("eq:", 0) == 0) {
      s.equations.push_back(parse_equation(line.substr(3), lang));
    } else {
      throw Error(ErrorKind::Syntax, "cannot parse system line '" + line + "'");
    }
  }
  s.check(lang);
  return s;
}

inline Literal parse_literal(const std::string& text, const Language& lang) {
  size_t neq = text.find("!=");
  if (neq != std::string::npos)
    return Literal{parse_term(text.substr(0, neq), lang),
                   parse_term(text.substr(neq + 2), lang), false};
  size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw Error(ErrorKind::Syntax, "expected '=' or '!=' in literal: " + text);
  return Literal{parse_term(text.substr(0, eq), lang),
                 parse_term(text.substr(eq + 1), lang), true};
}

inline Formula parse_formula(const std::string& text, const Language& lang) {
  Formula f;
  for (const auto& line : detail::split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("vars:", 0) == 0) {
      auto vs = detail::parse_var_list(line.substr(5));
      f.vars.insert(f.vars.end(), vs.begin(), vs.end());
      continue;
    }
    std::string body = line.rfind("fml:", 0) == 0 ? line.substr(4) : line;
    size_t arrow = body.find("->");
    if (arrow == std::string::npos)
      throw Error(ErrorKind::Syntax, "expected '->' in formula: " + body);
    std::string prem = detail::trim(body.substr(0, arrow));
    std::string conc = detail::trim(body.substr(arrow + 2));
    if (!prem.empty() && prem != "true")
      for (const auto& part : detail::split_list(prem, '&'))
        f.premises.push_back(parse_literal(detail::trim(part), lang));
    for (const auto& part : detail::split_list(conc, '|'))
      f.conclusions.push_back(parse_literal(detail::trim(part), lang));
  }
  if (f.conclusions.empty())
    throw Error(ErrorKind::Syntax, "formula file contains no fml: line");
  f.check(lang);
  return f;
}

// ---------------------------------------------------------------------------
// Algebra files

inline FiniteAlgebra parse_algebra_file(const std::string& text) {
  FiniteAlgebra A;
  bool saw_language = false, saw_carrier = false;
  std::vector<std::pair<std::string, int>> pending_consts;
  for (const auto& line : detail::split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("algebra ", 0) == 0) {
      A.name = detail::trim(line.substr(8));
    } else if (line.rfind("language:", 0) == 0) {
      A.language = parse_language(line.substr(9));
      saw_language = true;
    } else if (line.rfind("carrier:", 0) == 0) {
      A.size = std::stoi(detail::trim(line.substr(8)));
      saw_carrier = true;
    } else if (line.rfind("table ", 0) == 0) {
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw Error(ErrorKind::Syntax, "expected ':' in table line: " + line);
      std::string sym = detail::trim(line.substr(6, colon - 6));
      std::vector<int> values;
      std::istringstream in(line.substr(colon + 1));
      int v;
      while (in >> v) values.push_back(v);
      A.tables[sym] = std::move(values);
    } else if (line.rfind("const ", 0) == 0) {
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::Syntax, "expected '=' in const line: " + line);
      pending_consts.emplace_back(detail::trim(line.substr(6, eq - 6)),
                                  std::stoi(detail::trim(line.substr(eq + 1))));
    } else {
      throw Error(ErrorKind::Syntax, "cannot parse algebra line '" + line + "'");
    }
  }
  if (!saw_language) throw Error(ErrorKind::Syntax, "algebra file lacks a language line");
  if (!saw_carrier) throw Error(ErrorKind::Syntax, "algebra file lacks a carrier line");
  for (const auto& [sym, value] : pending_consts) A.tables[sym] = {value};
  A.validate();
  return A;
}

inline std::string write_algebra_file(const FiniteAlgebra& A) {
  std::ostringstream out;
  out << "algebra " << (A.name.empty() ? "unnamed" : A.name) << "\n";
  out << "language:";
  bool first = true;
  for (const auto& [sym, ar] : A.language.symbols) {
    out << (first ? " " : "; ");
    first = false;
    if (ar == 0)
      out << "const " << sym;
    else
      out << "op " << sym << "/" << ar;
  }
  out << "\n";
  out << "carrier: " << A.size << "\n";
  for (const auto& [sym, ar] : A.language.symbols) {
    if (ar == 0) {
      out << "const " << sym << " = " << A.tables.at(sym)[0] << "\n";
    } else {
      out << "table " << sym << ":";
      for (int v : A.tables.at(sym)) out << " " << v;
      out << "\n";
    }
  }
  return out.str();
}

// Point files for closure/algebraicity queries: a vars: line followed by
// "point: e1 e2 ..." rows of element indices.
struct PointFile {
  std::vector<std::string> vars;
  std::vector<std::vector<int>> points;
};

inline PointFile parse_points_file(const std::string& text, const FiniteAlgebra& A) {
  PointFile out;
  for (const auto& line : detail::split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("vars:", 0) == 0) {
      auto vs = detail::parse_var_list(line.substr(5));
      out.vars.insert(out.vars.end(), vs.begin(), vs.end());
    } else if (line.rfind("point:", 0) == 0) {
      std::vector<int> p;
      std::istringstream in(line.substr(6));
      int v;
      while (in >> v) p.push_back(v);
      if (p.size() != out.vars.size())
        throw Error(ErrorKind::Syntax, "point width does not match vars: " + line);
      for (int e : p)
        if (e < 0 || e >= A.size)
          throw Error(ErrorKind::Syntax, "point entry outside carrier: " + line);
      out.points.push_back(std::move(p));
    } else {
      throw Error(ErrorKind::Syntax, "cannot parse points line '" + line + "'");
    }
  }
  return out;
}

}  // namespace uag
