// uag: a workbench for equations over finite and symbolic algebras.
//
// Subcommands cover solving, radicals, closures, coordinate algebras,
// irreducible decomposition, homomorphism search, abelian-group structure
// theory, bounded solving over N, free unars, the bicyclic monoid, and
// universal-formula checking.  Every subcommand has a --machine mode that
// emits a line-oriented key=value report.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "uag/uag.hpp"

namespace {

using namespace uag;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadArgument, "cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string format_point(const std::vector<int>& p, const FiniteAlgebra& A) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += A.label(p[i]);
  }
  return s + ")";
}

std::string format_points(const std::vector<std::vector<int>>& pts,
                          const FiniteAlgebra& A) {
  std::string s;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += " ";
    s += format_point(pts[i], A);
  }
  return s;
}

IntMatrix read_matrix(const std::string& path) {
  std::vector<std::vector<Int>> rows;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto t = uag::detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) row.push_back(Int(tok));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::BadArgument, "matrix file is empty: " + path);
  return IntMatrix::from_rows(rows);
}

std::string format_matrix(const IntMatrix& m) {
  std::string s;
  for (size_t i = 0; i < m.rows; ++i) {
    if (i) s += "; ";
    for (size_t j = 0; j < m.cols; ++j) {
      if (j) s += " ";
      s += m.at(i, j).str();
    }
  }
  return s.empty() ? "(empty)" : s;
}

// f^k(x) | f(f(x)) | x
std::pair<long long, std::string> parse_unar_side(const std::string& text) {
  std::string s = uag::detail::trim(text);
  long long k = 0;
  while (true) {
    if (s.rfind("f", 0) == 0 && s.size() > 1 && (s[1] == '(' || s[1] == '^')) {
      size_t open;
      if (s[1] == '^') {
        size_t p = 2;
        std::string num;
        while (p < s.size() && isdigit(static_cast<unsigned char>(s[p]))) num += s[p++];
        if (num.empty() || p >= s.size() || s[p] != '(')
          throw Error(ErrorKind::Syntax, "cannot parse unar term: " + text);
        k += std::stoll(num);
        open = p;
      } else {
        k += 1;
        open = 1;
      }
      if (s.back() != ')')
        throw Error(ErrorKind::Syntax, "cannot parse unar term: " + text);
      s = uag::detail::trim(s.substr(open + 1, s.size() - open - 2));
    } else {
      break;
    }
  }
  if (s.empty() || !(isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    throw Error(ErrorKind::Syntax, "cannot parse unar variable: " + text);
  return {k, s};
}

struct UnarFile {
  std::vector<std::string> vars;
  std::vector<UnarEquation> equations;
};

UnarFile parse_unar_file(const std::string& text) {
  UnarFile out;
  for (const auto& line : uag::detail::split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("vars:", 0) == 0) {
      auto vs = uag::detail::parse_var_list(line.substr(5));
      out.vars.insert(out.vars.end(), vs.begin(), vs.end());
      continue;
    }
    std::string body = line.rfind("eq:", 0) == 0 ? line.substr(3) : line;
    size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Syntax, "expected '=' in unar equation: " + line);
    auto [n, x] = parse_unar_side(body.substr(0, eq));
    auto [m, y] = parse_unar_side(body.substr(eq + 1));
    out.equations.push_back(UnarEquation{n, x, m, y});
  }
  return out;
}

Bicyclic parse_bicyclic(const std::string& text) {
  auto parts = uag::detail::split_list(text, ',');
  if (parts.size() != 2)
    throw Error(ErrorKind::Syntax, "expected N,M for a bicyclic element");
  return Bicyclic{std::stoll(uag::detail::trim(parts[0])),
                  std::stoll(uag::detail::trim(parts[1]))};
}

struct Options {
  std::string algebra_file, algebra2_file, system_file, system2_file;
  std::string formula_file, points_file, matrix_file, out_file;
  std::string group_lit, group2_lit, query, lhs, rhs;
  long long tuple_cap = 2'000'000;
  long long elem_cap = 100'000;
  long long nmax = 3, nval = 0, pval = 2, kval = 1;
  bool machine = false;
  bool bijective = false;

  Limits limits() const {
    Limits l;
    l.tuple_cap = tuple_cap;
    l.elem_cap = elem_cap;
    return l;
  }
};

void print_report(const Report& r, bool machine) {
  if (machine) {
    std::cout << r.to_machine();
    return;
  }
  for (const auto& [k, v] : r.entries) std::cout << k << ": " << v << "\n";
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--tuple-cap", opt.tuple_cap, "max enumerated tuples");
  cmd->add_option("--elem-cap", opt.elem_cap, "max generated elements");
  cmd->add_flag("--machine", opt.machine, "line-oriented key=value output");
}

SolutionSet solve_from_files(const Options& opt) {
  auto A = parse_algebra_file(read_file(opt.algebra_file));
  auto S = parse_system(read_file(opt.system_file), A.language);
  return solve(S, A, opt.limits());
}

SolutionSet set_from_points_file(const Options& opt) {
  auto A = parse_algebra_file(read_file(opt.algebra_file));
  auto pf = parse_points_file(read_file(opt.points_file), A);
  SolutionSet Y;
  Y.algebra = A;
  Y.vars = pf.vars;
  Y.points = pf.points;
  uag::detail::sort_points(Y.points);
  return Y;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal algebraic geometry workbench"};
  app.require_subcommand(1);
  Options opt;

  auto* c_solve = app.add_subcommand("solve", "solve a system over a finite algebra");
  c_solve->add_option("--algebra", opt.algebra_file)->required();
  c_solve->add_option("--system", opt.system_file)->required();
  add_common_flags(c_solve, opt);

  auto* c_radical = app.add_subcommand("radical", "equation membership in a radical");
  c_radical->add_option("--algebra", opt.algebra_file)->required();
  c_radical->add_option("--system", opt.system_file)->required();
  c_radical->add_option("--query", opt.query, "equation TERM = TERM")->required();
  add_common_flags(c_radical, opt);

  auto* c_closure = app.add_subcommand("closure", "closure of a point set");
  c_closure->add_option("--algebra", opt.algebra_file)->required();
  c_closure->add_option("--points", opt.points_file)->required();
  add_common_flags(c_closure, opt);

  auto* c_algebraic = app.add_subcommand("algebraic", "is the point set algebraic?");
  c_algebraic->add_option("--algebra", opt.algebra_file)->required();
  c_algebraic->add_option("--points", opt.points_file)->required();
  add_common_flags(c_algebraic, opt);

  auto* c_coord = app.add_subcommand("coord", "coordinate algebra of a solution set");
  c_coord->add_option("--algebra", opt.algebra_file)->required();
  c_coord->add_option("--system", opt.system_file)->required();
  add_common_flags(c_coord, opt);

  auto* c_irr = app.add_subcommand("irreducible", "is the solution set irreducible?");
  c_irr->add_option("--algebra", opt.algebra_file)->required();
  c_irr->add_option("--system", opt.system_file)->required();
  add_common_flags(c_irr, opt);

  auto* c_comp = app.add_subcommand("components", "irreducible components");
  c_comp->add_option("--algebra", opt.algebra_file)->required();
  c_comp->add_option("--system", opt.system_file)->required();
  add_common_flags(c_comp, opt);

  auto* c_equiv = app.add_subcommand("equiv", "do two systems have equal solutions?");
  c_equiv->add_option("--algebra", opt.algebra_file)->required();
  c_equiv->add_option("--system", opt.system_file)->required();
  c_equiv->add_option("--system2", opt.system2_file)->required();
  add_common_flags(c_equiv, opt);

  auto* c_homs = app.add_subcommand("homs", "homomorphisms source -> target");
  c_homs->add_option("--algebra", opt.algebra_file, "source")->required();
  c_homs->add_option("--algebra2", opt.algebra2_file, "target")->required();
  add_common_flags(c_homs, opt);

  auto* c_embed = app.add_subcommand("embed", "embedding source -> target");
  c_embed->add_option("--algebra", opt.algebra_file, "source")->required();
  c_embed->add_option("--algebra2", opt.algebra2_file, "target")->required();
  c_embed->add_flag("--bijective", opt.bijective, "require an isomorphism");
  add_common_flags(c_embed, opt);

  auto* c_approx = app.add_subcommand("approx", "does the first algebra approximate the second?");
  c_approx->add_option("--algebra", opt.algebra_file)->required();
  c_approx->add_option("--algebra2", opt.algebra2_file)->required();
  add_common_flags(c_approx, opt);

  auto* c_discr = app.add_subcommand("discr", "does the first algebra discriminate the second?");
  c_discr->add_option("--algebra", opt.algebra_file)->required();
  c_discr->add_option("--algebra2", opt.algebra2_file)->required();
  add_common_flags(c_discr, opt);

  auto* c_geomeq = app.add_subcommand("geomeq", "geometric equivalence of two finite algebras");
  c_geomeq->add_option("--algebra", opt.algebra_file)->required();
  c_geomeq->add_option("--algebra2", opt.algebra2_file)->required();
  add_common_flags(c_geomeq, opt);

  auto* c_domain = app.add_subcommand("domain", "is the algebra an equational domain?");
  c_domain->add_option("--algebra", opt.algebra_file)->required();
  add_common_flags(c_domain, opt);

  auto* c_codomain = app.add_subcommand("codomain", "scan for reducible algebraic sets");
  c_codomain->add_option("--algebra", opt.algebra_file)->required();
  c_codomain->add_option("--nmax", opt.nmax, "max dimension");
  add_common_flags(c_codomain, opt);

  auto* c_dioph = app.add_subcommand("diophantize", "add a constant for every element");
  c_dioph->add_option("--algebra", opt.algebra_file)->required();
  c_dioph->add_option("--out", opt.out_file, "write the rewritten algebra file here");
  add_common_flags(c_dioph, opt);

  auto* c_abelian = app.add_subcommand("abelian", "f.g. abelian group operations");
  c_abelian->require_subcommand(1);
  auto* a_snf = c_abelian->add_subcommand("snf", "Smith normal form");
  a_snf->add_option("--matrix", opt.matrix_file)->required();
  add_common_flags(a_snf, opt);
  auto* a_radical = c_abelian->add_subcommand("radical", "saturation of the row lattice");
  a_radical->add_option("--matrix", opt.matrix_file)->required();
  add_common_flags(a_radical, opt);
  auto* a_rank = c_abelian->add_subcommand("rank", "coordinate group rank over Z");
  a_rank->add_option("--matrix", opt.matrix_file)->required();
  add_common_flags(a_rank, opt);
  auto* a_prefix = c_abelian->add_subcommand("prefix", "minimal equivalent prefix");
  a_prefix->add_option("--matrix", opt.matrix_file)->required();
  a_prefix->add_option("--group", opt.group_lit, "e.g. Z^2 + Z_8")->required();
  add_common_flags(a_prefix, opt);
  auto* a_sub = c_abelian->add_subcommand("suboplus", "summand subgroup set");
  a_sub->add_option("--group", opt.group_lit)->required();
  add_common_flags(a_sub, opt);
  auto* a_coord = c_abelian->add_subcommand("coord", "is B a coordinate group over A?");
  a_coord->add_option("--group", opt.group_lit, "B")->required();
  a_coord->add_option("--group2", opt.group2_lit, "A")->required();
  add_common_flags(a_coord, opt);
  auto* a_irrcoord = c_abelian->add_subcommand("irrcoord", "irreducible coordinate group?");
  a_irrcoord->add_option("--group", opt.group_lit, "B")->required();
  a_irrcoord->add_option("--group2", opt.group2_lit, "A")->required();
  add_common_flags(a_irrcoord, opt);
  auto* a_coordc = c_abelian->add_subcommand("coordc", "coordinate group with constants (B = A + B')");
  a_coordc->add_option("--group", opt.group_lit, "B'")->required();
  a_coordc->add_option("--group2", opt.group2_lit, "A")->required();
  add_common_flags(a_coordc, opt);
  auto* a_irrcoordc = c_abelian->add_subcommand("irrcoordc", "irreducible, with constants");
  a_irrcoordc->add_option("--group", opt.group_lit, "B'")->required();
  a_irrcoordc->add_option("--group2", opt.group2_lit, "A")->required();
  add_common_flags(a_irrcoordc, opt);
  auto* a_geomeq = c_abelian->add_subcommand("geomeq", "geometric equivalence");
  a_geomeq->add_option("--group", opt.group_lit)->required();
  a_geomeq->add_option("--group2", opt.group2_lit)->required();
  add_common_flags(a_geomeq, opt);

  auto* c_nat = app.add_subcommand("nat", "the commutative monoid N");
  c_nat->require_subcommand(1);
  auto* n_solve = c_nat->add_subcommand("solve", "bounded solving over N");
  n_solve->add_option("--system", opt.system_file)->required();
  add_common_flags(n_solve, opt);

  auto* c_unar = app.add_subcommand("unar", "free unars");
  c_unar->require_subcommand(1);
  auto* u_solve = c_unar->add_subcommand("solve", "solve f^n(x)=f^m(y) systems");
  u_solve->add_option("--system", opt.system_file)->required();
  add_common_flags(u_solve, opt);

  auto* c_bi = app.add_subcommand("bicyclic", "the bicyclic monoid");
  c_bi->require_subcommand(1);
  auto* b_mul = c_bi->add_subcommand("mul", "multiply canonical elements");
  b_mul->add_option("--lhs", opt.lhs, "N,M")->required();
  b_mul->add_option("--rhs", opt.rhs, "N,M")->required();
  add_common_flags(b_mul, opt);
  auto* b_wit = c_bi->add_subcommand("witness", "non-Noetherian witness");
  b_wit->add_option("--n", opt.nval)->required();
  add_common_flags(b_wit, opt);

  auto* c_formula = app.add_subcommand("formula", "universal formulas");
  c_formula->require_subcommand(1);
  auto* f_check = c_formula->add_subcommand("check", "check a formula in a finite algebra");
  f_check->add_option("--algebra", opt.algebra_file)->required();
  f_check->add_option("--formula", opt.formula_file)->required();
  add_common_flags(f_check, opt);
  auto* f_sigma = c_formula->add_subcommand("sigma", "quasi-identity window of an abelian group");
  f_sigma->add_option("--group", opt.group_lit)->required();
  f_sigma->add_option("--pmax", opt.pval, "largest prime");
  f_sigma->add_option("--nmax", opt.nmax, "largest exponent");
  add_common_flags(f_sigma, opt);
  auto* f_phi = c_formula->add_subcommand("phi", "order-counting formula check");
  f_phi->add_option("--group", opt.group_lit)->required();
  f_phi->add_option("--p", opt.pval)->required();
  f_phi->add_option("--k", opt.kval)->required();
  f_phi->add_option("--n", opt.nval)->required();
  add_common_flags(f_phi, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    Report rep;
    const Limits limits = opt.limits();

    if (*c_solve) {
      auto Y = solve_from_files(opt);
      rep.add("command", "solve");
      rep.add("count", static_cast<long long>(Y.points.size()));
      rep.add("points", format_points(Y.points, Y.algebra));
    } else if (*c_radical) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto S = parse_system(read_file(opt.system_file), A.language);
      auto eq = parse_equation(opt.query, A.language);
      auto Y = solve(S, A, limits);
      rep.add("command", "radical");
      rep.add("query", equation_to_string(eq));
      rep.add("in_radical", in_radical(eq, Y));
      rep.add("congruent_closure", congruent_closure_contains(S.equations, eq));
    } else if (*c_closure) {
      auto Y = set_from_points_file(opt);
      auto C = closure(Y, limits);
      rep.add("command", "closure");
      rep.add("count", static_cast<long long>(C.points.size()));
      rep.add("points", format_points(C.points, C.algebra));
    } else if (*c_algebraic) {
      auto Y = set_from_points_file(opt);
      rep.add("command", "algebraic");
      rep.add("verdict", tribool_name(is_algebraic(Y, limits)));
    } else if (*c_coord) {
      auto Y = solve_from_files(opt);
      auto G = coordinate_algebra(Y, limits);
      rep.add("command", "coord");
      rep.add("size", G.algebra.size);
      std::string ws;
      for (size_t e = 0; e < G.witnesses.size(); ++e) {
        if (e) ws += "; ";
        ws += term_to_string(G.witnesses[e]);
      }
      rep.add("witnesses", ws);
    } else if (*c_irr) {
      auto Y = solve_from_files(opt);
      auto r = is_irreducible(Y, limits);
      rep.add("command", "irreducible");
      rep.add("irreducible", r.irreducible);
      if (r.witness) rep.add("witness", format_point(*r.witness, Y.algebra));
    } else if (*c_comp) {
      auto Y = solve_from_files(opt);
      auto comps = irreducible_components(Y, limits);
      rep.add("command", "components");
      rep.add("count", static_cast<long long>(comps.size()));
      for (size_t i = 0; i < comps.size(); ++i)
        rep.add("component" + std::to_string(i + 1),
                format_points(comps[i].points, Y.algebra));
    } else if (*c_equiv) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto S1 = parse_system(read_file(opt.system_file), A.language);
      auto S2 = parse_system(read_file(opt.system2_file), A.language);
      rep.add("command", "equiv");
      rep.add("equivalent", systems_equivalent(S1, S2, A, limits));
    } else if (*c_homs) {
      auto B = parse_algebra_file(read_file(opt.algebra_file));
      auto A = parse_algebra_file(read_file(opt.algebra2_file));
      auto hs = enumerate_homs(B, A, limits);
      rep.add("command", "homs");
      rep.add("count", static_cast<long long>(hs.size()));
      for (size_t i = 0; i < hs.size(); ++i) {
        std::string s;
        for (size_t j = 0; j < hs[i].size(); ++j) {
          if (j) s += " ";
          s += std::to_string(hs[i][j]);
        }
        rep.add("hom" + std::to_string(i + 1), s);
      }
    } else if (*c_embed) {
      auto B = parse_algebra_file(read_file(opt.algebra_file));
      auto A = parse_algebra_file(read_file(opt.algebra2_file));
      auto h = find_embedding(B, A, opt.bijective, limits);
      rep.add("command", "embed");
      rep.add("found", h.has_value());
      if (h) {
        std::string s;
        for (size_t j = 0; j < h->size(); ++j) {
          if (j) s += " ";
          s += std::to_string((*h)[j]);
        }
        rep.add("map", s);
      }
    } else if (*c_approx) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto B = parse_algebra_file(read_file(opt.algebra2_file));
      rep.add("command", "approx");
      rep.add("approximates", approximates(A, B, limits));
    } else if (*c_discr) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto B = parse_algebra_file(read_file(opt.algebra2_file));
      rep.add("command", "discr");
      rep.add("discriminates", discriminates(A, B, limits));
    } else if (*c_geomeq) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto B = parse_algebra_file(read_file(opt.algebra2_file));
      rep.add("command", "geomeq");
      rep.add("equivalent", geometrically_equivalent(A, B, limits));
    } else if (*c_domain) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      rep.add("command", "domain");
      rep.add("equational_domain", is_equational_domain(A, limits));
    } else if (*c_codomain) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto r = co_domain_scan(A, static_cast<int>(opt.nmax), limits);
      rep.add("command", "codomain");
      rep.add("counterexample", r.counterexample_found);
      if (r.counterexample_found) {
        rep.add("dimension", r.dimension);
        rep.add("kind", r.kind);
        rep.add("set", format_points(r.set, A));
      }
    } else if (*c_dioph) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto D = diophantize(A);
      std::string text = write_algebra_file(D);
      rep.add("command", "diophantize");
      rep.add("constants_added", A.size);
      if (!opt.out_file.empty()) {
        std::ofstream out(opt.out_file, std::ios::binary);
        if (!out) throw Error(ErrorKind::BadArgument, "cannot write " + opt.out_file);
        out << text;
        rep.add("out", opt.out_file);
      } else {
        rep.add("algebra_file", text);
      }
    } else if (*a_snf) {
      auto M = read_matrix(opt.matrix_file);
      auto snf = smith_normal_form(M);
      rep.add("command", "abelian snf");
      rep.add("rank", static_cast<long long>(snf.rank));
      rep.add("D", format_matrix(snf.D));
      rep.add("U", format_matrix(snf.U));
      rep.add("V", format_matrix(snf.V));
    } else if (*a_radical) {
      auto M = read_matrix(opt.matrix_file);
      rep.add("command", "abelian radical");
      rep.add("basis", format_matrix(radical_lattice(M)));
    } else if (*a_rank) {
      auto M = read_matrix(opt.matrix_file);
      rep.add("command", "abelian rank");
      rep.add("rank", coordinate_group_rank(M));
    } else if (*a_prefix) {
      auto M = read_matrix(opt.matrix_file);
      auto A = parse_abelian_group(opt.group_lit);
      rep.add("command", "abelian prefix");
      rep.add("prefix", minimal_equivalent_prefix(M, A));
    } else if (*a_sub) {
      auto A = parse_abelian_group(opt.group_lit);
      std::string s;
      for (const auto& g : sub_oplus(A)) {
        if (!s.empty()) s += ", ";
        s += g.to_string();
      }
      rep.add("command", "abelian suboplus");
      rep.add("suboplus", "{" + s + "}");
    } else if (*a_coord) {
      rep.add("command", "abelian coord");
      rep.add("coordinate", is_coordinate_abelian(parse_abelian_group(opt.group_lit),
                                                  parse_abelian_group(opt.group2_lit)));
    } else if (*a_irrcoord) {
      rep.add("command", "abelian irrcoord");
      rep.add("coordinate",
              is_irreducible_coordinate_abelian(parse_abelian_group(opt.group_lit),
                                                parse_abelian_group(opt.group2_lit)));
    } else if (*a_coordc) {
      rep.add("command", "abelian coordc");
      rep.add("coordinate",
              is_coordinate_abelian_with_constants(parse_abelian_group(opt.group_lit),
                                                   parse_abelian_group(opt.group2_lit)));
    } else if (*a_irrcoordc) {
      rep.add("command", "abelian irrcoordc");
      rep.add("coordinate", is_irreducible_coordinate_abelian_with_constants(
                                parse_abelian_group(opt.group_lit),
                                parse_abelian_group(opt.group2_lit)));
    } else if (*a_geomeq) {
      rep.add("command", "abelian geomeq");
      rep.add("equivalent", geom_equiv_abelian(parse_abelian_group(opt.group_lit),
                                               parse_abelian_group(opt.group2_lit)));
    } else if (*n_solve) {
      auto S = parse_nat_system(read_file(opt.system_file));
      auto Y = solve_over_N(S, limits);
      rep.add("command", "nat solve");
      rep.add("count", static_cast<long long>(Y.points.size()));
      std::string s;
      for (size_t i = 0; i < Y.points.size(); ++i) {
        if (i) s += " ";
        s += "(";
        for (size_t j = 0; j < Y.points[i].size(); ++j) {
          if (j) s += ",";
          s += Y.points[i][j].str();
        }
        s += ")";
      }
      rep.add("points", s);
    } else if (*u_solve) {
      auto f = parse_unar_file(read_file(opt.system_file));
      auto r = solve_free_unar(f.vars, f.equations);
      rep.add("command", "unar solve");
      rep.add("consistent", r.consistent);
      if (!r.consistent) {
        rep.add("witness", "f^" + std::to_string(r.witness_cycle) + "(" +
                               r.witness_var + ") = " + r.witness_var);
      } else {
        rep.add("rank", r.rank);
        std::string s;
        for (const auto& b : r.bindings) {
          if (!s.empty()) s += "; ";
          s += b.var + " = " +
               (b.offset == 0 ? b.root
                              : "f^" + std::to_string(b.offset) + "(" + b.root + ")");
        }
        rep.add("bindings", s);
      }
    } else if (*b_mul) {
      auto u = parse_bicyclic(opt.lhs);
      auto v = parse_bicyclic(opt.rhs);
      auto w = mul(u, v);
      rep.add("command", "bicyclic mul");
      rep.add("n", w.n);
      rep.add("m", w.m);
      rep.add("element", w.to_string());
    } else if (*b_wit) {
      auto r = bicyclic_witness(opt.nval);
      rep.add("command", "bicyclic witness");
      rep.add("holds_up_to_n", r.holds_up_to_n);
      rep.add("fails_at_n_plus_1", r.fails_at_n_plus_1);
      rep.add("value_at_n_plus_1", r.value_at_n_plus_1.to_string());
    } else if (*f_check) {
      auto A = parse_algebra_file(read_file(opt.algebra_file));
      auto F = parse_formula(read_file(opt.formula_file), A.language);
      auto r = holds_in(F, A, limits);
      rep.add("command", "formula check");
      rep.add("holds", r.holds);
      if (r.counterexample)
        rep.add("counterexample", format_point(*r.counterexample, A));
    } else if (*f_sigma) {
      auto A = parse_abelian_group(opt.group_lit);
      auto fs = sigma_A(A, Int(opt.pval), static_cast<int>(opt.nmax));
      rep.add("command", "formula sigma");
      rep.add("count", static_cast<long long>(fs.size()));
      for (size_t i = 0; i < fs.size(); ++i)
        rep.add("formula" + std::to_string(i + 1), fs[i].to_string());
    } else if (*f_phi) {
      auto A = parse_abelian_group(opt.group_lit);
      rep.add("command", "formula phi");
      rep.add("holds", phi_nk_holds(A, Int(opt.pval), static_cast<int>(opt.kval),
                                    opt.nval));
    }

    print_report(rep, opt.machine);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceLimit ? 4 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
