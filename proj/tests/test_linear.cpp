#include "doctest.h"
#include "helpers.hpp"

using namespace uag;

namespace {

IntMatrix mat(std::vector<std::vector<Int>> rows) { return IntMatrix::from_rows(rows); }

bool is_diagonal_chain(const IntMatrix& D) {
  for (size_t i = 0; i < D.rows; ++i)
    for (size_t j = 0; j < D.cols; ++j)
      if (i != j && D.at(i, j) != 0) return false;
  size_t n = std::min(D.rows, D.cols);
  for (size_t i = 0; i + 1 < n; ++i) {
    if (D.at(i, i) < 0) return false;
    if (D.at(i + 1, i + 1) != 0 && (D.at(i, i) == 0 || D.at(i + 1, i + 1) % D.at(i, i) != 0))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form on small examples") {
  auto snf = smith_normal_form(mat({{2, 4}, {6, 8}}));
  CHECK(snf.D == mat({{2, 0}, {0, 4}}));
  CHECK(snf.rank == 2);
  CHECK(snf.U.mul(mat({{2, 4}, {6, 8}})).mul(snf.V) == snf.D);
  CHECK(snf.V.mul(snf.Vinv) == IntMatrix::identity(2));
  auto zero = smith_normal_form(mat({{0, 0}, {0, 0}}));
  CHECK(zero.rank == 0);
  CHECK(smith_normal_form(mat({{6}})).D.at(0, 0) == 6);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(141421);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix M(4, 4);
    for (auto& v : M.a) v = entry(rng);
    auto snf = smith_normal_form(M);
    CHECK(snf.U.mul(M).mul(snf.V) == snf.D);
    CHECK(is_diagonal_chain(snf.D));
    CHECK(snf.V.mul(snf.Vinv) == IntMatrix::identity(4));
    Int du = determinant(snf.U), dv = determinant(snf.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // Product of the diagonal equals |det| up to sign.
    Int prod = 1;
    for (size_t i = 0; i < 4; ++i) prod *= snf.D.at(i, i);
    CHECK(abs(prod) == abs(determinant(M)));
  }
}

TEST_CASE("row-lattice membership") {
  auto G = mat({{2, 0}, {0, 3}});
  CHECK(in_row_lattice(G, {4, 3}));
  CHECK_FALSE(in_row_lattice(G, {1, 0}));
  CHECK(in_row_lattice(G, {0, 0}));
  auto line = mat({{2, 4}});
  CHECK(in_row_lattice(line, {6, 12}));
  CHECK_FALSE(in_row_lattice(line, {2, 2}));
  CHECK_THROWS_AS(in_row_lattice(line, {1, 2, 3}), Error);
}

TEST_CASE("saturation basis spans all vanishing equations") {
  // Row lattice of {2x = 0} saturates to {x = 0}.
  auto sat = saturation_basis(mat({{2}}));
  CHECK(sat == mat({{1}}));
  // {2x+2y=0, 2x-2y=0} saturates to the full rank-2 lattice x=0, y=0.
  auto s2 = saturation_basis(mat({{2, 2}, {2, -2}}));
  CHECK(s2.rows == 2);
  CHECK(in_row_lattice(s2, {1, 0}));
  CHECK(in_row_lattice(s2, {0, 1}));
  // A single primitive row is its own saturation up to sign.
  auto s3 = saturation_basis(mat({{3, 5}}));
  CHECK(s3.rows == 1);
  CHECK(in_row_lattice(s3, {3, 5}));
  CHECK_FALSE(in_row_lattice(s3, {1, 0}));
  // Saturation contains the original rows and is saturated (idempotent rank).
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix M(2, 3);
    for (auto& v : M.a) v = entry(rng);
    auto sat1 = saturation_basis(M);
    for (size_t r = 0; r < M.rows; ++r) CHECK(in_row_lattice(sat1, M.row(r)));
    auto sat2 = saturation_basis(sat1);
    CHECK(sat2.rows == sat1.rows);
    for (size_t r = 0; r < sat1.rows; ++r) CHECK(in_row_lattice(sat2, sat1.row(r)));
  }
}

TEST_CASE("coordinate group rank of homogeneous systems") {
  CHECK(coordinate_group_rank(mat({{2, 0}})) == 1);
  CHECK(coordinate_group_rank(mat({{1, 1}, {1, -1}})) == 0);
  CHECK(coordinate_group_rank(mat({{0, 0, 0}})) == 3);
  CHECK(lattice_rank(mat({{2, 4}, {1, 2}})) == 1);
}

TEST_CASE("minimal equivalent prefix") {
  // Over Z, {(2i+1)x + (2i+2)y = 0} for i = 0..10: the first two equations
  // already force x = y = 0, and one is not enough.
  IntMatrix sys(11, 2);
  for (int i = 0; i <= 10; ++i) {
    sys.at(i, 0) = 2 * i + 1;
    sys.at(i, 1) = 2 * i + 2;
  }
  FGAbelianGroup Z = parse_abelian_group("Z");
  CHECK(minimal_equivalent_prefix(sys, Z) == 2);
  // {2y=0, 4y=0, 6y=0} over Z: 2y=0 already implies the rest.
  CHECK(minimal_equivalent_prefix(mat({{2}, {4}, {6}}), Z) == 1);
  // Over Z_4 the equation 2y=0 does not imply y=0.
  FGAbelianGroup Z4 = parse_abelian_group("Z_4");
  CHECK(minimal_equivalent_prefix(mat({{2}, {1}}), Z4) == 2);
  CHECK(minimal_equivalent_prefix(mat({{2}, {1}}), Z) == 1);
  // Mixed group: consequence must hold in every cyclic factor.
  FGAbelianGroup mixed = parse_abelian_group("Z + Z_4");
  CHECK(minimal_equivalent_prefix(mat({{2}, {6}}), mixed) == 1);
  CHECK(minimal_equivalent_prefix(mat({{2}, {1}}), mixed) == 2);
  CHECK_THROWS_AS(minimal_equivalent_prefix(IntMatrix(0, 2), Z), Error);
}

TEST_CASE("prefix consequences agree with finite brute force") {
  // For finite cyclic groups, check consequence-over-factor semantics by
  // enumerating actual solutions.
  std::mt19937 rng(9999);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int q : {2, 3, 4}) {
    FGAbelianGroup G;
    G.torsion.push_back(detail::prime_power(q));
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix sys(2, 2);
      for (auto& v : sys.a) v = entry(rng);
      int pre = minimal_equivalent_prefix(sys, G);
      // Solutions over Z_q of the prefix must satisfy every later row.
      auto solves = [&](int rows, int x, int y) {
        for (int r = 0; r < rows; ++r) {
          Int v = sys.at(r, 0) * x + sys.at(r, 1) * y;
          if (((v % q) + q) % q != 0) return false;
        }
        return true;
      };
      bool one_enough = true;
      for (int x = 0; x < q && one_enough; ++x)
        for (int y = 0; y < q && one_enough; ++y)
          if (solves(1, x, y) != solves(2, x, y)) one_enough = false;
      CHECK(pre == (one_enough ? 1 : 2));
    }
  }
}

TEST_CASE("abelian group literals and canonical forms") {
  auto g = parse_abelian_group("Z^2 + Z_8 + Z_3");
  CHECK(g.rank == 2);
  CHECK(g.torsion == std::vector<std::pair<Int, int>>{{2, 3}, {3, 1}});
  CHECK(g.to_string() == "Z^2 + Z_8 + Z_3");
  CHECK(parse_abelian_group("0").trivial());
  CHECK(parse_abelian_group("Z_{9}").torsion ==
        std::vector<std::pair<Int, int>>{{3, 2}});
  CHECK_THROWS_AS(parse_abelian_group("Z_6"), Error);  // not a prime power
  CHECK_THROWS_AS(parse_abelian_group("Q"), Error);
  auto A = to_finite(parse_abelian_group("Z_2 + Z_3"));
  CHECK(A.size == 6);
  CHECK(find_embedding(build_zn(6), A, true).has_value());
  CHECK_THROWS_AS(to_finite(parse_abelian_group("Z")), Error);
}

TEST_CASE("summand subgroups") {
  auto subs = sub_oplus(parse_abelian_group("Z^2 + Z_8 + Z_3 + Z_3"));
  std::set<FGAbelianGroup> expect;
  for (const char* s : {"Z", "Z_8", "Z_4", "Z_2", "Z_3"})
    expect.insert(parse_abelian_group(s));
  CHECK(subs == expect);
  CHECK(sub_oplus(parse_abelian_group("0")).empty());
}

TEST_CASE("coordinate group recognition") {
  auto A = parse_abelian_group("Z + Z_9");
  CHECK(is_coordinate_abelian(parse_abelian_group("Z^3 + Z_9 + Z_3"), A));
  CHECK_FALSE(is_coordinate_abelian(parse_abelian_group("Z_27"), A));
  CHECK_FALSE(is_coordinate_abelian(parse_abelian_group("Z_2"), A));
  CHECK_FALSE(is_coordinate_abelian(parse_abelian_group("Z"), parse_abelian_group("Z_4")));
  // Trivial group coordinates over anything.
  CHECK(is_coordinate_abelian(parse_abelian_group("0"), parse_abelian_group("0")));
}

TEST_CASE("irreducible coordinate group recognition") {
  // Torsion must embed: Z_4 + Z_4 does not embed into Z_4 + Z_2.
  CHECK(is_irreducible_coordinate_abelian(parse_abelian_group("Z_4 + Z_2"),
                                          parse_abelian_group("Z_4 + Z_2")));
  CHECK_FALSE(is_irreducible_coordinate_abelian(parse_abelian_group("Z_4 + Z_4"),
                                                parse_abelian_group("Z_4 + Z_2")));
  // Free parts are unconstrained when A has positive rank.
  CHECK(is_irreducible_coordinate_abelian(parse_abelian_group("Z^5"),
                                          parse_abelian_group("Z")));
  CHECK_FALSE(is_irreducible_coordinate_abelian(parse_abelian_group("Z"),
                                                parse_abelian_group("Z_4")));
  // Irreducible coordinate groups are in particular coordinate groups, for
  // torsion matching Sub_plus.
  for (const char* a : {"Z + Z_8", "Z_4 + Z_2", "Z^2 + Z_3"})
    for (const char* b : {"Z", "Z_2", "Z_8", "Z_4 + Z_2", "Z + Z_2", "0"}) {
      auto A = parse_abelian_group(a);
      auto B = parse_abelian_group(b);
      if (is_irreducible_coordinate_abelian(B, A)) CHECK(is_coordinate_abelian(B, A));
    }
}

TEST_CASE("coordinate groups in the diophantine case") {
  auto Z = parse_abelian_group("Z");
  // Over Z with constants: B = Z + B', any coordinate B' works, irreducible
  // needs B' free.
  CHECK(is_coordinate_abelian_with_constants(parse_abelian_group("Z^2"), Z));
  CHECK(is_irreducible_coordinate_abelian_with_constants(parse_abelian_group("Z^2"), Z));
  CHECK_FALSE(is_coordinate_abelian_with_constants(parse_abelian_group("Z_2"), Z));
  CHECK_FALSE(is_irreducible_coordinate_abelian_with_constants(parse_abelian_group("Z_2"), Z));
  // Finite A: only the trivial extension is irreducible.
  auto Z4 = parse_abelian_group("Z_4");
  CHECK(is_irreducible_coordinate_abelian_with_constants(parse_abelian_group("0"), Z4));
  CHECK_FALSE(is_irreducible_coordinate_abelian_with_constants(parse_abelian_group("Z"), Z4));
}

TEST_CASE("geometric equivalence of abelian groups") {
  CHECK(geom_equiv_abelian(parse_abelian_group("Z"), parse_abelian_group("Z^2")));
  CHECK(geom_equiv_abelian(parse_abelian_group("Z_8 + Z_2"),
                           parse_abelian_group("Z_8 + Z_8")));
  CHECK_FALSE(geom_equiv_abelian(parse_abelian_group("Z_2"), parse_abelian_group("Z_4")));
  CHECK_FALSE(geom_equiv_abelian(parse_abelian_group("Z"), parse_abelian_group("Z_2")));
}

TEST_CASE("linear systems over N") {
  auto s = parse_nat_system("vars: x, y, z\neq: 2x+3y+5z = 5\n");
  auto sol = solve_over_N(s);
  CHECK(sol.points == std::vector<std::vector<Int>>{{0, 0, 1}, {1, 1, 0}});
  // Cancellation across sides.
  auto t = parse_nat_system("x + y = x + 3\n");
  CHECK_THROWS_AS(solve_over_N(t), Error);  // x itself never gets a bound
  auto u = parse_nat_system("vars: x\neq: x + 2 = 5\neq: x = 3\n");
  CHECK(solve_over_N(u).points == std::vector<std::vector<Int>>{{3}});
  auto infeasible = parse_nat_system("vars: x\neq: x + 7 = 5\n");
  CHECK(solve_over_N(infeasible).points.empty());
  auto unbounded = parse_nat_system("vars: x, y\neq: x = y\n");
  CHECK_THROWS_AS(solve_over_N(unbounded), Error);
  Limits tiny;
  tiny.tuple_cap = 2;
  CHECK_THROWS_AS(solve_over_N(s, tiny), Error);
}

TEST_CASE("nat equation parsing") {
  std::vector<std::string> vars;
  auto e = parse_nat_equation("2x + 3*y + 4 = z + 1", vars);
  CHECK(e.lhs.at("x") == 2);
  CHECK(e.lhs.at("y") == 3);
  CHECK(e.lconst == 4);
  CHECK(e.rhs.at("z") == 1);
  CHECK(e.rconst == 1);
  CHECK(vars == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS_AS(parse_nat_equation("x + = 3", vars), Error);
  CHECK_THROWS_AS(parse_nat_equation("x - y = 3", vars), Error);
  CHECK_THROWS_AS(parse_nat_equation("x + y", vars), Error);
  auto r = parse_nat_equation("x + x + 2 = x + 5", vars).reduced();
  CHECK(r.lhs.at("x") == 1);
  CHECK(r.rhs.empty());
  CHECK(r.lconst == 0);
  CHECK(r.rconst == 3);
}
