#include "doctest.h"
#include "helpers.hpp"

using namespace uag;

TEST_CASE("inconsistent unar systems report a cycle witness") {
  // f^2(x) = y and f^5(y) = x force f^7(x) = x, impossible in the free unar.
  auto r = solve_free_unar({"x", "y"}, {{2, "x", 0, "y"}, {5, "y", 0, "x"}});
  CHECK_FALSE(r.consistent);
  CHECK(r.witness_cycle == 7);
  // A genuine tautology stays consistent.
  auto ok = solve_free_unar({"x"}, {{3, "x", 3, "x"}});
  CHECK(ok.consistent);
  // f(x) = x is a 1-cycle.
  auto bad = solve_free_unar({"x"}, {{1, "x", 0, "x"}});
  CHECK_FALSE(bad.consistent);
  CHECK(bad.witness_cycle == 1);
}

TEST_CASE("consistent unar systems reduce to a binding forest") {
  // f^2(x) = f(y): x and y share a chain, y = f(x).
  auto r = solve_free_unar({"x", "y"}, {{2, "x", 1, "y"}});
  REQUIRE(r.consistent);
  CHECK(r.rank == 1);
  REQUIRE(r.bindings.size() == 2);
  CHECK(r.bindings[0].var == "x");
  CHECK(r.bindings[0].offset == 0);
  CHECK(r.bindings[0].root == "x");
  CHECK(r.bindings[1].var == "y");
  CHECK(r.bindings[1].offset == 1);
  CHECK(r.bindings[1].root == "x");
  // Unrelated variables stay in their own components.
  auto s = solve_free_unar({"x", "y", "z"}, {{0, "x", 1, "y"}});
  REQUIRE(s.consistent);
  CHECK(s.rank == 2);
  // y has least depth in its component, so it is the root and x = f(y).
  CHECK(s.bindings[0].root == "y");
  CHECK(s.bindings[0].offset == 1);
  CHECK(s.bindings[2].root == "z");
  CHECK_THROWS_AS(solve_free_unar({"x", "x"}, {}), Error);
  CHECK_THROWS_AS(solve_free_unar({"x"}, {{0, "x", 0, "q"}}), Error);
}

TEST_CASE("unar solving is order-independent and sound") {
  std::mt19937 rng(818283);
  std::vector<std::string> vars{"u", "v", "w", "t"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<UnarEquation> eqs;
    int ne = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < ne; ++i)
      eqs.push_back({static_cast<long long>(rng() % 4), vars[rng() % vars.size()],
                     static_cast<long long>(rng() % 4), vars[rng() % vars.size()]});
    auto r1 = solve_free_unar(vars, eqs);
    auto shuffled = eqs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto r2 = solve_free_unar(vars, shuffled);
    CHECK(r1.consistent == r2.consistent);
    if (!r1.consistent) continue;
    CHECK(r1.rank == r2.rank);
    // Substituting the bindings back satisfies every equation: depth of each
    // variable within its chain is root-relative, so compare offsets.
    auto offset_of = [&](const UnarResult& r, const std::string& v) {
      for (const auto& b : r.bindings)
        if (b.var == v) return std::pair<long long, std::string>{b.offset, b.root};
      FAIL("missing binding");
      return std::pair<long long, std::string>{0, ""};
    };
    for (const auto& e : eqs) {
      auto [ox, rx] = offset_of(r1, e.x);
      auto [oy, ry] = offset_of(r1, e.y);
      CHECK(rx == ry);
      CHECK(e.n + ox == e.m + oy);
    }
  }
}

TEST_CASE("bicyclic arithmetic") {
  Bicyclic a{0, 1}, b{1, 0}, one{0, 0};
  CHECK(mul(a, b) == one);        // ab = 1
  CHECK(mul(b, a) == Bicyclic{1, 1});  // ba stays b a
  CHECK(mul(one, a) == a);
  CHECK(mul(b, one) == b);
  CHECK(pow(b, 3) == Bicyclic{3, 0});
  CHECK(mul(Bicyclic{2, 3}, Bicyclic{1, 1}) == Bicyclic{2, 3});
  CHECK(mul(Bicyclic{2, 1}, Bicyclic{3, 1}) == Bicyclic{4, 1});
  CHECK(Bicyclic{4, 4}.to_string() == "b^4a^4");
  CHECK(Bicyclic{1, 1}.to_string() == "ba");
  CHECK(one.to_string() == "1");
  CHECK_THROWS_AS(mul(Bicyclic{-1, 0}, one), Error);
}

TEST_CASE("bicyclic multiplication is associative") {
  std::vector<Bicyclic> elems;
  for (long long n = 0; n <= 6; ++n)
    for (long long m = 0; m <= 6; ++m) elems.push_back({n, m});
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
}

TEST_CASE("bicyclic chain witness") {
  auto rep = bicyclic_witness(3);
  CHECK(rep.holds_up_to_n);
  CHECK(rep.fails_at_n_plus_1);
  CHECK(rep.z == Bicyclic{3, 3});
  CHECK(rep.value_at_n_plus_1 == Bicyclic{4, 4});
  CHECK(rep.value_at_n_plus_1.to_string() == "b^4a^4");
  // The pattern persists for a range of n.
  for (long long n = 0; n <= 10; ++n) {
    auto r = bicyclic_witness(n);
    CHECK(r.holds_up_to_n);
    CHECK(r.fails_at_n_plus_1);
    CHECK(r.value_at_n_plus_1 == Bicyclic{n + 1, n + 1});
  }
  CHECK_THROWS_AS(bicyclic_witness(-1), Error);
}
