#include "doctest.h"
#include "helpers.hpp"

using namespace uag;

TEST_CASE("report keeps insertion order and types render cleanly") {
  Report r;
  r.add("command", "solve");
  r.add("count", 3);
  r.add("big", 1234567890123LL);
  r.add("ok", true);
  r.add("empty", "");
  CHECK(r.get("command") == "solve");
  CHECK(r.get("ok") == "true");
  CHECK(r.to_machine() ==
        "command=solve\ncount=3\nbig=1234567890123\nok=true\nempty=\n");
  CHECK_THROWS_AS(r.get("missing"), Error);
}

TEST_CASE("machine format round-trips arbitrary values") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 200; ++trial) {
    Report r;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      std::string val;
      int len = static_cast<int>(rng() % 12);
      for (int j = 0; j < len; ++j) {
        const char pool[] = "ab=\\\n _09";
        val += pool[rng() % (sizeof(pool) - 1)];
      }
      r.add("k" + std::to_string(i), val);
    }
    CHECK(Report::from_machine(r.to_machine()) == r);
  }
  CHECK_THROWS_AS(Report::from_machine("no separator here"), Error);
}
