#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "uag/common.hpp"

namespace uag {

// Equation f^n(x) = f^m(y) over the free unar (one injective unary function
// with no cycles: terms f^k(x) over free generators).
struct UnarEquation {
  long long n = 0;
  std::string x;
  long long m = 0;
  std::string y;

  std::string to_string() const {
    auto side = [](long long k, const std::string& v) {
      return k == 0 ? v : "f^" + std::to_string(k) + "(" + v + ")";
    };
    return side(n, x) + " = " + side(m, y);
  }
};

struct UnarBinding {
  std::string var;
  long long offset = 0;  // var = f^offset(root)
  std::string root;
};

// Result of solving over the free unar.  Either the system is inconsistent,
// with a witness equation f^c(x) = x (c > 0) derivable from it, or it reduces
// to a binding forest: each variable is f^k of its component root, and the
// coordinate algebra is free of rank = number of components.
struct UnarResult {
  bool consistent = true;
  std::string witness_var;
  long long witness_cycle = 0;
  std::vector<UnarBinding> bindings;  // in variable declaration order
  int rank = 0;
};

// Union-find with integer potentials: within a component every variable sits
// on one f-chain, and potential differences record relative depths.  An
// equation forcing a nonzero cycle is a contradiction in the free unar.
inline UnarResult solve_free_unar(const std::vector<std::string>& vars,
                                  const std::vector<UnarEquation>& equations) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (index.count(vars[i]))
      throw Error(ErrorKind::DuplicateSymbol, "duplicate variable " + vars[i]);
    index[vars[i]] = static_cast<int>(i);
  }
  int n = static_cast<int>(vars.size());
  std::vector<int> parent(n);
  std::vector<long long> pot(n, 0);  // pot[v]: depth of v relative to parent chain
  for (int i = 0; i < n; ++i) parent[i] = i;

  // find returns the root and accumulates the potential of x relative to it.
  std::function<int(int, long long&)> find = [&](int x, long long& acc) {
    long long here = 0;
    int r = x;
    while (parent[r] != r) {
      here += pot[r];
      r = parent[r];
    }
    // Path compression with potential rewrite.
    int cur = x;
    long long rem = here;
    while (parent[cur] != cur) {
      int next = parent[cur];
      long long step = pot[cur];
      parent[cur] = r;
      pot[cur] = rem;
      rem -= step;
      cur = next;
    }
    acc += here;
    return r;
  };

  UnarResult res;
  for (const auto& e : equations) {
    auto ix = index.find(e.x);
    auto iy = index.find(e.y);
    if (ix == index.end() || iy == index.end())
      throw Error(ErrorKind::UnknownSymbol, "equation uses an undeclared variable");
    // f^n(x) = f^m(y) in the free unar forces depth(x) + n = depth(y) + m
    // along a common chain: pot(x) - pot(y) = m - n.
    long long px = 0, py = 0;
    int rx = find(ix->second, px);
    int ry = find(iy->second, py);
    long long need = e.m - e.n;  // required pot(x) - pot(y)
    if (rx == ry) {
      long long cycle = (px - py) - need;
      if (cycle != 0) {
        res.consistent = false;
        res.witness_var = e.x;
        res.witness_cycle = cycle > 0 ? cycle : -cycle;
        return res;
      }
      continue;
    }
    // Attach ry under rx: pot(y) = pot(x) - need relative to rx.
    parent[ry] = rx;
    pot[ry] = px - need - py;
  }

  // Canonical presentation: root of each component is its variable of least
  // potential (ties by declaration order); bindings are nonnegative offsets.
  std::map<int, std::pair<long long, int>> least;  // uf-root -> (min pot, var)
  std::vector<long long> abs_pot(n);
  std::vector<int> uf_root(n);
  for (int i = 0; i < n; ++i) {
    long long p = 0;
    uf_root[i] = find(i, p);
    abs_pot[i] = p;
    auto it = least.find(uf_root[i]);
    if (it == least.end() || p < it->second.first)
      least[uf_root[i]] = {p, i};
  }
  res.rank = static_cast<int>(least.size());
  for (int i = 0; i < n; ++i) {
    const auto& [minp, rep] = least[uf_root[i]];
    res.bindings.push_back(UnarBinding{vars[i], abs_pot[i] - minp, vars[rep]});
  }
  return res;
}

}  // namespace uag
