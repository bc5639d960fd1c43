#pragma once

#include <map>
#include <string>
#include <vector>

#include "uag/term.hpp"

namespace uag {

// Ground congruence closure: the least equivalence on the subterm universe of
// the input that contains the given equations and is closed under operation
// application.  No substitution instances are taken, so membership here is a
// strictly stronger certificate than radical membership.
class CongruenceClosure {
 public:
  explicit CongruenceClosure(const std::vector<Equation>& equations) {
    for (const auto& e : equations) {
      int a = intern(e.lhs);
      int b = intern(e.rhs);
      merge(a, b);
    }
    saturate();
  }

  // True when lhs = rhs is in the closure.  Interning the query terms may
  // enlarge the universe, so re-saturation follows.
  bool contains(const Equation& query) {
    int a = intern(query.lhs);
    int b = intern(query.rhs);
    saturate();
    return find(a) == find(b);
  }

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<int> args;
  };

  std::vector<Node> nodes_;
  std::map<std::string, int> index_;  // structural key -> node id
  std::vector<int> parent_;

  int intern(const Term& t) {
    std::vector<int> args;
    for (const auto& a : t.args) args.push_back(intern(a));
    std::string key = t.is_var() ? "v:" + t.name : "a:" + t.name;
    for (int a : args) key += "," + std::to_string(a);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{t.is_var(), t.name, std::move(args)});
    parent_.push_back(id);
    index_[key] = id;
    return id;
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  // Congruence rule to fixpoint: equal arguments under the same symbol force
  // equal results.  The universe is small, so the quadratic sweep suffices.
  void saturate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].is_var || nodes_[i].args.empty()) continue;
        for (size_t j = i + 1; j < nodes_.size(); ++j) {
          if (nodes_[j].is_var || nodes_[j].name != nodes_[i].name ||
              nodes_[j].args.size() != nodes_[i].args.size())
            continue;
          if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
          bool all = true;
          for (size_t k = 0; k < nodes_[i].args.size() && all; ++k)
            all = find(nodes_[i].args[k]) == find(nodes_[j].args[k]);
          if (all) {
            merge(static_cast<int>(i), static_cast<int>(j));
            changed = true;
          }
        }
      }
    }
  }
};

inline bool congruent_closure_contains(const std::vector<Equation>& system,
                                       const Equation& query) {
  CongruenceClosure cc(system);
  return cc.contains(query);
}

}  // namespace uag
