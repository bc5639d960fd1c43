#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "uag/finite_algebra.hpp"

namespace uag {

using Homomorphism = std::vector<int>;  // source element -> target element

inline bool is_homomorphism(const Homomorphism& h, const FiniteAlgebra& B,
                            const FiniteAlgebra& A) {
  if (B.language != A.language && !B.language.same_symbols(A.language)) return false;
  if (static_cast<int>(h.size()) != B.size) return false;
  for (const auto& [sym, ar] : B.language.symbols) {
    const auto& table = B.tables.at(sym);
    long long total = B.table_size(ar);
    std::vector<int> digits(ar, 0);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = ar - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % B.size);
        rest /= B.size;
      }
      std::vector<int> mapped(ar);
      for (int i = 0; i < ar; ++i) mapped[i] = h[digits[i]];
      if (A.apply(sym, mapped) != h[table[static_cast<size_t>(idx)]]) return false;
    }
  }
  return true;
}

namespace detail {

// A table row of the source algebra, flattened for incremental checking:
// sym applied to `args` yields `result`.  Rows are bucketed by the largest
// element index they mention so the backtracking search checks each row
// exactly once per partial assignment.
struct HomRow {
  const std::string* sym;
  std::vector<int> args;
  int result;
};

inline std::vector<std::vector<HomRow>> bucket_rows(const FiniteAlgebra& B) {
  std::vector<std::vector<HomRow>> buckets(B.size);
  for (const auto& [sym, ar] : B.language.symbols) {
    const auto& table = B.tables.at(sym);
    long long total = B.table_size(ar);
    std::vector<int> digits(ar, 0);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = ar - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % B.size);
        rest /= B.size;
      }
      int hi = table[static_cast<size_t>(idx)];
      for (int d : digits) hi = std::max(hi, d);
      buckets[hi].push_back(HomRow{&sym, digits, table[static_cast<size_t>(idx)]});
    }
  }
  return buckets;
}

inline bool rows_consistent(const std::vector<HomRow>& rows, const Homomorphism& h,
                            const FiniteAlgebra& A) {
  std::vector<int> mapped;
  for (const auto& row : rows) {
    mapped.clear();
    for (int a : row.args) mapped.push_back(h[a]);
    if (A.apply(*row.sym, mapped) != h[row.result]) return false;
  }
  return true;
}

// Backtracking over source elements in index order.  `emit` receives each
// completed homomorphism; returning false stops the search.
template <class Emit>
inline void hom_search(const FiniteAlgebra& B, const FiniteAlgebra& A, bool injective,
                       const Limits& limits, Emit emit) {
  if (B.language != A.language)
    throw Error(ErrorKind::LanguageMismatch, "homomorphism search needs equal languages");
  auto buckets = bucket_rows(B);
  Homomorphism h(B.size, -1);
  std::vector<bool> used(A.size, false);
  long long nodes = 0;
  // Explicit stack of candidate values per depth, lexicographic order.
  std::vector<int> choice(B.size, -1);
  int depth = 0;
  while (depth >= 0) {
    if (depth == B.size) {
      if (!emit(h)) return;
      --depth;
      if (depth >= 0 && injective) used[h[depth]] = false;
      continue;
    }
    int v = choice[depth] + 1;
    bool advanced = false;
    for (; v < A.size; ++v) {
      if (injective && used[v]) continue;
      if (++nodes > limits.node_budget)
        throw Error(ErrorKind::ResourceLimit, "homomorphism search budget exceeded");
      h[depth] = v;
      if (rows_consistent(buckets[depth], h, A)) {
        choice[depth] = v;
        if (injective) used[v] = true;
        ++depth;
        if (depth < B.size) choice[depth] = -1;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      choice[depth] = -1;
      h[depth] = -1;
      --depth;
      if (depth >= 0 && injective) used[h[depth]] = false;
    }
  }
}

}  // namespace detail

// All homomorphisms B -> A in lexicographic order of the value map.
inline std::vector<Homomorphism> enumerate_homs(const FiniteAlgebra& B,
                                                const FiniteAlgebra& A,
                                                const Limits& limits = {}) {
  std::vector<Homomorphism> out;
  detail::hom_search(B, A, /*injective=*/false, limits, [&](const Homomorphism& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

// First injective homomorphism B -> A in lexicographic order, if any.  With
// `bijective` the sizes must also match, which turns the search into an
// isomorphism test.
inline std::optional<Homomorphism> find_embedding(const FiniteAlgebra& B,
                                                  const FiniteAlgebra& A,
                                                  bool bijective = false,
                                                  const Limits& limits = {}) {
  if (bijective && B.size != A.size) return std::nullopt;
  if (B.size > A.size) return std::nullopt;
  std::optional<Homomorphism> found;
  detail::hom_search(B, A, /*injective=*/true, limits, [&](const Homomorphism& h) {
    found = h;
    return false;
  });
  return found;
}

// A approximates B: every pair of distinct elements of B is separated by some
// homomorphism B -> A.
inline bool approximates(const FiniteAlgebra& A, const FiniteAlgebra& B,
                         const Limits& limits = {}) {
  if (B.size <= 1) return true;
  std::vector<std::pair<int, int>> pending;
  for (int x = 0; x < B.size; ++x)
    for (int y = x + 1; y < B.size; ++y) pending.emplace_back(x, y);
  detail::hom_search(B, A, /*injective=*/false, limits, [&](const Homomorphism& h) {
    pending.erase(std::remove_if(pending.begin(), pending.end(),
                                 [&](const std::pair<int, int>& p) {
                                   return h[p.first] != h[p.second];
                                 }),
                  pending.end());
    return !pending.empty();
  });
  return pending.empty();
}

// A discriminates B: every finite family of distinct pairs is separated by a
// single homomorphism.  For finite B this is equivalent to the existence of
// an injective homomorphism B -> A.
inline bool discriminates(const FiniteAlgebra& A, const FiniteAlgebra& B,
                          const Limits& limits = {}) {
  return find_embedding(B, A, /*bijective=*/false, limits).has_value();
}

}  // namespace uag
