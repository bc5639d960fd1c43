#pragma once

#include <algorithm>
#include <vector>

#include "uag/common.hpp"

namespace uag {

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rws) {
    if (rws.empty()) return {};
    IntMatrix m(rws.size(), rws.front().size());
    for (size_t i = 0; i < rws.size(); ++i) {
      if (rws[i].size() != m.cols)
        throw Error(ErrorKind::BadArgument, "ragged matrix rows");
      for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
  }

  Int& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Int& at(size_t r, size_t c) const { return a[r * cols + c]; }

  std::vector<Int> row(size_t r) const {
    return std::vector<Int>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
  }

  IntMatrix mul(const IntMatrix& o) const {
    if (cols != o.rows) throw Error(ErrorKind::BadArgument, "matrix shape mismatch");
    IntMatrix out(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) {
        if (at(i, k) == 0) continue;
        for (size_t j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
      }
    return out;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Determinant by fraction-free Gaussian elimination (Bareiss); used to check
// unimodularity in tests.
inline Int determinant(IntMatrix m) {
  if (m.rows != m.cols) throw Error(ErrorKind::BadArgument, "determinant of non-square");
  size_t n = m.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

// Smith normal form: unimodular U, V with U*M*V = D diagonal, nonnegative
// diagonal entries forming a divisibility chain.  Vinv is maintained
// alongside V so lattice computations can read off a saturation basis.
struct SnfResult {
  IntMatrix U, D, V, Vinv;
  size_t rank = 0;
};

inline SnfResult smith_normal_form(const IntMatrix& input) {
  SnfResult res;
  IntMatrix M = input;
  size_t r = M.rows, c = M.cols;
  res.U = IntMatrix::identity(r);
  res.V = IntMatrix::identity(c);
  res.Vinv = IntMatrix::identity(c);

  auto row_swap = [&](size_t i, size_t j) {
    for (size_t k = 0; k < c; ++k) std::swap(M.at(i, k), M.at(j, k));
    for (size_t k = 0; k < r; ++k) std::swap(res.U.at(i, k), res.U.at(j, k));
  };
  auto row_add = [&](size_t i, size_t j, const Int& q) {  // row i += q * row j
    for (size_t k = 0; k < c; ++k) M.at(i, k) += q * M.at(j, k);
    for (size_t k = 0; k < r; ++k) res.U.at(i, k) += q * res.U.at(j, k);
  };
  auto row_neg = [&](size_t i) {
    for (size_t k = 0; k < c; ++k) M.at(i, k) = -M.at(i, k);
    for (size_t k = 0; k < r; ++k) res.U.at(i, k) = -res.U.at(i, k);
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t k = 0; k < r; ++k) std::swap(M.at(k, i), M.at(k, j));
    for (size_t k = 0; k < c; ++k) std::swap(res.V.at(k, i), res.V.at(k, j));
    for (size_t k = 0; k < c; ++k) std::swap(res.Vinv.at(i, k), res.Vinv.at(j, k));
  };
  auto col_add = [&](size_t i, size_t j, const Int& q) {  // col i += q * col j
    for (size_t k = 0; k < r; ++k) M.at(k, i) += q * M.at(k, j);
    for (size_t k = 0; k < c; ++k) res.V.at(k, i) += q * res.V.at(k, j);
    for (size_t k = 0; k < c; ++k) res.Vinv.at(j, k) -= q * res.Vinv.at(i, k);
  };

  size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing submatrix, row-major ties.
      size_t pr = r, pc = c;
      for (size_t i = t; i < r; ++i)
        for (size_t j = t; j < c; ++j) {
          if (M.at(i, j) == 0) continue;
          if (pr == r || abs(M.at(i, j)) < abs(M.at(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == r) goto done;  // trailing submatrix is zero
      if (pr != t) row_swap(pr, t);
      if (pc != t) col_swap(pc, t);

      bool clean = true;
      for (size_t i = t + 1; i < r; ++i) {
        if (M.at(i, t) == 0) continue;
        Int q = M.at(i, t) / M.at(t, t);
        row_add(i, t, -q);
        if (M.at(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < c; ++j) {
        if (M.at(t, j) == 0) continue;
        Int q = M.at(t, j) / M.at(t, t);
        col_add(j, t, -q);
        if (M.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller pivot appeared; repeat

      // Divisibility: drag a non-divisible row into the pivot row.
      bool divides = true;
      for (size_t i = t + 1; i < r && divides; ++i)
        for (size_t j = t + 1; j < c && divides; ++j)
          if (M.at(i, j) % M.at(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (M.at(t, t) < 0) row_neg(t);
  }
done:
  res.D = M;
  for (size_t i = 0; i < std::min(r, c); ++i)
    if (M.at(i, i) != 0) ++res.rank;
  return res;
}

inline size_t lattice_rank(const IntMatrix& M) { return smith_normal_form(M).rank; }

// Basis of the saturation of the row lattice of M: the least direct summand
// of Z^cols containing it.  With U*M*V = D, the row lattice equals that of
// D*Vinv, so the saturation is spanned by the rows of Vinv matching nonzero
// diagonal entries.
inline IntMatrix saturation_basis(const IntMatrix& M) {
  auto snf = smith_normal_form(M);
  IntMatrix out(snf.rank, M.cols);
  for (size_t i = 0; i < snf.rank; ++i)
    for (size_t j = 0; j < M.cols; ++j) out.at(i, j) = snf.Vinv.at(i, j);
  return out;
}

// Membership of v in the row lattice of G: with U*G*V = D, v is a lattice
// point exactly when v*V is componentwise divisible by the diagonal.
inline bool in_row_lattice(const IntMatrix& G, const std::vector<Int>& v) {
  if (v.size() != G.cols) throw Error(ErrorKind::BadArgument, "vector length mismatch");
  auto snf = smith_normal_form(G);
  std::vector<Int> w(G.cols, 0);
  for (size_t j = 0; j < G.cols; ++j)
    for (size_t k = 0; k < G.cols; ++k) w[j] += v[k] * snf.V.at(k, j);
  for (size_t j = 0; j < G.cols; ++j) {
    Int d = (j < std::min(G.rows, G.cols)) ? snf.D.at(j, j) : Int(0);
    if (d == 0) {
      if (w[j] != 0) return false;
    } else if (w[j] % d != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace uag
