#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"

namespace cyclo {

/** \brief Nonnegatively graded chain complex C_0 <- C_1 <- ... <- C_N. */
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;  // d[n] : C_n -> C_{n-1}; d[0] has zero rows

  std::size_t top() const { return dims.size() - 1; }

  void push(std::size_t dim, Matrix dn) {
    dims.push_back(dim);
    d.push_back(std::move(dn));
  }

  /** Homology in degree n; needs the outgoing differential from degree n+1. */
  Subquotient homology(std::size_t n) const {
    if (n + 1 > top()) throw Error("homology degree " + std::to_string(n) + " not certified");
    return Subquotient(d[n], d[n + 1]);
  }

  std::vector<Subquotient> homology_upto(std::size_t m) const {
    std::vector<Subquotient> out;
    for (std::size_t n = 0; n <= m; ++n) out.push_back(homology(n));
    return out;
  }

  /** Degree n with d^2 != 0, or -1. */
  long square_defect() const {
    for (std::size_t n = 2; n <= top(); ++n)
      if (!(d[n - 1] * d[n]).is_zero()) return static_cast<long>(n);
    return -1;
  }
};

using ChainMap = std::vector<Matrix>;

/** First degree where f fails to commute with the differentials, or -1. */
inline long chain_map_defect(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst) {
  for (std::size_t n = 1; n < f.size() && n <= src.top() && n <= dst.top(); ++n)
    if (!(dst.d[n] * f[n] == f[n - 1] * src.d[n])) return static_cast<long>(n);
  return -1;
}

struct Block {
  std::size_t row, col;
  Matrix m;
};

inline Matrix assemble(std::size_t rows, std::size_t cols, const std::vector<Block>& blocks) {
  std::vector<SparseVec> c(cols);
  for (const auto& b : blocks)
    for (std::size_t j = 0; j < b.m.cols(); ++j)
      for (const auto& [i, x] : b.m.col(j)) c[b.col + j].emplace_back(static_cast<Index>(b.row + i), x);
  Matrix out(rows, cols);
  Accumulator acc(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, x] : c[j]) acc.add(i, x);
    out.set_col(j, acc.take());
  }
  return out;
}

/** \brief Mixed complex (C, b, B); B[n] : C_n -> C_{n+1} for n < top. */
struct MixedComplex {
  ChainComplex hoch;
  std::vector<Matrix> B;

  std::size_t top() const { return hoch.top(); }

  /** Components of Tot_n, highest degree first: C_n, C_{n-2}, ... */
  std::vector<std::size_t> tot_offsets(std::size_t n) const {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (long m = static_cast<long>(n); m >= 0; m -= 2) {
      off.push_back(o);
      o += hoch.dims[static_cast<std::size_t>(m)];
    }
    off.push_back(o);
    return off;
  }

  ChainComplex tot() const {
    ChainComplex t;
    for (std::size_t n = 0; n <= top(); ++n) {
      auto off = tot_offsets(n);
      std::size_t dim = off.back();
      if (n == 0) {
        t.push(dim, Matrix(0, dim));
        continue;
      }
      auto low = tot_offsets(n - 1);
      std::vector<Block> bl;
      for (std::size_t k = 0; k + 1 < off.size(); ++k) {
        std::size_t m = n - 2 * k;
        if (m >= 1) bl.push_back({low[k], off[k], hoch.d[m]});
        if (k >= 1) bl.push_back({low[k - 1], off[k], B[m]});
      }
      t.push(dim, assemble(low.back(), dim, bl));
    }
    return t;
  }

  /** Block-diagonal extension of a degreewise family to Tot. */
  ChainMap tot_map(const ChainMap& f, const MixedComplex& dst) const {
    ChainMap out;
    for (std::size_t n = 0; n <= top(); ++n) {
      std::vector<Block> bl;
      auto so = tot_offsets(n), dso = dst.tot_offsets(n);
      for (std::size_t k = 0; k + 1 < so.size(); ++k) bl.push_back({dso[k], so[k], f[n - 2 * k]});
      out.push_back(assemble(dso.back(), so.back(), bl));
    }
    return out;
  }
};

}  // namespace cyclo
