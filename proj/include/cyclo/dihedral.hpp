#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lie.hpp"

namespace cyclo {

inline const Matrix& require_involution(const Algebra& a) {
  if (!a.involution) throw NotInvolutive("algebra " + a.name + " has no involution");
  return *a.involution;
}

/** Def 7.1(b) on every basis element of the coalgebra. */
inline void require_involutive_measuring(const Measuring& m) {
  require_cocommutative(m);
  const Matrix& s = require_involution(m.A());
  const Matrix& s2 = require_involution(m.B());
  for (Index x = 0; x < m.C().dim; ++x)
    if (auto mm = first_mismatch(m.phi[x] * s, s2 * m.phi[x]))
      throw NotInvolutive("measuring " + m.name + " does not commute with conjugation at x = " + m.C().labels[x] + ", " +
                          mm->describe());
}

/** v_n(r_0, ..., r_n) = (-1)^{n(n+1)/2} (r^_0, r^_n, ..., r^_1). */
inline Matrix dihedral_v(const Algebra& a, std::size_t n) {
  const Matrix& s = require_involution(a);
  const std::size_t d = a.dim;
  Rational sign((n * (n + 1) / 2) % 2 ? -1 : 1);
  return Matrix::build(ipow(d, n + 1), ipow(d, n + 1), [&](std::size_t col, Accumulator& acc) {
    Word w = decode(col, d, n + 1);
    std::vector<SparseVec> f{s.col(w[0])};
    for (std::size_t k = n; k >= 1; --k) f.push_back(s.col(w[k]));
    for_each_product(f, [&](const Word& out, const Rational& c) { acc.add(encode(out, d), sign * c); });
  });
}

/** \brief D_n(R) = C_n(R) / ((1 - u_n) + (1 - v_n)) with the descended b. */
struct DihedralComplex {
  std::vector<Matrix> u, v;
  std::vector<Quotient> q;
  ChainComplex cc;

  ChainMap map(const ChainMap& f, const DihedralComplex& dst, const std::string& what) const {
    ChainMap out;
    for (std::size_t n = 0; n < q.size(); ++n) out.push_back(descend(f[n], q[n], dst.q[n], what));
    return out;
  }

  /** C-tilde_n -> D_n. */
  Matrix from_ctilde(const QuotientComplex& ct, std::size_t n) const {
    return descend(Matrix::identity(ct.q[n].ambient()), ct.q[n], q[n], "C-tilde -> D");
  }
};

inline DihedralComplex dihedral_complex(const CyclicModule& cm) {
  const Algebra& a = cm.algebra();
  require_involution(a);
  DihedralComplex dc;
  for (std::size_t n = 0; n <= cm.top(); ++n) {
    dc.u.push_back(cm.t(n));
    dc.v.push_back(dihedral_v(a, n));
    Matrix I = Matrix::identity(cm.dim(n));
    Matrix rel = I - dc.u[n];
    Matrix rv = I - dc.v[n];
    for (std::size_t j = 0; j < rv.cols(); ++j)
      if (!rv.col(j).empty()) rel.append_col(rv.col(j));
    dc.q.emplace_back(rel);
    Matrix dn = n == 0 ? Matrix(0, dc.q[0].dim()) : descend(cm.b(n), dc.q[n], dc.q[n - 1], "b on D_" + std::to_string(n));
    dc.cc.push(dc.q[n].dim(), dn);
  }
  return dc;
}

/** Index of the first failing dihedral relation at degree n, or an empty string. */
inline std::string dihedral_relation_failure(const DihedralComplex& dc, std::size_t n) {
  const Matrix &u = dc.u[n], &v = dc.v[n];
  Matrix I = Matrix::identity(u.rows());
  Matrix p = I;
  for (std::size_t k = 0; k <= n; ++k) p = u * p;
  if (!(p == I)) return "u^{n+1} != 1";
  if (!(v * v == I)) return "v^2 != 1";
  Matrix uinv = I;
  for (std::size_t k = 0; k < n; ++k) uinv = u * uinv;
  if (!(v * u * v == uinv)) return "v u v^{-1} != u^{-1}";
  return "";
}

/** \brief A Lie subalgebra of gl_r(R) cut out as the -1 eigenspace of an involutive operator. */
struct LieSubalgebra {
  std::shared_ptr<const LieAlgebra> g;  // structure constants in the chosen basis
  Matrix inc;                           // columns: basis inside gl
  Matrix op;                            // the operator on gl (t or T)
};

inline LieSubalgebra eigen_subalgebra(const LieAlgebra& gl, const Matrix& op, const std::string& name) {
  if (!(op * op == Matrix::identity(gl.dim))) throw NotInvolutive(name + ": defining operator is not an involution");
  LieSubalgebra s;
  s.op = op;
  s.inc = kernel_basis(op + Matrix::identity(gl.dim));
  ColumnSolver solver(s.inc);
  auto h = std::make_shared<LieAlgebra>();
  h->name = name;
  h->dim = s.inc.cols();
  h->bracket.assign(h->dim, std::vector<SparseVec>(h->dim));
  for (std::size_t i = 0; i < h->dim; ++i)
    for (std::size_t j = 0; j < h->dim; ++j) {
      auto c = solver.solve(gl.apply(s.inc.col(i), s.inc.col(j)));
      if (!c) throw Error(name + " is not closed under the bracket");
      h->bracket[i][j] = *c;
    }
  s.g = h;
  return s;
}

/** t on gl_r(R): the matrix algebra's involution, E_ij (x) e -> E_ji (x) e^. */
inline Matrix transpose_conjugate(const Algebra& a, std::size_t r) { return require_involution(matrix_algebra(a, r)); }

inline LieSubalgebra sk_algebra(const Algebra& a, std::size_t r) {
  return eigen_subalgebra(gl_lie(a, r), transpose_conjugate(a, r), "sk" + std::to_string(r) + "(" + a.name + ")");
}

/** T(alpha) = -J t(alpha) J on gl_{2r}(R). */
inline Matrix symplectic_T(const Algebra& a, std::size_t r) {
  const std::size_t R = 2 * r, d = a.dim;
  Algebra m = matrix_algebra(a, R);
  SparseVec J;
  for (std::size_t b = 0; b < r; ++b)
    for (const auto& [e, x] : a.unit) {
      J.emplace_back(static_cast<Index>(((2 * b) * R + 2 * b + 1) * d + e), x);
      J.emplace_back(static_cast<Index>(((2 * b + 1) * R + 2 * b) * d + e), -x);
    }
  std::sort(J.begin(), J.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  Matrix t = require_involution(m);
  return (m.left(J) * m.right(J) * t) * Rational(-1);
}

inline LieSubalgebra sp_algebra(const Algebra& a, std::size_t r) {
  return eigen_subalgebra(gl_lie(a, 2 * r), symplectic_T(a, r), "sp" + std::to_string(2 * r) + "(" + a.name + ")");
}

/** Restriction of gl_r(Phi) to the subalgebras; throws if an image leaves the target subalgebra. */
inline LieMeasuring restrict_measuring(const LieMeasuring& gl, const LieSubalgebra& src, const LieSubalgebra& dst) {
  ColumnSolver solver(dst.inc);
  LieMeasuring out{gl.name + "|" + src.g->name, gl.coalgebra, src.g, dst.g, {}};
  for (const auto& f : gl.phi) {
    Matrix img = f * src.inc;
    Matrix r(dst.inc.cols(), src.inc.cols());
    for (std::size_t j = 0; j < img.cols(); ++j) {
      auto c = solver.solve(img.col(j));
      if (!c) throw RelationNotPreserved("measuring " + gl.name + " does not restrict to " + dst.g->name);
      r.set_col(j, *c);
    }
    out.phi.push_back(r);
  }
  return out;
}

/** Lambda^n(f) for a linear map f between the underlying spaces. */
inline Matrix lambda_map(const CEComplex& src, const CEComplex& dst, const Matrix& f, std::size_t n) {
  return Matrix::build(dst.wedge[n].size(), src.wedge[n].size(), [&](std::size_t col, Accumulator& acc) {
    std::vector<SparseVec> fs;
    for (Index x : src.wedge[n].word(col)) fs.push_back(f.col(x));
    for_each_product(fs, [&](const Word& w, const Rational& c) {
      Index idx;
      int s;
      if (dst.wedge[n].lookup(w, idx, s)) acc.add(idx, c * s);
    });
  });
}

}  // namespace cyclo
