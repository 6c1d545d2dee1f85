#pragma once

#include <string>
#include <vector>

#include "cyclic.hpp"

namespace cyclo {

inline void require_commutative(const Algebra& a) {
  if (!a.commutative) throw NotCommutative("algebra " + a.name + " is not commutative");
}

/** Hochschild shuffle product C_p (x) C_q -> C_{p+q}; columns indexed u*dim(C_q) + v. */
inline Matrix shuffle_product(const Algebra& a, std::size_t p, std::size_t q) {
  require_commutative(a);
  const std::size_t d = a.dim, dq = ipow(d, q + 1);
  auto sh = shuffles(p, q);
  return Matrix::build(ipow(d, p + q + 1), ipow(d, p + 1) * dq, [&](std::size_t col, Accumulator& acc) {
    Word u = decode(col / dq, d, p + 1), v = decode(col % dq, d, q + 1);
    Word rest(u.begin() + 1, u.end());
    rest.insert(rest.end(), v.begin() + 1, v.end());
    for (const Perm& s : sh) {
      Word out(p + q + 1);
      for (std::size_t k = 0; k < p + q; ++k) out[1 + s[k]] = rest[k];
      Rational sign(perm_sign(s));
      for (const auto& [c, x] : a.mult[u[0]][v[0]]) {
        out[0] = c;
        acc.add(encode(out, d), sign * x);
      }
    }
  });
}

/** Signed shuffle on the cotensor algebra: A^{(x)i} (x) A^{(x)j} -> A^{(x)i+j}. */
inline Matrix cotensor_shuffle(std::size_t d, std::size_t i, std::size_t j) {
  auto sh = shuffles(i, j);
  return Matrix::build(ipow(d, i + j), ipow(d, i + j), [&](std::size_t col, Accumulator& acc) {
    Word x = decode(col, d, i + j);
    for (const Perm& s : sh) {
      Word out(i + j);
      for (std::size_t k = 0; k < i + j; ++k) out[s[k]] = x[k];
      acc.add(encode(out, d), Rational(perm_sign(s)));
    }
  });
}

/** \brief Degreewise endomorphism of H = T(A), H_0 = K. */
using GradedEnd = std::vector<Matrix>;

class Convolution {
 public:
  Convolution(std::size_t d, std::size_t N) : d_(d), N_(N) {
    mu_.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t i = 0; i <= n; ++i) mu_[n].push_back(cotensor_shuffle(d, i, n - i));
  }

  GradedEnd operator()(const GradedEnd& f, const GradedEnd& g) const {
    GradedEnd out;
    for (std::size_t n = 0; n <= N_; ++n) {
      Matrix acc(ipow(d_, n), ipow(d_, n));
      for (std::size_t i = 0; i <= n; ++i) acc = acc + mu_[n][i] * kron(f[i], g[n - i]);
      out.push_back(acc);
    }
    return out;
  }

  GradedEnd unit() const {
    GradedEnd u;
    for (std::size_t n = 0; n <= N_; ++n) u.push_back(n == 0 ? Matrix::identity(1) : Matrix(ipow(d_, n), ipow(d_, n)));
    return u;
  }

  GradedEnd identity() const {
    GradedEnd u;
    for (std::size_t n = 0; n <= N_; ++n) u.push_back(Matrix::identity(ipow(d_, n)));
    return u;
  }

  std::size_t top() const { return N_; }
  std::size_t letters() const { return d_; }

 private:
  std::size_t d_, N_;
  std::vector<std::vector<Matrix>> mu_;
};

inline GradedEnd graded_sum(const GradedEnd& f, const GradedEnd& g, const Rational& c = Rational(1)) {
  GradedEnd out;
  for (std::size_t n = 0; n < f.size(); ++n) out.push_back(f[n].combine(g[n], c));
  return out;
}

inline GradedEnd graded_scale(const GradedEnd& f, const Rational& c) {
  GradedEnd out;
  for (const auto& m : f) out.push_back(m * c);
  return out;
}

/** \brief e[i][n] = e_n^{(i)} on A^{(x)n}, for 0 <= i, n <= N. */
struct Eulerian {
  std::size_t d = 0, N = 0;
  std::vector<GradedEnd> e;

  const Matrix& at(std::size_t n, std::size_t i) const { return e[i][n]; }

  /** A (x) e_n^{(i)} on C_n(A); zero for i outside 0..N. */
  Matrix on_hochschild(std::size_t n, long i) const {
    std::size_t dim = ipow(d, n + 1);
    if (i < 0 || static_cast<std::size_t>(i) > N) return Matrix(dim, dim);
    return kron(Matrix::identity(d), e[static_cast<std::size_t>(i)][n]);
  }
};

inline Eulerian eulerian_idempotents(std::size_t d, std::size_t N) {
  Convolution conv(d, N);
  GradedEnd f = graded_sum(conv.identity(), conv.unit(), Rational(-1));
  GradedEnd e1(conv.unit().size());
  for (std::size_t n = 0; n <= N; ++n) e1[n] = Matrix(ipow(d, n), ipow(d, n));
  GradedEnd pw = f;
  for (std::size_t k = 1; k <= N; ++k) {
    e1 = graded_sum(e1, pw, Rational(k % 2 ? 1 : -1, static_cast<long>(k)));
    pw = conv(pw, f);
  }
  Eulerian out{d, N, {}};
  out.e.push_back(conv.unit());
  GradedEnd power = e1;
  mpz_class fact = 1;
  for (std::size_t i = 1; i <= N; ++i) {
    fact *= static_cast<unsigned long>(i);
    out.e.push_back(graded_scale(power, Rational(mpz_class(1), fact)));
    power = conv(power, e1);
  }
  return out;
}

/** \brief Normalized-level product structures used by the star product and module action. */
struct NormalizedProducts {
  const CyclicModule* cm;
  const NormalizedMixed* nm;

  Matrix shuffle(std::size_t p, std::size_t q) const {
    return nm->P[p + q] * shuffle_product(cm->algebra(), p, q) * kron(nm->L[p], nm->L[q]);
  }

  /** Tot_p -> C-bar_{p+1}: B on the top component. */
  Matrix top_B(std::size_t p) const {
    auto off = nm->mixed.tot_offsets(p);
    return assemble(nm->mixed.hoch.dims[p + 1], off.back(), {{0, 0, nm->mixed.B[p]}});
  }

  /** Tot_p (x) Tot_q -> Tot_{p+q+1}. */
  Matrix star(std::size_t p, std::size_t q) const {
    const MixedComplex& mc = nm->mixed;
    auto qo = mc.tot_offsets(q), ro = mc.tot_offsets(p + q + 1);
    std::size_t dp = mc.tot_offsets(p).back(), dq = qo.back();
    Matrix bt = top_B(p);
    std::vector<Block> bl;
    for (std::size_t k = 0; k + 1 < qo.size(); ++k) {
      std::size_t m = q - 2 * k;
      Matrix inc_q = assemble(dq, mc.hoch.dims[m], {{qo[k], 0, Matrix::identity(mc.hoch.dims[m])}});
      Matrix part = shuffle(p + 1, m) * kron(bt, inc_q.transpose());
      bl.push_back({ro[k], 0, part});
    }
    return assemble(ro.back(), dp * dq, bl);
  }

  /** Tot_{p-1} (x) C-bar_q -> C-bar_{p+q}. */
  Matrix action(std::size_t p, std::size_t q) const {
    return shuffle(p, q) * kron(top_B(p - 1), Matrix::identity(nm->mixed.hoch.dims[q]));
  }
};

/** Sum over Delta(x) of the tensor product of two degreewise maps. */
template <class F, class G>
Matrix sweedler_pair(const Measuring& m, const SparseVec& x, F&& left, G&& right) {
  const Coalgebra& c = m.C();
  Matrix out;
  bool first = true;
  for (const auto& [jk, v] : iterated_coproduct(c, x, 2)) {
    Matrix t = kron(left(unit_vec(static_cast<Index>(jk / c.dim))), right(unit_vec(static_cast<Index>(jk % c.dim)))) * v;
    out = first ? t : out + t;
    first = false;
  }
  return out;
}

/** C-bar^Phi(x) = P' C^Phi(x) L. */
inline ChainMap normalized_map(const ChainMap& f, const NormalizedMixed& src, const NormalizedMixed& dst) {
  ChainMap out;
  for (std::size_t n = 0; n < f.size(); ++n) out.push_back(dst.P[n] * f[n] * src.L[n]);
  return out;
}

/** Projector onto the i-th summand of Tot_n of the normalized mixed complex. */
inline Matrix lambda_tot_projector(const NormalizedMixed& nm, const Eulerian& eu, std::size_t n, long i) {
  const MixedComplex& mc = nm.mixed;
  auto off = mc.tot_offsets(n);
  std::vector<Block> bl;
  for (std::size_t k = 0; k + 1 < off.size(); ++k) {
    std::size_t m = n - 2 * k;
    bl.push_back({off[k], off[k], nm.P[m] * eu.on_hochschild(m, i - static_cast<long>(k)) * nm.L[m]});
  }
  return assemble(off.back(), off.back(), bl);
}

}  // namespace cyclo
