#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclic.hpp"

namespace cyclo {

/** \brief Bracket given by structure constants; used for both Lie and Leibniz algebras. */
struct LieAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::vector<SparseVec>> bracket;

  /** dim x dim^2 matrix of the bracket. */
  Matrix bracket_matrix() const {
    return Matrix::build(dim, dim * dim, [&](std::size_t w, Accumulator& acc) {
      for (const auto& [c, x] : bracket[w / dim][w % dim]) acc.add(c, x);
    });
  }

  SparseVec apply(const SparseVec& u, const SparseVec& v) const {
    Accumulator acc(dim);
    for (const auto& [i, x] : u)
      for (const auto& [j, y] : v)
        for (const auto& [c, z] : bracket[i][j]) acc.add(c, x * y * z);
    return acc.take();
  }
};

inline LieAlgebra lie_from_algebra(const Algebra& a) {
  LieAlgebra g{"gl(" + a.name + ")", a.dim, {}};
  g.bracket.assign(a.dim, std::vector<SparseVec>(a.dim));
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j) g.bracket[i][j] = axpy(a.mult[i][j], Rational(-1), a.mult[j][i]);
  return g;
}

inline LieAlgebra gl_lie(const Algebra& a, std::size_t r) {
  LieAlgebra g = lie_from_algebra(matrix_algebra(a, r));
  g.name = "gl" + std::to_string(r) + "(" + a.name + ")";
  return g;
}

/** First violated antisymmetry or Jacobi identity, if any. */
inline std::optional<std::string> lie_failure(const LieAlgebra& g) {
  for (Index i = 0; i < g.dim; ++i)
    for (Index j = 0; j < g.dim; ++j)
      if (axpy(g.bracket[i][j], Rational(1), g.bracket[j][i]) != SparseVec{})
        return g.name + ": [e" + std::to_string(i) + ",e" + std::to_string(j) + "] is not antisymmetric";
  for (Index i = 0; i < g.dim; ++i)
    for (Index j = 0; j < g.dim; ++j)
      for (Index k = 0; k < g.dim; ++k) {
        SparseVec x = unit_vec(i), y = unit_vec(j), z = unit_vec(k);
        SparseVec s = axpy(axpy(g.apply(x, g.apply(y, z)), Rational(1), g.apply(y, g.apply(z, x))), Rational(1),
                           g.apply(z, g.apply(x, y)));
        if (!s.empty())
          return g.name + ": Jacobi fails on (e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" +
                 std::to_string(k) + ")";
      }
  return std::nullopt;
}

/** [x,[y,z]] - [[x,y],z] + [[x,z],y] = 0 on basis triples. */
inline std::optional<std::string> leibniz_failure(const LieAlgebra& g) {
  for (Index i = 0; i < g.dim; ++i)
    for (Index j = 0; j < g.dim; ++j)
      for (Index k = 0; k < g.dim; ++k) {
        SparseVec x = unit_vec(i), y = unit_vec(j), z = unit_vec(k);
        SparseVec s = axpy(axpy(g.apply(x, g.apply(y, z)), Rational(-1), g.apply(g.apply(x, y), z)), Rational(1),
                           g.apply(g.apply(x, z), y));
        if (!s.empty())
          return g.name + ": Leibniz identity fails on (e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" +
                 std::to_string(k) + ")";
      }
  return std::nullopt;
}

/** \brief Psi : C -> Hom(g, g'). */
struct LieMeasuring {
  std::string name;
  std::shared_ptr<const Coalgebra> coalgebra;
  std::shared_ptr<const LieAlgebra> source, target;
  std::vector<Matrix> phi;

  const Coalgebra& C() const { return *coalgebra; }
};

inline LieMeasuring gl_measuring(const Measuring& m, std::size_t r) {
  Measuring mr = matrix_measuring(m, r);
  LieMeasuring out{"gl" + std::to_string(r) + "(" + m.name + ")", m.coalgebra,
                   std::make_shared<LieAlgebra>(gl_lie(m.A(), r)), std::make_shared<LieAlgebra>(gl_lie(m.B(), r)),
                   mr.phi};
  return out;
}

/** Psi(x)[a,b] = sum [Psi(x_1)a, Psi(x_2)b] on basis pairs; throws NotALieMeasuring with a witness. */
inline void validate_lie_measuring(const LieMeasuring& m) {
  if (!m.C().cocommutative) throw NotCocommutative("measuring " + m.name + " uses a coalgebra not flagged cocommutative");
  Matrix br = m.source->bracket_matrix(), br2 = m.target->bracket_matrix();
  for (Index x = 0; x < m.C().dim; ++x) {
    Matrix lhs = m.phi[x] * br;
    Matrix rhs = br2 * tensor_power(m.C(), m.phi, unit_vec(x), 2);
    if (auto mm = first_mismatch(lhs, rhs))
      throw NotALieMeasuring("measuring " + m.name + ": bracket identity fails at x = " + m.C().labels[x] + ", " +
                             mm->describe());
  }
}

/** \brief Chevalley-Eilenberg complex Lambda^n g. */
struct CEComplex {
  std::shared_ptr<const LieAlgebra> g;
  std::vector<WedgeBasis> wedge;
  ChainComplex cc;

  std::size_t top() const { return cc.top(); }

  /** CE^Psi(x) degreewise. */
  ChainMap map(const LieMeasuring& m, const SparseVec& x, const CEComplex& dst) const {
    ChainMap out;
    for (std::size_t n = 0; n <= top() && n <= dst.top(); ++n) out.push_back(wedge_map(m.C(), m.phi, x, n, dst));
    return out;
  }

  Matrix wedge_map(const Coalgebra& c, const std::vector<Matrix>& phi, const SparseVec& x, std::size_t n,
                   const CEComplex& dst) const {
    return Matrix::build(dst.wedge[n].size(), wedge[n].size(), [&](std::size_t col, Accumulator& acc) {
      tensor_power_on_word(c, phi, x, wedge[n].word(col), [&](const Word& out, const Rational& v) {
        Index idx;
        int s;
        if (dst.wedge[n].lookup(out, idx, s)) acc.add(idx, v * s);
      });
    });
  }
};

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b.fits_ulong_p() ? b.get_ui() : static_cast<std::size_t>(-1);
}

inline CEComplex ce_complex(std::shared_ptr<const LieAlgebra> gp, std::size_t N, std::size_t cap = kDefaultDimCap) {
  const LieAlgebra& g = *gp;
  for (std::size_t n = 0; n <= N; ++n)
    if (binomial(g.dim, n) > cap) throw TruncationTooLarge("CE_" + std::to_string(n) + "(" + g.name + ")", binomial(g.dim, n), cap);
  CEComplex ce{gp, {}, {}};
  for (std::size_t n = 0; n <= N; ++n) ce.wedge.emplace_back(g.dim, n);
  ce.cc.push(1, Matrix(0, 1));
  for (std::size_t n = 1; n <= N; ++n) {
    const WedgeBasis &hi = ce.wedge[n], &lo = ce.wedge[n - 1];
    ce.cc.push(hi.size(), Matrix::build(lo.size(), hi.size(), [&](std::size_t col, Accumulator& acc) {
      const Word& w = hi.word(col);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Rational sign((i + j + 1) % 2 ? -1 : 1);
          for (const auto& [c, x] : g.bracket[w[i]][w[j]]) {
            Word full{c};
            for (std::size_t k = 0; k < n; ++k)
              if (k != i && k != j) full.push_back(w[k]);
            Index idx;
            int s;
            if (lo.lookup(full, idx, s)) acc.add(idx, sign * x * s);
          }
        }
    }));
  }
  return ce;
}

/** \brief Leibniz complex g^{(x)n}. */
struct CLComplex {
  std::shared_ptr<const LieAlgebra> g;
  ChainComplex cc;

  std::size_t top() const { return cc.top(); }

  ChainMap map(const LieMeasuring& m, const SparseVec& x) const {
    ChainMap out;
    for (std::size_t n = 0; n <= top(); ++n) out.push_back(tensor_power(m.C(), m.phi, x, n));
    return out;
  }
};

inline CLComplex cl_complex(std::shared_ptr<const LieAlgebra> gp, std::size_t N, std::size_t cap = kDefaultDimCap) {
  const LieAlgebra& g = *gp;
  if (auto f = leibniz_failure(g)) throw NotALeibnizAlgebra(*f);
  for (std::size_t n = 0; n <= N; ++n) checked_pow(g.dim, n, cap, "CL_" + std::to_string(n) + "(" + g.name + ")");
  CLComplex cl{gp, {}};
  cl.cc.push(1, Matrix(0, 1));
  for (std::size_t n = 1; n <= N; ++n) {
    cl.cc.push(ipow(g.dim, n), Matrix::build(ipow(g.dim, n - 1), ipow(g.dim, n), [&](std::size_t col, Accumulator& acc) {
      Word w = decode(col, g.dim, n);
      for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          Rational sign(j % 2 ? 1 : -1);
          for (const auto& [c, x] : g.bracket[w[i]][w[j]]) {
            Word out;
            for (std::size_t k = 0; k < n; ++k)
              if (k == i)
                out.push_back(c);
              else if (k != j)
                out.push_back(w[k]);
            acc.add(encode(out, g.dim), sign * x);
          }
        }
    }));
  }
  return cl;
}

/** Lambda^n g -> Lambda^p g (x) Lambda^q g induced by the diagonal; columns of the target indexed u*|Lambda^q| + v. */
inline Matrix wedge_split(const CEComplex& ce, std::size_t p, std::size_t q) {
  const WedgeBasis &wp = ce.wedge[p], &wq = ce.wedge[q], &wn = ce.wedge[p + q];
  auto sh = shuffles(p, q);
  return Matrix::build(wp.size() * wq.size(), wn.size(), [&](std::size_t col, Accumulator& acc) {
    const Word& w = wn.word(col);
    for (const Perm& s : sh) {
      Word u(p), v(q);
      for (std::size_t k = 0; k < p; ++k) u[k] = w[s[k]];
      for (std::size_t k = 0; k < q; ++k) v[k] = w[s[p + k]];
      Index iu, iv;
      int su, sv;
      if (wp.lookup(u, iu, su) && wq.lookup(v, iv, sv))
        acc.add(static_cast<Index>(iu * wq.size() + iv), Rational(perm_sign(s) * su * sv));
    }
  });
}

/** g^{(x)n} -> g^{(x)p} (x) g^{(x)q} keeping the factors in the positions of mask (bit k set: first group). */
inline Matrix tensor_split(std::size_t dim, std::size_t n, unsigned mask) {
  return Matrix::build(ipow(dim, n), ipow(dim, n), [&](std::size_t col, Accumulator& acc) {
    Word w = decode(col, dim, n), u, v;
    for (std::size_t k = 0; k < n; ++k) (mask >> k & 1u ? u : v).push_back(w[k]);
    u.insert(u.end(), v.begin(), v.end());
    acc.add(encode(u, dim), Rational(1));
  });
}

/** Sum over Delta(x) of f(x_1) (x) g(x_2). */
template <class F, class G>
Matrix sweedler_kron(const Coalgebra& c, const SparseVec& x, F&& f, G&& g) {
  Matrix out;
  bool first = true;
  for (const auto& [jk, v] : iterated_coproduct(c, x, 2)) {
    Matrix t = kron(f(unit_vec(static_cast<Index>(jk / c.dim))), g(unit_vec(static_cast<Index>(jk % c.dim)))) * v;
    out = first ? t : out + t;
    first = false;
  }
  return out;
}

/** theta : Lambda^{n+1} gl_r(A) -> C_n(M_r(A)) before projecting to C-tilde. */
inline Matrix theta_raw(const CEComplex& ce, std::size_t n) {
  const std::size_t D = ce.g->dim;
  auto perms = all_perms(n);
  return Matrix::build(ipow(D, n + 1), ce.wedge[n + 1].size(), [&](std::size_t col, Accumulator& acc) {
    const Word& w = ce.wedge[n + 1].word(col);
    for (const Perm& s : perms) {
      Word out(n + 1);
      out[0] = w[0];
      for (std::size_t k = 0; k < n; ++k) out[1 + k] = w[1 + s[k]];
      acc.add(encode(out, D), Rational(perm_sign(s)));
    }
  });
}

/** Generalized trace C_n(M_r(A)) -> C_n(A). */
inline Matrix trace_map(std::size_t d, std::size_t r, std::size_t n) {
  const std::size_t D = r * r * d;
  return Matrix::build(ipow(d, n + 1), ipow(D, n + 1), [&](std::size_t col, Accumulator& acc) {
    Word w = decode(col, D, n + 1), out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t e = w[k] / d, next = w[(k + 1) % (n + 1)] / d;
      if (e % r != next / r) return;
      out[k] = static_cast<Index>(w[k] % d);
    }
    acc.add(encode(out, d), Rational(1));
  });
}

/** ad of the matrix units E_ij (x) 1 on gl_r(A), as D x D matrices. */
inline std::vector<Matrix> scalar_adjoints(const Algebra& a, std::size_t r) {
  Algebra m = matrix_algebra(a, r);
  const std::size_t d = a.dim;
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      SparseVec X;
      for (const auto& [e, v] : a.unit) X.emplace_back(static_cast<Index>((i * r + j) * d + e), v);
      out.push_back(Matrix::build(m.dim, m.dim, [&](std::size_t c, Accumulator& acc) {
        for (const auto& [k, v] : m.product(X, unit_vec(static_cast<Index>(c)))) acc.add(k, v);
        for (const auto& [k, v] : m.product(unit_vec(static_cast<Index>(c)), X)) acc.add(k, -v);
      }));
    }
  return out;
}

/** Derivation extension of ad on Lambda^n. */
inline Matrix wedge_derivation(const CEComplex& ce, const Matrix& ad, std::size_t n) {
  const WedgeBasis& wb = ce.wedge[n];
  return Matrix::build(wb.size(), wb.size(), [&](std::size_t col, Accumulator& acc) {
    const Word& w = wb.word(col);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [c, v] : ad.col(w[k])) {
        Word out = w;
        out[k] = c;
        Index idx;
        int s;
        if (wb.lookup(out, idx, s)) acc.add(idx, v * s);
      }
  });
}

/** Derivation extension of ad on the n-th tensor power. */
inline Matrix tensor_derivation(const Matrix& ad, std::size_t n) {
  const std::size_t D = ad.rows();
  Matrix out(ipow(D, n), ipow(D, n));
  for (std::size_t k = 0; k < n; ++k)
    out = out + kron({Matrix::identity(ipow(D, k)), ad, Matrix::identity(ipow(D, n - k - 1))});
  return out;
}

/** \brief Coinvariants of a complex under a family of degreewise operators. */
struct CoinvariantComplex {
  ChainComplex cc;
  std::vector<Quotient> q;

  ChainMap map(const ChainMap& f, const CoinvariantComplex& dst, const std::string& what) const {
    ChainMap out;
    for (std::size_t n = 0; n < q.size(); ++n) out.push_back(descend(f[n], q[n], dst.q[n], what));
    return out;
  }
};

inline CoinvariantComplex coinvariants(const ChainComplex& c, const std::vector<std::vector<Matrix>>& ops, const std::string& what) {
  CoinvariantComplex out;
  for (std::size_t n = 0; n <= c.top(); ++n) {
    Matrix rel(c.dims[n], 0);
    for (const auto& op : ops[n])
      for (std::size_t j = 0; j < op.cols(); ++j)
        if (!op.col(j).empty()) rel.append_col(op.col(j));
    out.q.emplace_back(rel);
    Matrix dn = n == 0 ? Matrix(0, out.q[0].dim()) : descend(c.d[n], out.q[n], out.q[n - 1], what + " differential");
    out.cc.push(out.q[n].dim(), dn);
  }
  return out;
}

inline CoinvariantComplex ce_coinvariants(const CEComplex& ce, const Algebra& a, std::size_t r) {
  auto ads = scalar_adjoints(a, r);
  std::vector<std::vector<Matrix>> ops(ce.top() + 1);
  for (std::size_t n = 0; n <= ce.top(); ++n)
    for (const auto& ad : ads) ops[n].push_back(wedge_derivation(ce, ad, n));
  return coinvariants(ce.cc, ops, "CE-bar");
}

inline CoinvariantComplex cl_coinvariants(const CLComplex& cl, const Algebra& a, std::size_t r) {
  auto ads = scalar_adjoints(a, r);
  std::vector<std::vector<Matrix>> ops(cl.top() + 1);
  for (std::size_t n = 0; n <= cl.top(); ++n)
    for (const auto& ad : ads) ops[n].push_back(tensor_derivation(ad, n));
  return coinvariants(cl.cc, ops, "CL-bar");
}

/** Block inclusions gl_r(A) -> gl_{2r}(A): upper-left (first) and lower-right (second). */
inline std::pair<Matrix, Matrix> block_inclusions(std::size_t d, std::size_t r) {
  const std::size_t R = 2 * r;
  auto inc = [&](std::size_t shift) {
    return Matrix::build(R * R * d, r * r * d, [&](std::size_t c, Accumulator& acc) {
      std::size_t e = c / d, k = c % d, i = e / r + shift, j = e % r + shift;
      acc.add(static_cast<Index>((i * R + j) * d + k), Rational(1));
    });
  };
  return {inc(0), inc(r)};
}

/** Lambda^p g (x) Lambda^q g -> Lambda^{p+q} G, u (x) v -> i1(u) ^ i2(v). */
inline Matrix wedge_block_product(const CEComplex& small, const CEComplex& big, const Matrix& i1, const Matrix& i2,
                                  std::size_t p, std::size_t q) {
  const WedgeBasis &wp = small.wedge[p], &wq = small.wedge[q], &wn = big.wedge[p + q];
  return Matrix::build(wn.size(), wp.size() * wq.size(), [&](std::size_t col, Accumulator& acc) {
    const Word &u = wp.word(col / wq.size()), &v = wq.word(col % wq.size());
    std::vector<SparseVec> f;
    for (Index x : u) f.push_back(i1.col(x));
    for (Index x : v) f.push_back(i2.col(x));
    for_each_product(f, [&](const Word& w, const Rational& c) {
      Index idx;
      int s;
      if (wn.lookup(w, idx, s)) acc.add(idx, c * s);
    });
  });
}

/** g^{(x)p} (x) g^{(x)q} -> G^{(x)p+q}. */
inline Matrix tensor_block_product(const Matrix& i1, const Matrix& i2, std::size_t p, std::size_t q) {
  std::vector<Matrix> fs;
  for (std::size_t k = 0; k < p; ++k) fs.push_back(i1);
  for (std::size_t k = 0; k < q; ++k) fs.push_back(i2);
  return fs.empty() ? Matrix::identity(1) : kron(fs);
}

/** \brief V_n(A) = K[U_{n+1}] (x) A^{(x)n+1}; cycles stored by their cycle order starting at 0. */
struct CyclicWords {
  std::vector<std::vector<Word>> cycles;  // cycles[n][s] = (L_0 = 0, L_1, ..., L_n)
  std::vector<std::map<Word, Index>> index;

  explicit CyclicWords(std::size_t N) {
    for (std::size_t n = 0; n <= N; ++n) {
      std::vector<Word> cs;
      std::map<Word, Index> ix;
      for (const Perm& p : all_perms(n)) {
        Word L{0};
        for (Index k : p) L.push_back(k + 1);
        ix[L] = static_cast<Index>(cs.size());
        cs.push_back(L);
      }
      cycles.push_back(cs);
      index.push_back(ix);
    }
  }

  /** sigma as a permutation of {0..n}: sigma(L_k) = L_{k+1}. */
  static Perm as_perm(const Word& L) {
    Perm s(L.size());
    for (std::size_t k = 0; k < L.size(); ++k) s[L[k]] = L[(k + 1) % L.size()];
    return s;
  }

  /** omega(sigma)(k) = L_k. */
  static Perm omega(const Word& L) { return L; }

  /** Merge cycle positions i and i+1 (mod n+1), keep the smaller label, relabel order-preservingly. */
  static Word face(const Word& L, std::size_t i) {
    const std::size_t len = L.size();
    Index a = L[i], b = L[(i + 1) % len];
    Index drop = std::max(a, b);
    Word out;
    for (Index x : L)
      if (x != drop) out.push_back(x > drop ? x - 1 : x);
    return out;
  }
};

struct VComplex {
  std::shared_ptr<const Algebra> a;
  CyclicWords words;
  ChainComplex cc;
  std::vector<std::vector<Matrix>> faces;  // faces[n][i], n >= 1
  std::vector<Matrix> iota, zeta;

  std::size_t cdim(std::size_t n) const { return ipow(a->dim, n + 1); }

  ChainMap map(const ChainMap& cphi) const {
    ChainMap out;
    for (std::size_t n = 0; n <= cc.top(); ++n) out.push_back(kron(Matrix::identity(words.cycles[n].size()), cphi[n]));
    return out;
  }
};

inline VComplex v_complex(const CyclicModule& cm, std::size_t cap = kDefaultDimCap) {
  const std::size_t N = cm.top(), d = cm.algebra().dim;
  mpz_class fact = 1;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 1) fact *= static_cast<unsigned long>(n);
    std::size_t dim = fact.get_ui() * ipow(d, n + 1);
    if (dim > cap) throw TruncationTooLarge("V_" + std::to_string(n) + "(" + cm.algebra().name + ")", dim, cap);
  }
  VComplex v{cm.algebra_ptr(), CyclicWords(N), {}, {}, {}, {}};
  for (std::size_t n = 0; n <= N; ++n) {
    const auto& cs = v.words.cycles[n];
    const std::size_t cd = v.cdim(n), vd = cs.size() * cd;
    v.faces.emplace_back();
    if (n >= 1) {
      const std::size_t lowc = v.cdim(n - 1);
      for (std::size_t i = 0; i <= n; ++i) {
        const Matrix& di = cm.face(n, i);
        v.faces[n].push_back(Matrix::build(v.words.cycles[n - 1].size() * lowc, vd, [&](std::size_t col, Accumulator& acc) {
          const Word& L = cs[col / cd];
          Word a = decode(col % cd, d, n + 1), ordered(n + 1);
          for (std::size_t k = 0; k <= n; ++k) ordered[k] = a[L[k]];
          Word L2 = CyclicWords::face(L, i);
          Index s2 = v.words.index[n - 1].at(L2);
          for (const auto& [w, x] : di.col(encode(ordered, d))) {
            Word c = decode(w, d, n), back(n);
            for (std::size_t k = 0; k < n; ++k) back[L2[k]] = c[k];
            acc.add(static_cast<Index>(s2 * lowc + encode(back, d)), x);
          }
        }));
      }
      Matrix bn(v.words.cycles[n - 1].size() * lowc, vd);
      for (std::size_t i = 0; i <= n; ++i) bn = i % 2 ? bn - v.faces[n][i] : bn + v.faces[n][i];
      v.cc.push(vd, bn);
    } else {
      v.cc.push(vd, Matrix(0, vd));
    }
    Word id(n + 1);
    for (std::size_t k = 0; k <= n; ++k) id[k] = static_cast<Index>(k);
    Index sid = v.words.index[n].at(id);
    v.iota.push_back(assemble(vd, cd, {{sid * cd, 0, Matrix::identity(cd)}}));
    v.zeta.push_back(Matrix::build(cd, vd, [&](std::size_t col, Accumulator& acc) {
      const Word& L = cs[col / cd];
      Word a = decode(col % cd, d, n + 1), out(n + 1);
      for (std::size_t k = 0; k <= n; ++k) out[k] = a[L[k]];
      acc.add(encode(out, d), Rational(perm_sign(CyclicWords::omega(L))));
    }));
  }
  return v;
}

}  // namespace cyclo
