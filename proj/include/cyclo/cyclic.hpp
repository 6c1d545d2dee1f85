#pragma once

#include <memory>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "complexes.hpp"

namespace cyclo {

inline constexpr std::size_t kDefaultDimCap = 5000;

/** \brief Tensor-word factors helper: e_w as one unit vector per letter. */
inline std::vector<SparseVec> letters(const Word& w) {
  std::vector<SparseVec> f;
  f.reserve(w.size());
  for (Index a : w) f.push_back(unit_vec(a));
  return f;
}

inline void add_tensor(Accumulator& acc, const std::vector<SparseVec>& factors, std::size_t d, const Rational& c) {
  for_each_product(factors, [&](const Word& w, const Rational& x) { acc.add(encode(w, d), c * x); });
}

/**
 * \brief The cyclic module C_n(A) = A^{(x)n+1} with faces, degeneracies and
 * the signed cyclic operator, for n <= N.
 */
class CyclicModule {
 public:
  CyclicModule(std::shared_ptr<const Algebra> a, std::size_t N, std::size_t cap = kDefaultDimCap)
      : a_(std::move(a)), N_(N) {
    checked_pow(a_->dim, N + 1, cap, "C_" + std::to_string(N) + "(" + a_->name + ")");
    for (std::size_t n = 0; n <= N; ++n) {
      t_.push_back(build_t(n));
      b_.push_back(n == 0 ? Matrix(0, dim(0)) : alternating(n, n + 1));
      bp_.push_back(n == 0 ? Matrix(0, dim(0)) : alternating(n, n));
      Matrix acc = Matrix::identity(dim(n)), pw = Matrix::identity(dim(n));
      for (std::size_t k = 1; k <= n; ++k) {
        pw = t_[n] * pw;
        acc = acc + pw;
      }
      norm_.push_back(acc);
    }
    for (std::size_t n = 0; n < N; ++n) {
      // B = (-1)^{n+1} (1 - t_{n+1}) t_{n+1} s_n (1 + t_n + ... + t_n^n)
      Matrix one_minus_t = Matrix::identity(dim(n + 1)) - t_[n + 1];
      Matrix core = one_minus_t * t_[n + 1] * degeneracy(n, n) * norm_[n];
      B_.push_back((n + 1) % 2 ? core * Rational(-1) : core);
    }
  }

  const Algebra& algebra() const { return *a_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return a_; }
  std::size_t top() const { return N_; }
  std::size_t dim(std::size_t n) const { return ipow(a_->dim, n + 1); }

  Matrix face(std::size_t n, std::size_t i) const {
    const std::size_t d = a_->dim;
    return Matrix::build(dim(n - 1), dim(n), [&](std::size_t col, Accumulator& acc) {
      Word w = decode(col, d, n + 1);
      std::vector<SparseVec> f;
      if (i < n) {
        for (std::size_t k = 0; k < n + 1; ++k) {
          if (k == i) {
            f.push_back(a_->mult[w[i]][w[i + 1]]);
            ++k;
          } else {
            f.push_back(unit_vec(w[k]));
          }
        }
      } else {
        f.push_back(a_->mult[w[n]][w[0]]);
        for (std::size_t k = 1; k < n; ++k) f.push_back(unit_vec(w[k]));
      }
      add_tensor(acc, f, d, Rational(1));
    });
  }

  Matrix degeneracy(std::size_t n, std::size_t j) const {
    const std::size_t d = a_->dim;
    return Matrix::build(dim(n + 1), dim(n), [&](std::size_t col, Accumulator& acc) {
      Word w = decode(col, d, n + 1);
      std::vector<SparseVec> f = letters(w);
      f.insert(f.begin() + static_cast<long>(j) + 1, a_->unit);
      add_tensor(acc, f, d, Rational(1));
    });
  }

  const Matrix& t(std::size_t n) const { return t_[n]; }
  const Matrix& b(std::size_t n) const { return b_[n]; }
  const Matrix& bprime(std::size_t n) const { return bp_[n]; }
  const Matrix& norm(std::size_t n) const { return norm_[n]; }
  const Matrix& connes_B(std::size_t n) const { return B_[n]; }

  ChainComplex hochschild() const {
    ChainComplex c;
    for (std::size_t n = 0; n <= N_; ++n) c.push(dim(n), b_[n]);
    return c;
  }

  MixedComplex mixed() const { return MixedComplex{hochschild(), B_}; }

 private:
  Matrix build_t(std::size_t n) const {
    const std::size_t d = a_->dim;
    Rational sign(n % 2 ? -1 : 1);
    return Matrix::build(dim(n), dim(n), [&](std::size_t col, Accumulator& acc) {
      Word w = decode(col, d, n + 1);
      Word r(n + 1);
      r[0] = w[n];
      for (std::size_t k = 0; k < n; ++k) r[k + 1] = w[k];
      acc.add(encode(r, d), sign);
    });
  }

  /** Sum of (-1)^i d_i over i < count. */
  Matrix alternating(std::size_t n, std::size_t count) const {
    Matrix out(dim(n - 1), dim(n));
    for (std::size_t i = 0; i < count; ++i) {
      Matrix f = face(n, i);
      out = i % 2 ? out - f : out + f;
    }
    return out;
  }

  std::shared_ptr<const Algebra> a_;
  std::size_t N_;
  std::vector<Matrix> t_, b_, bp_, norm_, B_;
};

/** C_n^Phi(x) for n <= N. */
inline ChainMap hochschild_map(const Measuring& m, const SparseVec& x, std::size_t N) {
  require_cocommutative(m);
  ChainMap f;
  for (std::size_t n = 0; n <= N; ++n) f.push_back(apply_measuring_tensor(m, x, n + 1));
  return f;
}

/** \brief Complement of the unit line: p : A -> A/K and its section l. */
struct BarSplitting {
  Matrix p, l;
};

inline BarSplitting bar_splitting(const Algebra& a) {
  const Index piv = a.unit_pivot();
  const std::size_t d = a.dim;
  Rational u0 = a.unit.front().second;
  BarSplitting s{Matrix(d - 1, d), Matrix(d, d - 1)};
  auto slot = [&](Index k) { return static_cast<Index>(k < piv ? k : k - 1); };
  for (Index k = 0; k < d; ++k) {
    if (k == piv) {
      SparseVec v;
      for (const auto& [i, x] : a.unit)
        if (i != piv) v.emplace_back(slot(i), -x / u0);
      s.p.set_col(k, v);
    } else {
      s.p.set_col(k, unit_vec(slot(k)));
      s.l.set_col(slot(k), unit_vec(k));
    }
  }
  return s;
}

/** \brief Normalized mixed complex with the comparison maps P : C -> C-bar and lifts L. */
struct NormalizedMixed {
  MixedComplex mixed;
  std::vector<Matrix> P, L;
};

inline NormalizedMixed normalized_mixed(const CyclicModule& cm) {
  const Algebra& a = cm.algebra();
  BarSplitting s = bar_splitting(a);
  NormalizedMixed out;
  Matrix pw = Matrix::identity(1), lw = Matrix::identity(1);
  for (std::size_t n = 0; n <= cm.top(); ++n) {
    out.P.push_back(kron(Matrix::identity(a.dim), pw));
    out.L.push_back(kron(Matrix::identity(a.dim), lw));
    pw = kron(pw, s.p);
    lw = kron(lw, s.l);
  }
  for (std::size_t n = 0; n <= cm.top(); ++n) {
    Matrix bn = n == 0 ? Matrix(0, out.P[0].rows()) : out.P[n - 1] * cm.b(n) * out.L[n];
    out.mixed.hoch.push(out.P[n].rows(), bn);
  }
  for (std::size_t n = 0; n < cm.top(); ++n) out.mixed.B.push_back(out.P[n + 1] * cm.connes_B(n) * out.L[n]);
  return out;
}

/** \brief Total complex of the cyclic bicomplex (columns b, -b'; rows 1-t, N). */
struct CyclicBicomplex {
  ChainComplex tot;
  ChainComplex two;  // the first two columns
  std::vector<std::vector<std::size_t>> off;  // off[n][p] start of column p inside Tot_n

  Matrix column0(std::size_t n) const {
    return assemble(off[n].back(), off[n][1] - off[n][0], {{0, 0, Matrix::identity(off[n][1])}});
  }
  Matrix column0_two(std::size_t n) const { return assemble(two.dims[n], off[n][1], {{0, 0, Matrix::identity(off[n][1])}}); }

  /** Projection Tot_n -> Tot_{n-2} forgetting columns 0 and 1. */
  Matrix S(std::size_t n) const {
    std::vector<Block> bl;
    for (std::size_t p = 2; p <= n; ++p) {
      std::size_t w = off[n][p + 1] - off[n][p];
      bl.push_back({off[n - 2][p - 2], off[n][p], Matrix::identity(w)});
    }
    return assemble(off[n - 2].back(), off[n].back(), bl);
  }

  Matrix lift(std::size_t n) const { return S(n).transpose(); }

  Matrix restrict_two(std::size_t n) const {
    return assemble(two.dims[n], off[n].back(), {{0, 0, Matrix::identity(two.dims[n])}});
  }

  ChainMap tot_map(const ChainMap& f, const CyclicBicomplex& dst) const {
    ChainMap out;
    for (std::size_t n = 0; n < off.size(); ++n) {
      std::vector<Block> bl;
      for (std::size_t p = 0; p <= n; ++p) bl.push_back({dst.off[n][p], off[n][p], f[n - p]});
      out.push_back(assemble(dst.off[n].back(), off[n].back(), bl));
    }
    return out;
  }
};

inline CyclicBicomplex cyclic_bicomplex(const CyclicModule& cm) {
  CyclicBicomplex cb;
  const std::size_t N = cm.top();
  for (std::size_t n = 0; n <= N; ++n) {
    std::vector<std::size_t> o;
    std::size_t acc = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      o.push_back(acc);
      acc += cm.dim(n - p);
    }
    o.push_back(acc);
    cb.off.push_back(o);
  }
  auto vertical = [&](std::size_t p, std::size_t q) {
    return p % 2 ? cm.bprime(q) * Rational(-1) : cm.b(q);
  };
  auto horizontal = [&](std::size_t p, std::size_t q) {
    return p % 2 ? Matrix::identity(cm.dim(q)) - cm.t(q) : cm.norm(q);
  };
  for (std::size_t n = 0; n <= N; ++n) {
    const auto& o = cb.off[n];
    if (n == 0) {
      cb.tot.push(o.back(), Matrix(0, o.back()));
      cb.two.push(o[1], Matrix(0, o[1]));
      continue;
    }
    const auto& lo = cb.off[n - 1];
    std::vector<Block> bl, bl2;
    for (std::size_t p = 0; p <= n; ++p) {
      std::size_t q = n - p;
      if (q >= 1) bl.push_back({lo[p], o[p], vertical(p, q)});
      if (p >= 1) bl.push_back({lo[p - 1], o[p], horizontal(p, q)});
    }
    cb.tot.push(o.back(), assemble(lo.back(), o.back(), bl));
    std::size_t w = n >= 1 ? o[2] : o[1];
    std::size_t lw = lo.size() > 2 ? lo[2] : lo[1];
    bl2.push_back({0, 0, cm.b(n)});
    bl2.push_back({0, o[1], horizontal(1, n - 1)});
    if (n >= 2) bl2.push_back({lo[1], o[1], vertical(1, n - 1)});
    cb.two.push(w, assemble(lw, w, bl2));
  }
  return cb;
}

/** \brief C-tilde_n = C_n / (1 - t_n) with the descended b. */
struct QuotientComplex {
  ChainComplex cc;
  std::vector<Quotient> q;

  ChainMap map(const ChainMap& f, const QuotientComplex& dst, const std::string& what) const {
    ChainMap out;
    for (std::size_t n = 0; n < q.size(); ++n) out.push_back(descend(f[n], q[n], dst.q[n], what));
    return out;
  }
};

inline QuotientComplex ctilde(const CyclicModule& cm) {
  QuotientComplex out;
  for (std::size_t n = 0; n <= cm.top(); ++n) {
    out.q.emplace_back(Matrix::identity(cm.dim(n)) - cm.t(n));
    Matrix dn = n == 0 ? Matrix(0, out.q[0].dim())
                       : descend(cm.b(n), out.q[n], out.q[n - 1], "b on C-tilde_" + std::to_string(n));
    out.cc.push(out.q[n].dim(), dn);
  }
  return out;
}

/** Bicomplex total homology certifies through N-2. */
inline std::size_t certified_total(std::size_t N) { return N >= 2 ? N - 2 : 0; }
/** A single complex certifies through N-1. */
inline std::size_t certified_single(std::size_t N) { return N >= 1 ? N - 1 : 0; }

/** \brief The maps I, S, B of the periodicity sequence on chosen homology bases. */
struct SBIData {
  std::vector<Subquotient> hh, hc, two;
  std::vector<Matrix> I;  // I[n] : HH_n -> HC_n
  std::vector<Matrix> S;  // S[n] : HC_n -> HC_{n-2}, n >= 2
  std::vector<Matrix> B;  // B[n] : HC_{n-2} -> HH_{n-1}, n >= 2
};

inline SBIData sbi_data(const CyclicModule& cm, const CyclicBicomplex& cb, std::size_t m) {
  SBIData s;
  ChainComplex hoch = cm.hochschild();
  s.hh = hoch.homology_upto(m);
  s.hc = cb.tot.homology_upto(m);
  s.two = cb.two.homology_upto(m);
  for (std::size_t n = 0; n <= m; ++n) s.I.push_back(induced_on_subquotient(cb.column0(n), s.hh[n], s.hc[n]));
  s.S.resize(m + 1);
  s.B.resize(m + 1);
  for (std::size_t n = 2; n <= m; ++n) {
    s.S[n] = induced_on_subquotient(cb.S(n), s.hc[n], s.hc[n - 2]);
    Matrix conn = cb.restrict_two(n - 1) * cb.tot.d[n] * cb.lift(n);
    Matrix to_two = induced_on_subquotient(conn, s.hc[n - 2], s.two[n - 1]);
    Matrix j = induced_on_subquotient(cb.column0_two(n - 1), s.hh[n - 1], s.two[n - 1]);
    s.B[n] = inverse(j) * to_two;
  }
  return s;
}

}  // namespace cyclo
