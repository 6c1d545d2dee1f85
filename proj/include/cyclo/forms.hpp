#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lambda.hpp"

namespace cyclo {

/** \brief Omega^1 = I / I^2 with I the kernel of multiplication A (x) A -> A. */
struct Kahler {
  std::shared_ptr<const Algebra> a;
  Subquotient sq;
  Matrix d;                 // A -> Omega^1
  std::vector<Matrix> act;  // act[k] = e_k acting on Omega^1

  std::size_t dim() const { return sq.dim(); }
};

inline Kahler kahler_omega1(std::shared_ptr<const Algebra> ap) {
  const Algebra& a = *ap;
  require_commutative(a);
  const std::size_t d = a.dim;
  Matrix mu = a.mult_matrix();
  Matrix I = kernel_basis(mu);
  auto prod = [&](const SparseVec& u, const SparseVec& v) {
    Accumulator acc(d * d);
    for (const auto& [w1, x] : u)
      for (const auto& [w2, y] : v)
        for (const auto& [l, s] : a.mult[w1 / d][w2 / d])
          for (const auto& [r, t] : a.mult[w1 % d][w2 % d]) acc.add(static_cast<Index>(l * d + r), x * y * s * t);
    return acc.take();
  };
  Matrix I2(d * d, 0);
  for (std::size_t i = 0; i < I.cols(); ++i)
    for (std::size_t j = 0; j < I.cols(); ++j) I2.append_col(prod(I.col(i), I.col(j)));
  Kahler k{ap, Subquotient(mu, I2), Matrix(), {}};
  Matrix one_tensor = Matrix::build(d * d, d, [&](std::size_t c, Accumulator& acc) {
    for (const auto& [u, x] : a.unit) {
      acc.add(static_cast<Index>(c * d + u), x);
      acc.add(static_cast<Index>(u * d + c), -x);
    }
  });
  k.d = k.sq.coords(one_tensor, "universal derivation");
  for (Index e = 0; e < d; ++e) {
    Matrix left = Matrix::build(d * d, d * d, [&](std::size_t w, Accumulator& acc) {
      for (const auto& [c, x] : a.mult[e][w / d]) acc.add(static_cast<Index>(c * d + w % d), x);
    });
    k.act.push_back(k.sq.coords(left * k.sq.reps(), "A-action on Omega^1"));
  }
  return k;
}

/** \brief Omega^p as a quotient of (Omega^1)^{(x)p} by balancing and alternation. */
struct Forms {
  Kahler k;
  std::vector<Quotient> q;     // q[p] on (Omega^1)^{(x)p}; q[0] on A
  std::vector<Matrix> pi;      // pi[p] : C_p(A) -> Omega^p
  std::vector<Matrix> sect;    // sect[p] : Omega^p -> C_p(A), pi o sect = id
  std::vector<Matrix> ker_pi;  // columns span ker pi[p]
  std::vector<Matrix> alt;     // alt[p] : antisymmetrization on C_p(A)
  std::vector<Matrix> eps;     // eps[p] = alt[p] o sect[p]
  std::vector<Matrix> d;       // d[p] : Omega^p -> Omega^{p+1}, p < top

  std::size_t top() const { return q.size() - 1; }
  std::size_t dim(std::size_t p) const { return q[p].dim(); }
};

/** Antisymmetrization over the last p slots of C_p(A). */
inline Matrix antisymmetrizer(std::size_t d, std::size_t p) {
  auto perms = all_perms(p);
  return Matrix::build(ipow(d, p + 1), ipow(d, p + 1), [&](std::size_t col, Accumulator& acc) {
    Word w = decode(col, d, p + 1);
    for (const Perm& s : perms) {
      Word out(p + 1);
      out[0] = w[0];
      for (std::size_t k = 0; k < p; ++k) out[1 + s[k]] = w[1 + k];
      acc.add(encode(out, d), Rational(perm_sign(s)));
    }
  });
}

inline Forms omega_forms(std::shared_ptr<const Algebra> ap, std::size_t top) {
  const Algebra& a = *ap;
  Forms f{kahler_omega1(ap), {}, {}, {}, {}, {}, {}, {}};
  const std::size_t d = a.dim, m = f.k.dim();
  for (std::size_t p = 0; p <= top; ++p) {
    std::size_t amb = p == 0 ? d : ipow(m, p);
    Matrix rel(amb, 0);
    for (std::size_t j = 0; p >= 2 && j + 1 < p; ++j) {
      Matrix pre = Matrix::identity(ipow(m, j)), post = Matrix::identity(ipow(m, p - j - 2));
      for (Index e = 0; e < d; ++e) {
        Matrix bal = kron({pre, kron(f.k.act[e], Matrix::identity(m)), post}) -
                     kron({pre, kron(Matrix::identity(m), f.k.act[e]), post});
        for (std::size_t c = 0; c < bal.cols(); ++c)
          if (!bal.col(c).empty()) rel.append_col(bal.col(c));
      }
      for (std::size_t c = 0; c < amb; ++c) {
        Word w = decode(c, m, p);
        std::swap(w[j], w[j + 1]);
        rel.append_col(axpy(unit_vec(static_cast<Index>(c)), Rational(1), unit_vec(encode(w, m))));
      }
    }
    f.q.emplace_back(rel);
    Matrix raw = Matrix::build(amb, ipow(d, p + 1), [&](std::size_t col, Accumulator& acc) {
      Word w = decode(col, d, p + 1);
      if (p == 0) {
        acc.add(w[0], Rational(1));
        return;
      }
      std::vector<SparseVec> factors;
      for (std::size_t k = 1; k <= p; ++k) factors.push_back(f.k.d.col(w[k]));
      factors[0] = f.k.act[w[0]].apply(factors[0]);
      add_tensor(acc, factors, m, Rational(1));
    });
    f.pi.push_back(f.q[p].projection() * raw);
    ColumnSolver solver(f.pi[p]);
    Matrix s(ipow(d, p + 1), f.q[p].dim());
    for (std::size_t k = 0; k < f.q[p].dim(); ++k) {
      auto c = solver.solve(unit_vec(static_cast<Index>(k)));
      if (!c) throw Error("pi_" + std::to_string(p) + " is not surjective");
      s.set_col(k, *c);
    }
    f.sect.push_back(s);
    f.ker_pi.push_back(kernel_basis(f.pi[p]));
    f.alt.push_back(antisymmetrizer(d, p));
    f.eps.push_back(f.alt[p] * s);
  }
  for (std::size_t p = 0; p < top; ++p) {
    Matrix ins = Matrix::build(ipow(d, p + 2), ipow(d, p + 1), [&](std::size_t col, Accumulator& acc) {
      for (const auto& [u, x] : a.unit) acc.add(static_cast<Index>(u * ipow(d, p + 1) + col), x);
    });
    Matrix lifted = f.pi[p + 1] * ins;
    if (!(lifted * f.ker_pi[p]).is_zero()) throw RelationNotPreserved("de Rham d on Omega^" + std::to_string(p));
    f.d.push_back(lifted * f.sect[p]);
  }
  return f;
}

/** x acting on Omega^p through generators; throws when a relation is not preserved. */
inline Matrix measuring_on_omega(const Forms& src, const Forms& dst, const Matrix& cphi, std::size_t p) {
  Matrix img = dst.pi[p] * cphi;
  if (!(img * src.ker_pi[p]).is_zero()) throw RelationNotPreserved("measuring on Omega^" + std::to_string(p));
  return img * src.sect[p];
}

/** de Rham cohomology in degree p. */
inline Subquotient de_rham(const Forms& f, std::size_t p) {
  Matrix out = p < f.top() ? f.d[p] : Matrix(0, f.dim(p));
  Matrix in = p == 0 ? Matrix(f.dim(0), 0) : f.d[p - 1];
  if (p >= f.top()) throw Error("de Rham degree beyond the built forms");
  return Subquotient(out, in);
}

/** Mixed complex (Omega, 0, d). */
inline MixedComplex forms_mixed(const Forms& f) {
  MixedComplex mc;
  for (std::size_t p = 0; p <= f.top(); ++p) mc.hoch.push(f.dim(p), Matrix(p == 0 ? 0 : f.dim(p - 1), f.dim(p)));
  mc.B = f.d;
  return mc;
}

/** pi-bar_n = pi_n / n! on the normalized complex. */
inline Matrix pibar(const Forms& f, const NormalizedMixed& nm, std::size_t n) {
  mpz_class fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
  return f.pi[n] * nm.L[n] * Rational(mpz_class(1), fact);
}

/** \brief E_n(A) = A (x) Lambda^n A; the differential carries an overall minus sign so that eps is a chain map. */
struct LieComplexE {
  std::shared_ptr<const Algebra> a;
  std::vector<WedgeBasis> wedge;
  ChainComplex cc;
  std::vector<Matrix> eps;   // E_n -> C_n
  std::vector<Matrix> pick;  // E_n -> C_n, a0 (x) e_w -> (a0, w) with w increasing
  std::vector<Matrix> proj;  // C_n -> E_n, wedge projection

  ChainMap map(const ChainMap& cphi, const LieComplexE& dst) const {
    ChainMap out;
    for (std::size_t n = 0; n <= cc.top(); ++n) out.push_back(dst.proj[n] * cphi[n] * pick[n]);
    return out;
  }
};

inline LieComplexE lie_complex_E(std::shared_ptr<const Algebra> ap, std::size_t N) {
  const Algebra& a = *ap;
  const std::size_t d = a.dim;
  LieComplexE e{ap, {}, {}, {}, {}, {}};
  for (std::size_t n = 0; n <= N; ++n) e.wedge.emplace_back(d, n);
  auto bracket = [&](Index x, Index y) { return axpy(a.mult[x][y], Rational(-1), a.mult[y][x]); };
  for (std::size_t n = 0; n <= N; ++n) {
    const WedgeBasis& wb = e.wedge[n];
    std::size_t dim = d * wb.size();
    if (n == 0) {
      e.cc.push(dim, Matrix(0, dim));
    } else {
      const WedgeBasis& lo = e.wedge[n - 1];
      e.cc.push(dim, Matrix::build(d * lo.size(), dim, [&](std::size_t col, Accumulator& acc) {
        Index a0 = static_cast<Index>(col / wb.size());
        const Word& w = wb.word(col % wb.size());
        for (std::size_t i = 0; i < n; ++i) {
          Word rest = w;
          rest.erase(rest.begin() + static_cast<long>(i));
          Index idx;
          int s;
          if (!lo.lookup(rest, idx, s)) continue;
          Rational sign((i + 1) % 2 ? s : -s);
          for (const auto& [c, x] : bracket(a0, w[i])) acc.add(static_cast<Index>(c * lo.size() + idx), sign * x);
        }
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            Word rest;
            for (std::size_t k = 0; k < n; ++k)
              if (k != i && k != j) rest.push_back(w[k]);
            Rational sign((i + j) % 2 ? -1 : 1);
            for (const auto& [c, x] : bracket(w[i], w[j])) {
              Word full{static_cast<Index>(c)};
              full.insert(full.end(), rest.begin(), rest.end());
              Index idx;
              int s;
              if (!lo.lookup(full, idx, s)) continue;
              acc.add(static_cast<Index>(a0 * lo.size() + idx), sign * x * s);
            }
          }
      }));
    }
    Matrix pick = Matrix::build(ipow(d, n + 1), dim, [&](std::size_t col, Accumulator& acc) {
      Word full{static_cast<Index>(col / wb.size())};
      const Word& w = wb.word(col % wb.size());
      full.insert(full.end(), w.begin(), w.end());
      acc.add(encode(full, d), Rational(1));
    });
    e.pick.push_back(pick);
    e.eps.push_back(antisymmetrizer(d, n) * pick);
    e.proj.push_back(Matrix::build(dim, ipow(d, n + 1), [&](std::size_t col, Accumulator& acc) {
      Word full = decode(col, d, n + 1);
      Word w(full.begin() + 1, full.end());
      Index idx;
      int s;
      if (wb.lookup(w, idx, s)) acc.add(static_cast<Index>(full[0] * wb.size() + idx), Rational(s));
    }));
  }
  return e;
}

}  // namespace cyclo
