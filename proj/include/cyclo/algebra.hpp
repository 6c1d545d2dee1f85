#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "linalg.hpp"

namespace cyclo {

/** \brief Finite-dimensional unital associative algebra given by structure constants. */
struct Algebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = e_i e_j
  SparseVec unit;
  bool commutative = false;
  std::optional<Matrix> involution;  // column j = image of e_j

  SparseVec product(const SparseVec& a, const SparseVec& b) const {
    Accumulator acc(dim);
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) acc.add_scaled(mult[i][j], x * y);
    return acc.take();
  }

  /** Matrix of left multiplication by a. */
  Matrix left(const SparseVec& a) const {
    return Matrix::build(dim, dim, [&](std::size_t j, Accumulator& acc) {
      for (const auto& [i, x] : a) acc.add_scaled(mult[i][j], x);
    });
  }

  Matrix right(const SparseVec& a) const {
    return Matrix::build(dim, dim, [&](std::size_t j, Accumulator& acc) {
      for (const auto& [i, x] : a) acc.add_scaled(mult[j][i], x);
    });
  }

  /** Multiplication A (x) A -> A on the lexicographic basis e_i (x) e_j. */
  Matrix mult_matrix() const {
    return Matrix::build(dim, dim * dim, [&](std::size_t w, Accumulator& acc) {
      acc.add_scaled(mult[w / dim][w % dim], Rational(1));
    });
  }

  /** First basis coordinate with nonzero unit coefficient. */
  Index unit_pivot() const { return unit.front().first; }
};

/** \brief Finite-dimensional coalgebra; comult[i] lives on the basis x_j (x) x_k, index j*dim+k. */
struct Coalgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> comult;
  std::vector<Rational> counit;
  bool cocommutative = false;
};

struct Measuring {
  std::string name;
  std::shared_ptr<const Coalgebra> coalgebra;
  std::shared_ptr<const Algebra> source;
  std::shared_ptr<const Algebra> target;
  std::vector<Matrix> phi;  // phi[x] : source -> target

  const Coalgebra& C() const { return *coalgebra; }
  const Algebra& A() const { return *source; }
  const Algebra& B() const { return *target; }

  Matrix at(const SparseVec& x) const {
    Matrix out(target->dim, source->dim);
    for (const auto& [k, c] : x) out = out + phi[k] * c;
    return out;
  }
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(const std::string& s) { failures.push_back(s); }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& f : failures) os << f << "\n";
    return os.str();
  }
};

inline std::string vec_str(const SparseVec& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].first << ":" << v[k].second.get_str();
  os << "}";
  return os.str();
}

inline ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  const std::size_t d = a.dim;
  auto where = [&](const std::string& s) { return "algebra " + a.name + ": " + s; };
  if (a.labels.size() != d) rep.fail(where("label count differs from dim"));
  if (a.mult.size() != d) {
    rep.fail(where("multiplication table has wrong size"));
    return rep;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (a.mult[i].size() != d) {
      rep.fail(where("multiplication row " + std::to_string(i) + " has wrong size"));
      return rep;
    }
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& e : a.mult[i][j])
        if (e.first >= d) {
          rep.fail(where("product index out of range"));
          return rep;
        }
  }
  if (a.unit.empty()) {
    rep.fail(where("unit is zero"));
    return rep;
  }
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        SparseVec l = a.product(a.mult[i][j], unit_vec(k));
        SparseVec r = a.product(unit_vec(i), a.mult[j][k]);
        if (l != r)
          rep.fail(where("associativity fails at (" + a.labels[i] + "," + a.labels[j] + "," + a.labels[k] +
                         "): " + vec_str(l) + " vs " + vec_str(r)));
      }
  for (Index i = 0; i < d; ++i) {
    if (a.product(a.unit, unit_vec(i)) != unit_vec(i)) rep.fail(where("unit fails on the left at " + a.labels[i]));
    if (a.product(unit_vec(i), a.unit) != unit_vec(i)) rep.fail(where("unit fails on the right at " + a.labels[i]));
  }
  if (a.commutative)
    for (Index i = 0; i < d; ++i)
      for (Index j = i + 1; j < d; ++j)
        if (a.mult[i][j] != a.mult[j][i])
          rep.fail(where("flagged commutative but " + a.labels[i] + "*" + a.labels[j] + " differs"));
  if (a.involution) {
    const Matrix& s = *a.involution;
    if (s.rows() != d || s.cols() != d) {
      rep.fail(where("involution has wrong shape"));
      return rep;
    }
    if (!(s * s == Matrix::identity(d))) rep.fail(where("involution does not square to the identity"));
    if (s.apply(a.unit) != a.unit) rep.fail(where("involution does not fix the unit"));
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        SparseVec l = s.apply(a.mult[i][j]);
        SparseVec r = a.product(s.col(j), s.col(i));
        if (l != r)
          rep.fail(where("involution not anti-multiplicative at (" + a.labels[i] + "," + a.labels[j] + ")"));
      }
  }
  return rep;
}

/** \brief Delta^{p-1}(x) on the lexicographic basis of C^{(x)p}; the last factor is split repeatedly. */
inline SparseVec iterated_coproduct(const Coalgebra& c, const SparseVec& x, std::size_t p) {
  if (p == 0) throw Error("iterated_coproduct needs p >= 1");
  SparseVec cur = x;
  for (std::size_t len = 1; len < p; ++len) {
    Accumulator acc(ipow(c.dim, len + 1));
    for (const auto& [w, coef] : cur) {
      Index last = static_cast<Index>(w % c.dim);
      std::size_t head = w / c.dim;
      for (const auto& [jk, v] : c.comult[last]) acc.add(static_cast<Index>(head * c.dim * c.dim + jk), coef * v);
    }
    cur = acc.take();
  }
  return cur;
}

/** Coproduct applied to factor pos of an element of C^{(x)len}. */
inline SparseVec split_factor(const Coalgebra& c, const SparseVec& t, std::size_t len, std::size_t pos) {
  Accumulator acc(ipow(c.dim, len + 1));
  for (const auto& [w, coef] : t) {
    Word word = decode(w, c.dim, len);
    for (const auto& [jk, v] : c.comult[word[pos]]) {
      Word nw(word.begin(), word.begin() + static_cast<long>(pos));
      nw.push_back(static_cast<Index>(jk / c.dim));
      nw.push_back(static_cast<Index>(jk % c.dim));
      nw.insert(nw.end(), word.begin() + static_cast<long>(pos) + 1, word.end());
      acc.add(encode(nw, c.dim), coef * v);
    }
  }
  return acc.take();
}

inline ValidationReport validate_coalgebra(const Coalgebra& c) {
  ValidationReport rep;
  auto where = [&](const std::string& s) { return "coalgebra " + c.name + ": " + s; };
  const std::size_t n = c.dim;
  if (c.comult.size() != n || c.counit.size() != n || c.labels.size() != n) {
    rep.fail(where("table sizes differ from dim"));
    return rep;
  }
  for (const auto& v : c.comult)
    for (const auto& e : v)
      if (e.first >= n * n) {
        rep.fail(where("coproduct index out of range"));
        return rep;
      }
  for (Index i = 0; i < n; ++i) {
    SparseVec delta = unit_vec(i);
    SparseVec d1 = split_factor(c, c.comult[i], 2, 0);
    SparseVec d2 = split_factor(c, c.comult[i], 2, 1);
    if (d1 != d2) rep.fail(where("coassociativity fails at " + c.labels[i]));
    Accumulator l(n), r(n);
    for (const auto& [jk, v] : c.comult[i]) {
      l.add(static_cast<Index>(jk % n), c.counit[jk / n] * v);
      r.add(static_cast<Index>(jk / n), c.counit[jk % n] * v);
    }
    if (l.take() != delta) rep.fail(where("left counit law fails at " + c.labels[i]));
    if (r.take() != delta) rep.fail(where("right counit law fails at " + c.labels[i]));
    if (c.cocommutative) {
      Accumulator sw(n * n);
      for (const auto& [jk, v] : c.comult[i]) sw.add(static_cast<Index>((jk % n) * n + jk / n), v);
      SparseVec swapped = sw.take();
      if (swapped != c.comult[i]) {
        SparseVec diff = axpy(swapped, Rational(-1), c.comult[i]);
        Index w = diff.front().first;
        rep.fail(where("flagged cocommutative but tau Delta(" + c.labels[i] + ") != Delta(" + c.labels[i] +
                       ") at " + c.labels[w / n] + "(x)" + c.labels[w % n]));
      }
    }
  }
  return rep;
}

/** Sum over Delta^{p-1}(x) of phi(x_1) (x) ... (x) phi(x_p); p = 0 gives the counit as a 1x1 matrix. */
inline Matrix tensor_power(const Coalgebra& c, const std::vector<Matrix>& phi, const SparseVec& x, std::size_t p) {
  if (p == 0) {
    Rational e(0);
    for (const auto& [k, v] : x) e += c.counit[k] * v;
    return Matrix::scalar(1, e);
  }
  Matrix out(ipow(phi.front().rows(), p), ipow(phi.front().cols(), p));
  for (const auto& [w, coef] : iterated_coproduct(c, x, p)) {
    Word word = decode(w, c.dim, p);
    std::vector<Matrix> fs;
    fs.reserve(p);
    for (Index k : word) fs.push_back(phi[k]);
    out = out + kron(fs) * coef;
  }
  return out;
}

/** Same sum evaluated on one basis word only. */
template <class F>
void tensor_power_on_word(const Coalgebra& c, const std::vector<Matrix>& phi, const SparseVec& x, const Word& w, F&& visit) {
  if (w.empty()) {
    Rational e(0);
    for (const auto& [k, v] : x) e += c.counit[k] * v;
    if (sgn(e) != 0) visit(Word{}, e);
    return;
  }
  for (const auto& [cw, coef] : iterated_coproduct(c, x, w.size())) {
    Word xs = decode(cw, c.dim, w.size());
    std::vector<SparseVec> factors;
    for (std::size_t k = 0; k < w.size(); ++k) factors.push_back(phi[xs[k]].col(w[k]));
    for_each_product(factors, [&](const Word& out, const Rational& v) { visit(out, coef * v); });
  }
}

inline Matrix apply_measuring_tensor(const Measuring& m, const SparseVec& x, std::size_t p) {
  return tensor_power(m.C(), m.phi, x, p);
}

inline ValidationReport validate_measuring(const Measuring& m) {
  ValidationReport rep;
  auto where = [&](const std::string& s) { return "measuring " + m.name + ": " + s; };
  const Coalgebra& c = m.C();
  const Algebra& a = m.A();
  const Algebra& b = m.B();
  if (m.phi.size() != c.dim) {
    rep.fail(where("phi has wrong number of components"));
    return rep;
  }
  for (const auto& f : m.phi)
    if (f.rows() != b.dim || f.cols() != a.dim) {
      rep.fail(where("phi component has wrong shape"));
      return rep;
    }
  Matrix mu_a = a.mult_matrix();
  Matrix mu_b = b.mult_matrix();
  for (Index x = 0; x < c.dim; ++x) {
    Matrix lhs = m.phi[x] * mu_a;
    Matrix rhs = mu_b * apply_measuring_tensor(m, unit_vec(x), 2);
    if (auto mm = first_mismatch(lhs, rhs)) {
      rep.fail(where("Phi(" + c.labels[x] + ")(" + a.labels[mm->col / a.dim] + "*" + a.labels[mm->col % a.dim] +
                     ") differs from the Sweedler sum at coordinate " + b.labels[mm->row] + ": " +
                     mm->lhs.get_str() + " vs " + mm->rhs.get_str()));
    }
    SparseVec u = m.phi[x].apply(a.unit);
    SparseVec want = scaled(b.unit, c.counit[x]);
    if (u != want) rep.fail(where("Phi(" + c.labels[x] + ")(1) != counit * 1"));
    if (a.involution && b.involution) {
      Matrix l = m.phi[x] * *a.involution;
      Matrix r = *b.involution * m.phi[x];
      if (auto mm = first_mismatch(l, r))
        rep.fail(where("not compatible with the involutions at Phi(" + c.labels[x] + ") on " + a.labels[mm->col] +
                       ", coordinate " + b.labels[mm->row] + ": " + mm->lhs.get_str() + " vs " +
                       mm->rhs.get_str()));
    }
  }
  return rep;
}

inline void require_cocommutative(const Measuring& m) {
  if (!m.C().cocommutative) throw NotCocommutative("measuring " + m.name + " uses a coalgebra not flagged cocommutative");
}

/** \brief M_r(A) on the basis E_ij (x) e_k, index (i*r + j)*d + k. */
inline Algebra matrix_algebra(const Algebra& a, std::size_t r) {
  Algebra m;
  const std::size_t d = a.dim;
  m.name = "M" + std::to_string(r) + "(" + a.name + ")";
  m.dim = r * r * d;
  auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return static_cast<Index>((i * r + j) * d + k); };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < d; ++k)
        m.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "." + a.labels[k]);
  m.mult.assign(m.dim, std::vector<SparseVec>(m.dim));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < r; ++l)
          for (std::size_t k2 = 0; k2 < d; ++k2) {
            SparseVec v;
            for (const auto& [e, x] : a.mult[k][k2]) v.emplace_back(idx(i, l, e), x);
            m.mult[idx(i, j, k)][idx(j, l, k2)] = v;
          }
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& [e, x] : a.unit) m.unit.emplace_back(idx(i, i, e), x);
  std::sort(m.unit.begin(), m.unit.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  m.commutative = a.commutative && r == 1;
  if (a.involution) {
    Matrix s(m.dim, m.dim);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          SparseVec v;
          for (const auto& [e, x] : a.involution->col(k)) v.emplace_back(idx(j, i, e), x);
          s.set_col(idx(i, j, k), v);
        }
    m.involution = s;
  }
  return m;
}

/** Entrywise measuring M_r(A) -> M_r(A'). */
inline Measuring matrix_measuring(const Measuring& m, std::size_t r) {
  Measuring out;
  out.name = m.name + "@M" + std::to_string(r);
  out.coalgebra = m.coalgebra;
  out.source = std::make_shared<Algebra>(matrix_algebra(m.A(), r));
  out.target = std::make_shared<Algebra>(matrix_algebra(m.B(), r));
  for (const auto& f : m.phi) out.phi.push_back(kron(Matrix::identity(r * r), f));
  return out;
}

}  // namespace cyclo
