#pragma once

// Dense rank-nullity oracle. Shares nothing with the library: its own matrices,
// its own elimination, and algebras built from their presentations.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;  // row-major

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Q>(c, Q(0))); }

inline std::size_t rank(Mat m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/** Columns of a and b side by side (same row count). */
inline Mat hcat(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  return out;
}

/** Structure constants: mul[i][j][k] is the e_k coefficient of e_i e_j. */
struct Alg {
  std::size_t d;
  std::vector<std::vector<std::vector<Q>>> mul;
};

/** Q[x]/(x^k) on 1, x, ..., x^{k-1}. */
inline Alg truncated_poly(std::size_t k) {
  Alg a{k, {}};
  a.mul.assign(k, std::vector<std::vector<Q>>(k, std::vector<Q>(k, Q(0))));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) a.mul[i][j][i + j] = 1;
  return a;
}

/** r x r matrices over Q on matrix units E_{ij} at index i*r+j. */
inline Alg matrices(std::size_t r) {
  Alg a{r * r, {}};
  a.mul.assign(a.d, std::vector<std::vector<Q>>(a.d, std::vector<Q>(a.d, Q(0))));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t l = 0; l < r; ++l) a.mul[i * r + j][j * r + l][i * r + l] = 1;
  return a;
}

inline std::size_t power(std::size_t b, std::size_t e) {
  std::size_t p = 1;
  while (e--) p *= b;
  return p;
}

inline std::vector<std::size_t> digits(std::size_t idx, std::size_t d, std::size_t len) {
  std::vector<std::size_t> w(len);
  for (std::size_t k = len; k-- > 0;) {
    w[k] = idx % d;
    idx /= d;
  }
  return w;
}

inline std::size_t undigits(const std::vector<std::size_t>& w, std::size_t d) {
  std::size_t idx = 0;
  for (auto x : w) idx = idx * d + x;
  return idx;
}

/** Hochschild b_n : A^{(x)n+1} -> A^{(x)n}, straight from the face formula. */
inline Mat hochschild_b(const Alg& a, std::size_t n) {
  std::size_t d = a.d, src = power(d, n + 1), dst = power(d, n);
  Mat b = zeros(dst, src);
  for (std::size_t c = 0; c < src; ++c) {
    auto w = digits(c, d, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      Q sign = i % 2 ? -1 : 1;
      std::size_t lo = i < n ? i : n, hi = i < n ? i + 1 : 0;
      for (std::size_t k = 0; k < d; ++k) {
        Q coef = a.mul[w[lo]][w[hi]][k];
        if (coef == 0) continue;
        std::vector<std::size_t> v;
        if (i < n) {
          for (std::size_t p = 0; p < i; ++p) v.push_back(w[p]);
          v.push_back(k);
          for (std::size_t p = i + 2; p <= n; ++p) v.push_back(w[p]);
        } else {
          v.push_back(k);
          for (std::size_t p = 1; p < n; ++p) v.push_back(w[p]);
        }
        b[undigits(v, d)][c] += sign * coef;
      }
    }
  }
  return b;
}

inline std::vector<std::size_t> hh_dims(const Alg& a, std::size_t top) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t rin = n ? rank(hochschild_b(a, n)) : 0;
    out.push_back(power(a.d, n + 1) - rin - rank(hochschild_b(a, n + 1)));
  }
  return out;
}

/** 1 - t_n with t(a0,...,an) = (-1)^n (an,a0,...,a_{n-1}). */
inline Mat one_minus_t(std::size_t d, std::size_t n) {
  std::size_t dim = power(d, n + 1);
  Mat m = zeros(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    auto w = digits(c, d, n + 1);
    std::vector<std::size_t> v{w[n]};
    v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(n));
    m[c][c] += 1;
    m[undigits(v, d)][c] -= n % 2 ? -1 : 1;
  }
  return m;
}

/** Cyclic homology through Connes' quotient C/(1-t), valid over Q. */
inline std::vector<std::size_t> hc_dims(const Alg& a, std::size_t top) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= top; ++n) {
    Mat rn = one_minus_t(a.d, n);
    std::size_t quot = power(a.d, n + 1) - rank(rn);
    std::size_t in = n ? rank(hcat(hochschild_b(a, n), one_minus_t(a.d, n - 1))) - rank(one_minus_t(a.d, n - 1)) : 0;
    std::size_t outgoing = rank(hcat(hochschild_b(a, n + 1), rn)) - rank(rn);
    out.push_back(quot - in - outgoing);
  }
  return out;
}

/** dim Omega^1 of a commutative algebra, as A (x) A modulo the image of b_2. */
inline std::size_t omega1_dim(const Alg& a) { return a.d * a.d - rank(hochschild_b(a, 2)); }

/** dim Lambda^2_A Omega^1 computed inside (A (x) A)^{(x)2}. */
inline std::size_t omega2_dim(const Alg& a) {
  std::size_t d = a.d, V = d * d, W = V * V;
  Mat b2 = hochschild_b(a, 2);
  std::vector<std::vector<Q>> rel;  // relation vectors in V (x) V
  auto tensor = [&](const std::vector<Q>& x, const std::vector<Q>& y) {
    std::vector<Q> t(W, Q(0));
    for (std::size_t i = 0; i < V; ++i)
      for (std::size_t j = 0; j < V; ++j) t[i * V + j] = x[i] * y[j];
    return t;
  };
  auto unit = [&](std::size_t i) {
    std::vector<Q> e(V, Q(0));
    e[i] = 1;
    return e;
  };
  auto act = [&](std::size_t s, const std::vector<Q>& v) {  // s . (a0 (x) a1) = s a0 (x) a1
    std::vector<Q> out(V, Q(0));
    for (std::size_t i = 0; i < V; ++i) {
      if (v[i] == 0) continue;
      std::size_t a0 = i / d, a1 = i % d;
      for (std::size_t k = 0; k < d; ++k) out[k * d + a1] += v[i] * a.mul[s][a0][k];
    }
    return out;
  };
  for (std::size_t c = 0; c < b2[0].size(); ++c) {
    std::vector<Q> col(V);
    for (std::size_t i = 0; i < V; ++i) col[i] = b2[i][c];
    for (std::size_t j = 0; j < V; ++j) {
      rel.push_back(tensor(col, unit(j)));
      rel.push_back(tensor(unit(j), col));
    }
  }
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t i = 0; i < V; ++i)
      for (std::size_t j = 0; j < V; ++j) {
        auto l = tensor(act(s, unit(i)), unit(j)), r = tensor(unit(i), act(s, unit(j)));
        for (std::size_t k = 0; k < W; ++k) l[k] -= r[k];
        rel.push_back(l);
      }
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t j = 0; j < V; ++j) {
      auto l = tensor(unit(i), unit(j)), r = tensor(unit(j), unit(i));
      for (std::size_t k = 0; k < W; ++k) l[k] += r[k];
      rel.push_back(l);
    }
  Mat m = zeros(W, rel.size());
  for (std::size_t c = 0; c < rel.size(); ++c)
    for (std::size_t k = 0; k < W; ++k) m[k][c] = rel[c][k];
  return W - rank(m);
}

/** HC_0(M_r(Q)) = M_r / [M_r, M_r] and the rank of the trace on it. */
inline std::pair<std::size_t, std::size_t> hc0_trace(std::size_t r) {
  Alg m = matrices(r);
  Mat comm = zeros(m.d, m.d * m.d);
  for (std::size_t i = 0; i < m.d; ++i)
    for (std::size_t j = 0; j < m.d; ++j)
      for (std::size_t k = 0; k < m.d; ++k) comm[k][i * m.d + j] = m.mul[i][j][k] - m.mul[j][i][k];
  std::size_t dim = m.d - rank(comm);
  Mat tr = zeros(1, m.d);
  for (std::size_t i = 0; i < r; ++i) tr[0][i * r + i] = 1;
  // the trace kills commutators, so its rank on the quotient is its rank on M_r
  return {dim, rank(tr)};
}

/** Solution space of linear conditions on 2x2 matrices given as a function of the entries. */
inline std::size_t solution_dim(std::size_t n, const std::function<Mat(const Mat&)>& cond) {
  std::size_t vars = n * n;
  std::vector<std::vector<Q>> eqs;
  for (std::size_t v = 0; v < vars; ++v) {
    Mat x = zeros(n, n);
    x[v / n][v % n] = 1;
    Mat c = cond(x);
    std::vector<Q> flat;
    for (const auto& row : c) flat.insert(flat.end(), row.begin(), row.end());
    eqs.push_back(flat);
  }
  Mat m = zeros(eqs[0].size(), vars);
  for (std::size_t v = 0; v < vars; ++v)
    for (std::size_t k = 0; k < eqs[v].size(); ++k) m[k][v] = eqs[v][k];
  return vars - rank(m);
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat c = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

/** dim of { x in M_2(Q) : x^t = -x }. */
inline std::size_t sk2_dim() {
  return solution_dim(2, [](const Mat& x) {
    Mat t = transpose(x);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) t[i][j] += x[i][j];
    return t;
  });
}

/** dim of { x in M_2(Q) : x^t J + J x = 0 } with J = [[0,1],[-1,0]]. */
inline std::size_t sp2_dim() {
  Mat J = {{Q(0), Q(1)}, {Q(-1), Q(0)}};
  return solution_dim(2, [J](const Mat& x) {
    Mat l = mat_mul(transpose(x), J), r = mat_mul(J, x);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) l[i][j] += r[i][j];
    return l;
  });
}

/** Dihedral homology of Q: C_n(Q) = Q, t = (-1)^n, v = (-1)^{n(n+1)/2}, b_n = [n even]. */
inline std::vector<std::size_t> hd_of_q(std::size_t top) {
  auto dn = [](std::size_t n) { return (n % 2 == 0 && ((n * (n + 1) / 2) % 2 == 0)) ? 1u : 0u; };
  auto bn = [&](std::size_t n) { return n >= 1 && n % 2 == 0 && dn(n) && dn(n - 1) ? 1u : 0u; };
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= top; ++n) out.push_back(dn(n) - bn(n) - bn(n + 1));
  return out;
}

}  // namespace oracle
