#pragma once

#include <algorithm>
#include <map>

#include "algebra.hpp"
#include "lie.hpp"

namespace cyclo {

/** Sparse chain in C_n keyed by words, for degrees too large for matrices. */
using WordVec = std::map<Word, Rational>;

inline void add_to(WordVec& v, const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = v.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

inline void add_to(WordVec& v, const WordVec& u, const Rational& c = Rational(1)) {
  for (const auto& [w, x] : u) add_to(v, w, x * c);
}

/**
 * Coordinates in C-tilde_n = C_n / (1 - t): each word is replaced by its
 * least rotation, with the sign picked up from t, and dropped when its
 * rotation orbit cancels.
 */
inline void add_canonical(WordVec& out, const Word& w, const Rational& c) {
  const std::size_t len = w.size();
  const int s = len % 2 ? 1 : -1;  // sign of t on C_{len-1}
  Word best = w, r = w;
  int best_sign = 1, sign = 1;
  for (std::size_t k = 1; k < len; ++k) {
    std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());
    sign *= s;
    if (r == w) {
      if (sign < 0) return;
      break;
    }
    if (r < best) {
      best = r;
      best_sign = sign;
    }
  }
  add_to(out, best, best_sign > 0 ? c : -c);
}

inline WordVec canonical(const WordVec& v) {
  WordVec out;
  for (const auto& [w, c] : v) add_canonical(out, w, c);
  return out;
}

/** Hochschild boundary of a single word. */
inline WordVec hochschild_b(const Algebra& a, const Word& w) {
  WordVec out;
  const std::size_t n = w.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    const SparseVec& prod = i < n ? a.mult[w[i]][w[i + 1]] : a.mult[w[n]][w[0]];
    Rational s(i % 2 ? -1 : 1);
    for (const auto& [e, c] : prod) {
      Word u;
      if (i < n) {
        u.assign(w.begin(), w.begin() + i);
        u.push_back(e);
        u.insert(u.end(), w.begin() + i + 2, w.end());
      } else {
        u.push_back(e);
        u.insert(u.end(), w.begin() + 1, w.begin() + n);
      }
      add_to(out, u, s * c);
    }
  }
  return out;
}

inline WordVec hochschild_b(const Algebra& a, const WordVec& v) {
  WordVec out;
  for (const auto& [w, c] : v) add_to(out, hochschild_b(a, w), c);
  return out;
}

/** phi(x) applied factorwise to a chain. */
inline WordVec measure(const Measuring& m, const SparseVec& x, const WordVec& v) {
  WordVec out;
  for (const auto& [w, c] : v)
    tensor_power_on_word(m.C(), m.phi, x, w, [&](const Word& u, const Rational& y) { add_to(out, u, c * y); });
  return out;
}

/** theta of a wedge element, as a chain of words over gl_r(A). */
inline WordVec theta_words(const Word& w) {
  WordVec out;
  const std::size_t n = w.size() - 1;
  for (const Perm& s : all_perms(n)) {
    Word u(n + 1);
    u[0] = w[0];
    for (std::size_t k = 0; k < n; ++k) u[1 + k] = w[1 + s[k]];
    add_to(out, u, Rational(perm_sign(s)));
  }
  return out;
}

inline WordVec theta_words(const CEComplex& ce, std::size_t n, const SparseVec& v) {
  WordVec out;
  for (const auto& [j, c] : v) add_to(out, theta_words(ce.wedge[n + 1].word(j)), c);
  return out;
}

/** Generalized trace from words over M_r(A) to words over A. */
inline WordVec trace_words(std::size_t d, std::size_t r, const WordVec& v) {
  WordVec out;
  for (const auto& [w, c] : v) {
    const std::size_t n = w.size() - 1;
    Word u(n + 1);
    bool ok = true;
    for (std::size_t k = 0; k <= n && ok; ++k) {
      std::size_t e = w[k] / d, next = w[(k + 1) % (n + 1)] / d;
      ok = e % r == next / r;
      u[k] = static_cast<Index>(w[k] % d);
    }
    if (ok) add_to(out, u, c);
  }
  return out;
}

inline SparseVec to_sparse(const WordVec& v, std::size_t d, std::size_t len) {
  Accumulator acc(ipow(d, len));
  for (const auto& [w, c] : v) acc.add(encode(w, d), c);
  return acc.take();
}

/** One representative word for every nonzero class of C-tilde_n over d letters. */
inline std::vector<Word> cyclic_classes(std::size_t d, std::size_t n) {
  std::vector<Word> out;
  const std::size_t total = ipow(d, n + 1);
  for (std::size_t k = 0; k < total; ++k) {
    Word w = decode(k, d, n + 1);
    WordVec c;
    add_canonical(c, w, Rational(1));
    if (c.size() == 1 && c.begin()->first == w) out.push_back(w);
  }
  return out;
}

/** t applied to a single word. */
inline WordVec cyclic_t(const Word& w) {
  Word r = w;
  std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());
  return {{r, Rational(w.size() % 2 ? 1 : -1)}};
}

/** Matrix whose column j is the word chain col(j), rows indexed by words of length len. */
template <class F>
Matrix word_columns(std::size_t d, std::size_t len, std::size_t cols, F&& col) {
  return Matrix::build(ipow(d, len), cols, [&](std::size_t j, Accumulator& acc) {
    for (const auto& [w, c] : col(j)) acc.add(encode(w, d), c);
  });
}

}  // namespace cyclo
