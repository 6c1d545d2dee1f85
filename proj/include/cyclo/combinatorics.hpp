#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace cyclo {

using Word = std::vector<Index>;
using Perm = std::vector<Index>;

inline std::size_t checked_pow(std::size_t d, std::size_t k, std::size_t cap, const std::string& what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= d;
    if (out > cap) throw TruncationTooLarge(what, out, cap);
  }
  return out;
}

inline std::size_t ipow(std::size_t d, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= d;
  return out;
}

/** \brief Lexicographic index of a word over an alphabet of size d. */
inline Index encode(const Word& w, std::size_t d) {
  std::size_t idx = 0;
  for (Index a : w) idx = idx * d + a;
  return static_cast<Index>(idx);
}

inline Word decode(std::size_t idx, std::size_t d, std::size_t len) {
  Word w(len);
  for (std::size_t k = len; k-- > 0;) {
    w[k] = static_cast<Index>(idx % d);
    idx /= d;
  }
  return w;
}

inline int perm_sign(const Perm& p) {
  int s = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Index>(i);
  return q;
}

/** All permutations of {0..n-1} in lexicographic order. */
inline std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/**
 * (p,q)-shuffles as permutations of {0..p+q-1} with sigma increasing on the
 * first p and on the last q points, in lexicographic order of the images of
 * the first block.
 */
inline std::vector<Perm> shuffles(std::size_t p, std::size_t q) {
  std::vector<Perm> out;
  std::size_t n = p + q;
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(p), 1);
  do {
    Perm s(n);
    Index a = 0, b = static_cast<Index>(p);
    for (std::size_t pos = 0; pos < n; ++pos) s[pick[pos] ? a++ : b++] = static_cast<Index>(pos);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/** \brief Basis of the n-th exterior power: strictly increasing index tuples. */
class WedgeBasis {
 public:
  WedgeBasis(std::size_t d, std::size_t n) : d_(d), n_(n) {
    Word w;
    rec(0, w);
    for (std::size_t k = 0; k < words_.size(); ++k) index_.emplace(words_[k], static_cast<Index>(k));
  }

  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t k) const { return words_[k]; }

  /** Sorts an arbitrary word; returns false when it has a repeated letter. */
  bool lookup(const Word& w, Index& idx, int& sign) const {
    Word s = w;
    sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
      for (std::size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
        if (s[j - 1] == s[j]) return false;
        std::swap(s[j - 1], s[j]);
        sign = -sign;
      }
    idx = index_.at(s);
    return true;
  }

 private:
  void rec(Index from, Word& w) {
    if (w.size() == n_) {
      words_.push_back(w);
      return;
    }
    for (Index a = from; a < d_; ++a) {
      w.push_back(a);
      rec(a + 1, w);
      w.pop_back();
    }
  }

  std::size_t d_, n_;
  std::vector<Word> words_;
  std::map<Word, Index> index_;
};

/** \brief Multilinear expansion helper: tensor of sparse factor vectors. */
template <class F>
void for_each_product(const std::vector<SparseVec>& factors, F&& visit) {
  std::size_t n = factors.size();
  for (const auto& f : factors)
    if (f.empty()) return;
  std::vector<std::size_t> pos(n, 0);
  Word w(n);
  while (true) {
    Rational c(1);
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = factors[k][pos[k]].first;
      c *= factors[k][pos[k]].second;
    }
    visit(w, c);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < factors[k].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace cyclo
