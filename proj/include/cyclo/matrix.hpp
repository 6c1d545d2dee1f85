#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cyclo {

using Index = std::uint32_t;
using SparseVec = std::vector<std::pair<Index, Rational>>;

/** \brief Dense scratch vector that remembers which slots were touched. */
class Accumulator {
 public:
  explicit Accumulator(std::size_t n = 0) { resize(n); }

  void resize(std::size_t n) {
    if (n > v_.size()) {
      v_.resize(n);
      mark_.resize(n, 0);
    }
  }

  void add(Index i, const Rational& x) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    v_[i] += x;
  }

  void add_scaled(const SparseVec& v, const Rational& c) {
    for (const auto& [i, x] : v) add(i, c * x);
  }

  SparseVec take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    out.reserve(touched_.size());
    for (Index i : touched_) {
      if (sgn(v_[i]) != 0) out.emplace_back(i, v_[i]);
      v_[i] = 0;
      mark_[i] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Rational> v_;
  std::vector<char> mark_;
  std::vector<Index> touched_;
};

inline SparseVec unit_vec(Index i) { return SparseVec{{i, Rational(1)}}; }

inline SparseVec scaled(const SparseVec& v, const Rational& c) {
  SparseVec out;
  if (sgn(c) == 0) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, c * x);
  return out;
}

inline SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + c * b[j].second;
      if (sgn(s) != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

/** \brief Sparse column-major rational matrix. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_(cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.col_[j] = unit_vec(static_cast<Index>(j));
    return m;
  }

  static Matrix scalar(std::size_t n, const Rational& c) {
    Matrix m(n, n);
    if (sgn(c) == 0) return m;
    for (std::size_t j = 0; j < n; ++j) m.col_[j] = SparseVec{{static_cast<Index>(j), c}};
    return m;
  }

  template <class F>
  static Matrix build(std::size_t rows, std::size_t cols, F&& fill) {
    Matrix m(rows, cols);
    Accumulator acc(rows);
    for (std::size_t j = 0; j < cols; ++j) {
      fill(j, acc);
      m.col_[j] = acc.take();
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& col(std::size_t j) const { return col_[j]; }
  void set_col(std::size_t j, SparseVec v) { col_[j] = std::move(v); }

  Rational at(std::size_t i, std::size_t j) const {
    const auto& c = col_[j];
    auto it = std::lower_bound(c.begin(), c.end(), static_cast<Index>(i),
                               [](const auto& e, Index k) { return e.first < k; });
    if (it != c.end() && it->first == i) return it->second;
    return Rational(0);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : col_) n += c.size();
    return n;
  }

  bool is_zero() const {
    for (const auto& c : col_)
      if (!c.empty()) return false;
    return true;
  }

  SparseVec apply(const SparseVec& v) const {
    Accumulator acc(rows_);
    for (const auto& [j, x] : v) acc.add_scaled(col_[j], x);
    return acc.take();
  }

  Matrix operator*(const Matrix& b) const {
    if (cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix out(rows_, b.cols_);
    Accumulator acc(rows_);
    for (std::size_t j = 0; j < b.cols_; ++j) {
      for (const auto& [k, x] : b.col_[j]) acc.add_scaled(col_[k], x);
      out.col_[j] = acc.take();
    }
    return out;
  }

  Matrix operator+(const Matrix& b) const { return combine(b, Rational(1)); }
  Matrix operator-(const Matrix& b) const { return combine(b, Rational(-1)); }

  Matrix operator*(const Rational& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.col_[j] = scaled(col_[j], c);
    return out;
  }

  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }

  Matrix combine(const Matrix& b, const Rational& c) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.col_[j] = axpy(col_[j], c, b.col_[j]);
    return out;
  }

  Matrix transpose() const {
    std::vector<SparseVec> rows(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, x] : col_[j]) rows[i].emplace_back(static_cast<Index>(j), x);
    Matrix out(cols_, rows_);
    out.col_ = std::move(rows);
    return out;
  }

  Matrix select_cols(const std::vector<std::size_t>& which) const {
    Matrix out(rows_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k) out.col_[k] = col_[which[k]];
    return out;
  }

  void append_col(SparseVec v) {
    col_.push_back(std::move(v));
    ++cols_;
  }

  bool operator==(const Matrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && col_ == b.col_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> col_;
};

inline Matrix operator*(const Rational& c, const Matrix& m) { return m * c; }

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      SparseVec c;
      c.reserve(a.col(ja).size() * b.col(jb).size());
      for (const auto& [ia, x] : a.col(ja))
        for (const auto& [ib, y] : b.col(jb))
          c.emplace_back(static_cast<Index>(ia * b.rows() + ib), x * y);
      out.set_col(ja * b.cols() + jb, std::move(c));
    }
  return out;
}

inline Matrix kron(const std::vector<Matrix>& fs) {
  Matrix out = Matrix::identity(1);
  for (const auto& f : fs) out = kron(out, f);
  return out;
}

/** \brief Block-diagonal matrix from square or rectangular blocks. */
inline Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseVec v;
      for (const auto& [i, x] : b.col(j)) v.emplace_back(static_cast<Index>(i + ro), x);
      out.set_col(co + j, std::move(v));
    }
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

/** \brief First entry where two equally shaped matrices differ. */
struct Mismatch {
  std::size_t row, col;
  Rational lhs, rhs;
  std::string describe() const {
    std::ostringstream os;
    os << "entry (" << row << "," << col << "): " << lhs.get_str() << " vs " << rhs.get_str();
    return os.str();
  }
};

inline std::optional<Mismatch> first_mismatch(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return Mismatch{a.rows(), a.cols(), Rational(static_cast<long>(b.rows())),
                    Rational(static_cast<long>(b.cols()))};
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.col(j) == b.col(j)) continue;
    SparseVec d = axpy(a.col(j), Rational(-1), b.col(j));
    Index i = d.front().first;
    return Mismatch{i, j, a.at(i, j), b.at(i, j)};
  }
  return std::nullopt;
}

}  // namespace cyclo
