#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace cyclo {

/**
 * \brief Incrementally grown echelon basis of a subspace of Q^n.
 *
 * Every stored vector has leading entry 1 at its pivot and nothing below it,
 * so a single left-to-right sweep reduces any vector completely. Each stored
 * vector can carry a tag, a sparse vector in some auxiliary space that is
 * transported along the same linear combinations.
 */
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0) : dim_(dim), slot_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return vecs_.size(); }
  bool has_pivot(Index i) const { return slot_[i] >= 0; }

  /** Returns v minus the combination of basis vectors clearing every pivot slot.
      When tag is given it is updated by the same combination. */
  SparseVec reduce(const SparseVec& v, SparseVec* tag = nullptr) const {
    std::map<Index, Rational> w;
    for (const auto& [i, x] : v) w.emplace(i, x);
    std::map<Index, Rational> t;
    if (tag)
      for (const auto& [i, x] : *tag) t.emplace(i, x);
    SparseVec rest;
    for (auto it = w.begin(); it != w.end();) {
      if (sgn(it->second) == 0) {
        it = w.erase(it);
        continue;
      }
      int s = slot_[it->first];
      if (s < 0) {
        rest.emplace_back(it->first, it->second);
        it = w.erase(it);
        continue;
      }
      Rational c = it->second;
      for (const auto& [i, x] : vecs_[s]) w[i] -= c * x;
      if (tag)
        for (const auto& [i, x] : tags_[s]) t[i] -= c * x;
      it = w.erase(it);
    }
    if (tag) {
      tag->clear();
      for (auto& [i, x] : t)
        if (sgn(x) != 0) tag->emplace_back(i, x);
    }
    return rest;
  }

  /** Adds an already reduced nonzero vector; returns its pivot. */
  Index insert_reduced(const SparseVec& r, const SparseVec& tag = {}) {
    Index p = r.front().first;
    Rational inv = 1 / r.front().second;
    slot_[p] = static_cast<int>(vecs_.size());
    vecs_.push_back(scaled(r, inv));
    tags_.push_back(scaled(tag, inv));
    pivots_.push_back(p);
    return p;
  }

  bool insert(const SparseVec& v, SparseVec tag = {}) {
    SparseVec r = reduce(v, &tag);
    if (r.empty()) return false;
    insert_reduced(r, tag);
    return true;
  }

  const std::vector<Index>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<int> slot_;
  std::vector<SparseVec> vecs_;
  std::vector<SparseVec> tags_;
  std::vector<Index> pivots_;
};

inline std::size_t rank(const Matrix& m) {
  Echelon e(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.col(j));
  return e.rank();
}

/** \brief Columns form a basis of ker m; one column per dependent column of m. */
inline Matrix kernel_basis(const Matrix& m) {
  Echelon e(m.rows());
  Matrix k(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVec tag = unit_vec(static_cast<Index>(j));
    SparseVec r = e.reduce(m.col(j), &tag);
    if (r.empty())
      k.append_col(tag);
    else
      e.insert_reduced(r, tag);
  }
  return k;
}

/** \brief Indices of the columns selected greedily as a basis of the column space. */
inline std::vector<std::size_t> independent_columns(const Matrix& m) {
  Echelon e(m.rows());
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (e.insert(m.col(j))) out.push_back(j);
  return out;
}

/** \brief Solves m c = v for vectors in the column span of m. */
class ColumnSolver {
 public:
  explicit ColumnSolver(const Matrix& m) : e_(m.rows()) {
    for (std::size_t j = 0; j < m.cols(); ++j) e_.insert(m.col(j), unit_vec(static_cast<Index>(j)));
  }

  std::optional<SparseVec> solve(const SparseVec& v) const {
    SparseVec tag;
    SparseVec r = e_.reduce(v, &tag);
    if (!r.empty()) return std::nullopt;
    return scaled(tag, Rational(-1));
  }

  std::size_t rank() const { return e_.rank(); }

 private:
  Echelon e_;
};

/** \brief Inverse of a square invertible matrix; throws otherwise. */
inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  ColumnSolver s(m);
  if (s.rank() != m.rows()) throw Error("inverse of a singular matrix");
  Matrix out(m.rows(), m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) out.set_col(k, *s.solve(unit_vec(static_cast<Index>(k))));
  return out;
}

/**
 * \brief Quotient of Q^n by the span of the columns of a relation matrix.
 *
 * The basis of the quotient is the set of coordinates that are not pivots of
 * the relation span, in increasing order.
 */
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(const Matrix& relations) : ambient_(relations.rows()), e_(relations.rows()), rel_(relations) {
    for (std::size_t j = 0; j < relations.cols(); ++j) e_.insert(relations.col(j));
    std::vector<int> pos(ambient_, -1);
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!e_.has_pivot(static_cast<Index>(i))) {
        pos[i] = static_cast<int>(free_.size());
        free_.push_back(static_cast<Index>(i));
      }
    proj_ = Matrix(free_.size(), ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
      SparseVec r = e_.reduce(unit_vec(static_cast<Index>(j)));
      for (auto& [i, x] : r) i = static_cast<Index>(pos[i]);
      proj_.set_col(j, std::move(r));
    }
    sect_ = Matrix(ambient_, free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k) sect_.set_col(k, unit_vec(free_[k]));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return free_.size(); }
  const Matrix& projection() const { return proj_; }
  const Matrix& section() const { return sect_; }
  const Matrix& relations() const { return rel_; }
  const std::vector<Index>& free_coords() const { return free_; }

 private:
  std::size_t ambient_ = 0;
  Echelon e_;
  Matrix rel_;
  std::vector<Index> free_;
  Matrix proj_, sect_;
};

/** \brief Map induced on quotients; checks that relations go to relations. */
inline Matrix descend(const Matrix& f, const Quotient& src, const Quotient& dst, const std::string& what) {
  Matrix killed = dst.projection() * (f * src.relations());
  if (!killed.is_zero()) throw RelationNotPreserved(what + ": relation not preserved");
  return dst.projection() * f * src.section();
}

/** \brief Homology presentation ker(d_n) / im(d_next). */
class Subquotient {
 public:
  Subquotient() = default;

  Subquotient(const Matrix& d_n, const Matrix& d_next) : ambient_(d_n.cols()), e_(d_n.cols()) {
    if (d_next.rows() != d_n.cols()) throw Error("subquotient: shape mismatch");
    if (!(d_n * d_next).is_zero()) throw CompositionNotZero("subquotient: d_n o d_next != 0");
    cycles_ = kernel_basis(d_n);
    boundaries_ = Matrix(ambient_, 0);
    for (std::size_t j = 0; j < d_next.cols(); ++j) {
      SparseVec r = e_.reduce(d_next.col(j));
      if (r.empty()) continue;
      e_.insert_reduced(r);
      boundaries_.append_col(d_next.col(j));
    }
    reps_ = Matrix(ambient_, 0);
    for (std::size_t j = 0; j < cycles_.cols(); ++j) {
      SparseVec tag;
      SparseVec r = e_.reduce(cycles_.col(j), &tag);
      if (r.empty()) continue;
      tag = axpy(tag, Rational(1), unit_vec(static_cast<Index>(reps_.cols())));
      e_.insert_reduced(r, tag);
      reps_.append_col(cycles_.col(j));
    }
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return reps_.cols(); }
  const Matrix& cycles() const { return cycles_; }
  const Matrix& boundaries() const { return boundaries_; }
  const Matrix& reps() const { return reps_; }

  /** Class coordinates of a cycle; nullopt when v is not a cycle. */
  std::optional<SparseVec> coords(const SparseVec& v) const {
    SparseVec tag;
    SparseVec r = e_.reduce(v, &tag);
    if (!r.empty()) return std::nullopt;
    return scaled(tag, Rational(-1));
  }

  /** Coordinates of a family of cycles given as columns. */
  Matrix coords(const Matrix& m, const std::string& what = "coords") const {
    Matrix out(dim(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto c = coords(m.col(j));
      if (!c) throw NotAChainMapOnClasses(what + ": column " + std::to_string(j) + " is not a cycle");
      out.set_col(j, std::move(*c));
    }
    return out;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix cycles_, boundaries_, reps_;
  Echelon e_;
};

inline Matrix induced_on_subquotient(const Matrix& f, const Subquotient& src, const Subquotient& dst) {
  if (f.cols() != src.ambient() || f.rows() != dst.ambient())
    throw Error("induced_on_subquotient: shape mismatch");
  Matrix out(dst.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    auto c = dst.coords(f.apply(src.reps().col(k)));
    if (!c) throw NotAChainMapOnClasses("image of representative " + std::to_string(k) + " is not a cycle");
    out.set_col(k, std::move(*c));
  }
  for (std::size_t k = 0; k < src.boundaries().cols(); ++k) {
    auto c = dst.coords(f.apply(src.boundaries().col(k)));
    if (!c || !c->empty())
      throw NotAChainMapOnClasses("image of boundary " + std::to_string(k) + " is not a boundary");
  }
  return out;
}

}  // namespace cyclo
