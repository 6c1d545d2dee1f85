#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"

namespace cyclo {

struct Caps {
  std::size_t max_degree = 4;
  std::size_t max_lie_degree = 3;
  std::size_t max_matrix_size = 2;
  std::size_t max_dim = 5000;
  std::size_t form_degree = 3;
};

struct Task {
  std::string kind;
  std::string what;
  std::string algebra;
  std::string measuring;
  std::string suite;
  std::size_t max_degree = 0;
  std::size_t r = 1;
};

struct Workspace {
  Caps caps;
  std::vector<std::shared_ptr<const Algebra>> algebras;
  std::vector<std::shared_ptr<const Coalgebra>> coalgebras;
  std::vector<std::shared_ptr<const Measuring>> measurings;
  std::vector<Task> tasks;

  std::shared_ptr<const Algebra> algebra(const std::string& n) const {
    for (const auto& a : algebras)
      if (a->name == n) return a;
    throw ValidationError("unknown algebra '" + n + "'");
  }
  std::shared_ptr<const Coalgebra> coalgebra(const std::string& n) const {
    for (const auto& c : coalgebras)
      if (c->name == n) return c;
    throw ValidationError("unknown coalgebra '" + n + "'");
  }
  std::shared_ptr<const Measuring> measuring(const std::string& n) const {
    for (const auto& m : measurings)
      if (m->name == n) return m;
    throw ValidationError("unknown measuring '" + n + "'");
  }
};

namespace detail {

using json = nlohmann::json;

inline Rational rat(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(where + ": expected a rational string");
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline SparseVec vec(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw ValidationError(where + ": expected a vector of length " + std::to_string(dim));
  SparseVec v;
  for (std::size_t i = 0; i < dim; ++i) {
    Rational q = rat(j[i], where);
    if (sgn(q) != 0) v.emplace_back(static_cast<Index>(i), q);
  }
  return v;
}

/** Matrix given as a list of rows. */
inline Matrix rows_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ValidationError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  std::vector<SparseVec> c(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ValidationError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      Rational q = rat(j[i][k], where);
      if (sgn(q) != 0) c[k].emplace_back(static_cast<Index>(i), q);
    }
  }
  for (std::size_t k = 0; k < cols; ++k) m.set_col(k, c[k]);
  return m;
}

inline std::vector<std::string> labels(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": basis must be a nonempty array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(where + ": basis labels must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline Algebra parse_algebra(const json& j) {
  Algebra a;
  a.name = field(j, "name", "algebra").get<std::string>();
  std::string w = "algebra " + a.name;
  a.labels = labels(field(j, "basis", w), w);
  a.dim = a.labels.size();
  const json& m = field(j, "mult", w);
  if (!m.is_array() || m.size() != a.dim) throw ValidationError(w + ": mult must be dim x dim x dim");
  a.mult.assign(a.dim, std::vector<SparseVec>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (!m[i].is_array() || m[i].size() != a.dim) throw ValidationError(w + ": mult must be dim x dim x dim");
    for (std::size_t k = 0; k < a.dim; ++k) a.mult[i][k] = vec(m[i][k], a.dim, w + " mult");
  }
  a.unit = vec(field(j, "unit", w), a.dim, w + " unit");
  a.commutative = j.value("commutative", false);
  if (j.contains("involution")) a.involution = rows_matrix(j.at("involution"), a.dim, a.dim, w + " involution");
  return a;
}

inline Coalgebra parse_coalgebra(const json& j) {
  Coalgebra c;
  c.name = field(j, "name", "coalgebra").get<std::string>();
  std::string w = "coalgebra " + c.name;
  c.labels = labels(field(j, "basis", w), w);
  c.dim = c.labels.size();
  const json& cm = field(j, "comult", w);
  if (!cm.is_array() || cm.size() != c.dim) throw ValidationError(w + ": comult must have one grid per basis element");
  for (std::size_t i = 0; i < c.dim; ++i) {
    Matrix g = rows_matrix(cm[i], c.dim, c.dim, w + " comult");
    Accumulator acc(c.dim * c.dim);
    for (std::size_t k = 0; k < c.dim; ++k)
      for (const auto& [r, x] : g.col(k)) acc.add(static_cast<Index>(r * c.dim + k), x);
    c.comult.push_back(acc.take());
  }
  const json& e = field(j, "counit", w);
  if (!e.is_array() || e.size() != c.dim) throw ValidationError(w + ": counit must have length dim");
  for (const auto& x : e) c.counit.push_back(rat(x, w + " counit"));
  c.cocommutative = j.value("cocommutative", false);
  return c;
}

inline std::size_t cap_value(const json& caps, const char* key, std::size_t def) {
  if (!caps.contains(key)) return def;
  const json& v = caps.at(key);
  if (!v.is_number_integer() || v.get<long>() <= 0) throw ValidationError(std::string("caps.") + key + " must be positive");
  return v.get<std::size_t>();
}

}  // namespace detail

/** Validate every spec; throws ValidationError naming the first failing invariant. */
inline void validate_workspace(const Workspace& ws) {
  for (const auto& a : ws.algebras) {
    auto r = validate_algebra(*a);
    if (!r.ok()) throw ValidationError(r.failures.front());
  }
  for (const auto& c : ws.coalgebras) {
    auto r = validate_coalgebra(*c);
    if (!r.ok()) throw ValidationError(r.failures.front());
  }
  for (const auto& m : ws.measurings) {
    auto r = validate_measuring(*m);
    if (!r.ok()) throw ValidationError(r.failures.front());
  }
}

inline Workspace parse_workspace(const std::string& text) {
  using detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed workspace: ") + e.what());
  }
  Workspace ws;
  try {
    if (!j.is_object()) throw ParseError("workspace must be a JSON object");
    if (j.contains("caps")) {
      const json& c = j.at("caps");
      ws.caps.max_degree = detail::cap_value(c, "maxDegree", ws.caps.max_degree);
      ws.caps.max_lie_degree = detail::cap_value(c, "maxLieDegree", ws.caps.max_lie_degree);
      ws.caps.max_matrix_size = detail::cap_value(c, "maxMatrixSize", ws.caps.max_matrix_size);
      ws.caps.max_dim = detail::cap_value(c, "maxDim", ws.caps.max_dim);
      ws.caps.form_degree = detail::cap_value(c, "formDegree", ws.caps.form_degree);
    }
    std::map<std::string, int> seen;
    for (const auto& a : j.value("algebras", json::array())) {
      auto p = std::make_shared<Algebra>(detail::parse_algebra(a));
      if (seen[p->name]++) throw ValidationError("duplicate algebra name '" + p->name + "'");
      ws.algebras.push_back(p);
    }
    seen.clear();
    for (const auto& c : j.value("coalgebras", json::array())) {
      auto p = std::make_shared<Coalgebra>(detail::parse_coalgebra(c));
      if (seen[p->name]++) throw ValidationError("duplicate coalgebra name '" + p->name + "'");
      ws.coalgebras.push_back(p);
    }
    seen.clear();
    for (const auto& mj : j.value("measurings", json::array())) {
      auto m = std::make_shared<Measuring>();
      m->name = detail::field(mj, "name", "measuring").get<std::string>();
      if (seen[m->name]++) throw ValidationError("duplicate measuring name '" + m->name + "'");
      std::string w = "measuring " + m->name;
      m->coalgebra = ws.coalgebra(detail::field(mj, "coalgebra", w).get<std::string>());
      m->source = ws.algebra(detail::field(mj, "source", w).get<std::string>());
      m->target = ws.algebra(detail::field(mj, "target", w).get<std::string>());
      const json& ph = detail::field(mj, "phi", w);
      if (!ph.is_array() || ph.size() != m->coalgebra->dim)
        throw ValidationError(w + ": phi needs one matrix per coalgebra basis element");
      for (const auto& f : ph) m->phi.push_back(detail::rows_matrix(f, m->target->dim, m->source->dim, w + " phi"));
      ws.measurings.push_back(m);
    }
    for (const auto& tj : j.value("tasks", json::array())) {
      Task t;
      t.kind = detail::field(tj, "kind", "task").get<std::string>();
      t.what = tj.value("what", "");
      t.algebra = tj.value("algebra", "");
      t.measuring = tj.value("measuring", "");
      t.suite = tj.value("suite", "");
      t.max_degree = tj.value("maxDegree", 0);
      t.r = tj.value("r", 1);
      if (!t.algebra.empty()) ws.algebra(t.algebra);
      if (!t.measuring.empty()) ws.measuring(t.measuring);
      ws.tasks.push_back(t);
    }
  } catch (const detail::json::exception& e) {
    throw ParseError(std::string("malformed workspace: ") + e.what());
  }
  validate_workspace(ws);
  return ws;
}

inline Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str());
}

}  // namespace cyclo
