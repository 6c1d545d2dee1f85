#pragma once

#include <string>

#include "cyclo/corpus_data.hpp"
#include "cyclo/harness.hpp"

namespace cyclo::test {

inline const Workspace& corpus() {
  static const Workspace ws = parse_workspace(bundled_corpus_json());
  return ws;
}

inline std::string fixture(const std::string& name) { return std::string(CYCLO_FIXTURES) + "/" + name; }

inline std::vector<std::size_t> dims_of(const std::vector<Subquotient>& h) {
  std::vector<std::size_t> out;
  for (const auto& s : h) out.push_back(s.dim());
  return out;
}

inline Matrix dense(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  Matrix m(rows, cols);
  auto it = entries.begin();
  std::vector<SparseVec> c(cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j, ++it)
      if (*it) c[j].emplace_back(static_cast<Index>(i), Rational(*it));
  for (std::size_t j = 0; j < cols; ++j) m.set_col(j, c[j]);
  return m;
}

}  // namespace cyclo::test
