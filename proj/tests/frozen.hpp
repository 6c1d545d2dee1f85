#pragma once

// Values first produced by the dense oracle in oracle.hpp, then locked here.
// test_oracle re-derives each one from the oracle and from the library.

#include <cstddef>
#include <vector>

namespace frozen {

inline const std::vector<std::size_t> hh_dualnum = {2, 1, 1, 1};  // n = 0..3
inline const std::vector<std::size_t> hc_q = {1, 0, 1, 0};        // n = 0..3
inline const std::vector<std::size_t> hc_dualnum = {2, 0, 2, 0};  // n = 0..3
inline const std::vector<std::size_t> hh_trunc3 = {3, 2, 2, 2};
inline const std::size_t omega1_dualnum = 1;
inline const std::size_t omega1_trunc3 = 2;
inline const std::size_t omega2_dualnum = 0;
inline const std::size_t hc0_m2 = 1;
inline const std::size_t trace_rank_m2 = 1;
inline const std::size_t sk2_q = 1;
inline const std::size_t sp2_q = 3;
inline const std::vector<std::size_t> hd_q = {1, 0, 0, 0};
inline const std::vector<std::size_t> ce_gl1_dualnum = {1, 2, 1};
inline const std::vector<std::size_t> cl_gl1_dualnum = {1, 2, 4};

}  // namespace frozen
