#ifndef HILBDET_TEST_UTIL_HPP
#define HILBDET_TEST_UTIL_HPP

#include <vector>

#include "hilbdet/degmat.hpp"

namespace hilbdet::testutil {

// the three worked families in P^5
inline DegreeMatrix ex1(int s) { return {{0, 0, 0, 0}, {1, 1, 1, s - 3}, 5}; }
inline DegreeMatrix ex2(int s) { return {{0, 0, 0}, {1, 1, s - 2}, 5}; }
inline DegreeMatrix ex3(int s) { return {{0, 0, 0}, {1, 2, s - 3}, 5}; }

inline std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace hilbdet::testutil

#endif
