#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "gramlab/zeros.hpp"

#ifndef GRAMLAB_TEST_DATA
#define GRAMLAB_TEST_DATA "tests/data"
#endif

namespace testing {

// one certified table shared by every test in the process
inline const gramlab::ZeroTable& table() {
  static const gramlab::ZeroTable tab = gramlab::ZeroTable::build(5000);
  return tab;
}

inline std::string data_path(const std::string& name) { return std::string(GRAMLAB_TEST_DATA) + "/" + name; }

inline std::vector<double> first100() {
  std::ifstream is(data_path("first100_zeros.txt"));
  std::vector<double> out;
  for (double v; is >> v;) out.push_back(v);
  return out;
}

}  // namespace testing
