#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef REEBSYM_TEST_DATA
#error "REEBSYM_TEST_DATA must point at tests/data"
#endif

namespace testsupport {

inline std::string data_path(const std::string& rel) { return std::string(REEBSYM_TEST_DATA) + "/" + rel; }

inline std::string slurp(const std::string& rel) {
  std::ifstream in(data_path(rel), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testsupport
