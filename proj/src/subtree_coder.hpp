#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reebsym/reeb.hpp"

namespace reebsym::detail {

/// Children of a saddle seen from its parent edge. `cyclic` is the cyclic
/// slot word with the parent removed; `anchored` is set when the parent sat
/// in a cyclic slot, in which case `cyclic` starts right after it.
struct SaddleView {
  std::vector<std::size_t> axial;
  std::vector<std::size_t> cyclic;
  bool anchored = false;
};

SaddleView saddle_view(const EnhancedReebGraph& g, std::size_t parent_edge, std::size_t v);

/// Memoized canonical codes per directed edge.
class SubtreeCoder {
 public:
  explicit SubtreeCoder(const EnhancedReebGraph& g);
  const std::string& code(std::size_t parent_edge, std::size_t vertex);

 private:
  const std::string& code_rec(std::size_t parent_edge, std::size_t vertex);

  const EnhancedReebGraph& g_;
  std::vector<char> active_;
  std::map<std::pair<std::size_t, std::size_t>, std::string> memo_;
};

}  // namespace reebsym::detail
