#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "ncbtt/trees/tree.hpp"

namespace ncbtt::trees {

class ResourceCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cap on generated trees; NCBTT_MAX_NODES overrides the default.
std::size_t node_cap();

// All trees of arity k and degree <= d_max, sorted by encoding.
std::vector<RibbonTree> enumerate(int k, int d_max, std::size_t cap = node_cap());

struct TreeCensus {
  int arity = 0;
  std::map<int, std::size_t> by_degree;
  int max_degree() const { return by_degree.empty() ? -1 : by_degree.rbegin()->first; }
};

TreeCensus census(const std::vector<RibbonTree>& trees, int k);

}  // namespace ncbtt::trees
