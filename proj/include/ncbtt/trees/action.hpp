#pragma once

#include <string>
#include <vector>

#include "ncbtt/hochschild/tensor.hpp"
#include "ncbtt/trees/tree.hpp"

namespace ncbtt::trees {

using hochschild::Cochain;

// False for trees with a child-edge start.
bool supported(const RibbonTree& t);

// args[i] sits at the white vertex labelled i + 1.
Cochain act(const RibbonTree& t, const std::vector<Cochain>& args);

// White vertex with a tail at gap g: the pull-back of B restricted to rotations
// whose cut falls in that gap, with the children braced in.
Cochain tail_action(const Cochain& phi, const std::vector<Cochain>& kids, int gap);

struct VanishingRow {
  std::string tree;
  bool vanishes = false;
};

struct VanishingReport {
  int arity = 0;
  std::vector<VanishingRow> rows;
  bool all_vanish() const;
};

// Every supported top-degree tree of arity k acting on Ker Delta inputs.
VanishingReport ker_delta_vanishing(const std::vector<Cochain>& args);

}  // namespace ncbtt::trees
