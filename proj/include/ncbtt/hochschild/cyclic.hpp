#pragma once

#include <vector>

#include "ncbtt/hochschild/tensor.hpp"

namespace ncbtt::hochschild {

// Invariance of (a0, x1..xn) |-> <phi, a0 (x) x1..xn> under the signed rotation
// t(x0..xn) = (-1)^{|x_n| (|x0| + ... + |x_{n-1}|)} (xn, x0, ..., x_{n-1}).
bool is_cyclic(const Cochain& phi);

// Average over the signed rotation group, weight by weight.
Cochain cyclic_project(const Cochain& phi);

class CyclicCochain {
 public:
  // Throws std::invalid_argument when phi is not cyclic.
  explicit CyclicCochain(Cochain phi);
  const Cochain& cochain() const { return phi_; }

 private:
  Cochain phi_;
};

// Weight-0 cochains pairing to zero with the unit chain.
std::vector<Cochain> strict_weight0_basis(const AlgebraPtr& a);

// Basis of cyclic cochains of one weight: one element per rotation orbit of reduced
// words carrying a consistent sign. Weight 0 gives all of A, or the strict subspace.
std::vector<Cochain> cyclic_basis(const AlgebraPtr& a, int weight, bool strict);

}  // namespace ncbtt::hochschild
