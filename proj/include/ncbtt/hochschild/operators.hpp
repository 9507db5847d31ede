#pragma once

#include <vector>

#include "ncbtt/hochschild/tensor.hpp"

namespace ncbtt::hochschild {

// All operators work in the suspension: a weight-n cochain is a map
// (s A-bar)^n -> s A and its parity is the shifted degree. The unshifted
// degree |phi| is parity + 1.

// phi{psi_1, ..., psi_k}: order-preserving insertions, Koszul signs.
Cochain brace(const Cochain& phi, const std::vector<Cochain>& args);

// The structure m = sum_k m_k restricted to reduced inputs, as a cochain.
Cochain structure_cochain(const AlgebraPtr& a);

// m{psi_1, ..., psi_k} with m evaluated on all of A (free slots reduced).
Cochain m_brace(const AlgebraPtr& a, const std::vector<Cochain>& args);

// (-1)^{|phi| + p q} m{phi, psi} for weight p, q components.
Cochain cup(const Cochain& phi, const Cochain& psi);
// (-1)^{|phi|} m{phi, psi}: the product entering the BV identity.
Cochain brace_product(const Cochain& phi, const Cochain& psi);

Cochain gerstenhaber(const Cochain& phi, const Cochain& psi);

// delta phi = [m, phi] = m{phi} - (-1)^{||phi||} phi{m}.
Cochain hoch_diff(const Cochain& phi);

Chain hoch_boundary(const Chain& c);
Chain connes_B(const Chain& c);

// <phi, s a0 (x) sX> = (-1)^{|sa0| |sX|} omega(phi(X), s a0), omega(sa, sb) = (-1)^{|a|}<a, b>.
Scalar chain_cochain_pairing(const Cochain& phi, const Chain& c);

// F(a0, X) = <phi, a0 (x) X> on every basis chain.
Functional functional_of(const Cochain& phi);
// Inverse of functional_of; needs a nondegenerate pairing.
Cochain cochain_of(const Functional& f);
// F o B.
Functional pull_back_B(const Functional& f);

// The cochain with <Delta phi, c> = <phi, B c>.
Cochain delta(const Cochain& phi);

}  // namespace ncbtt::hochschild
