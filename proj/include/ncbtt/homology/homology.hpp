#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncbtt/exactla/elimination.hpp"
#include "ncbtt/homology/spaces.hpp"

namespace ncbtt::homology {

// phi_0 + u phi_1 + ... + u^{M-1} phi_{M-1}; u even, u^p phi_p sits in total weight
// weight(phi_p) + 2p.
struct UPolyCochain {
  int order = 1;
  int total_weight = 0;
  std::vector<Cochain> coeffs;
  // Only for order 1.
  const Cochain& cochain() const;
};

struct Group {
  int weight = 0;  // total weight for u-complexes
  int parity = 0;
  std::size_t dim = 0;
  bool reliable = true;
  std::vector<UPolyCochain> representatives;
  // dim u^j H for j = 0..M-1 (u-complexes only)
  std::vector<std::size_t> u_tower;
};

struct CohomologyReport {
  std::string complex;
  Variant variant = Variant::normalized;
  int window = 0;
  int u_order = 1;
  std::vector<Group> groups;
  std::size_t dim(int weight) const;
  std::size_t dim(int weight, int parity) const;
  const Group* find(int weight, int parity) const;
};

// d = delta + u Delta on the truncated u-complex; order 1 is delta alone.
UPolyCochain u_differential(const UPolyCochain& x);

// Exactly one weight; windows are checked, never silently truncated.
CohomologyReport hh(const AlgebraPtr& a, int n, int window, Field field = {},
                    Variant v = Variant::normalized);
CohomologyReport cyclic_cohomology(const AlgebraPtr& a, int n, int window, Variant v,
                                   Field field = {});
CohomologyReport u_homology(const AlgebraPtr& a, int order, int n, int window, Variant v,
                            Field field = {});

// Every weight 0..window; the top weight is flagged unreliable.
CohomologyReport hh_table(CochainComplex& c, Variant v, bool representatives);
CohomologyReport cyclic_table(CochainComplex& c, Variant v, bool representatives);
CohomologyReport u_table(CochainComplex& c, int order, Variant v, bool representatives);

struct DegenerationWitness {
  int order = 0;
  int parity = 0;
  int total_weight = 0;
  std::size_t expected = 0;
  std::size_t found = 0;
};

struct DegenerationVerdict {
  int order = 0;
  bool pass = true;
  int reliable_through = 0;  // largest total weight compared
  std::optional<DegenerationWitness> witness;
};

std::vector<DegenerationVerdict> degeneration_check(const AlgebraPtr& a, int max_order, int window,
                                                    Field field = {});

struct Surjectivity {
  int weight = 0;
  bool surjective = false;
  std::size_t image = 0;
  std::size_t target = 0;
};

std::vector<Surjectivity> tangent_surjectivity(const AlgebraPtr& a, int window, Field field = {});

struct IotaRow {
  int weight = 0;
  int parity = 0;
  std::size_t cyclic_dim = 0;
  std::size_t u_dim = 0;
  bool reliable = true;
  bool agree() const { return cyclic_dim == u_dim; }
};

struct IotaReport {
  int order = 0;
  int window = 0;
  std::vector<IotaRow> rows;
  bool agree() const;
};

// Strict variants on both sides; rows with 2M < n + 2 are unreliable.
IotaReport iota_comparison(const AlgebraPtr& a, int order, int window, Field field = {});

struct BvOutcome {
  Cochain defect;
  std::optional<Cochain> primitive;
  // Weight where delta gamma = D has no solution, with a functional on that weight
  // killing all coboundaries and not the defect. Coordinates follow Ambient order.
  int certificate_weight = -1;
  std::vector<Scalar> certificate;
};

// D = [a,b] - (-1)^{|b|} Delta(a*b) + (Delta a)*b - a*(Delta b), * the brace product.
Cochain bv_defect_cochain(const Cochain& alpha, const Cochain& beta);
// Throws std::invalid_argument when alpha or beta is not a homogeneous cocycle.
BvOutcome bv_defect(const Cochain& alpha, const Cochain& beta, int window);

}  // namespace ncbtt::homology
