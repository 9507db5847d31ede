#pragma once

#include <string>
#include <vector>

#include "ncbtt/algebra/algebra.hpp"

namespace ncbtt::algebra {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // basis tuple, empty on pass
};

struct ValidationReport {
  std::string algebra;
  int arity_bound = 0;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

ValidationReport validate(const Algebra& a, int arity_bound);

}  // namespace ncbtt::algebra
