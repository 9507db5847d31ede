#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ncbtt/exactla/scalar.hpp"
#include "ncbtt/exactla/sparse_matrix.hpp"

namespace ncbtt::exactla {

struct Solution {
  std::vector<Scalar> x;
};

// Row functional f with f M = 0 and f(v) != 0.
struct Certificate {
  std::vector<Scalar> f;
};

using SolveResult = std::variant<Solution, Certificate>;

// Over F_p all returned scalars are canonical residues.
std::size_t rank(const SparseMatrix& m, Field field = {});
std::optional<std::vector<Scalar>> solve(const SparseMatrix& m, const std::vector<Scalar>& v,
                                         Field field = {});
SolveResult cobound_certificate(const SparseMatrix& m, const std::vector<Scalar>& v,
                                Field field = {});
// One kernel vector per dependent column, with coefficient 1 on that column.
std::vector<std::vector<Scalar>> nullspace(const SparseMatrix& m, Field field = {});
// Indices of columns independent of all earlier columns.
std::vector<std::size_t> pivot_columns(const SparseMatrix& m, Field field = {});

}  // namespace ncbtt::exactla
