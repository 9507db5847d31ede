#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ncbtt/algebra/algebra.hpp"

namespace ncbtt::algebra {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraPtr parse_algebra(std::string_view json_text);
AlgebraPtr load_algebra(const std::string& path);

}  // namespace ncbtt::algebra
