#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ncbtt::cli {

enum class Format { text, json };

struct RunConfig {
  std::string command;  // validate, hh, cyclic, degen, iota, bv-check, deform, trees-enum, trees-verify
  std::string path;
  std::optional<int> window;  // --max-weight
  std::optional<int> weight;  // hh/cyclic: a single weight
  int u_order = 3;
  int order = 5;
  std::string variant = "normalized";
  bool cyclic = false;
  bool representatives = false;
  Format format = Format::text;
  std::string field;  // empty: the algebra's own field
  std::uint64_t seed = 1;
  int arity = 2;
  std::optional<int> max_degree;
  int samples = 6;
};

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage_error = 2;

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ncbtt::cli
