#pragma once

#include <random>
#include <string>
#include <vector>

#include "ncbtt/algebra/parse.hpp"
#include "ncbtt/hochschild/tensor.hpp"

namespace support {

using ncbtt::algebra::AlgebraPtr;
using ncbtt::exactla::Scalar;
using ncbtt::hochschild::Chain;
using ncbtt::hochschild::Cochain;

inline std::string source_path(const std::string& rel) {
  return std::string(NCBTT_SOURCE_DIR) + "/" + rel;
}

inline AlgebraPtr corpus(const std::string& name) {
  return ncbtt::algebra::load_algebra(source_path("algebras/" + name + ".json"));
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"point", "kxk", "m2", "cl1", "oddext", "dualnumbers"};
  return names;
}

inline Scalar small(std::mt19937_64& rng) {
  return Scalar(static_cast<long>(rng() % 7) - 3);
}

// Random cochain of one weight whose entries all have the given shifted parity
// (parity < 0 mixes both).
inline Cochain random_cochain(const AlgebraPtr& a, int weight, int parity, std::mt19937_64& rng,
                              double density = 0.6) {
  std::uniform_real_distribution<double> u(0, 1);
  Cochain c(a);
  for (const auto& w : ncbtt::hochschild::reduced_words(*a, weight))
    for (std::size_t o = 0; o < a->dim(); ++o) {
      auto letters = ncbtt::hochschild::cochain_letters(w, static_cast<int>(o));
      if (parity >= 0 && c.letters_parity(letters) != parity) continue;
      if (u(rng) < density) c.add(letters, small(rng));
    }
  return c;
}

inline Chain random_chain(const AlgebraPtr& a, int weight, int parity, std::mt19937_64& rng,
                          double density = 0.6) {
  std::uniform_real_distribution<double> u(0, 1);
  Chain c(a);
  for (const auto& w : ncbtt::hochschild::reduced_words(*a, weight))
    for (std::size_t a0 = 0; a0 < a->dim(); ++a0) {
      auto letters = ncbtt::hochschild::chain_letters(static_cast<int>(a0), w);
      if (parity >= 0 && c.letters_parity(letters) != parity) continue;
      if (u(rng) < density) c.add(letters, small(rng));
    }
  return c;
}

inline int idx(const AlgebraPtr& a, const std::string& name) {
  return static_cast<int>(*a->index_of(name));
}

}  // namespace support
