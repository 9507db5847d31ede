#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncbtt/homology/homology.hpp"

namespace ncbtt::homology::detail {

// Total weight N of the truncated u-complex: blocks u^p C^{N-2p}, p < M.
struct Level {
  int total = 0;
  int order = 1;
  std::vector<int> weight;         // per block, -1 when N - 2p < 0
  std::vector<std::size_t> offset;
  std::size_t dim = 0;
};

struct Piece {
  std::size_t dim = 0;
  bool reliable = true;
  std::vector<SparseVector> boundaries;  // level coordinates
  std::vector<SparseVector> cycles;      // level coordinates, empty when unreliable
  std::vector<SparseVector> reps;
};

class Engine {
 public:
  Engine(const CochainComplex& c, int order, Variant v, bool cyclic);
  const CochainComplex& complex() const { return c_; }
  int order() const { return order_; }
  Level level(int total) const;
  SparseVector apply_d(const Level& from, const Level& to, const SparseVector& x) const;
  // Basis of the parity piece in level coordinates.
  std::vector<SparseVector> basis(const Level& lev, int parity) const;
  const Piece& piece(int total, int parity, bool reps);
  UPolyCochain to_poly(const Level& lev, const SparseVector& x) const;
  // Shift level(total - 2j) coordinates by u^j into level(total).
  SparseVector multiply_u(const Level& from, const Level& to, int j, const SparseVector& x) const;
  std::vector<std::size_t> u_tower(int total, int parity);
  Group group(int total, int parity, bool reps);

 private:
  const CochainComplex& c_;
  int order_;
  Variant variant_;
  bool cyclic_;
  std::map<std::pair<int, int>, Piece> cache_;
  std::map<std::pair<int, int>, bool> cache_reps_;
};

std::size_t rank_of(const std::vector<SparseVector>& cols, std::size_t rows, const Field& f);

}  // namespace ncbtt::homology::detail
