#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bouch/big_count.hpp"
#include "bouch/lattice_tree.hpp"

namespace bouch {

/// Largest tree the generators will materialize.
inline constexpr std::uint64_t kMaterializeLimit = 10'000'000;

/// Largest a_{k-1} for which a_k = 2^{a_{k-1}} is held as an exact integer.
inline constexpr std::uint64_t kExactTowerExponentLimit = std::uint64_t{1} << 24;

/// Exact Bouch sequences for generations 0..j. Vectors are indexed by
/// generation; ell[0], b[0], b[1] and L[0] are unused and hold 0.
struct BouchParams {
  std::uint64_t a0 = 1;
  std::size_t j = 1;
  std::vector<BigCount> a;    // a_k = 2^{a_{k-1}}
  std::vector<BigCount> E;    // E_k = a_k^2
  std::vector<BigCount> ell;  // backbone lengths
  std::vector<BigCount> b;    // branch counts
  std::vector<BigCount> L;    // total bonds of T_k
};

/// Throws Error(TooLarge) once some a_k has more than 2^24 bits.
BouchParams bouch_params(std::uint64_t a0, std::size_t j);

RootedTree path_tree(std::uint64_t length);

/// Backbone (0,0)-(L/2,0) with a +y tooth at x = 1..L/2.
RootedTree comb_tree(std::uint64_t bonds);

/// A materialized hierarchical tree together with how many of its bonds
/// sit on the backbones of each generation (index 1 = first generation,
/// i.e. the innermost path copies; index 0 unused).
struct HierarchicalTree {
  RootedTree tree;
  std::vector<std::uint64_t> bonds_per_generation;
};

/// T_j for arbitrary admissible sequences: ells = (l_1..l_j), bs = (b_2..b_j).
/// Every branch is the previous generation rotated +90 degrees, rooted on the
/// backbone at distances k * l/b, k = 1..b.
HierarchicalTree custom_hierarchical_tree(std::span<const std::uint64_t> ells, std::span<const std::uint64_t> bs);

HierarchicalTree bouch_tree_with_generations(const BouchParams& params);
RootedTree bouch_tree(const BouchParams& params);

}  // namespace bouch
