#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bouch/big_count.hpp"

namespace bouch {

/// Brute-force guard for the Bethe-lattice enumerations.
inline constexpr std::size_t kBetheLimit = 8;

/// A node of the coordination-3 Bethe lattice by its path from the root:
/// the root is "", its children "0","1","2", and every other node s has the
/// two children s+"0", s+"1". Each non-root node also names the bond to its
/// parent.
std::vector<std::string> bethe_children(const std::string& address);
std::string bethe_parent(const std::string& address);

/// A finite subtree containing the root, as the sorted addresses of its
/// non-root nodes (equivalently its bonds).
struct BetheTree {
  std::vector<std::string> nodes;

  friend auto operator<=>(const BetheTree&, const BetheTree&) = default;
};

/// Ordered sequences of L connected bond additions from the root.
BigCount bethe_growth_count(std::size_t bonds);

/// Every distinct L-bond subtree containing the root, in sorted order.
std::vector<BetheTree> bethe_trees(std::size_t bonds);
BigCount bethe_tree_count(std::size_t bonds);

/// Growth orders of one subtree by exhaustive enumeration.
BigCount bethe_growth_enumerated(const BetheTree& tree);
/// Growth orders of one subtree as L! / prod(downstream weights).
BigCount bethe_growth_hook(const BetheTree& tree);

struct BetheReport {
  std::size_t bonds = 0;
  BigCount growth_count;
  BigCount tree_count;
  std::string average_bound;    // growth_count / tree_count, reduced fraction
  std::string product_bound;      // (L+2)! / (2 * 9^L)
  std::string factorial_bound;  // L! / 9^L
  std::vector<std::string> maximizer;
  BigCount maximizer_n;
  bool tree_count_within_9L = false;
  bool average_at_least_product = false;
  bool average_exceeds_factorial = false;
  bool maximizer_at_least_average = false;
  bool partition_identity = false;
};

BetheReport bethe_existence_bound(std::size_t bonds);

}  // namespace bouch
