#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bouch/big_count.hpp"

namespace bouch {

struct Site {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Site&, const Site&) = default;
};

struct SiteHash {
  std::size_t operator()(const Site& s) const noexcept {
    const auto ux = static_cast<std::uint64_t>(s.x);
    const auto uy = static_cast<std::uint64_t>(s.y);
    return std::hash<std::uint64_t>{}(ux * 0x9E3779B97F4A7C15ULL ^ (uy + 0x632BE59BD9B4E019ULL + (ux << 6)));
  }
};

/// Unit lattice bond, endpoints stored lexicographically ordered.
class Bond {
 public:
  /// Throws Error(NotUnitBond) unless |u - v| == 1 along one axis.
  Bond(Site u, Site v);

  const Site& first() const { return a_; }
  const Site& second() const { return b_; }
  bool touches(const Site& s) const { return s == a_ || s == b_; }
  /// The endpoint that is not `s`; `s` must be an endpoint.
  const Site& other(const Site& s) const { return s == a_ ? b_ : a_; }

  friend auto operator<=>(const Bond&, const Bond&) = default;

 private:
  Site a_;
  Site b_;
};

/// A validated rooted tree. Only validate_tree() constructs one, so holding
/// a RootedTree means: connected, acyclic, root on some bond, L >= 1.
class RootedTree {
 public:
  const Site& root() const { return root_; }
  /// Bonds in canonical sorted order.
  std::span<const Bond> bonds() const { return bonds_; }
  std::size_t size() const { return bonds_.size(); }
  /// Position of `b` in bonds(), or nullopt.
  std::optional<std::size_t> index_of(const Bond& b) const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  friend RootedTree validate_tree(Site root, std::vector<Bond> bonds);
  RootedTree(Site root, std::vector<Bond> bonds) : root_(root), bonds_(std::move(bonds)) {}

  Site root_;
  std::vector<Bond> bonds_;
};

RootedTree validate_tree(Site root, std::vector<Bond> bonds);

inline constexpr std::ptrdiff_t kNoParent = -1;

/// Bonds oriented away from the root. Indices refer to RootedTree::bonds().
struct Orientation {
  std::vector<std::ptrdiff_t> parent;
  std::vector<std::vector<std::size_t>> children;
  /// Every bond appears after its parent.
  std::vector<std::size_t> order;

  std::vector<Bond> children_of(const RootedTree& tree, const Bond& b) const;
};

Orientation orient_from_root(const RootedTree& tree);

/// Downstream weights aligned with RootedTree::bonds().
struct WeightTable {
  std::vector<std::uint64_t> weights;

  std::uint64_t at(const RootedTree& tree, const Bond& b) const;
};

WeightTable downstream_weights(const RootedTree& tree);

/// w(i) = 1 + number of descendants of i, for any forest given by parent
/// links (kNoParent marks a top-level element). Works for abstract trees too.
std::vector<std::uint64_t> subtree_sizes(std::span<const std::ptrdiff_t> parent);

/// W(T) = product of downstream weights.
BigCount tree_weight(const RootedTree& tree);

/// N = L! / prod(weights), with the division checked for exactness.
BigCount hook_count(std::span<const std::uint64_t> weights);

/// N(T) = L! / W(T).
BigCount growth_count(const RootedTree& tree);

/// Brute-force count of growth orders by depth-first search over bond
/// addition sequences. Uses only site adjacency, never the weights.
/// Throws Error(CapExceeded) as soon as the count exceeds `cap`.
BigCount enumerate_growth_orders(const RootedTree& tree, std::optional<BigCount> cap = std::nullopt);

/// Calls `visit` with every growth order (as indices into bonds()). Stops
/// with Error(CapExceeded) after `cap` sequences.
void for_each_growth_order(const RootedTree& tree, std::uint64_t cap,
                           const std::function<void(std::span<const std::size_t>)>& visit);

/// Seeded random tree grown from (0,0) without reusing sites.
RootedTree random_lattice_tree(std::size_t bonds, std::uint64_t seed);

}  // namespace bouch
