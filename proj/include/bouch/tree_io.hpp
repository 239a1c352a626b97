#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bouch/lattice_tree.hpp"

namespace bouch {

inline constexpr std::uint64_t kSvgLimit = 100'000;

/// {"root":[x,y],"bonds":[[[x1,y1],[x2,y2]],...]} on one line, bonds in
/// canonical order, trailing newline.
std::string to_json(const RootedTree& tree);

/// Parses and validates a tree document. Schema problems raise
/// Error(InvalidArgument); structural ones the validate_tree codes.
RootedTree tree_from_json(std::string_view text);

/// Undirected Graphviz graph, one node "x_y" per site, root filled.
std::string to_dot(const RootedTree& tree);

/// 10px grid, 2px strokes, root as a filled circle. Error(TooLarge) above
/// kSvgLimit bonds.
std::string to_svg(const RootedTree& tree);

}  // namespace bouch
