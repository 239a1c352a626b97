#include "bouch/tree_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bouch/error.hpp"
#include "json.hpp"

namespace bouch {

namespace {

using ordered_json = nlohmann::ordered_json;

Site site_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be a pair of integers");
  return Site{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

std::string node_name(const Site& s) { return std::to_string(s.x) + "_" + std::to_string(s.y); }

}  // namespace

std::string to_json(const RootedTree& tree) {
  ordered_json doc;
  doc["root"] = {tree.root().x, tree.root().y};
  auto bonds = ordered_json::array();
  for (const Bond& b : tree.bonds()) {
    bonds.push_back({{b.first().x, b.first().y}, {b.second().x, b.second().y}});
  }
  doc["bonds"] = std::move(bonds);
  return doc.dump() + "\n";
}

RootedTree tree_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidArgument, "tree document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "root" && key != "bonds") throw Error(ErrorCode::InvalidArgument, "unexpected key '" + key + "'");
  }
  if (!doc.contains("root") || !doc.contains("bonds"))
    throw Error(ErrorCode::InvalidArgument, "tree document needs 'root' and 'bonds'");
  const Site root = site_from(doc["root"], "root");
  const auto& list = doc["bonds"];
  if (!list.is_array()) throw Error(ErrorCode::InvalidArgument, "'bonds' must be an array");
  std::vector<Bond> bonds;
  bonds.reserve(list.size());
  for (const auto& entry : list) {
    if (!entry.is_array() || entry.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "each bond must be a pair of sites");
    bonds.emplace_back(site_from(entry[0], "bond endpoint"), site_from(entry[1], "bond endpoint"));
  }
  return validate_tree(root, std::move(bonds));
}

std::string to_dot(const RootedTree& tree) {
  std::set<Site> sites;
  for (const Bond& b : tree.bonds()) {
    sites.insert(b.first());
    sites.insert(b.second());
  }
  std::ostringstream out;
  out << "graph tree {\n";
  out << "  node [shape=point];\n";
  for (const Site& s : sites) {
    out << "  \"" << node_name(s) << "\" [pos=\"" << s.x << "," << s.y << "!\"";
    if (s == tree.root()) out << ", shape=circle, style=filled, fillcolor=black, width=0.15, root=true";
    out << "];\n";
  }
  for (const Bond& b : tree.bonds()) {
    out << "  \"" << node_name(b.first()) << "\" -- \"" << node_name(b.second()) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const RootedTree& tree) {
  if (tree.size() > kSvgLimit)
    throw Error(ErrorCode::TooLarge, std::to_string(tree.size()) + " bonds exceed the SVG limit of " +
                                         std::to_string(kSvgLimit));
  constexpr std::int64_t kGrid = 10;
  constexpr std::int64_t kMargin = 10;
  std::int64_t min_x = tree.root().x, max_x = min_x, min_y = tree.root().y, max_y = min_y;
  for (const Bond& b : tree.bonds()) {
    for (const Site& s : {b.first(), b.second()}) {
      min_x = std::min(min_x, s.x);
      max_x = std::max(max_x, s.x);
      min_y = std::min(min_y, s.y);
      max_y = std::max(max_y, s.y);
    }
  }
  const std::int64_t width = (max_x - min_x) * kGrid + 2 * kMargin;
  const std::int64_t height = (max_y - min_y) * kGrid + 2 * kMargin;
  // Lattice +y points up; SVG rows grow downward.
  auto px = [&](const Site& s) { return (s.x - min_x) * kGrid + kMargin; };
  auto py = [&](const Site& s) { return (max_y - s.y) * kGrid + kMargin; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (const Bond& b : tree.bonds()) {
    out << "<line x1=\"" << px(b.first()) << "\" y1=\"" << py(b.first()) << "\" x2=\"" << px(b.second())
        << "\" y2=\"" << py(b.second()) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<circle cx=\"" << px(tree.root()) << "\" cy=\"" << py(tree.root()) << "\" r=\"4\" fill=\"red\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace bouch
