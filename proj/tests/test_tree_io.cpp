#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "bouch/error.hpp"
#include "bouch/lattice_tree.hpp"
#include "bouch/tree_generators.hpp"
#include "bouch/tree_io.hpp"
#include "doctest.h"

using namespace bouch;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("canonical JSON") {
  CHECK(to_json(path_tree(2)) == "{\"root\":[0,0],\"bonds\":[[[0,0],[1,0]],[[1,0],[2,0]]]}\n");
  CHECK(tree_from_json(to_json(comb_tree(6))) == comb_tree(6));
}

TEST_CASE("property: JSON round trip on random trees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RootedTree t = random_lattice_tree(1 + seed * 3, seed);
    const std::string text = to_json(t);
    CHECK(tree_from_json(text) == t);
    CHECK(to_json(tree_from_json(text)) == text);
  }
}

TEST_CASE("JSON input errors") {
  CHECK(code_of([] { tree_from_json("{"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { tree_from_json("[]"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { tree_from_json(R"({"root":[0,0]})"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { tree_from_json(R"({"root":[0.5,0],"bonds":[[[0,0],[1,0]]]})"); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { tree_from_json(R"({"root":[0,0],"bonds":[[[0,0],[1,0]]],"x":1})"); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { tree_from_json(R"({"root":[0,0],"bonds":[[[0,0],[2,0]]]})"); }) == ErrorCode::NotUnitBond);
  CHECK(code_of([] { tree_from_json(R"({"root":[9,9],"bonds":[[[0,0],[1,0]]]})"); }) == ErrorCode::RootDetached);
  // Non-canonical bond order and endpoint order are accepted and normalized.
  CHECK(tree_from_json(R"({"root":[0,0],"bonds":[[[2,0],[1,0]],[[1,0],[0,0]]]})") == path_tree(2));
}

TEST_CASE("DOT export") {
  const RootedTree t = comb_tree(4);
  const std::string dot = to_dot(t);
  CHECK(dot.rfind("graph tree {", 0) == 0);
  CHECK(count_of(dot, " -- ") == 4);
  CHECK(count_of(dot, "root=true") == 1);
  CHECK(dot.find("\"0_0\" [pos=\"0,0!\", shape=circle") != std::string::npos);

  SUBCASE("round trip preserves the site and edge sets") {
    const RootedTree r = random_lattice_tree(25, 5);
    const std::string text = to_dot(r);
    const std::regex edge(R"re("(-?\d+)_(-?\d+)" -- "(-?\d+)_(-?\d+)")re");
    std::vector<Bond> parsed;
    for (std::sregex_iterator it(text.begin(), text.end(), edge), end; it != end; ++it) {
      parsed.emplace_back(Site{std::stoll((*it)[1]), std::stoll((*it)[2])},
                          Site{std::stoll((*it)[3]), std::stoll((*it)[4])});
    }
    CHECK(validate_tree(r.root(), parsed) == r);
  }
}

TEST_CASE("SVG export") {
  const std::string one = to_svg(path_tree(1));
  CHECK(count_of(one, "<line ") == 1);
  CHECK(count_of(one, "<circle ") == 1);
  CHECK(one.find("stroke-width=\"2\"") != std::string::npos);
  CHECK(one.find("width=\"30\" height=\"20\"") != std::string::npos);
  CHECK(count_of(to_svg(comb_tree(4)), "<line ") == 4);

  SUBCASE("no two segments coincide for the third Bouch generation") {
    const std::string svg = to_svg(bouch_tree(bouch_params(1, 3)));
    std::istringstream lines(svg);
    std::set<std::string> segments;
    std::size_t n = 0;
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("<line ", 0) == 0) {
        ++n;
        segments.insert(line);
      }
    }
    CHECK(n == 768);
    CHECK(segments.size() == 768);
  }
}
