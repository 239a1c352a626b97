#include "bouch/lattice_tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "bouch/error.hpp"

namespace bouch {

namespace {

std::string describe(const Site& s) { return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")"; }

std::string describe(const Bond& b) { return "[" + describe(b.first()) + "," + describe(b.second()) + "]"; }

/// Sites of a bond set with a dense index and per-site incident bonds.
struct SiteGraph {
  std::unordered_map<Site, std::size_t, SiteHash> index;
  std::vector<std::vector<std::size_t>> incident;
  std::vector<std::pair<std::size_t, std::size_t>> ends;

  explicit SiteGraph(std::span<const Bond> bonds) {
    index.reserve(bonds.size() + 1);
    ends.reserve(bonds.size());
    auto id = [&](const Site& s) {
      auto [it, inserted] = index.try_emplace(s, incident.size());
      if (inserted) incident.emplace_back();
      return it->second;
    };
    for (std::size_t i = 0; i < bonds.size(); ++i) {
      const std::size_t u = id(bonds[i].first());
      const std::size_t v = id(bonds[i].second());
      incident[u].push_back(i);
      incident[v].push_back(i);
      ends.emplace_back(u, v);
    }
  }

  std::size_t far_end(std::size_t bond, std::size_t near) const {
    return ends[bond].first == near ? ends[bond].second : ends[bond].first;
  }
};

}  // namespace

Bond::Bond(Site u, Site v) {
  const auto dx = std::llabs(u.x - v.x);
  const auto dy = std::llabs(u.y - v.y);
  if (dx + dy != 1) throw Error(ErrorCode::NotUnitBond, describe(u) + "-" + describe(v) + " is not a unit bond");
  a_ = std::min(u, v);
  b_ = std::max(u, v);
}

std::optional<std::size_t> RootedTree::index_of(const Bond& b) const {
  auto it = std::lower_bound(bonds_.begin(), bonds_.end(), b);
  if (it == bonds_.end() || *it != b) return std::nullopt;
  return static_cast<std::size_t>(it - bonds_.begin());
}

RootedTree validate_tree(Site root, std::vector<Bond> bonds) {
  if (bonds.empty()) throw Error(ErrorCode::EmptyTree, "a rooted tree needs at least one bond");
  std::sort(bonds.begin(), bonds.end());
  if (auto dup = std::adjacent_find(bonds.begin(), bonds.end()); dup != bonds.end())
    throw Error(ErrorCode::DuplicateBond, describe(*dup) + " appears twice");
  if (std::none_of(bonds.begin(), bonds.end(), [&](const Bond& b) { return b.touches(root); }))
    throw Error(ErrorCode::RootDetached, "root " + describe(root) + " is not an endpoint of any bond");

  const SiteGraph graph(bonds);
  const std::size_t n_sites = graph.incident.size();
  if (n_sites <= bonds.size())
    throw Error(ErrorCode::HasCycle, std::to_string(bonds.size()) + " bonds span only " + std::to_string(n_sites) +
                                         " sites");

  std::vector<bool> seen(n_sites, false);
  std::vector<std::size_t> stack{graph.index.at(root)};
  seen[stack.back()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t b : graph.incident[s]) {
      const std::size_t t = graph.far_end(b, s);
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        stack.push_back(t);
      }
    }
  }
  if (reached != n_sites) {
    for (std::size_t i = 0; i < bonds.size(); ++i) {
      if (!seen[graph.ends[i].first])
        throw Error(ErrorCode::NotConnected, describe(bonds[i]) + " is unreachable from the root");
    }
  }
  return RootedTree(root, std::move(bonds));
}

std::vector<Bond> Orientation::children_of(const RootedTree& tree, const Bond& b) const {
  std::vector<Bond> out;
  if (auto i = tree.index_of(b)) {
    for (std::size_t c : children[*i]) out.push_back(tree.bonds()[c]);
  }
  return out;
}

Orientation orient_from_root(const RootedTree& tree) {
  const auto bonds = tree.bonds();
  const SiteGraph graph(bonds);
  Orientation o;
  o.parent.assign(bonds.size(), kNoParent);
  o.children.assign(bonds.size(), {});
  o.order.reserve(bonds.size());

  // Breadth-first over bonds; each entry remembers the site it leads away to.
  std::vector<bool> used(bonds.size(), false);
  std::vector<std::size_t> far(bonds.size());
  const std::size_t root = graph.index.at(tree.root());
  for (std::size_t b : graph.incident[root]) {
    used[b] = true;
    far[b] = graph.far_end(b, root);
    o.order.push_back(b);
  }
  for (std::size_t head = 0; head < o.order.size(); ++head) {
    const std::size_t b = o.order[head];
    for (std::size_t c : graph.incident[far[b]]) {
      if (used[c]) continue;
      used[c] = true;
      far[c] = graph.far_end(c, far[b]);
      o.parent[c] = static_cast<std::ptrdiff_t>(b);
      o.children[b].push_back(c);
      o.order.push_back(c);
    }
  }
  return o;
}

std::uint64_t WeightTable::at(const RootedTree& tree, const Bond& b) const {
  auto i = tree.index_of(b);
  if (!i) throw Error(ErrorCode::InvalidArgument, describe(b) + " is not a bond of the tree");
  return weights[*i];
}

std::vector<std::uint64_t> subtree_sizes(std::span<const std::ptrdiff_t> parent) {
  const std::size_t n = parent.size();
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] == kNoParent) {
      order.push_back(i);
    } else {
      if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= n)
        throw Error(ErrorCode::InvalidArgument, "parent index out of range");
      children[static_cast<std::size_t>(parent[i])].push_back(i);
    }
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t c : children[order[head]]) order.push_back(c);
  }
  if (order.size() != n) throw Error(ErrorCode::HasCycle, "parent links contain a cycle");

  std::vector<std::uint64_t> w(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != kNoParent) w[static_cast<std::size_t>(parent[*it])] += w[*it];
  }
  return w;
}

WeightTable downstream_weights(const RootedTree& tree) {
  const Orientation o = orient_from_root(tree);
  return WeightTable{subtree_sizes(o.parent)};
}

BigCount tree_weight(const RootedTree& tree) { return product(downstream_weights(tree).weights); }

BigCount hook_count(std::span<const std::uint64_t> weights) {
  const BigCount hook = product(weights);
  const BigCount total = BigCount::factorial(weights.size());
  auto n = total.divide_exact(hook);
  if (!n) throw Error(ErrorCode::InternalNonDivisible, "L! is not divisible by the weight product");
  return *n;
}

BigCount growth_count(const RootedTree& tree) { return hook_count(downstream_weights(tree).weights); }

namespace {

/// Depth-first search over addition sequences. A bond may be added once one
/// of its endpoints has been reached; the root is reached from the start.
class GrowthSearch {
 public:
  explicit GrowthSearch(const RootedTree& tree) : graph_(tree.bonds()) {
    reached_.assign(graph_.incident.size(), 0);
    reached_[graph_.index.at(tree.root())] = 1;
    added_.assign(tree.size(), false);
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    sequence_.clear();
    descend(leaf);
  }

 private:
  template <class Leaf>
  void descend(Leaf& leaf) {
    if (sequence_.size() == added_.size()) {
      leaf(std::span<const std::size_t>(sequence_));
      return;
    }
    for (std::size_t b = 0; b < added_.size(); ++b) {
      if (added_[b]) continue;
      const auto [u, v] = graph_.ends[b];
      if (reached_[u] == 0 && reached_[v] == 0) continue;
      added_[b] = true;
      ++reached_[u];
      ++reached_[v];
      sequence_.push_back(b);
      descend(leaf);
      sequence_.pop_back();
      --reached_[u];
      --reached_[v];
      added_[b] = false;
    }
  }

  SiteGraph graph_;
  std::vector<std::uint32_t> reached_;
  std::vector<bool> added_;
  std::vector<std::size_t> sequence_;
};

}  // namespace

BigCount enumerate_growth_orders(const RootedTree& tree, std::optional<BigCount> cap) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  if (cap && cap->fits_u64()) limit = cap->to_u64();
  std::uint64_t count = 0;
  GrowthSearch search(tree);
  search.run([&](std::span<const std::size_t>) {
    if (count == std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorCode::TooLarge, "growth-order count overflowed 64 bits");
    ++count;
    if (count > limit) throw Error(ErrorCode::CapExceeded, "more than " + cap->str() + " growth orders");
  });
  return BigCount(count);
}

void for_each_growth_order(const RootedTree& tree, std::uint64_t cap,
                           const std::function<void(std::span<const std::size_t>)>& visit) {
  std::uint64_t count = 0;
  GrowthSearch search(tree);
  search.run([&](std::span<const std::size_t> seq) {
    if (count == cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " growth orders");
    ++count;
    visit(seq);
  });
}

RootedTree random_lattice_tree(std::size_t bonds, std::uint64_t seed) {
  if (bonds == 0) throw Error(ErrorCode::InvalidArgument, "a tree needs at least one bond");
  static constexpr Site kSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::mt19937_64 rng(seed);
  std::unordered_set<Site, SiteHash> used;
  std::vector<std::pair<Site, Site>> candidates;
  std::vector<Bond> out;
  out.reserve(bonds);

  auto occupy = [&](const Site& s) {
    used.insert(s);
    for (const Site& d : kSteps) {
      const Site t{s.x + d.x, s.y + d.y};
      if (!used.contains(t)) candidates.emplace_back(s, t);
    }
  };
  occupy(Site{0, 0});
  while (out.size() < bonds) {
    // Candidates whose far site was taken later are discarded on draw; the
    // rejection keeps the choice uniform over the legal extensions.
    if (candidates.empty())
      throw Error(ErrorCode::Stuck, "no legal extension after " + std::to_string(out.size()) + " bonds");
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const std::size_t i = pick(rng);
    const auto [from, to] = candidates[i];
    candidates[i] = candidates.back();
    candidates.pop_back();
    if (used.contains(to)) continue;
    out.emplace_back(from, to);
    occupy(to);
  }
  return validate_tree(Site{0, 0}, std::move(out));
}

}  // namespace bouch
