#include "bouch/bethe.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bouch/error.hpp"
#include "bouch/lattice_tree.hpp"

namespace bouch {

namespace {

void guard(std::size_t bonds) {
  if (bonds < 1) throw Error(ErrorCode::InvalidArgument, "need at least one bond");
  if (bonds > kBetheLimit)
    throw Error(ErrorCode::TooLarge, "Bethe enumeration is limited to " + std::to_string(kBetheLimit) + " bonds");
}

std::uint64_t count_sequences(std::vector<std::string>& frontier, std::size_t remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const std::string chosen = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    const auto kids = bethe_children(chosen);
    frontier.insert(frontier.end(), kids.begin(), kids.end());
    total += count_sequences(frontier, remaining - 1);
    frontier.resize(frontier.size() - kids.size());
    frontier.push_back(chosen);
    std::swap(frontier[i], frontier.back());
  }
  return total;
}

mpq_class as_fraction(const BigCount& num, const BigCount& den) {
  mpq_class q(num.mpz(), den.mpz());
  q.canonicalize();
  return q;
}

std::string fraction_string(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::vector<std::string> bethe_children(const std::string& address) {
  if (address.empty()) return {"0", "1", "2"};
  return {address + "0", address + "1"};
}

std::string bethe_parent(const std::string& address) {
  if (address.empty()) throw Error(ErrorCode::InvalidArgument, "the root has no parent");
  return address.substr(0, address.size() - 1);
}

BigCount bethe_growth_count(std::size_t bonds) {
  guard(bonds);
  std::vector<std::string> frontier = bethe_children("");
  return BigCount(count_sequences(frontier, bonds));
}

std::vector<BetheTree> bethe_trees(std::size_t bonds) {
  guard(bonds);
  std::set<std::vector<std::string>> layer{{}};
  for (std::size_t n = 0; n < bonds; ++n) {
    std::set<std::vector<std::string>> next;
    for (const auto& tree : layer) {
      std::set<std::string> present(tree.begin(), tree.end());
      std::vector<std::string> slots = bethe_children("");
      for (const auto& node : tree) {
        for (auto& kid : bethe_children(node)) slots.push_back(std::move(kid));
      }
      for (const auto& slot : slots) {
        if (present.contains(slot)) continue;
        auto grown = tree;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), slot), slot);
        next.insert(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::vector<BetheTree> out;
  out.reserve(layer.size());
  for (const auto& nodes : layer) out.push_back(BetheTree{nodes});
  return out;
}

BigCount bethe_tree_count(std::size_t bonds) {
  const BigCount count(bethe_trees(bonds).size());
  const BigCount nine_l = BigCount::pow(BigCount(9), bonds);
  if (count > nine_l) throw Error(ErrorCode::BoundViolated, "more distinct trees than 9^L");
  return count;
}

BigCount bethe_growth_enumerated(const BetheTree& tree) {
  const std::set<std::string> members(tree.nodes.begin(), tree.nodes.end());
  std::vector<std::string> frontier;
  for (auto& kid : bethe_children("")) {
    if (members.contains(kid)) frontier.push_back(std::move(kid));
  }
  // Same search as the lattice count, restricted to the tree's own bonds.
  std::uint64_t total = 0;
  auto descend = [&](auto& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      ++total;
      return;
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::string chosen = frontier[i];
      frontier[i] = frontier.back();
      frontier.pop_back();
      std::size_t added = 0;
      for (auto& kid : bethe_children(chosen)) {
        if (members.contains(kid)) {
          frontier.push_back(std::move(kid));
          ++added;
        }
      }
      self(self, remaining - 1);
      frontier.resize(frontier.size() - added);
      frontier.push_back(chosen);
      std::swap(frontier[i], frontier.back());
    }
  };
  descend(descend, tree.nodes.size());
  return BigCount(total);
}

BigCount bethe_growth_hook(const BetheTree& tree) {
  std::map<std::string, std::ptrdiff_t> index;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) index[tree.nodes[i]] = static_cast<std::ptrdiff_t>(i);
  std::vector<std::ptrdiff_t> parent(tree.nodes.size(), kNoParent);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const std::string up = bethe_parent(tree.nodes[i]);
    if (up.empty()) continue;
    auto it = index.find(up);
    if (it == index.end()) throw Error(ErrorCode::NotConnected, "node " + tree.nodes[i] + " has no parent in the tree");
    parent[i] = it->second;
  }
  return hook_count(subtree_sizes(parent));
}

BetheReport bethe_existence_bound(std::size_t bonds) {
  guard(bonds);
  BetheReport r;
  r.bonds = bonds;
  r.growth_count = bethe_growth_count(bonds);
  const auto trees = bethe_trees(bonds);
  r.tree_count = BigCount(trees.size());

  BigCount partition_sum(0);
  const BetheTree* best = nullptr;
  for (const auto& t : trees) {
    BigCount n = bethe_growth_hook(t);
    partition_sum += n;
    if (best == nullptr || n > r.maximizer_n) {
      best = &t;
      r.maximizer_n = std::move(n);
    }
  }
  r.maximizer = best->nodes;
  r.partition_identity = partition_sum == r.growth_count;

  const BigCount nine_l = BigCount::pow(BigCount(9), bonds);
  const mpq_class average = as_fraction(r.growth_count, r.tree_count);
  const mpq_class product_form = as_fraction(BigCount::factorial(bonds + 2), BigCount(2) * nine_l);
  const mpq_class factorial = as_fraction(BigCount::factorial(bonds), nine_l);
  r.average_bound = fraction_string(average);
  r.product_bound = fraction_string(product_form);
  r.factorial_bound = fraction_string(factorial);
  r.tree_count_within_9L = r.tree_count <= nine_l;
  r.average_at_least_product = average >= product_form;
  r.average_exceeds_factorial = average > factorial;
  r.maximizer_at_least_average = mpq_class(r.maximizer_n.mpz()) >= average;
  return r;
}

}  // namespace bouch
