#include <algorithm>
#include <set>

#include "bouch/bethe.hpp"
#include "bouch/error.hpp"
#include "doctest.h"

using namespace bouch;

namespace {

// Subtrees of the 3-regular tree containing the root with L bonds:
// 3/(2L+3) * C(2L+3, L) (three ternary-Catalan slots at the root).
BigCount closed_form_tree_count(std::size_t l) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * l + 3, l);
  return BigCount(mpz_class(3 * binom / (2 * l + 3)));
}

}  // namespace

TEST_CASE("addresses") {
  CHECK(bethe_children("") == std::vector<std::string>{"0", "1", "2"});
  CHECK(bethe_children("2") == std::vector<std::string>{"20", "21"});
  CHECK(bethe_parent("201") == "20");
  CHECK(bethe_parent("1").empty());
  CHECK_THROWS_AS(bethe_parent(""), Error);
}

TEST_CASE("growth sequences follow 3 x 4 x ... x (L+2)") {
  CHECK(bethe_growth_count(1) == BigCount(3));
  CHECK(bethe_growth_count(2) == BigCount(12));
  CHECK(bethe_growth_count(3) == BigCount(60));
  for (std::size_t l = 1; l <= 7; ++l) {
    BigCount product(1);
    for (std::size_t n = 0; n < l; ++n) product *= BigCount(n + 3);
    CHECK(bethe_growth_count(l) == product);
  }
  CHECK_THROWS_AS(bethe_growth_count(9), Error);
  CHECK_THROWS_AS(bethe_growth_count(0), Error);
}

TEST_CASE("distinct subtrees") {
  CHECK(bethe_tree_count(1) == BigCount(3));
  CHECK(bethe_tree_count(2) == BigCount(9));
  for (std::size_t l = 1; l <= 8; ++l) {
    const BigCount n = bethe_tree_count(l);
    CHECK(n == closed_form_tree_count(l));
    CHECK(n <= BigCount::pow(BigCount(9), l));
  }
  const auto trees = bethe_trees(3);
  CHECK(std::set<BetheTree>(trees.begin(), trees.end()).size() == trees.size());
  for (const auto& t : trees) {
    for (const auto& node : t.nodes) {
      const std::string up = bethe_parent(node);
      CHECK((up.empty() || std::find(t.nodes.begin(), t.nodes.end(), up) != t.nodes.end()));
    }
  }
}

TEST_CASE("per-tree counts agree and partition the sequences") {
  for (std::size_t l = 1; l <= 7; ++l) {
    BigCount total(0);
    for (const auto& t : bethe_trees(l)) {
      const BigCount hook = bethe_growth_hook(t);
      CHECK(hook == bethe_growth_enumerated(t));
      total += hook;
    }
    CHECK(total == bethe_growth_count(l));
  }
}

TEST_CASE("existence bound report") {
  const BetheReport r2 = bethe_existence_bound(2);
  CHECK(r2.average_bound == "4/3");
  CHECK(r2.factorial_bound == "2/81");
  CHECK(r2.product_bound == "4/27");
  CHECK(r2.average_exceeds_factorial);
  CHECK(r2.partition_identity);
  // The best 2-bond tree is a pair of root bonds: N = 2.
  CHECK(r2.maximizer_n == BigCount(2));

  const BetheReport r3 = bethe_existence_bound(3);
  CHECK(r3.tree_count == BigCount(28));
  CHECK(r3.average_bound == "15/7");
  CHECK(r3.average_at_least_product);
  CHECK(r3.maximizer_at_least_average);
  CHECK(r3.maximizer == std::vector<std::string>{"0", "1", "2"});
  CHECK(r3.maximizer_n == BigCount(6));
}
