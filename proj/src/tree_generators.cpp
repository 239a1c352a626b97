#include "bouch/tree_generators.hpp"

#include <string>

#include "bouch/error.hpp"

namespace bouch {

namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

mpq_class ratio(const BigCount& num, const BigCount& den) {
  mpq_class q(num.mpz(), den.mpz());
  q.canonicalize();
  return q;
}

BigCount exact_quotient(const BigCount& num, const BigCount& den, const char* what) {
  auto q = num.divide_exact(den);
  require(q.has_value(), ErrorCode::InternalNonDivisible, what);
  return *q;
}

Site rotate_ccw(const Site& d) { return Site{-d.y, d.x}; }

class Embedder {
 public:
  Embedder(std::span<const std::uint64_t> ells, std::span<const std::uint64_t> bs, std::uint64_t total)
      : ells_(ells), bs_(bs), per_generation_(ells.size() + 1, 0) {
    bonds_.reserve(total);
  }

  void emit(std::size_t generation, Site origin, Site dir) {
    const std::uint64_t len = ells_[generation - 1];
    Site at = origin;
    for (std::uint64_t i = 0; i < len; ++i) {
      const Site next{at.x + dir.x, at.y + dir.y};
      bonds_.emplace_back(at, next);
      at = next;
    }
    per_generation_[generation] += len;
    if (generation == 1) return;
    const std::uint64_t branches = bs_[generation - 2];
    const auto spacing = static_cast<std::int64_t>(len / branches);
    const Site branch_dir = rotate_ccw(dir);
    for (std::uint64_t k = 1; k <= branches; ++k) {
      const auto offset = static_cast<std::int64_t>(k) * spacing;
      emit(generation - 1, Site{origin.x + offset * dir.x, origin.y + offset * dir.y}, branch_dir);
    }
  }

  HierarchicalTree finish() && {
    try {
      return HierarchicalTree{validate_tree(Site{0, 0}, std::move(bonds_)), std::move(per_generation_)};
    } catch (const Error& e) {
      throw Error(ErrorCode::OverlapDetected, std::string("embedding is not a tree: ") + e.what());
    }
  }

 private:
  std::span<const std::uint64_t> ells_;
  std::span<const std::uint64_t> bs_;
  std::vector<Bond> bonds_;
  std::vector<std::uint64_t> per_generation_;
};

}  // namespace

BouchParams bouch_params(std::uint64_t a0, std::size_t j) {
  require(a0 >= 1, ErrorCode::InvalidArgument, "a0 must be >= 1");
  require(j >= 1, ErrorCode::InvalidArgument, "generation must be >= 1");

  BouchParams p;
  p.a0 = a0;
  p.j = j;
  p.a.push_back(BigCount(a0));
  for (std::size_t k = 1; k <= j; ++k) {
    const BigCount& prev = p.a.back();
    require(prev <= BigCount(kExactTowerExponentLimit), ErrorCode::TooLarge,
            "a_" + std::to_string(k) + " = 2^a_" + std::to_string(k - 1) + " has too many bits to hold exactly");
    p.a.push_back(BigCount::power_of_two(prev.to_u64()));
  }
  for (const BigCount& a : p.a) p.E.push_back(a * a);

  p.ell.assign(j + 1, BigCount(0));
  p.b.assign(j + 1, BigCount(0));
  p.L.assign(j + 1, BigCount(0));
  p.ell[1] = p.E[1];
  for (std::size_t k = 2; k <= j; ++k) {
    p.ell[k] = exact_quotient(BigCount(4) * p.E[k] * p.E[k - 2], p.E[k - 1], "E_{k-1} does not divide 4 E_k E_{k-2}");
    p.b[k] = exact_quotient(p.E[k], p.E[k - 1], "E_{k-1} does not divide E_k");
  }

  // L_k = E_k (1 + 4 sum_{i=2}^{k} E_{i-2}/E_{i-1}), exact rational that must be integral.
  mpq_class sum = 0;
  for (std::size_t k = 1; k <= j; ++k) {
    if (k >= 2) sum += ratio(p.E[k - 2], p.E[k - 1]);
    mpq_class lk = mpq_class(p.E[k].mpz()) * (1 + 4 * sum);
    lk.canonicalize();
    require(lk.get_den() == 1, ErrorCode::InternalNonDivisible, "L_k is not integral");
    p.L[k] = BigCount(mpz_class(lk.get_num()));
  }

  for (std::size_t k = 1; k <= j; ++k) {
    require(p.E[k] > p.E[k - 1], ErrorCode::InternalMismatch, "E sequence is not strictly increasing");
    if (k < 2) continue;
    require(p.E[k].divisible_by(p.b[k]), ErrorCode::InternalMismatch, "b_k does not divide E_k");
    auto spacing = p.ell[k].divide_exact(p.b[k]);
    require(spacing.has_value() && *spacing == BigCount(4) * p.E[k - 2], ErrorCode::InternalMismatch,
            "l_k / b_k != 4 E_{k-2}");
    if (k >= 3) require(*spacing > p.ell[k - 2], ErrorCode::InternalMismatch, "branch separation condition fails");
  }
  return p;
}

RootedTree path_tree(std::uint64_t length) {
  require(length >= 1, ErrorCode::InvalidArgument, "path length must be >= 1");
  require(length <= kMaterializeLimit, ErrorCode::TooLarge, "path longer than the materialization limit");
  std::vector<Bond> bonds;
  bonds.reserve(length);
  for (std::uint64_t x = 0; x < length; ++x) {
    const auto sx = static_cast<std::int64_t>(x);
    bonds.emplace_back(Site{sx, 0}, Site{sx + 1, 0});
  }
  return validate_tree(Site{0, 0}, std::move(bonds));
}

RootedTree comb_tree(std::uint64_t bonds) {
  require(bonds % 2 == 0, ErrorCode::OddLength, "comb needs an even bond count, got " + std::to_string(bonds));
  require(bonds >= 2, ErrorCode::InvalidArgument, "comb needs at least 2 bonds");
  require(bonds <= kMaterializeLimit, ErrorCode::TooLarge, "comb larger than the materialization limit");
  std::vector<Bond> out;
  out.reserve(bonds);
  for (std::uint64_t x = 1; x <= bonds / 2; ++x) {
    const auto sx = static_cast<std::int64_t>(x);
    out.emplace_back(Site{sx - 1, 0}, Site{sx, 0});
    out.emplace_back(Site{sx, 0}, Site{sx, 1});
  }
  return validate_tree(Site{0, 0}, std::move(out));
}

HierarchicalTree custom_hierarchical_tree(std::span<const std::uint64_t> ells, std::span<const std::uint64_t> bs) {
  const auto name = [](const char* seq, std::size_t gen) { return std::string(seq) + "_" + std::to_string(gen); };
  require(!ells.empty(), ErrorCode::ConstraintViolated, "need at least one backbone length");
  require(bs.size() + 1 == ells.size(), ErrorCode::ConstraintViolated,
          "need exactly one branch count per generation >= 2");
  for (std::size_t g = 1; g <= ells.size(); ++g) {
    require(ells[g - 1] >= 1, ErrorCode::ConstraintViolated, name("l", g) + " must be positive");
    if (g >= 2) {
      require(ells[g - 1] > ells[g - 2], ErrorCode::ConstraintViolated, "l sequence not strictly increasing at " + name("l", g));
      const std::uint64_t b = bs[g - 2];
      require(b >= 1, ErrorCode::ConstraintViolated, name("b", g) + " must be positive");
      require(ells[g - 1] % b == 0, ErrorCode::ConstraintViolated, name("b", g) + " does not divide " + name("l", g));
    }
    if (g >= 3) {
      const std::uint64_t spacing = ells[g - 1] / bs[g - 2];
      require(spacing > ells[g - 3], ErrorCode::ConstraintViolated,
              "branch separation " + name("l", g) + "/" + name("b", g) + " = " + std::to_string(spacing) +
                  " is not greater than " + name("l", g - 2) + " = " + std::to_string(ells[g - 3]));
    }
  }

  // L_g = l_g + b_g L_{g-1}, checked against the guard before anything is built.
  std::uint64_t total = ells[0];
  for (std::size_t g = 2; g <= ells.size(); ++g) {
    const std::uint64_t b = bs[g - 2];
    require(total <= kMaterializeLimit / b, ErrorCode::TooLarge, "tree exceeds the materialization limit");
    total = ells[g - 1] + b * total;
    require(total <= kMaterializeLimit, ErrorCode::TooLarge, "tree exceeds the materialization limit");
  }

  Embedder embedder(ells, bs, total);
  embedder.emit(ells.size(), Site{0, 0}, Site{1, 0});
  return std::move(embedder).finish();
}

HierarchicalTree bouch_tree_with_generations(const BouchParams& params) {
  require(params.L[params.j] <= BigCount(kMaterializeLimit), ErrorCode::TooLarge,
          "L_" + std::to_string(params.j) + " = " +
              (params.L[params.j].bit_length() < 64 ? params.L[params.j].str() : std::string("(huge)")) +
              " exceeds the materialization limit");
  std::vector<std::uint64_t> ells;
  std::vector<std::uint64_t> bs;
  for (std::size_t k = 1; k <= params.j; ++k) {
    ells.push_back(params.ell[k].to_u64());
    if (k >= 2) bs.push_back(params.b[k].to_u64());
  }
  return custom_hierarchical_tree(ells, bs);
}

RootedTree bouch_tree(const BouchParams& params) { return bouch_tree_with_generations(params).tree; }

}  // namespace bouch
