#include "bouch/report_json.hpp"

namespace bouch {

ordered_json count_json(std::size_t bonds, const BigCount& weight, const BigCount& growth) {
  ordered_json j;
  j["L"] = bonds;
  j["W"] = weight.str();
  j["N"] = growth.str();
  return j;
}

ordered_json constants_json(const ConstantsReport& c) {
  ordered_json j;
  j["a0"] = c.a0;
  j["epsilon0"] = c.epsilon0;
  j["epsilon0TailBound"] = c.epsilon0_tail_bound;
  j["C1"] = c.C1;
  j["C1TailBound"] = c.C1_tail_bound;
  j["logW1PerE1"] = c.log_w1_per_e1;
  j["C2"] = c.C2;
  j["C"] = c.C;  // null when exp(C2) overflows
  j["truncationK"] = c.truncation_k;
  auto terms = ordered_json::array();
  for (const auto& t : c.terms) terms.push_back({{"k", t.k}, {"aKm2", t.a_km2}, {"term", t.term}});
  j["terms"] = std::move(terms);
  return j;
}

ordered_json main_bound_json(const MainBoundReport& r) {
  ordered_json j;
  j["a0"] = r.a0;
  j["j"] = r.j;
  j["mode"] = r.mode == BoundMode::Exact ? "exact" : "log";
  if (r.bond_count) j["L"] = *r.bond_count;
  j["LOverE"] = r.l_over_e;
  j["logWPerE"] = r.log_w_per_e;
  j["C2"] = r.C2;
  j["tightC2"] = r.tight_C2;
  j["marginPerBond"] = r.margin_per_bond;
  if (r.log_n) j["logN"] = *r.log_n;
  if (r.log_n_lower) j["logNLower"] = *r.log_n_lower;
  j["passed"] = r.passed;
  return j;
}

ordered_json structure_json(const StructureReport& r) {
  ordered_json j;
  j["exact"] = r.exact;
  if (r.exact && r.l_over_e_exact.size() <= 256) j["LOverEExact"] = r.l_over_e_exact;
  j["LOverE"] = r.l_over_e;
  j["firstGenerationFraction"] = r.first_generation_fraction;
  j["backboneFraction"] = r.backbone_fraction;
  j["backboneFractionBound"] = r.backbone_fraction_bound;
  j["eleHolds"] = r.ele_holds;
  j["backboneHolds"] = r.backbone_holds;
  return j;
}

ordered_json bethe_json(const BetheReport& r) {
  ordered_json j;
  j["L"] = r.bonds;
  j["growthCount"] = r.growth_count.str();
  j["treeCount"] = r.tree_count.str();
  j["averageBound"] = r.average_bound;
  j["productBound"] = r.product_bound;
  j["factorialBound"] = r.factorial_bound;
  j["maximizerAddressList"] = r.maximizer;
  j["maximizerN"] = r.maximizer_n.str();
  j["partitionIdentity"] = r.partition_identity;
  return j;
}

}  // namespace bouch
