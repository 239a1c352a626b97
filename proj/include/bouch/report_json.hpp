#pragma once

#include "bouch/analytics.hpp"
#include "bouch/bethe.hpp"
#include "bouch/big_count.hpp"
#include "json.hpp"

namespace bouch {

using ordered_json = nlohmann::ordered_json;

/// Big integers are emitted as decimal strings; nothing exact goes through
/// a float.
ordered_json count_json(std::size_t bonds, const BigCount& weight, const BigCount& growth);
ordered_json constants_json(const ConstantsReport& c);
ordered_json main_bound_json(const MainBoundReport& r);
ordered_json structure_json(const StructureReport& r);
ordered_json bethe_json(const BetheReport& r);

}  // namespace bouch
