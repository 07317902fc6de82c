#pragma once

// JSON documents exchanged by the command-line tool.
//   nested stream : {"exceptionals": ["2:|01", ...], "tail": "2:|0"}
//   base preorder : {"elements": ["a", ...], "edges": [["a", "b"], ...]}
//   condition     : {"blocks": [["a"], ["b", "c"], ...]}
//   linear order  : {"elements": [...insertion order...], "order": [...ascending...]}

#include <json.hpp>

#include "seaorder/embed.hpp"
#include "seaorder/equity.hpp"
#include "seaorder/prelinearize.hpp"
#include "seaorder/streams.hpp"

namespace seaorder {

using Json = nlohmann::ordered_json;

NestedStream nested_from_json(const Json& j);
Json to_json(const NestedStream& x);

BasePreorder base_from_json(const Json& j);
Condition condition_from_json(const Json& j);
Json to_json(const Condition& c);

struct LinearOrderDoc {
    std::vector<Label> elements;
    std::vector<Label> order;
};

LinearOrderDoc linear_order_from_json(const Json& j);

Json to_json(const WitnessValue& w);
Json to_json(const LawReport& report);
Json to_json(const SignProfile& profile);
Json to_json(const EmbedState& state);
Json to_json(const std::vector<CycleEdge>& cycle);

}  // namespace seaorder
