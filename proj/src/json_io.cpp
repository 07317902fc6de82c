#include "seaorder/json_io.hpp"

#include <algorithm>

#include "seaorder/text.hpp"

namespace seaorder {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::InvalidArgument, std::string("JSON document lacks field '") + key + "'");
    }
    return j.at(key);
}

std::vector<Label> labels(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected an array of labels");
    std::vector<Label> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw Error(ErrorCode::InvalidArgument, "labels must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace

NestedStream nested_from_json(const Json& j) {
    std::vector<UtilityStream> coords;
    for (const auto& s : field(j, "exceptionals")) coords.push_back(parse_stream(s.get<std::string>()));
    return {std::move(coords), parse_stream(field(j, "tail").get<std::string>())};
}

Json to_json(const NestedStream& x) {
    Json coords = Json::array();
    for (const auto& s : x.exceptionals()) coords.push_back(render(s));
    return {{"exceptionals", coords}, {"tail", render(x.tail())}};
}

BasePreorder base_from_json(const Json& j) {
    std::vector<std::pair<Label, Label>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidArgument, "edges must be [x, y] pairs");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return BasePreorder(labels(field(j, "elements")), edges);
}

Condition condition_from_json(const Json& j) {
    std::vector<std::vector<Label>> blocks;
    for (const auto& b : field(j, "blocks")) blocks.push_back(labels(b));
    return Condition(std::move(blocks));
}

Json to_json(const Condition& c) {
    Json blocks = Json::array();
    for (const auto& b : c.blocks()) blocks.push_back(b);
    return {{"blocks", blocks}};
}

LinearOrderDoc linear_order_from_json(const Json& j) {
    LinearOrderDoc doc{labels(field(j, "elements")), labels(field(j, "order"))};
    std::vector<Label> a = doc.elements;
    std::vector<Label> b = doc.order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end()) {
        throw Error(ErrorCode::InvalidArgument, "'order' must list each element exactly once");
    }
    return doc;
}

Json to_json(const WitnessValue& w) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NestedStream>) {
                return to_json(v);
            } else {
                return render(v);
            }
        },
        w);
}

Json to_json(const LawReport& report) {
    Json checks = Json::object();
    for (const auto& [law, n] : report.checks_run) checks[law] = n;
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json witness = Json::array();
        for (const auto& w : v.witness) witness.push_back(to_json(w));
        violations.push_back({{"law", v.law}, {"witness", witness}});
    }
    return {{"checks_run", checks}, {"violation_count", report.violations.size()}, {"violations", violations}};
}

Json to_json(const SignProfile& profile) {
    auto names = [](const std::vector<Comparison>& cs) {
        Json arr = Json::array();
        for (auto c : cs) arr.push_back(to_string(c));
        return arr;
    };
    return {{"preperiod", profile.preperiod},
            {"period", profile.period()},
            {"signs", names(profile.signs)},
            {"prefix", names(profile.prefix)}};
}

Json to_json(const EmbedState& state) {
    Json codes = Json::object();
    for (const auto& l : state.ordered()) codes[l] = state.code(l).bits();
    return codes;
}

Json to_json(const std::vector<CycleEdge>& cycle) {
    Json arr = Json::array();
    for (const auto& e : cycle) arr.push_back({{"from", e.from}, {"to", e.to}, {"source", to_string(e.source)}});
    return arr;
}

}  // namespace seaorder
