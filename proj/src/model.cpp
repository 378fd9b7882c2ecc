#include "plum/model.hpp"

namespace plum {

using nlohmann::json;

json model_to_json(const MinorModel& m, const json& input_graph) {
    json j;
    j["input"] = input_graph;
    json bs = json::object();
    json levels = json::object();
    for (const auto& [v, set] : m.branch_sets) {
        json lst = json::array();
        int deepest = 0;
        for (const GAddress& a : set) {
            lst.push_back(a.str());
            deepest = std::max(deepest, a.level());
        }
        bs[std::to_string(v)] = std::move(lst);
        levels[std::to_string(v)] = deepest;
    }
    j["branch_sets"] = std::move(bs);
    j["host_level_map"] = std::move(levels);
    json bp = json::object();
    for (const auto& [e, path] : m.branch_paths) {
        json lst = json::array();
        for (const GAddress& a : path) lst.push_back(a.str());
        bp[std::to_string(e.first) + "-" + std::to_string(e.second)] = std::move(lst);
    }
    j["branch_paths"] = std::move(bp);
    return j;
}

ParsedModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("branch_sets") || !j.contains("branch_paths"))
        fail(Errc::Parse, "model json needs branch_sets and branch_paths");
    ParsedModel out;
    if (j.contains("input")) out.input_graph = j.at("input");
    for (auto it = j.at("branch_sets").begin(); it != j.at("branch_sets").end(); ++it) {
        std::int64_t v;
        try {
            v = std::stoll(it.key());
        } catch (...) {
            fail(Errc::Parse, "branch set keys must be vertex ids");
        }
        auto& set = out.model.branch_sets[v];
        for (const auto& s : it.value()) set.push_back(GAddress::parse(s.get<std::string>()));
    }
    for (auto it = j.at("branch_paths").begin(); it != j.at("branch_paths").end(); ++it) {
        auto key = it.key();
        auto dash = key.find('-', 1); // labels may be negative
        if (dash == std::string::npos) fail(Errc::Parse, "branch path keys look like u-v");
        std::int64_t a, b;
        try {
            a = std::stoll(key.substr(0, dash));
            b = std::stoll(key.substr(dash + 1));
        } catch (...) {
            fail(Errc::Parse, "branch path keys look like u-v");
        }
        auto& path = out.model.branch_paths[{a, b}];
        for (const auto& s : it.value()) path.push_back(GAddress::parse(s.get<std::string>()));
    }
    return out;
}

} // namespace plum
