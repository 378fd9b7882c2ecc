#include "plum/json_io.hpp"

#include <algorithm>
#include <map>

#include "plum/planarity.hpp"

namespace plum {

using nlohmann::json;

PlaneGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        fail(Errc::Parse, "graph json needs \"vertices\" and \"edges\"");
    std::vector<std::int64_t> labels;
    std::map<std::int64_t, int> index_of;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_number_integer()) fail(Errc::Parse, "vertex ids must be integers");
        std::int64_t id = v.get<std::int64_t>();
        if (index_of.count(id)) fail(Errc::Parse, "duplicate vertex id");
        index_of[id] = static_cast<int>(labels.size());
        labels.push_back(id);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail(Errc::Parse, "edges must be [u,v] pairs");
        std::int64_t a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
        auto ia = index_of.find(a), ib = index_of.find(b);
        if (ia == index_of.end() || ib == index_of.end())
            fail(Errc::Parse, "edge endpoint not in vertices");
        edges.emplace_back(ia->second, ib->second);
    }
    std::vector<std::vector<int>> rotation;
    if (j.contains("rotation") && !j.at("rotation").is_null()) {
        const auto& rj = j.at("rotation");
        if (!rj.is_object()) fail(Errc::Parse, "rotation must be an object");
        rotation.assign(labels.size(), {});
        std::size_t covered = 0;
        for (auto it = rj.begin(); it != rj.end(); ++it) {
            std::int64_t id;
            try {
                id = std::stoll(it.key());
            } catch (...) {
                fail(Errc::Parse, "rotation keys must be vertex ids");
            }
            auto iv = index_of.find(id);
            if (iv == index_of.end()) fail(Errc::Parse, "rotation key not a vertex");
            for (const auto& nb : it.value()) {
                auto inb = index_of.find(nb.get<std::int64_t>());
                if (inb == index_of.end()) fail(Errc::Parse, "rotation neighbor not a vertex");
                rotation[iv->second].push_back(inb->second);
            }
            ++covered;
        }
        if (covered != labels.size())
            fail(Errc::InvalidRotation, "rotation must cover every vertex");
    }
    return build_embedding(labels, edges, rotation);
}

PlaneGraph graph_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::Parse, "invalid json");
    return graph_from_json(j);
}

json graph_to_json(const PlaneGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.label(v));
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) {
        std::int64_t a = g.label(u), b = g.label(v);
        j["edges"].push_back(json::array({std::min(a, b), std::max(a, b)}));
    }
    json rot = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        json lst = json::array();
        for (Vertex w : g.neighbors(v)) lst.push_back(g.label(w));
        rot[std::to_string(g.label(v))] = std::move(lst);
    }
    j["rotation"] = std::move(rot);
    return j;
}

std::string graph_to_dot(const PlaneGraph& g) {
    std::string out = "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0)
            out += "  \"" + std::to_string(g.label(v)) + "\";\n";
    }
    for (auto [u, v] : g.edges()) {
        out += "  \"" + std::to_string(g.label(u)) + "\" -- \"" + std::to_string(g.label(v)) +
               "\";\n";
    }
    out += "}\n";
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace plum
