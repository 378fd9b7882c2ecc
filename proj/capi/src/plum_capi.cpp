#include "plum.h"

#include <cstring>
#include <string>

#include "plum/ears.hpp"
#include "plum/embed.hpp"
#include "plum/error.hpp"
#include "plum/json_io.hpp"
#include "plum/model.hpp"
#include "plum/planarity.hpp"
#include "plum/plane_graph.hpp"
#include "plum/reduce.hpp"
#include "plum/universal.hpp"
#include "plum/verify.hpp"

using nlohmann::json;

struct plum_graph {
    plum::PlaneGraph g;
};

struct plum_universe {
    plum::Universe u;
    explicit plum_universe(std::uint64_t cap) : u(cap) {}
};

namespace {

thread_local std::string g_last_error;

plum_status status_of(plum::Errc c) {
    using plum::Errc;
    switch (c) {
        case Errc::NonPlanar: return PLUM_ERR_NONPLANAR;
        case Errc::InvalidRotation: return PLUM_ERR_INVALID_ROTATION;
        case Errc::Disconnected: return PLUM_ERR_DISCONNECTED;
        case Errc::MissingEdge: return PLUM_ERR_MISSING_EDGE;
        case Errc::NotTwoConnected: return PLUM_ERR_NOT_TWO_CONNECTED;
        case Errc::TooLarge: return PLUM_ERR_TOO_LARGE;
        case Errc::AlreadyExpanded: return PLUM_ERR_ALREADY_EXPANDED;
        case Errc::NotExpanded: return PLUM_ERR_NOT_EXPANDED;
        case Errc::EqualEnds: return PLUM_ERR_EQUAL_ENDS;
        case Errc::DepthCapExceeded: return PLUM_ERR_DEPTH_CAP;
        case Errc::InternalOrderViolation: return PLUM_ERR_ORDER_VIOLATION;
        case Errc::EarNotInOneFace: return PLUM_ERR_EAR_FACE;
        case Errc::DanglingAddress: return PLUM_ERR_DANGLING_ADDRESS;
        case Errc::CapExceeded: return PLUM_ERR_CAP_EXCEEDED;
        case Errc::Parse: return PLUM_ERR_PARSE;
        case Errc::InvalidArgument: return PLUM_ERR_INVALID_ARGUMENT;
    }
    return PLUM_ERR_INTERNAL;
}

template <class F>
plum_status guard(F&& f) {
    try {
        f();
        return PLUM_OK;
    } catch (const plum::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PLUM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PLUM_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const json& j) { *out = dup_string(plum::dump_json(j)); }

plum::EmbedOptions make_options(int max_extra_depth, unsigned long long vertex_cap) {
    plum::EmbedOptions opt;
    if (max_extra_depth >= 0) opt.max_extra_depth = max_extra_depth;
    if (vertex_cap > 0) opt.vertex_cap = vertex_cap;
    return opt;
}

} // namespace

extern "C" {

const char* plum_version(void) { return "1.0.0"; }

const char* plum_last_error(void) { return g_last_error.c_str(); }

void plum_string_free(char* s) { std::free(s); }

plum_status plum_graph_from_json(const char* text, plum_graph** out) {
    if (!text || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto g = plum::graph_from_json_text(text);
        *out = new plum_graph{std::move(g)};
    });
}

plum_status plum_graph_to_json(const plum_graph* g, char** out) {
    if (!g || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] { emit(out, plum::graph_to_json(g->g)); });
}

plum_status plum_graph_to_dot(const plum_graph* g, char** out) {
    if (!g || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] { *out = dup_string(plum::graph_to_dot(g->g)); });
}

plum_status plum_graph_info_json(const plum_graph* g, char** out) {
    if (!g || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        json j;
        j["vertices"] = g->g.vertex_count();
        j["edges"] = g->g.edge_count();
        j["connected"] = plum::is_connected(g->g);
        j["two_connected"] = plum::is_two_connected(g->g);
        j["subcubic"] = plum::is_subcubic(g->g);
        j["planar_rotation"] = plum::euler_ok(g->g);
        j["faces"] = plum::trace_faces(g->g).size();
        emit(out, j);
    });
}

void plum_graph_free(plum_graph* g) { delete g; }

plum_status plum_census(int level, unsigned long long out[3]) {
    if (!out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto c = plum::census(level);
        out[0] = c[0];
        out[1] = c[1];
        out[2] = c[2];
    });
}

plum_status plum_generate_json(int level, unsigned long long vertex_cap, char** out) {
    if (!out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto t = plum::generate(level, vertex_cap ? vertex_cap : plum::kDefaultVertexCap);
        emit(out, plum::truncation_to_json(t));
    });
}

plum_status plum_universe_new(unsigned long long vertex_cap, plum_universe** out) {
    if (!out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        *out = new plum_universe(vertex_cap ? vertex_cap : plum::kDefaultVertexCap);
    });
}

void plum_universe_free(plum_universe* u) { delete u; }

plum_status plum_universe_expand(plum_universe* u, const char* face, char** out) {
    if (!u || !face || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        plum::FaceId f = plum::FaceId::parse(face);
        u->u.ensure_face(f);
        auto delta = u->u.expand(f);
        json j;
        j["center"] = u->u.address_of(delta.center).str();
        json vs = json::array();
        for (plum::Vertex v : delta.vertices) vs.push_back(u->u.address_of(v).str());
        j["vertices"] = std::move(vs);
        json es = json::array();
        for (auto [a, b] : delta.edges)
            es.push_back(json::array({u->u.address_of(a).str(), u->u.address_of(b).str()}));
        j["edges"] = std::move(es);
        json cs = json::array();
        for (const auto& c : delta.children) cs.push_back(c.str());
        j["children"] = std::move(cs);
        emit(out, j);
    });
}

plum_status plum_universe_diameter(plum_universe* u, const char* face, int end_i, int end_j,
                                   char** out) {
    if (!u || !face || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        plum::FaceId f = plum::FaceId::parse(face);
        u->u.ensure_face(f);
        auto path = u->u.diameter(f, end_i, end_j);
        json j = json::array();
        for (plum::Vertex v : path) j.push_back(u->u.address_of(v).str());
        emit(out, j);
    });
}

plum_status plum_universe_slice(plum_universe* u, const char* face, int has_diameter, int diam_i,
                                int diam_j, int side, int depth, char** out) {
    if (!u || !face || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        plum::SliceRef ref;
        ref.face = plum::FaceId::parse(face);
        ref.has_diameter = has_diameter != 0;
        ref.diam_i = diam_i;
        ref.diam_j = diam_j;
        ref.side = side;
        ref.depth = depth;
        emit(out, plum::extracted_to_json(plum::slice_subgraph(u->u, ref)));
    });
}

plum_status plum_universe_piece(plum_universe* u, const char* face, int depth, int strip,
                                char** out) {
    if (!u || !face || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        plum::FaceId f = plum::FaceId::parse(face);
        emit(out, plum::extracted_to_json(plum::piece(u->u, f, depth, strip != 0)));
    });
}

plum_status plum_reduce(const plum_graph* g, char** out_graph, char** out_witness) {
    if (!g || !out_graph || !out_witness) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto r = plum::reduce(g->g);
        emit(out_graph, plum::graph_to_json(r.graph));
        emit(out_witness, r.witness.to_json());
    });
}

plum_status plum_ears(const plum_graph* g, int use_seed, unsigned long long seed, char** out) {
    if (!g || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        std::optional<std::uint64_t> s;
        if (use_seed) s = seed;
        auto dec = plum::ear_decomposition(g->g, s);
        emit(out, dec.to_json(g->g));
    });
}

plum_status plum_embed(const plum_graph* g, int max_extra_depth, unsigned long long vertex_cap,
                       char** out_model) {
    if (!g || !out_model) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto res = plum::embed(g->g, make_options(max_extra_depth, vertex_cap));
        emit(out_model, plum::model_to_json(res.model, plum::graph_to_json(g->g)));
    });
}

plum_status plum_embed_any(const plum_graph* g, int max_extra_depth,
                           unsigned long long vertex_cap, char** out_model) {
    if (!g || !out_model) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto res = plum::embed_any(g->g, make_options(max_extra_depth, vertex_cap));
        emit(out_model, plum::model_to_json(res.model, plum::graph_to_json(g->g)));
    });
}

plum_status plum_check_model(const char* model_json, const char* input_json, char** out_report,
                             int* passed) {
    if (!model_json || !out_report || !passed) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        json mj = json::parse(model_json, nullptr, false);
        if (mj.is_discarded()) plum::fail(plum::Errc::Parse, "invalid model json");
        auto parsed = plum::model_from_json(mj);
        json ij;
        if (input_json) {
            ij = json::parse(input_json, nullptr, false);
            if (ij.is_discarded()) plum::fail(plum::Errc::Parse, "invalid input json");
        } else {
            if (parsed.input_graph.is_null())
                plum::fail(plum::Errc::Parse, "model has no input block and none was supplied");
            ij = parsed.input_graph;
        }
        plum::PlaneGraph input = plum::graph_from_json(ij);
        auto report = plum::check_model(parsed.model, input);
        *passed = report.passed() ? 1 : 0;
        emit(out_report, report.to_json());
    });
}

plum_status plum_brute_force_minor(const plum_graph* host, const plum_graph* pattern,
                                   int host_cap, int pattern_cap, char** out) {
    if (!host || !pattern || !out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto w = plum::brute_force_minor(host->g, pattern->g, host_cap > 0 ? host_cap : 24,
                                         pattern_cap > 0 ? pattern_cap : 6);
        json j;
        j["is_minor"] = w.has_value();
        if (w) {
            json bs = json::object();
            for (const auto& [v, set] : w->branch_sets) {
                json lst = json::array();
                for (plum::Vertex hv : set) lst.push_back(host->g.label(hv));
                bs[std::to_string(v)] = std::move(lst);
            }
            j["branch_sets"] = std::move(bs);
            json el = json::object();
            for (const auto& [e, link] : w->edge_links)
                el[std::to_string(e.first) + "-" + std::to_string(e.second)] = json::array(
                    {host->g.label(link.first), host->g.label(link.second)});
            j["edge_links"] = std::move(el);
        }
        emit(out, j);
    });
}

plum_status plum_probe_slice(int level, int depth, int trials, unsigned long long seed,
                             char** out) {
    if (!out) return PLUM_ERR_INVALID_ARGUMENT;
    return guard([&] {
        auto rep = plum::slice_connectivity_probe(level, depth, trials, seed);
        emit(out, rep.to_json());
    });
}

} // extern "C"
