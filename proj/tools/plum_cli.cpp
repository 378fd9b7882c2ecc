// Command-line front end for the plum shared library. Everything
// substantive goes through the C API in plum.h; this file only parses
// arguments, moves bytes, and shapes exit codes:
//   0 success, 1 verification failure, 2 usage/input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plum.h"

namespace {

struct CString {
    char* ptr = nullptr;
    ~CString() { plum_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct GraphHandle {
    plum_graph* g = nullptr;
    ~GraphHandle() { plum_graph_free(g); }
};

int fail_with(plum_status st, const std::string& what) {
    std::cerr << "plum: " << what << ": " << plum_last_error() << "\n";
    (void)st;
    return 2;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "plum: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "plum: cannot write " << path << "\n";
        std::exit(2);
    }
    out << text;
}

int load_graph(const std::string& path, GraphHandle& gh) {
    std::string text = read_input(path);
    plum_status st = plum_graph_from_json(text.c_str(), &gh.g);
    if (st != PLUM_OK) return fail_with(st, "reading graph");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minor-universal planar graph toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "materialize the level-n truncation");
    int gen_n = 0;
    std::string gen_format = "json";
    unsigned long long gen_cap = 0;
    std::string gen_out;
    gen->add_option("-n,--level", gen_n, "truncation level")->required();
    gen->add_option("--format", gen_format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
    gen->add_option("--cap", gen_cap, "vertex cap (default 10^7)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // census
    auto* cen = app.add_subcommand("census", "closed-form V E F of the level-n truncation");
    int cen_n = 0;
    cen->add_option("-n,--level", cen_n, "truncation level")->required();

    // stats
    auto* sta = app.add_subcommand("stats", "count table and face-length histogram");
    int sta_n = 0;
    sta->add_option("-n,--level", sta_n, "truncation level")->required();

    // reduce
    auto* red = app.add_subcommand("reduce", "sub-cubic 2-connected reduction with witness");
    std::string red_in, red_out;
    red->add_option("input", red_in, "graph json ('-' for stdin)")->required();
    red->add_option("--out", red_out, "output file (default stdout)");

    // ears
    auto* ear = app.add_subcommand("ears", "ear decomposition of a 2-connected plane graph");
    std::string ear_in, ear_out;
    unsigned long long ear_seed = 0;
    bool ear_has_seed = false;
    ear->add_option("input", ear_in, "graph json ('-' for stdin)")->required();
    ear->add_option("--seed", ear_seed, "edge-order shuffle seed")
        ->each([&](const std::string&) { ear_has_seed = true; });
    ear->add_option("--out", ear_out, "output file (default stdout)");

    // embed / embed-any
    auto* emb = app.add_subcommand("embed", "minor model of a sub-cubic 2-connected input");
    std::string emb_in, emb_out;
    int emb_depth = -1;
    unsigned long long emb_cap = 0;
    emb->add_option("input", emb_in, "graph json ('-' for stdin)")->required();
    emb->add_option("--max-extra-depth", emb_depth, "routing retry budget (default 12)");
    emb->add_option("--cap", emb_cap, "vertex cap (default 10^7)");
    emb->add_option("--out", emb_out, "model output file (default stdout)");

    auto* emba = app.add_subcommand("embed-any", "minor model of any finite planar input");
    std::string emba_in, emba_out;
    int emba_depth = -1;
    unsigned long long emba_cap = 0;
    emba->add_option("input", emba_in, "graph json ('-' for stdin)")->required();
    emba->add_option("--max-extra-depth", emba_depth, "routing retry budget (default 12)");
    emba->add_option("--cap", emba_cap, "vertex cap (default 10^7)");
    emba->add_option("--out", emba_out, "model output file (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "check a model file (exit 1 on failure)");
    std::string ver_in;
    std::string ver_graph;
    ver->add_option("model", ver_in, "model json ('-' for stdin)")->required();
    ver->add_option("--graph", ver_graph, "input graph json (default: model's input block)");

    // probe-slice
    auto* pro = app.add_subcommand("probe-slice", "sampled slice connectivity probe");
    int pro_n = 0, pro_d = 2, pro_trials = 50;
    unsigned long long pro_seed = 1;
    pro->add_option("-n,--level", pro_n, "slice level")->required();
    pro->add_option("-d,--depth", pro_d, "materialization depth");
    pro->add_option("--trials", pro_trials, "sampled pairs");
    pro->add_option("--seed", pro_seed, "rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        CString out;
        plum_status st = plum_generate_json(gen_n, gen_cap, &out.ptr);
        if (st != PLUM_OK) return fail_with(st, "generate");
        if (gen_format == "dot") {
            GraphHandle gh;
            plum_status gst = plum_graph_from_json(out.ptr, &gh.g);
            if (gst != PLUM_OK) return fail_with(gst, "generate");
            CString dot;
            gst = plum_graph_to_dot(gh.g, &dot.ptr);
            if (gst != PLUM_OK) return fail_with(gst, "generate");
            write_output(gen_out, dot.str());
        } else {
            write_output(gen_out, out.str());
        }
        return 0;
    }

    if (cen->parsed()) {
        unsigned long long vef[3];
        plum_status st = plum_census(cen_n, vef);
        if (st != PLUM_OK) return fail_with(st, "census");
        std::cout << vef[0] << " " << vef[1] << " " << vef[2] << "\n";
        return 0;
    }

    if (sta->parsed()) {
        std::cout << "level V E F\n";
        for (int i = 0; i <= sta_n; ++i) {
            unsigned long long vef[3];
            plum_status st = plum_census(i, vef);
            if (st != PLUM_OK) return fail_with(st, "stats");
            std::cout << i << " " << vef[0] << " " << vef[1] << " " << vef[2] << "\n";
        }
        CString out;
        plum_status st = plum_generate_json(sta_n, 0, &out.ptr);
        if (st != PLUM_OK) return fail_with(st, "stats");
        auto j = nlohmann::json::parse(out.str());
        std::map<std::size_t, std::size_t> hist;
        for (const auto& [face, cyc] : j.at("faces").items()) hist[cyc.size()]++;
        std::cout << "face_length count\n";
        for (auto [len, cnt] : hist) std::cout << len << " " << cnt << "\n";
        return 0;
    }

    if (red->parsed()) {
        GraphHandle gh;
        if (int rc = load_graph(red_in, gh)) return rc;
        CString graph_out, witness_out;
        plum_status st = plum_reduce(gh.g, &graph_out.ptr, &witness_out.ptr);
        if (st != PLUM_OK) return fail_with(st, "reduce");
        nlohmann::json j;
        j["graph"] = nlohmann::json::parse(graph_out.str());
        j["witness"] = nlohmann::json::parse(witness_out.str());
        write_output(red_out, j.dump(2) + "\n");
        return 0;
    }

    if (ear->parsed()) {
        GraphHandle gh;
        if (int rc = load_graph(ear_in, gh)) return rc;
        CString out;
        plum_status st = plum_ears(gh.g, ear_has_seed ? 1 : 0, ear_seed, &out.ptr);
        if (st != PLUM_OK) return fail_with(st, "ears");
        write_output(ear_out, out.str());
        return 0;
    }

    auto run_embed = [&](const std::string& in, const std::string& outfile, int depth,
                         unsigned long long cap, bool any) {
        GraphHandle gh;
        if (int rc = load_graph(in, gh)) return rc;
        CString out;
        plum_status st = any ? plum_embed_any(gh.g, depth, cap, &out.ptr)
                             : plum_embed(gh.g, depth, cap, &out.ptr);
        if (st != PLUM_OK) return fail_with(st, any ? "embed-any" : "embed");
        write_output(outfile, out.str());
        return 0;
    };
    if (emb->parsed()) return run_embed(emb_in, emb_out, emb_depth, emb_cap, false);
    if (emba->parsed()) return run_embed(emba_in, emba_out, emba_depth, emba_cap, true);

    if (ver->parsed()) {
        std::string model = read_input(ver_in);
        std::string graph;
        const char* graph_ptr = nullptr;
        if (!ver_graph.empty()) {
            graph = read_input(ver_graph);
            graph_ptr = graph.c_str();
        }
        CString report;
        int passed = 0;
        plum_status st = plum_check_model(model.c_str(), graph_ptr, &report.ptr, &passed);
        if (st != PLUM_OK) return fail_with(st, "verify");
        std::cout << report.str();
        return passed ? 0 : 1;
    }

    if (pro->parsed()) {
        CString out;
        plum_status st = plum_probe_slice(pro_n, pro_d, pro_trials, pro_seed, &out.ptr);
        if (st != PLUM_OK) return fail_with(st, "probe-slice");
        std::cout << out.str();
        return 0;
    }

    return 2;
}
