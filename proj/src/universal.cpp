#include "plum/universal.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace plum {

// ---------------------------------------------------------------------
// FaceId / GAddress
// ---------------------------------------------------------------------

bool FaceId::is_prefix_of(const FaceId& other) const {
    if (root != other.root || path.size() > other.path.size()) return false;
    return std::equal(path.begin(), path.end(), other.path.begin());
}

std::string FaceId::str() const {
    std::string s(1, root == 0 ? 'A' : 'B');
    for (auto k : path) {
        s += '.';
        s += std::to_string(k);
    }
    return s;
}

namespace {

int parse_int(std::string_view sv, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc() || p != sv.data() + sv.size() || value < 0)
        fail(Errc::Parse, std::string("bad ") + what + " in address");
    return value;
}

} // namespace

FaceId FaceId::parse(const std::string& s) {
    if (s.empty() || (s[0] != 'A' && s[0] != 'B')) fail(Errc::Parse, "face path must start A|B");
    FaceId f;
    f.root = s[0] == 'A' ? 0 : 1;
    std::size_t i = 1;
    while (i < s.size()) {
        if (s[i] != '.') fail(Errc::Parse, "face path separator must be '.'");
        std::size_t j = s.find('.', i + 1);
        if (j == std::string::npos) j = s.size();
        int k = parse_int(std::string_view(s).substr(i + 1, j - i - 1), "child index");
        int parent_depth = f.depth();
        int limit = 2 * parent_depth + 3; // boundary edges of the parent
        if (k >= limit) fail(Errc::Parse, "child index out of range for its depth");
        f.path.push_back(static_cast<std::uint16_t>(k));
        i = j;
    }
    return f;
}

std::string GAddress::str() const {
    switch (kind) {
        case Kind::Base: return "B:" + std::to_string(base);
        case Kind::Center: return "C:" + face.str();
        case Kind::Sub:
            return "S:" + face.str() + ":" + std::to_string(spoke) + ":" + std::to_string(pos);
    }
    return {};
}

GAddress GAddress::parse(const std::string& s) {
    if (s.size() < 3 || s[1] != ':') fail(Errc::Parse, "bad address");
    char tag = s[0];
    std::string rest = s.substr(2);
    if (tag == 'B') {
        int i = parse_int(rest, "base index");
        if (i > 2) fail(Errc::Parse, "base index out of range");
        return mk_base(i);
    }
    if (tag == 'C') return mk_center(FaceId::parse(rest));
    if (tag == 'S') {
        auto c1 = rest.find(':');
        auto c2 = rest.rfind(':');
        if (c1 == std::string::npos || c2 == c1) fail(Errc::Parse, "bad spoke address");
        FaceId f = FaceId::parse(rest.substr(0, c1));
        int spoke = parse_int(std::string_view(rest).substr(c1 + 1, c2 - c1 - 1), "spoke");
        int pos = parse_int(std::string_view(rest).substr(c2 + 1), "pos");
        int m = 2 * f.depth() + 3;
        if (spoke >= m) fail(Errc::Parse, "spoke index out of range");
        if (pos < 1 || pos > f.depth() + 1) fail(Errc::Parse, "pos out of range");
        return mk_sub(std::move(f), spoke, pos);
    }
    fail(Errc::Parse, "unknown address tag");
}

// ---------------------------------------------------------------------
// census
// ---------------------------------------------------------------------

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::TooLarge, "census overflows 64 bits");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::TooLarge, "census overflows 64 bits");
    return r;
}

} // namespace

std::array<std::uint64_t, 3> census(int n) {
    if (n < 0) fail(Errc::InvalidArgument, "census: negative level");
    std::uint64_t V = 3, E = 3, F = 2;
    for (int k = 1; k <= n; ++k) {
        std::uint64_t kk = static_cast<std::uint64_t>(k);
        std::uint64_t per_face_v = checked_add(1, checked_mul(kk, 2 * kk + 1));
        V = checked_add(V, checked_mul(F, per_face_v));
        E = checked_add(E, checked_mul(F, checked_mul(2 * kk + 1, kk + 1)));
        F = checked_mul(F, 2 * kk + 1);
    }
    return {V, E, F};
}

// ---------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------

Universe::Universe(std::uint64_t vertex_cap) : cap_(vertex_cap) {
    Vertex b0 = new_vertex(GAddress::mk_base(0));
    Vertex b1 = new_vertex(GAddress::mk_base(1));
    Vertex b2 = new_vertex(GAddress::mk_base(2));
    graph_.add_edge(b0, b1);
    graph_.add_edge(b1, b2);
    graph_.add_edge(b2, b0);
    // rotations are [b1,b2], [b2,b0], [b0,b1]: tracing yields the walks
    // (b0,b1,b2) and (b0,b2,b1), the two root faces
    FaceRec a;
    a.id = FaceId{0, {}};
    a.boundary = {b0, b1, b2};
    FaceRec b;
    b.id = FaceId{1, {}};
    b.boundary = {b0, b2, b1};
    faces_.emplace(a.id, std::move(a));
    faces_.emplace(b.id, std::move(b));
}

Vertex Universe::new_vertex(const GAddress& a) {
    if (static_cast<std::uint64_t>(graph_.vertex_count()) >= cap_)
        fail(Errc::TooLarge, "vertex cap exceeded");
    Vertex v = graph_.add_vertex(static_cast<std::int64_t>(graph_.vertex_count()));
    addr_of_.push_back(a);
    vertex_of_.emplace(a, v);
    return v;
}

Vertex Universe::vertex_of(const GAddress& a) const {
    auto it = vertex_of_.find(a);
    return it == vertex_of_.end() ? kNoVertex : it->second;
}

Vertex Universe::require_vertex(const GAddress& a) {
    Vertex v = vertex_of(a);
    if (v != kNoVertex) return v;
    if (a.kind == GAddress::Kind::Base) fail(Errc::DanglingAddress, "base vertex missing");
    ensure_expanded(a.face);
    v = vertex_of(a);
    if (v == kNoVertex) fail(Errc::DanglingAddress, "address invalid for its face: " + a.str());
    return v;
}

const Universe::FaceRec& Universe::face(const FaceId& f) const {
    auto it = faces_.find(f);
    if (it == faces_.end()) fail(Errc::NotExpanded, "face not materialized: " + f.str());
    return it->second;
}

Universe::ExpandDelta Universe::expand(const FaceId& f) {
    auto it = faces_.find(f);
    if (it == faces_.end()) fail(Errc::NotExpanded, "face not materialized: " + f.str());
    FaceRec& rec = it->second;
    if (rec.expanded) fail(Errc::AlreadyExpanded, "face already expanded: " + f.str());

    int d = f.depth();
    int m = static_cast<int>(rec.boundary.size());
    assert(m == 2 * d + 3);
    int subdiv = d + 1;

    std::uint64_t projected = 1 + static_cast<std::uint64_t>(m) * subdiv;
    if (static_cast<std::uint64_t>(graph_.vertex_count()) + projected > cap_)
        fail(Errc::TooLarge, "vertex cap exceeded");

    ExpandDelta delta;
    Vertex center = new_vertex(GAddress::mk_center(f));
    delta.center = center;
    delta.vertices.push_back(center);

    // spoke vertices, pos 1 at the center, pos subdiv at the boundary
    std::vector<std::vector<Vertex>> spoke(m);
    for (int s = 0; s < m; ++s) {
        spoke[s].resize(subdiv + 1);
        spoke[s][0] = center;
        for (int p = 1; p <= subdiv; ++p) {
            spoke[s][p] = new_vertex(GAddress::mk_sub(f, s, p));
            delta.vertices.push_back(spoke[s][p]);
        }
    }
    // center's rotation lists first spoke vertices in decreasing spoke
    // order; that makes the traced child walks match the records below
    for (int s = m - 1; s >= 0; --s) {
        graph_.add_edge(center, spoke[s][1]);
        delta.edges.emplace_back(center, spoke[s][1]);
    }
    for (int s = 0; s < m; ++s) {
        for (int p = 1; p < subdiv; ++p) {
            graph_.add_edge(spoke[s][p], spoke[s][p + 1]);
            delta.edges.emplace_back(spoke[s][p], spoke[s][p + 1]);
        }
        // attach to the boundary: enter b_s's rotation right after the
        // previous boundary vertex, i.e. inside this face's corner
        Vertex bs = rec.boundary[s];
        Vertex prev = rec.boundary[(s + m - 1) % m];
        graph_.add_edge_after(spoke[s][subdiv], kNoVertex, bs, prev);
        delta.edges.emplace_back(spoke[s][subdiv], bs);
    }

    // child k sits on boundary edge (b_k, b_{k+1})
    for (int k = 0; k < m; ++k) {
        FaceRec child;
        child.id = f.child(k);
        auto& cyc = child.boundary;
        if (k < m - 1) {
            cyc.push_back(rec.boundary[k]);
            cyc.push_back(rec.boundary[k + 1]);
            for (int p = subdiv; p >= 1; --p) cyc.push_back(spoke[k + 1][p]);
            cyc.push_back(center);
            for (int p = 1; p <= subdiv; ++p) cyc.push_back(spoke[k][p]);
        } else {
            cyc.push_back(rec.boundary[0]);
            for (int p = subdiv; p >= 1; --p) cyc.push_back(spoke[0][p]);
            cyc.push_back(center);
            for (int p = 1; p <= subdiv; ++p) cyc.push_back(spoke[m - 1][p]);
            cyc.push_back(rec.boundary[m - 1]);
        }
        assert(static_cast<int>(cyc.size()) == 2 * (d + 1) + 3);
        delta.children.push_back(child.id);
        faces_.emplace(child.id, std::move(child));
    }

    rec.expanded = true;
    rec.center = center;
    return delta;
}

void Universe::ensure_face(const FaceId& f) {
    if (faces_.count(f)) return;
    if (f.depth() == 0) fail(Errc::InvalidArgument, "root face missing"); // roots always exist
    FaceId p = f.parent();
    ensure_face(p);
    if (!faces_.at(p).expanded) expand(p);
    if (!faces_.count(f)) fail(Errc::DanglingAddress, "face id invalid: " + f.str());
}

void Universe::ensure_expanded(const FaceId& f) {
    ensure_face(f);
    if (!faces_.at(f).expanded) expand(f);
}

void Universe::expand_region(const FaceId& f, int target_level) {
    ensure_face(f);
    if (f.depth() >= target_level) return;
    ensure_expanded(f);
    int m = 2 * f.depth() + 3;
    for (int k = 0; k < m; ++k) expand_region(f.child(k), target_level);
}

std::vector<Vertex> Universe::diameter(const FaceId& f, int end_i, int end_j) const {
    const FaceRec& rec = face(f);
    if (!rec.expanded) fail(Errc::NotExpanded, "diameter needs the face expanded: " + f.str());
    int m = static_cast<int>(rec.boundary.size());
    if (end_i == end_j) fail(Errc::EqualEnds, "diameter ends must differ");
    if (end_i < 0 || end_i >= m || end_j < 0 || end_j >= m)
        fail(Errc::InvalidArgument, "diameter end out of range");
    int subdiv = f.depth() + 1;
    std::vector<Vertex> path;
    path.push_back(rec.boundary[end_i]);
    for (int p = subdiv; p >= 1; --p) path.push_back(vertex_of(GAddress::mk_sub(f, end_i, p)));
    path.push_back(rec.center);
    for (int p = 1; p <= subdiv; ++p) path.push_back(vertex_of(GAddress::mk_sub(f, end_j, p)));
    path.push_back(rec.boundary[end_j]);
    return path;
}

std::vector<FaceId> Universe::faces_at_level(int level) const {
    std::vector<FaceId> out;
    for (const auto& [id, rec] : faces_)
        if (id.depth() == level) out.push_back(id);
    return out;
}

std::vector<FaceId> Universe::leaf_faces() const {
    std::vector<FaceId> out;
    for (const auto& [id, rec] : faces_)
        if (!rec.expanded) out.push_back(id);
    return out;
}

bool address_inside_region(const GAddress& a, const FaceId& f) {
    if (a.kind == GAddress::Kind::Base) return false;
    return f.is_prefix_of(a.face);
}

int address_child_index(const GAddress& a, const FaceId& f) {
    assert(address_inside_region(a, f));
    if (a.face.depth() == f.depth()) return -1; // on f's own wheel
    return a.face.path[f.depth()];
}

// ---------------------------------------------------------------------
// generate / slice / piece
// ---------------------------------------------------------------------

Truncation generate(int level, std::uint64_t vertex_cap) {
    if (level < 0) fail(Errc::InvalidArgument, "generate: negative level");
    auto c = census(level);
    if (c[0] > vertex_cap) fail(Errc::TooLarge, "projected vertex count exceeds cap");
    Truncation t;
    t.level = level;
    t.universe = std::make_shared<Universe>(vertex_cap);
    t.universe->expand_region(FaceId{0, {}}, level);
    t.universe->expand_region(FaceId{1, {}}, level);
    assert(static_cast<std::uint64_t>(t.universe->graph().vertex_count()) == c[0]);
    return t;
}

namespace {

Extracted extract(Universe& u, const std::vector<Vertex>& keep,
                  const std::vector<std::pair<Vertex, Vertex>>& banned_edges) {
    const PlaneGraph& host = u.graph();
    std::vector<Vertex> verts = keep;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::map<Vertex, Vertex> local;
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<Vertex>(i);
    std::set<std::pair<Vertex, Vertex>> banned;
    for (auto [a, b] : banned_edges) banned.insert({std::min(a, b), std::max(a, b)});

    std::vector<std::vector<Vertex>> rot(verts.size());
    std::vector<std::int64_t> labels(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        Vertex hv = verts[i];
        labels[i] = host.label(hv);
        for (Vertex w : host.neighbors(hv)) {
            auto it = local.find(w);
            if (it == local.end()) continue;
            if (banned.count({std::min(hv, w), std::max(hv, w)})) continue;
            rot[i].push_back(it->second);
        }
    }
    Extracted e;
    e.graph = PlaneGraph::from_rotations(std::move(rot), std::move(labels));
    e.host_vertex = verts;
    e.address.reserve(verts.size());
    for (Vertex hv : verts) e.address.push_back(u.address_of(hv));
    return e;
}

} // namespace

Extracted slice_subgraph(Universe& u, const SliceRef& s) {
    if (s.depth < 1) fail(Errc::InvalidArgument, "slice depth must be >= 1");
    u.ensure_face(s.face);
    int level = s.face.depth();
    u.expand_region(s.face, level + s.depth);
    const auto& rec = u.face(s.face);
    int m = static_cast<int>(rec.boundary.size());

    int lo = 0, hi = 0;
    if (s.has_diameter) {
        lo = std::min(s.diam_i, s.diam_j);
        hi = std::max(s.diam_i, s.diam_j);
        if (lo == hi) fail(Errc::EqualEnds, "diameter ends must differ");
        if (lo < 0 || hi >= m) fail(Errc::InvalidArgument, "diameter end out of range");
    }

    std::vector<Vertex> keep;
    std::vector<std::pair<Vertex, Vertex>> banned;

    auto spoke_on_side = [&](int sp) {
        // spokes lo and hi lie on the diameter itself (kept, in both sides)
        if (sp == lo || sp == hi) return true;
        bool inside = lo < sp && sp < hi;
        return s.side == 0 ? inside : !inside;
    };
    auto child_on_side = [&](int k) {
        bool inside = lo <= k && k < hi;
        return s.side == 0 ? inside : !inside;
    };

    if (!s.has_diameter) {
        for (Vertex b : rec.boundary) keep.push_back(b);
        for (int k = 0; k < m; ++k)
            banned.emplace_back(rec.boundary[k], rec.boundary[(k + 1) % m]);
    } else {
        // boundary arc of the chosen side, plus the full diameter
        if (s.side == 0) {
            for (int k = lo; k <= hi; ++k) keep.push_back(rec.boundary[k]);
            for (int k = lo; k < hi; ++k)
                banned.emplace_back(rec.boundary[k], rec.boundary[k + 1]);
        } else {
            for (int k = hi; k != lo; k = (k + 1) % m) keep.push_back(rec.boundary[k]);
            keep.push_back(rec.boundary[lo]);
            for (int k = hi; k != lo; k = (k + 1) % m)
                banned.emplace_back(rec.boundary[k], rec.boundary[(k + 1) % m]);
        }
        auto D = u.diameter(s.face, lo, hi);
        for (Vertex v : D) keep.push_back(v);
        for (std::size_t i = 0; i + 1 < D.size(); ++i) banned.emplace_back(D[i], D[i + 1]);
    }

    const PlaneGraph& host = u.graph();
    for (Vertex v = 0; v < host.vertex_count(); ++v) {
        const GAddress& a = u.address_of(v);
        if (!address_inside_region(a, s.face)) continue;
        if (a.level() > level + s.depth) continue;
        if (s.has_diameter) {
            int ci = address_child_index(a, s.face);
            if (ci == -1) {
                if (a.kind == GAddress::Kind::Center) continue; // on the diameter, kept above
                if (!spoke_on_side(a.spoke)) continue;
                if (a.spoke == lo || a.spoke == hi) continue;   // on the diameter, kept above
            } else if (!child_on_side(ci)) {
                continue;
            }
        }
        keep.push_back(v);
    }
    return extract(u, keep, banned);
}

Extracted piece(Universe& u, const FaceId& f, int depth, bool strip_level_n) {
    if (depth < 1) fail(Errc::InvalidArgument, "piece depth must be >= 1");
    u.ensure_face(f);
    int level = f.depth();
    u.expand_region(f, level + depth);
    const auto& rec = u.face(f);

    std::vector<Vertex> keep;
    if (!strip_level_n)
        for (Vertex b : rec.boundary) keep.push_back(b);
    const PlaneGraph& host = u.graph();
    for (Vertex v = 0; v < host.vertex_count(); ++v) {
        const GAddress& a = u.address_of(v);
        if (!address_inside_region(a, f)) continue;
        if (a.level() > level + depth) continue;
        keep.push_back(v);
    }
    return extract(u, keep, {});
}

// ---------------------------------------------------------------------
// JSON export
// ---------------------------------------------------------------------

nlohmann::json truncation_to_json(const Truncation& t) {
    nlohmann::json j;
    const PlaneGraph& g = t.universe->graph();
    j["level"] = t.level;
    j["vertices"] = nlohmann::json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.label(v));
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back(nlohmann::json::array({g.label(u), g.label(v)}));
    nlohmann::json rot = nlohmann::json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        nlohmann::json lst = nlohmann::json::array();
        for (Vertex w : g.neighbors(v)) lst.push_back(g.label(w));
        rot[std::to_string(g.label(v))] = std::move(lst);
    }
    j["rotation"] = std::move(rot);
    nlohmann::json addr = nlohmann::json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        addr[std::to_string(g.label(v))] = t.universe->address_of(v).str();
    j["addresses"] = std::move(addr);
    nlohmann::json faces = nlohmann::json::object();
    for (const FaceId& f : t.universe->faces_at_level(t.level)) {
        nlohmann::json cyc = nlohmann::json::array();
        for (Vertex v : t.universe->face(f).boundary) cyc.push_back(g.label(v));
        faces[f.str()] = std::move(cyc);
    }
    j["faces"] = std::move(faces);
    return j;
}

nlohmann::json extracted_to_json(const Extracted& e) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (Vertex v = 0; v < e.graph.vertex_count(); ++v) j["vertices"].push_back(e.graph.label(v));
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : e.graph.edges())
        j["edges"].push_back(nlohmann::json::array({e.graph.label(u), e.graph.label(v)}));
    nlohmann::json addr = nlohmann::json::object();
    for (Vertex v = 0; v < e.graph.vertex_count(); ++v)
        addr[std::to_string(e.graph.label(v))] = e.address[v].str();
    j["addresses"] = std::move(addr);
    return j;
}

} // namespace plum
