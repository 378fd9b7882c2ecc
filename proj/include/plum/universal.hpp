#ifndef PLUM_UNIVERSAL_HPP
#define PLUM_UNIVERSAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "plum/plane_graph.hpp"

namespace plum {

constexpr std::uint64_t kDefaultVertexCap = 10'000'000;

/// Hierarchical face coordinate: one of the two sphere faces of the
/// level-0 triangle, then a child index per level. The child index at
/// step n ranges over the boundary edges of the parent face, of which a
/// depth-(n-1) face has 2(n-1)+3 = 2n+1.
struct FaceId {
    std::uint8_t root = 0; // 0 = A, 1 = B
    std::vector<std::uint16_t> path;

    int depth() const { return static_cast<int>(path.size()); }
    FaceId child(int k) const {
        FaceId c = *this;
        c.path.push_back(static_cast<std::uint16_t>(k));
        return c;
    }
    FaceId parent() const {
        FaceId p = *this;
        p.path.pop_back();
        return p;
    }
    bool is_prefix_of(const FaceId& other) const;

    std::string str() const;
    static FaceId parse(const std::string& s);

    auto operator<=>(const FaceId&) const = default;
};

/// Coordinate of one vertex of the universal graph, independent of any
/// truncation: a triangle vertex, the center placed in a face, or a
/// subdivision vertex on a spoke. Spoke = index of the boundary vertex
/// the spoke reaches; pos runs 1..depth+1 from the center outward, so
/// Sub(f,s,depth+1) is adjacent to boundary vertex s.
struct GAddress {
    enum class Kind : std::uint8_t { Base = 0, Center = 1, Sub = 2 };

    Kind kind = Kind::Base;
    std::uint8_t base = 0;
    FaceId face;
    std::uint16_t spoke = 0;
    std::uint16_t pos = 0;

    static GAddress mk_base(int i) {
        GAddress a;
        a.kind = Kind::Base;
        a.base = static_cast<std::uint8_t>(i);
        return a;
    }
    static GAddress mk_center(FaceId f) {
        GAddress a;
        a.kind = Kind::Center;
        a.face = std::move(f);
        return a;
    }
    static GAddress mk_sub(FaceId f, int spoke, int pos) {
        GAddress a;
        a.kind = Kind::Sub;
        a.face = std::move(f);
        a.spoke = static_cast<std::uint16_t>(spoke);
        a.pos = static_cast<std::uint16_t>(pos);
        return a;
    }

    /// Level at which the vertex appears: Base = 0, otherwise
    /// depth(face)+1.
    int level() const { return kind == Kind::Base ? 0 : face.depth() + 1; }

    std::string str() const;
    static GAddress parse(const std::string& s);

    auto operator<=>(const GAddress&) const = default;
};

/// Closed-form (V, E, F) of the level-n truncation, by the recurrences
/// F_n = F_{n-1}(2n+1), V_n = V_{n-1} + F_{n-1}(1 + n(2n+1)),
/// E_n = E_{n-1} + F_{n-1}(2n+1)(n+1). Throws TooLarge past uint64.
std::array<std::uint64_t, 3> census(int n);

/// Lazily materialized portion of the universal graph. Starts as the
/// embedded triangle with its two face records; expand() realizes one
/// face (center + spokes + child records). All ids are stable: the same
/// expansions in any order produce identical addresses, and the graph
/// only ever grows.
class Universe {
public:
    explicit Universe(std::uint64_t vertex_cap = kDefaultVertexCap);

    const PlaneGraph& graph() const { return graph_; }
    std::uint64_t cap() const { return cap_; }

    const GAddress& address_of(Vertex v) const { return addr_of_[v]; }
    /// kNoVertex when the address is not materialized.
    Vertex vertex_of(const GAddress& a) const;
    /// Materializes the address's defining expansion if needed.
    Vertex require_vertex(const GAddress& a);

    struct FaceRec {
        FaceId id;
        std::vector<Vertex> boundary; // canonical cycle
        bool expanded = false;
        Vertex center = kNoVertex;
    };

    bool has_face(const FaceId& f) const { return faces_.count(f) != 0; }
    const FaceRec& face(const FaceId& f) const;

    struct ExpandDelta {
        Vertex center = kNoVertex;
        std::vector<Vertex> vertices;
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::vector<FaceId> children;
    };

    /// Realizes one face: center, spokes subdivided depth+1 times, and
    /// the 2*depth+3 child face records. AlreadyExpanded / TooLarge.
    ExpandDelta expand(const FaceId& f);

    /// Expands ancestors as needed so the record for f exists.
    void ensure_face(const FaceId& f);
    /// ensure_face + expand unless already expanded.
    void ensure_expanded(const FaceId& f);

    /// Expands every face of level < target_level inside the closed
    /// region of f (including f itself).
    void expand_region(const FaceId& f, int target_level);

    /// The path b_i -- spoke i -- center -- spoke j -- b_j (2d+5 host
    /// vertices for a depth-d face). Requires the face expanded.
    std::vector<Vertex> diameter(const FaceId& f, int end_i, int end_j) const;

    /// All known face records at the given depth, id-ordered.
    std::vector<FaceId> faces_at_level(int level) const;
    /// All unexpanded face records, id-ordered.
    std::vector<FaceId> leaf_faces() const;

    const std::map<FaceId, FaceRec>& face_registry() const { return faces_; }

private:
    std::uint64_t cap_;
    PlaneGraph graph_;
    std::vector<GAddress> addr_of_;
    std::map<GAddress, Vertex> vertex_of_;
    std::map<FaceId, FaceRec> faces_;

    Vertex new_vertex(const GAddress& a);
};

/// Vertex classification relative to a face region.
bool address_inside_region(const GAddress& a, const FaceId& f);

/// For an address inside region(f): the child index of f it lies under,
/// or -1 when it sits on f's own wheel (center or spokes).
int address_child_index(const GAddress& a, const FaceId& f);

/// Eager truncation: everything expanded to the given level.
struct Truncation {
    int level = 0;
    std::shared_ptr<Universe> universe;

    const PlaneGraph& graph() const { return universe->graph(); }
};

Truncation generate(int level, std::uint64_t vertex_cap = kDefaultVertexCap);

/// Slice coordinates: the part of the universal graph inside a face,
/// optionally cut along one diameter, materialized `depth` levels past
/// the face's own level. Contains the boundary vertices but neither the
/// boundary edges nor the diameter's edges.
struct SliceRef {
    FaceId face;
    bool has_diameter = false;
    int diam_i = 0;
    int diam_j = 0;
    int side = 0; // 0 = children [min(i,j), max(i,j)), 1 = the rest
    int depth = 1;
};

struct Extracted {
    PlaneGraph graph;                // local copy, labels = host vertex ids
    std::vector<GAddress> address;   // per local vertex
    std::vector<Vertex> host_vertex; // per local vertex
};

Extracted slice_subgraph(Universe& u, const SliceRef& s);

/// Closed face intersected with the truncation at the given depth; with
/// strip_level_n the level-n boundary (its vertices and edges) removed.
Extracted piece(Universe& u, const FaceId& f, int depth, bool strip_level_n);

nlohmann::json truncation_to_json(const Truncation& t);
nlohmann::json extracted_to_json(const Extracted& e);

} // namespace plum

#endif
