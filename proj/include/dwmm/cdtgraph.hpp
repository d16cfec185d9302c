#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dwmm {

enum class EdgeColor { Spacelike, Timelike };
enum class StripKind { Regular, Singular, Moebius };
enum class TopologyClass { Sphere, Torus, ProjectivePlane, KleinBottle };

std::string to_string(EdgeColor c);
std::string to_string(StripKind k);
std::string to_string(TopologyClass t);

// An edge-colored ribbon graph stored as a half-edge combinatorial map.
//
// Half-edges are numbered 0..H-1. pair() is a fixed-point-free involution
// giving the other half of each edge, next() is the rotation system (the
// cyclic order of half-edges around each vertex), color() marks each edge
// spacelike or timelike, and flip() marks edges whose gluing reverses local
// orientation. The flip flags make cross-caps and Moebius closures
// expressible without any embedding coordinates.
//
// Faces are traced on states (half-edge, sheet): crossing a flipped edge
// switches the sheet, and on the reversed sheet the rotation is walked
// backwards. Each face appears as a mirror pair of state orbits; one orbit
// per pair is kept, so every edge is visited by exactly two kept face
// visits.
//
// The constructor verifies structural well-formedness (involution, rotation
// permutation, per-edge color/flip agreement, connectedness) and throws
// std::invalid_argument otherwise. Graphs are immutable after construction
// and all queries are const.
class RibbonGraph {
public:
    RibbonGraph(std::vector<int> pairing, std::vector<int> rotation,
                std::vector<EdgeColor> colors, std::vector<bool> flips);

    int half_edge_count() const { return static_cast<int>(pair_.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int vertex_count() const { return vertex_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int spacelike_edge_count() const { return spacelike_edges_; }

    int pair(int h) const { return pair_.at(h); }
    int next(int h) const { return next_.at(h); }
    int prev(int h) const { return prev_.at(h); }
    EdgeColor color(int h) const { return color_.at(h); }
    bool flip(int h) const { return flip_.at(h); }

    int vertex_of(int h) const { return vertex_of_.at(h); }

    // Face boundary visits in walk order. Each visit names the half-edge
    // being traversed; an edge glued to the same face twice appears twice.
    const std::vector<int>& face_half_edges(int f) const;
    // Number of timelike edge visits on the face boundary (with multiplicity).
    int face_timelike_visits(int f) const;

    // Internal state ids used by the strip machinery: visit v of face f.
    int face_of_visit(int state) const;

private:
    friend std::vector<struct Strip> strip_decomposition(const RibbonGraph&);

    std::vector<int> pair_, next_, prev_;
    std::vector<EdgeColor> color_;
    std::vector<bool> flip_;
    std::vector<int> vertex_of_;
    int vertex_count_ = 0;
    int spacelike_edges_ = 0;

    // kept face orbits as state lists (state = 2*half-edge + sheet bit)
    std::vector<std::vector<int>> face_states_;
    std::vector<std::vector<int>> faces_;  // half-edge per visit
    std::vector<int> face_of_state_;       // -1 for dropped mirror states
};

// One CDT-rule violation, as a human-readable line naming the vertex or
// face and the rule it breaks. An empty report means the graph is a valid
// CDT graph.
struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Checks the two local CDT rules: every vertex is trivalent with exactly
// one timelike edge, and every face has exactly zero or two timelike edge
// visits.
ValidationReport validate_cdt(const RibbonGraph& g);

// A maximal set of faces chained by timelike edges.
struct Strip {
    std::vector<int> faces;  // face indices in chain order
    StripKind kind = StripKind::Regular;
    int boundary_count = 0;  // 1 or 2
};

// Partitions the faces of a valid CDT graph into strips. Every face lands
// in exactly one strip. A single face with no timelike edges is Singular;
// otherwise the strip's spacelike boundary walks are counted: two circles
// make it Regular, one makes it a Moebius strip. Throws
// std::invalid_argument when the graph fails validate_cdt.
std::vector<Strip> strip_decomposition(const RibbonGraph& g);

// V - E + F. For valid CDT graphs this equals the number of singular
// strips and is always 0, 1 or 2.
int euler_characteristic(const RibbonGraph& g);

// True when the flip flags are removable by re-orienting vertices, i.e.
// the surface carries a consistent global orientation.
bool orientable(const RibbonGraph& g);

// Two singular strips give a sphere, one gives a projective plane; with
// none the surface is a torus when orientable and a Klein bottle
// otherwise. Throws std::invalid_argument on invalid graphs.
TopologyClass classify_topology(const RibbonGraph& g);

// Constructive realizations of the four closed topologies as stacks of
// strips. Sizes are timelike rung counts per non-singular strip, all >= 1.
//
// build_sphere: a disk cap, one regular strip per size entry, and a
// closing disk cap. An empty size list yields the minimal sphere (a single
// one-rung strip between two caps), since a direct cap-to-cap gluing has
// no trivalent realization.
RibbonGraph build_sphere(const std::vector<int>& sizes);

// build_torus: a periodic stack of regular strips, the last glued back to
// the first with compatible orientation. Needs at least one size.
RibbonGraph build_torus(const std::vector<int>& sizes);

// build_projective: a disk cap, regular strips for all but the last size,
// and a Moebius closure of the final boundary. variant 1 reads the closure
// as an appended Moebius strip, variant 2 as a cross-cap self-gluing; both
// produce the same half-edge realization (the rung chords of a Moebius
// closure are pairwise crossing, which is the cross-cap pattern). Needs at
// least one size.
RibbonGraph build_projective(const std::vector<int>& sizes, int variant = 1);

// build_klein: variant 1 closes both ends of a stack of regular strips
// with Moebius closures (first and last sizes; needs >= 2 sizes). Variants
// 2 and 3 replace one or both closures by cross-caps and share the same
// realization as variant 1. Variant 4 is a periodic stack of regular
// strips whose closing gluing reverses orientation.
RibbonGraph build_klein(const std::vector<int>& sizes, int variant = 1);

// Deterministic pseudo-random valid CDT graph: a random choice among the
// four constructions with strip_count sizes drawn uniformly from
// [min_size, max_size].
RibbonGraph random_cdt_graph(std::uint64_t seed, int strip_count,
                             int min_size, int max_size);

// JSON round trip: {"pair": [...], "next": [...], "color": [...],
// "flip": [...]} with colors as "s"/"t".
std::string graph_to_json(const RibbonGraph& g);
RibbonGraph graph_from_json(const std::string& text);

}  // namespace dwmm
