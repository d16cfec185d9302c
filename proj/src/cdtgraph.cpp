#include "dwmm/cdtgraph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace dwmm {

std::string to_string(EdgeColor c) {
    return c == EdgeColor::Spacelike ? "spacelike" : "timelike";
}

std::string to_string(StripKind k) {
    switch (k) {
        case StripKind::Regular: return "regular";
        case StripKind::Singular: return "singular";
        case StripKind::Moebius: return "moebius";
    }
    return "?";
}

std::string to_string(TopologyClass t) {
    switch (t) {
        case TopologyClass::Sphere: return "sphere";
        case TopologyClass::Torus: return "torus";
        case TopologyClass::ProjectivePlane: return "projective-plane";
        case TopologyClass::KleinBottle: return "klein-bottle";
    }
    return "?";
}

namespace {

// Face tracing works on states s = 2*h + b where h is a half-edge and b is
// the sheet bit (b = 0 is the reference sheet, b = 1 the reversed one). A
// step crosses to the paired half-edge and turns by the rotation, walking
// it backwards on the reversed sheet; crossing a flipped edge toggles the
// sheet.
inline int trace_step(const std::vector<int>& pair, const std::vector<int>& next,
                      const std::vector<int>& prev, const std::vector<bool>& flip,
                      int state) {
    const int h = state >> 1;
    const int b = state & 1;
    const int a = pair[h];
    const int f = (b == 0) ? next[a] : prev[a];
    const int nb = b ^ (flip[f] ? 1 : 0);
    return 2 * f + nb;
}

// Every face is traced twice, once per orientation of its boundary. The
// reversal involution sends a state to the opposite traversal of the same
// edge visit; it maps each trace orbit onto its mirror orbit.
inline int reverse_state(const std::vector<int>& pair, const std::vector<bool>& flip,
                         int state) {
    const int h = state >> 1;
    const int b = state & 1;
    return 2 * pair[h] + (b ^ 1 ^ (flip[h] ? 1 : 0));
}

}  // namespace

RibbonGraph::RibbonGraph(std::vector<int> pairing, std::vector<int> rotation,
                         std::vector<EdgeColor> colors, std::vector<bool> flips)
    : pair_(std::move(pairing)),
      next_(std::move(rotation)),
      color_(std::move(colors)),
      flip_(std::move(flips)) {
    const int H = static_cast<int>(pair_.size());
    if (H == 0) throw std::invalid_argument("ribbon graph: no half-edges");
    if (H % 2 != 0) throw std::invalid_argument("ribbon graph: odd number of half-edges");
    if (static_cast<int>(next_.size()) != H || static_cast<int>(color_.size()) != H ||
        static_cast<int>(flip_.size()) != H)
        throw std::invalid_argument("ribbon graph: array length mismatch");

    for (int h = 0; h < H; ++h) {
        if (pair_[h] < 0 || pair_[h] >= H || next_[h] < 0 || next_[h] >= H)
            throw std::invalid_argument("ribbon graph: half-edge index out of range");
        if (pair_[h] == h)
            throw std::invalid_argument("ribbon graph: pair has a fixed point");
    }
    for (int h = 0; h < H; ++h) {
        if (pair_[pair_[h]] != h)
            throw std::invalid_argument("ribbon graph: pair is not an involution");
        if (color_[pair_[h]] != color_[h])
            throw std::invalid_argument("ribbon graph: edge halves disagree on color");
        if (flip_[pair_[h]] != flip_[h])
            throw std::invalid_argument("ribbon graph: edge halves disagree on flip");
    }

    prev_.assign(H, -1);
    for (int h = 0; h < H; ++h) {
        if (prev_[next_[h]] != -1)
            throw std::invalid_argument("ribbon graph: rotation is not a permutation");
        prev_[next_[h]] = h;
    }

    // Vertices are the rotation orbits.
    vertex_of_.assign(H, -1);
    for (int h = 0; h < H; ++h) {
        if (vertex_of_[h] != -1) continue;
        const int v = vertex_count_++;
        int cur = h;
        do {
            vertex_of_[cur] = v;
            cur = next_[cur];
        } while (cur != h);
    }

    // Connectedness over the union of pair and rotation moves.
    {
        std::vector<char> seen(H, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 0;
        while (!q.empty()) {
            const int h = q.front();
            q.pop();
            ++reached;
            for (int m : {pair_[h], next_[h]}) {
                if (!seen[m]) {
                    seen[m] = 1;
                    q.push(m);
                }
            }
        }
        if (reached != H)
            throw std::invalid_argument("ribbon graph: not connected");
    }

    for (int h = 0; h < H; h += 1)
        if (h < pair_[h] && color_[h] == EdgeColor::Spacelike) ++spacelike_edges_;

    // Trace all 2H states into orbits, then keep one orbit of each mirror
    // pair. A mirror pair covers every visited edge twice per kept orbit,
    // once per side of the ribbon.
    const int S = 2 * H;
    std::vector<int> orbit_of(S, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < S; ++s) {
        if (orbit_of[s] != -1) continue;
        const int id = static_cast<int>(orbits.size());
        orbits.emplace_back();
        int cur = s;
        do {
            orbit_of[cur] = id;
            orbits.back().push_back(cur);
            cur = trace_step(pair_, next_, prev_, flip_, cur);
        } while (cur != s);
    }

    face_of_state_.assign(S, -1);
    for (int id = 0; id < static_cast<int>(orbits.size()); ++id) {
        const int mirror = orbit_of[reverse_state(pair_, flip_, orbits[id].front())];
        if (mirror < id) continue;  // mirror already kept
        const int f = static_cast<int>(face_states_.size());
        if (mirror == id) {
            // Orbit is its own mirror: keep one traversal direction of each
            // visit. Downstream strip machinery rejects this shape.
            std::vector<int> half;
            for (int s : orbits[id])
                if (s < reverse_state(pair_, flip_, s)) half.push_back(s);
            face_states_.push_back(std::move(half));
        } else {
            face_states_.push_back(orbits[id]);
        }
        for (int s : face_states_.back()) face_of_state_[s] = f;
        std::vector<int> hs;
        hs.reserve(face_states_.back().size());
        for (int s : face_states_.back()) hs.push_back(s >> 1);
        faces_.push_back(std::move(hs));
    }
}

const std::vector<int>& RibbonGraph::face_half_edges(int f) const {
    return faces_.at(f);
}

int RibbonGraph::face_timelike_visits(int f) const {
    int t = 0;
    for (int h : faces_.at(f))
        if (color_[h] == EdgeColor::Timelike) ++t;
    return t;
}

int RibbonGraph::face_of_visit(int state) const {
    return face_of_state_.at(state);
}

ValidationReport validate_cdt(const RibbonGraph& g) {
    ValidationReport rep;
    const int H = g.half_edge_count();

    std::vector<int> valence(g.vertex_count(), 0);
    std::vector<int> timelike(g.vertex_count(), 0);
    for (int h = 0; h < H; ++h) {
        ++valence[g.vertex_of(h)];
        if (g.color(h) == EdgeColor::Timelike) ++timelike[g.vertex_of(h)];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (valence[v] != 3)
            rep.violations.push_back("vertex " + std::to_string(v) + ": valence " +
                                     std::to_string(valence[v]) + ", want 3");
        else if (timelike[v] != 1)
            rep.violations.push_back("vertex " + std::to_string(v) + ": " +
                                     std::to_string(timelike[v]) +
                                     " timelike half-edges, want 1");
    }

    for (int f = 0; f < g.face_count(); ++f) {
        const int t = g.face_timelike_visits(f);
        if (t != 0 && t != 2)
            rep.violations.push_back("face " + std::to_string(f) + ": " +
                                     std::to_string(t) +
                                     " timelike edge visits, want 0 or 2");
    }
    return rep;
}

std::vector<Strip> strip_decomposition(const RibbonGraph& g) {
    if (!validate_cdt(g).valid())
        throw std::invalid_argument("strip_decomposition: not a valid CDT graph");

    const int H = g.half_edge_count();

    // Each edge is met by exactly two kept face visits; index them.
    std::vector<std::array<int, 2>> visits(H, {-1, -1});  // keyed by min half-edge
    auto edge_of = [&](int h) { return std::min(h, g.pair_[h]); };
    for (int f = 0; f < g.face_count(); ++f)
        for (int s : g.face_states_[f]) {
            auto& slot = visits[edge_of(s >> 1)];
            if (slot[0] == -1) slot[0] = s;
            else if (slot[1] == -1) slot[1] = s;
            else throw std::logic_error("strip_decomposition: edge visited more than twice");
        }
    for (int h = 0; h < H; ++h)
        if (h < g.pair_[h] && visits[h][1] == -1)
            throw std::logic_error("strip_decomposition: edge visited fewer than twice");

    // Chain faces across timelike edges.
    std::vector<std::vector<int>> adj(g.face_count());
    for (int h = 0; h < H; ++h) {
        if (h >= g.pair_[h] || g.color_[h] != EdgeColor::Timelike) continue;
        const int f1 = g.face_of_state_[visits[h][0]];
        const int f2 = g.face_of_state_[visits[h][1]];
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
    }

    auto step = trace_step;  // local alias
    std::vector<Strip> strips;
    std::vector<int> strip_of(g.face_count(), -1);
    for (int f0 = 0; f0 < g.face_count(); ++f0) {
        if (strip_of[f0] != -1) continue;
        Strip strip;
        std::queue<int> q;
        q.push(f0);
        strip_of[f0] = static_cast<int>(strips.size());
        while (!q.empty()) {
            const int f = q.front();
            q.pop();
            strip.faces.push_back(f);
            for (int n : adj[f])
                if (strip_of[n] == -1) {
                    strip_of[n] = strip_of[f0];
                    q.push(n);
                }
        }

        if (strip.faces.size() == 1 && g.face_timelike_visits(strip.faces[0]) == 0) {
            strip.kind = StripKind::Singular;
            strip.boundary_count = 1;
            strips.push_back(std::move(strip));
            continue;
        }

        // Walk the spacelike boundary on the full double cover (both
        // traversal orientations of every face). Advancing one face step
        // lands either on the next spacelike arc or on a timelike rung; at
        // a rung, cross to the traversal of its other side running in the
        // same direction and keep going. Each geometric boundary circle is
        // traced once per orientation, so the orbit count is twice the
        // number of circles.
        std::vector<int> boundary_states;
        for (int f : strip.faces)
            for (int s : g.face_states_[f])
                if (g.color_[s >> 1] == EdgeColor::Spacelike) {
                    boundary_states.push_back(s);
                    boundary_states.push_back(reverse_state(g.pair_, g.flip_, s));
                }

        auto cross = [&](int s) {
            return reverse_state(g.pair_, g.flip_, s) ^ 1;
        };
        auto boundary_next = [&](int s) {
            int t = step(g.pair_, g.next_, g.prev_, g.flip_, s);
            int guard = 0;
            while (g.color_[t >> 1] == EdgeColor::Timelike) {
                t = step(g.pair_, g.next_, g.prev_, g.flip_, cross(t));
                if (++guard > 2 * H)
                    throw std::logic_error("strip_decomposition: boundary walk does not close");
            }
            return t;
        };

        std::vector<char> seen(2 * H, 0);
        int cycles = 0;
        for (int s0 : boundary_states) {
            if (seen[s0]) continue;
            ++cycles;
            int s = s0;
            do {
                seen[s] = 1;
                s = boundary_next(s);
            } while (s != s0);
        }
        if (cycles == 2) strip.kind = StripKind::Moebius;
        else if (cycles == 4) strip.kind = StripKind::Regular;
        else throw std::logic_error("strip_decomposition: strip with " +
                                    std::to_string(cycles) + " boundary half-circles");
        strip.boundary_count = cycles / 2;
        strips.push_back(std::move(strip));
    }
    return strips;
}

int euler_characteristic(const RibbonGraph& g) {
    return g.vertex_count() - g.edge_count() + g.face_count();
}

bool orientable(const RibbonGraph& g) {
    // The flips are a cocycle: they can be gauged away exactly when every
    // vertex admits a sign with sign(u) * sign(w) matching the edge sign.
    const int V = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(V);  // (neighbor, sign)
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (h >= g.pair(h)) continue;
        const int u = g.vertex_of(h);
        const int w = g.vertex_of(g.pair(h));
        const int sign = g.flip(h) ? -1 : +1;
        if (u == w) {
            if (sign == -1) return false;
            continue;
        }
        adj[u].push_back({w, sign});
        adj[w].push_back({u, sign});
    }
    std::vector<int> sigma(V, 0);
    for (int v0 = 0; v0 < V; ++v0) {
        if (sigma[v0] != 0) continue;
        sigma[v0] = 1;
        std::queue<int> q;
        q.push(v0);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (auto [w, sign] : adj[u]) {
                const int want = sigma[u] * sign;
                if (sigma[w] == 0) {
                    sigma[w] = want;
                    q.push(w);
                } else if (sigma[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

TopologyClass classify_topology(const RibbonGraph& g) {
    const auto strips = strip_decomposition(g);
    int singular = 0;
    for (const auto& s : strips)
        if (s.kind == StripKind::Singular) ++singular;
    switch (singular) {
        case 2: return TopologyClass::Sphere;
        case 1: return TopologyClass::ProjectivePlane;
        case 0: return orientable(g) ? TopologyClass::Torus : TopologyClass::KleinBottle;
        default:
            throw std::logic_error("classify_topology: " + std::to_string(singular) +
                                   " singular strips");
    }
}

namespace {

// Assembles stacks of strips. A circle is an ordered list of slots walked
// eastward; each slot holds one vertex, one rung end, and a rotation
// pattern. Pattern U cycles east-edge -> rung -> west-edge, pattern D
// cycles east-edge -> west-edge -> rung. Bottom ends of an ascending strip
// use U, top ends use D; Moebius closures use one pattern for both blocks.
class StackBuilder {
public:
    int add_circle() {
        slots_.emplace_back();
        return static_cast<int>(slots_.size()) - 1;
    }

    int add_slot(int circle, bool up) {
        slots_.at(circle).push_back(up);
        return static_cast<int>(slots_[circle].size()) - 1;
    }

    void add_rung(int ca, int sa, int cb, int sb, bool flipped) {
        rungs_.push_back({ca, sa, cb, sb, flipped});
    }

    RibbonGraph build() const {
        std::vector<int> base(slots_.size(), 0);
        int ids = 0;
        for (std::size_t c = 0; c < slots_.size(); ++c) {
            if (slots_[c].empty())
                throw std::logic_error("stack builder: empty circle");
            base[c] = ids;
            ids += 2 * static_cast<int>(slots_[c].size());
        }
        const int rung_base = ids;
        ids += 2 * static_cast<int>(rungs_.size());

        const int H = ids;
        std::vector<int> pair(H, -1), next(H, -1);
        std::vector<EdgeColor> color(H, EdgeColor::Spacelike);
        std::vector<bool> flip(H, false);

        // Spacelike edge i of a circle runs east from slot i to slot i+1;
        // its L half sits at slot i, its R half at slot i+1.
        auto eastL = [&](int c, int i) { return base[c] + 2 * i; };
        auto westR = [&](int c, int i) {
            const int n = static_cast<int>(slots_[c].size());
            return base[c] + 2 * ((i + n - 1) % n) + 1;
        };

        std::vector<std::vector<int>> rung_half(slots_.size());
        for (std::size_t c = 0; c < slots_.size(); ++c)
            rung_half[c].assign(slots_[c].size(), -1);
        for (std::size_t r = 0; r < rungs_.size(); ++r) {
            const auto& rg = rungs_[r];
            const int ha = rung_base + 2 * static_cast<int>(r);
            const int hb = ha + 1;
            if (rung_half[rg.ca][rg.sa] != -1 || rung_half[rg.cb][rg.sb] != -1)
                throw std::logic_error("stack builder: slot carries two rungs");
            rung_half[rg.ca][rg.sa] = ha;
            rung_half[rg.cb][rg.sb] = hb;
            pair[ha] = hb;
            pair[hb] = ha;
            color[ha] = color[hb] = EdgeColor::Timelike;
            flip[ha] = flip[hb] = rg.flipped;
        }

        for (std::size_t c = 0; c < slots_.size(); ++c) {
            const int n = static_cast<int>(slots_[c].size());
            for (int i = 0; i < n; ++i) {
                const int L = eastL(static_cast<int>(c), i);
                const int R = L + 1;
                pair[L] = R;
                pair[R] = L;
                const int hr = rung_half[c][i];
                if (hr == -1) throw std::logic_error("stack builder: slot without rung");
                const int hw = westR(static_cast<int>(c), i);
                if (slots_[c][i]) {  // U
                    next[L] = hr;
                    next[hr] = hw;
                    next[hw] = L;
                } else {  // D
                    next[L] = hw;
                    next[hw] = hr;
                    next[hr] = L;
                }
            }
        }

        return RibbonGraph(std::move(pair), std::move(next), std::move(color),
                           std::move(flip));
    }

private:
    struct RungSpec {
        int ca, sa, cb, sb;
        bool flipped;
    };
    std::vector<std::vector<bool>> slots_;  // true = U pattern
    std::vector<RungSpec> rungs_;
};

void check_sizes(const std::vector<int>& sizes, std::size_t min_count,
                 const char* who) {
    if (sizes.size() < min_count)
        throw std::invalid_argument(std::string(who) + ": needs at least " +
                                    std::to_string(min_count) + " strip sizes");
    for (int m : sizes)
        if (m < 1)
            throw std::invalid_argument(std::string(who) + ": strip sizes must be >= 1");
}

// Regular strip of m rungs ascending from circle lo to circle hi.
void add_regular_strip(StackBuilder& b, int lo, int hi, int m) {
    std::vector<int> bottom(m), top(m);
    for (int q = 0; q < m; ++q) bottom[q] = b.add_slot(lo, true);
    for (int q = 0; q < m; ++q) top[q] = b.add_slot(hi, false);
    for (int q = 0; q < m; ++q) b.add_rung(lo, bottom[q], hi, top[q], false);
}

// Moebius closure of a boundary circle: 2m slots in two blocks, rung q
// joining the q-th slot of each block with a flip. up selects the rotation
// pattern, matching a closure seen from below (true) or above (false).
void add_moebius_closure(StackBuilder& b, int c, int m, bool up) {
    std::vector<int> ta(m), tb(m);
    for (int q = 0; q < m; ++q) ta[q] = b.add_slot(c, up);
    for (int q = 0; q < m; ++q) tb[q] = b.add_slot(c, up);
    for (int q = 0; q < m; ++q) b.add_rung(c, ta[q], c, tb[q], true);
}

}  // namespace

RibbonGraph build_sphere(const std::vector<int>& sizes) {
    check_sizes(sizes, 0, "build_sphere");
    const std::vector<int> eff = sizes.empty() ? std::vector<int>{1} : sizes;
    StackBuilder b;
    const int k = static_cast<int>(eff.size());
    for (int c = 0; c <= k; ++c) b.add_circle();
    for (int j = 0; j < k; ++j) add_regular_strip(b, j, j + 1, eff[j]);
    return b.build();
}

RibbonGraph build_torus(const std::vector<int>& sizes) {
    check_sizes(sizes, 1, "build_torus");
    StackBuilder b;
    const int k = static_cast<int>(sizes.size());
    for (int c = 0; c < k; ++c) b.add_circle();
    for (int j = 0; j < k; ++j) add_regular_strip(b, j, (j + 1) % k, sizes[j]);
    return b.build();
}

RibbonGraph build_projective(const std::vector<int>& sizes, int variant) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("build_projective: variant must be 1 or 2");
    check_sizes(sizes, 1, "build_projective");
    StackBuilder b;
    const int k = static_cast<int>(sizes.size());
    for (int c = 0; c < k; ++c) b.add_circle();
    for (int j = 0; j + 1 < k; ++j) add_regular_strip(b, j, j + 1, sizes[j]);
    add_moebius_closure(b, k - 1, sizes[k - 1], true);
    return b.build();
}

RibbonGraph build_klein(const std::vector<int>& sizes, int variant) {
    if (variant < 1 || variant > 4)
        throw std::invalid_argument("build_klein: variant must be 1..4");
    StackBuilder b;
    if (variant == 4) {
        check_sizes(sizes, 1, "build_klein");
        const int k = static_cast<int>(sizes.size());
        for (int c = 0; c < k; ++c) b.add_circle();
        for (int j = 0; j + 1 < k; ++j) add_regular_strip(b, j, j + 1, sizes[j]);
        // Closing strip re-enters the first circle with reversed slot order
        // and flipped rungs: the gluing reverses orientation.
        const int m = sizes[k - 1];
        std::vector<int> bottom(m), top(m);
        for (int q = 0; q < m; ++q) bottom[q] = b.add_slot(k - 1, true);
        for (int q = 0; q < m; ++q) top[q] = b.add_slot(0, false);
        for (int q = 0; q < m; ++q) b.add_rung(k - 1, bottom[q], 0, top[m - 1 - q], true);
        return b.build();
    }
    // Variants 1..3: Moebius closures at both ends of an open stack.
    check_sizes(sizes, 2, "build_klein");
    const int k = static_cast<int>(sizes.size());
    const int circles = k - 1;
    for (int c = 0; c < circles; ++c) b.add_circle();
    add_moebius_closure(b, 0, sizes[0], false);
    for (int j = 1; j + 1 < k; ++j) add_regular_strip(b, j - 1, j, sizes[j]);
    add_moebius_closure(b, circles - 1, sizes[k - 1], true);
    return b.build();
}

RibbonGraph random_cdt_graph(std::uint64_t seed, int strip_count, int min_size,
                             int max_size) {
    if (strip_count < 1)
        throw std::invalid_argument("random_cdt_graph: strip_count must be >= 1");
    if (min_size < 1 || max_size < min_size)
        throw std::invalid_argument("random_cdt_graph: need 1 <= min_size <= max_size");
    std::mt19937_64 rng(seed);
    // Modular draws keep the stream identical across standard library
    // implementations.
    auto draw = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int kind = draw(0, 5);
    int count = strip_count;
    if (kind == 4 && count < 2) count = 2;
    std::vector<int> sizes(count);
    for (int& m : sizes) m = draw(min_size, max_size);
    switch (kind) {
        case 0: return build_sphere(sizes);
        case 1: return build_torus(sizes);
        case 2: return build_projective(sizes, 1);
        case 3: return build_projective(sizes, 2);
        case 4: return build_klein(sizes, 1);
        default: return build_klein(sizes, 4);
    }
}

std::string graph_to_json(const RibbonGraph& g) {
    nlohmann::json j;
    auto& pair = j["pair"] = nlohmann::json::array();
    auto& next = j["next"] = nlohmann::json::array();
    auto& color = j["color"] = nlohmann::json::array();
    auto& flip = j["flip"] = nlohmann::json::array();
    for (int h = 0; h < g.half_edge_count(); ++h) {
        pair.push_back(g.pair(h));
        next.push_back(g.next(h));
        color.push_back(g.color(h) == EdgeColor::Spacelike ? "s" : "t");
        flip.push_back(g.flip(h));
    }
    return j.dump();
}

RibbonGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph_from_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("pair") || !j.contains("next") ||
        !j.contains("color") || !j.contains("flip"))
        throw std::invalid_argument("graph_from_json: need pair, next, color, flip");
    try {
        std::vector<int> pair = j["pair"].get<std::vector<int>>();
        std::vector<int> next = j["next"].get<std::vector<int>>();
        std::vector<bool> flip = j["flip"].get<std::vector<bool>>();
        std::vector<EdgeColor> color;
        for (const auto& c : j["color"]) {
            const std::string s = c.get<std::string>();
            if (s == "s") color.push_back(EdgeColor::Spacelike);
            else if (s == "t") color.push_back(EdgeColor::Timelike);
            else throw std::invalid_argument("graph_from_json: color must be \"s\" or \"t\"");
        }
        return RibbonGraph(std::move(pair), std::move(next), std::move(color),
                           std::move(flip));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph_from_json: ") + e.what());
    }
}

}  // namespace dwmm
