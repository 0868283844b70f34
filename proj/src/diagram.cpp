#include "vknot/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vknot {

namespace {

std::string id_str(int x) { return std::to_string(x); }

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a != b) parent[a] = b;
}

}  // namespace

VirtualDiagram::VirtualDiagram(int crossings, const std::vector<std::pair<int, int>>& arcs,
                               int free_loops, std::vector<std::uint8_t> flags)
    : crossings_(crossings), free_loops_(free_loops), flags_(std::move(flags)) {
    if (crossings < 0) throw std::invalid_argument("crossing count must be non-negative");
    if (free_loops < 0) throw std::invalid_argument("free-loop count must be non-negative");
    if (flags_.empty()) flags_.assign(crossings_, 0);
    if (static_cast<int>(flags_.size()) != crossings_) {
        throw std::invalid_argument("flag vector size does not match crossing count");
    }
    for (auto& f : flags_) f &= 1;
    mate_.assign(4 * crossings_, -1);
    if (static_cast<int>(arcs.size()) != 2 * crossings_) {
        throw std::invalid_argument("expected " + id_str(2 * crossings_) + " arcs, got " +
                                    id_str(static_cast<int>(arcs.size())));
    }
    for (const auto& [p, q] : arcs) {
        for (int port : {p, q}) {
            if (port < 0 || port >= 4 * crossings_) {
                throw std::invalid_argument("arc port " + id_str(port) + " out of range");
            }
        }
        if (p == q) throw std::invalid_argument("arc joins port " + id_str(p) + " to itself");
        if (mate_[p] != -1 || mate_[q] != -1) {
            throw std::invalid_argument("port " + id_str(mate_[p] != -1 ? p : q) +
                                        " appears on more than one arc");
        }
        mate_[p] = q;
        mate_[q] = p;
    }
}

VirtualDiagram VirtualDiagram::unknot(int free_loops) {
    return VirtualDiagram(0, {}, free_loops);
}

std::vector<std::pair<int, int>> VirtualDiagram::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(2 * crossings_);
    for (int p = 0; p < port_count(); ++p) {
        if (mate_[p] > p) out.emplace_back(p, mate_[p]);
    }
    return out;
}

void VirtualDiagram::smoothing_pairs(int crossing, Smoothing s, int out[2][2]) const {
    const int base = 4 * crossing;
    const int f = flags_[crossing];
    if (s == Smoothing::A) {
        out[0][0] = base + f;
        out[0][1] = base + ((f + 1) & 3);
        out[1][0] = base + ((f + 2) & 3);
        out[1][1] = base + ((f + 3) & 3);
    } else {
        out[0][0] = base + f;
        out[0][1] = base + ((f + 3) & 3);
        out[1][0] = base + ((f + 1) & 3);
        out[1][1] = base + ((f + 2) & 3);
    }
}

VirtualDiagram canonical(const VirtualDiagram& d) {
    const int n = d.crossing_count();
    std::vector<int> relabel(d.port_count());
    for (int c = 0; c < n; ++c) {
        const int f = d.flag(c);
        for (int s = 0; s < 4; ++s) {
            relabel[4 * c + s] = 4 * c + ((s - f) & 3);
        }
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * n);
    for (int p = 0; p < d.port_count(); ++p) {
        if (d.mate(p) > p) arcs.emplace_back(relabel[p], relabel[d.mate(p)]);
    }
    return VirtualDiagram(n, arcs, d.free_loops());
}

Traversal trace_components(const VirtualDiagram& d) {
    Traversal t;
    t.free_loops = d.free_loops();
    const int ports = d.port_count();
    std::vector<int> parent(ports);
    std::iota(parent.begin(), parent.end(), 0);
    for (int p = 0; p < ports; ++p) {
        uf_union(parent, p, VirtualDiagram::through(p));
        uf_union(parent, p, d.mate(p));
    }
    t.strand_of_port.assign(ports, -1);
    for (int p = 0; p < ports; ++p) {
        int root = uf_find(parent, p);
        if (t.strand_of_port[root] == -1) t.strand_of_port[root] = t.closed_strands++;
        t.strand_of_port[p] = t.strand_of_port[root];
    }
    return t;
}

int loop_count(const VirtualDiagram& d, const State& s) {
    if (static_cast<int>(s.size()) != d.crossing_count()) {
        throw std::invalid_argument("state covers " + id_str(static_cast<int>(s.size())) +
                                    " crossings, diagram has " + id_str(d.crossing_count()));
    }
    const int ports = d.port_count();
    std::vector<int> parent(ports);
    std::iota(parent.begin(), parent.end(), 0);
    int pairs[2][2];
    for (int c = 0; c < d.crossing_count(); ++c) {
        d.smoothing_pairs(c, s[c], pairs);
        uf_union(parent, pairs[0][0], pairs[0][1]);
        uf_union(parent, pairs[1][0], pairs[1][1]);
    }
    for (int p = 0; p < ports; ++p) uf_union(parent, p, d.mate(p));
    int loops = 0;
    for (int p = 0; p < ports; ++p) {
        if (uf_find(parent, p) == p) ++loops;
    }
    return loops + d.free_loops();
}

int FaceStructure::genus() const {
    int crossings = static_cast<int>(face_of_port.size()) / 4;
    int chi = crossings - 2 * crossings + face_count();
    return (2 * map_components - chi) / 2;
}

FaceStructure faces(const VirtualDiagram& d) {
    FaceStructure fs;
    fs.free_loops = d.free_loops();
    const int ports = d.port_count();
    fs.face_of_port.assign(ports, -1);
    auto step = [&](int p) {
        int m = d.mate(p);
        return (m & ~3) | ((m + 1) & 3);  // turn ccw at the far crossing
    };
    for (int start = 0; start < ports; ++start) {
        if (fs.face_of_port[start] != -1) continue;
        int id = fs.face_count();
        std::vector<int> walk;
        int p = start;
        do {
            fs.face_of_port[p] = id;
            walk.push_back(p);
            p = step(p);
        } while (p != start);
        fs.faces.push_back(std::move(walk));
    }
    std::vector<int> parent(d.crossing_count());
    std::iota(parent.begin(), parent.end(), 0);
    for (int p = 0; p < ports; ++p) {
        uf_union(parent, VirtualDiagram::crossing_of(p), VirtualDiagram::crossing_of(d.mate(p)));
    }
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (uf_find(parent, c) == c) ++fs.map_components;
    }
    return fs;
}

Coloring Coloring::complemented() const {
    Coloring out = *this;
    for (auto& b : out.black) b ^= 1;
    return out;
}

std::optional<Coloring> checkerboard_colorable(const VirtualDiagram& d) {
    Coloring col{faces(d), {}};
    const auto& fs = col.structure;
    col.black.assign(fs.face_count(), 0);
    std::vector<signed char> color(fs.face_count(), -1);

    std::vector<std::vector<int>> adjacent(fs.face_count());
    for (int p = 0; p < d.port_count(); ++p) {
        int q = d.mate(p);
        if (q < p) continue;
        adjacent[fs.face_of_port[p]].push_back(fs.face_of_port[q]);
        adjacent[fs.face_of_port[q]].push_back(fs.face_of_port[p]);
    }

    // The face graph of each connected piece of the diagram is connected, so
    // seeding at the face of each piece's lowest port colors everything.
    std::vector<int> queue;
    for (int p = 0; p < d.port_count(); ++p) {
        int seed = fs.face_of_port[p];
        if (color[seed] != -1) continue;
        color[seed] = 1;  // black
        queue.assign(1, seed);
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (int g : adjacent[f]) {
                if (color[g] == -1) {
                    color[g] = color[f] ^ 1;
                    queue.push_back(g);
                } else if (color[g] == color[f]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int f = 0; f < fs.face_count(); ++f) col.black[f] = color[f] == 1 ? 1 : 0;
    return col;
}

Orientation orient(const VirtualDiagram& d) {
    Orientation o;
    const int ports = d.port_count();
    o.entry.assign(ports, 0);
    std::vector<int> orbit_of(ports, -1);
    std::vector<std::vector<int>> orbits;
    auto next = [&](int p) { return d.mate(VirtualDiagram::through(p)); };
    for (int start = 0; start < ports; ++start) {
        if (orbit_of[start] != -1) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> orbit;
        int p = start;
        do {
            orbit_of[p] = id;
            orbit.push_back(p);
            p = next(p);
        } while (p != start);
        orbits.push_back(std::move(orbit));
    }
    std::vector<char> decided(orbits.size(), 0);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (decided[i]) continue;
        int partner = orbit_of[VirtualDiagram::through(orbits[i][0])];
        decided[i] = decided[partner] = 1;
        int min_here = *std::min_element(orbits[i].begin(), orbits[i].end());
        int min_there = *std::min_element(orbits[partner].begin(), orbits[partner].end());
        const auto& chosen = min_here < min_there ? orbits[i] : orbits[partner];
        for (int p : chosen) o.entry[p] = 1;
    }
    return o;
}

int writhe(const VirtualDiagram& d, const Orientation& o) {
    int total = 0;
    for (int c = 0; c < d.crossing_count(); ++c) {
        const int base = 4 * c;
        const int f = d.flag(c);
        int u = o.entry[base + f] ? f : ((f + 2) & 3);
        int over1 = (f + 1) & 3;
        int ov = o.entry[base + over1] ? over1 : ((f + 3) & 3);
        total += ((ov - u) & 3) == 3 ? 1 : -1;
    }
    return total;
}

int writhe(const VirtualDiagram& d) { return writhe(d, orient(d)); }

VirtualDiagram switch_crossing(const VirtualDiagram& d, int c) {
    if (c < 0 || c >= d.crossing_count()) {
        throw std::invalid_argument("unknown crossing " + id_str(c));
    }
    std::vector<std::uint8_t> flags(d.crossing_count());
    for (int i = 0; i < d.crossing_count(); ++i) flags[i] = d.flag(i);
    flags[c] ^= 1;
    return VirtualDiagram(d.crossing_count(), d.arcs(), d.free_loops(), std::move(flags));
}

VirtualDiagram virtualize(const VirtualDiagram& d, int c) {
    if (c < 0 || c >= d.crossing_count()) {
        throw std::invalid_argument("unknown crossing " + id_str(c));
    }
    // Swap the arc ends attached on each side: slots 0<->1 and 2<->3.
    auto tau = [&](int p) {
        if (VirtualDiagram::crossing_of(p) != c) return p;
        return p ^ 1;
    };
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * d.crossing_count());
    for (int p = 0; p < d.port_count(); ++p) {
        if (d.mate(p) > p) arcs.emplace_back(tau(p), tau(d.mate(p)));
    }
    std::vector<std::uint8_t> flags(d.crossing_count());
    for (int i = 0; i < d.crossing_count(); ++i) flags[i] = d.flag(i);
    flags[c] ^= 1;
    return VirtualDiagram(d.crossing_count(), arcs, d.free_loops(), std::move(flags));
}

VirtualDiagram r2_insert(const VirtualDiagram& d, ArcRef x, ArcRef y) {
    auto existing = d.arcs();
    auto check = [&](ArcRef r) {
        if (r.free_loop) {
            if (r.index < 0 || r.index >= d.free_loops()) {
                throw std::invalid_argument("unknown free loop " + id_str(r.index));
            }
        } else if (r.index < 0 || r.index >= static_cast<int>(existing.size())) {
            throw std::invalid_argument("unknown arc " + id_str(r.index));
        }
    };
    check(x);
    check(y);
    if (!x.free_loop && !y.free_loop && x.index == y.index) {
        throw std::invalid_argument("cannot poke an arc with itself");
    }

    const int c1 = 4 * d.crossing_count();
    const int c2 = c1 + 4;
    int free_loops = d.free_loops();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(existing.size() + 6);
    for (int i = 0; i < static_cast<int>(existing.size()); ++i) {
        bool split = (!x.free_loop && x.index == i) || (!y.free_loop && y.index == i);
        if (!split) arcs.push_back(existing[i]);
    }
    arcs.emplace_back(c1 + 2, c2 + 0);  // poked strand between the clasp crossings
    arcs.emplace_back(c1 + 1, c2 + 1);  // poking strand between the clasp crossings

    if (x.free_loop && y.free_loop && x.index == y.index) {
        // Self-poke of one free loop: the loop supplies both strands.
        arcs.emplace_back(c2 + 2, c1 + 3);
        arcs.emplace_back(c2 + 3, c1 + 0);
        free_loops -= 1;
    } else {
        if (x.free_loop) {
            arcs.emplace_back(c2 + 2, c1 + 0);
            free_loops -= 1;
        } else {
            auto [p, q] = existing[x.index];
            arcs.emplace_back(p, c1 + 0);
            arcs.emplace_back(c2 + 2, q);
        }
        if (y.free_loop) {
            arcs.emplace_back(c2 + 3, c1 + 3);
            free_loops -= 1;
        } else {
            auto [r, s] = existing[y.index];
            arcs.emplace_back(r, c1 + 3);
            arcs.emplace_back(c2 + 3, s);
        }
    }

    std::vector<std::uint8_t> flags(d.crossing_count() + 2, 0);
    for (int i = 0; i < d.crossing_count(); ++i) flags[i] = d.flag(i);
    return VirtualDiagram(d.crossing_count() + 2, arcs, free_loops, std::move(flags));
}

}  // namespace vknot
