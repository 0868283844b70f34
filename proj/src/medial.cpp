#include "vknot/medial.hpp"

#include <stdexcept>

namespace vknot {

State MedialMap::subset_state(std::uint64_t subset_mask) const {
    State s(vertex_parallel.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = (subset_mask >> i) & 1 ? edge_parallel(static_cast<int>(i))
                                      : vertex_parallel[i];
    }
    return s;
}

std::pair<VirtualDiagram, MedialMap> medial(const SignedCyclicGraph& g) {
    const int edges = g.edge_count();
    // Ports adjacent to each graph dart's band end: port_after[d] faces the
    // corner following d in its rotation, port_before[d] the corner before.
    std::vector<int> port_after(g.dart_count()), port_before(g.dart_count());
    MedialMap map;
    map.vertex_parallel.reserve(edges);
    for (int e = 0; e < edges; ++e) {
        const SignedEdge& ed = g.edge(e);
        const int d1 = std::min(ed.dart_a, ed.dart_b);
        const int d2 = std::max(ed.dart_a, ed.dart_b);
        const int base = 4 * e;
        if (ed.sign > 0) {
            port_before[d2] = base + 0;
            port_after[d1] = base + 1;
            port_before[d1] = base + 2;
            port_after[d2] = base + 3;
            map.vertex_parallel.push_back(Smoothing::B);
        } else {
            port_after[d1] = base + 0;
            port_before[d1] = base + 1;
            port_after[d2] = base + 2;
            port_before[d2] = base + 3;
            map.vertex_parallel.push_back(Smoothing::A);
        }
    }

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * edges);
    int free_loops = 0;
    for (const auto& rot : g.rotations()) {
        if (rot.empty()) {
            ++free_loops;
            continue;
        }
        for (int d : rot) {
            arcs.emplace_back(port_after[d], port_before[g.rotation_next(d)]);
        }
    }
    return {VirtualDiagram(edges, arcs, free_loops), std::move(map)};
}

Coloring medial_vertex_coloring(const SignedCyclicGraph& g, const VirtualDiagram& diagram) {
    Coloring col{faces(diagram), {}};
    col.black.assign(col.structure.face_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        int offset = g.edge(e).sign > 0 ? 0 : 1;  // vertex-side corner pair
        col.black[col.structure.face_of_port[4 * e + offset]] = 1;
        col.black[col.structure.face_of_port[4 * e + offset + 2]] = 1;
    }
    return col;
}

SignedCyclicGraph tait_graph(const VirtualDiagram& d, const Coloring& coloring) {
    const FaceStructure& fs = coloring.structure;
    if (static_cast<int>(fs.face_of_port.size()) != d.port_count() ||
        static_cast<int>(coloring.black.size()) != fs.face_count()) {
        throw std::invalid_argument("coloring does not describe this diagram");
    }
    for (int p = 0; p < d.port_count(); ++p) {
        int q = d.mate(p);
        if (q < p) continue;
        if (coloring.black[fs.face_of_port[p]] == coloring.black[fs.face_of_port[q]]) {
            throw std::invalid_argument("coloring is not proper across the arc at port " +
                                        std::to_string(p));
        }
    }

    std::vector<int> vertex_of_face(fs.face_count(), -1);
    int vertices = 0;
    for (int f = 0; f < fs.face_count(); ++f) {
        if (coloring.black[f]) vertex_of_face[f] = vertices++;
    }

    std::vector<int> dart_at_corner(d.port_count(), -1);
    std::vector<SignedEdge> edges;
    edges.reserve(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        int jb = coloring.black[fs.face_of_port[4 * c + 0]] ? 0 : 1;
        dart_at_corner[4 * c + jb] = 2 * c;
        dart_at_corner[4 * c + jb + 2] = 2 * c + 1;
        int sign = jb == d.flag(c) ? +1 : -1;  // black on the B-corner pair
        edges.push_back({2 * c, 2 * c + 1, sign});
    }

    // The face walk runs clockwise as seen from the capping disc, so the
    // counterclockwise vertex rotation reads it in reverse.
    std::vector<std::vector<int>> rotations;
    rotations.reserve(vertices + d.free_loops());
    for (int f = 0; f < fs.face_count(); ++f) {
        if (!coloring.black[f]) continue;
        std::vector<int> rot;
        rot.reserve(fs.faces[f].size());
        for (auto it = fs.faces[f].rbegin(); it != fs.faces[f].rend(); ++it) {
            rot.push_back(dart_at_corner[*it]);
        }
        rotations.push_back(std::move(rot));
    }
    for (int i = 0; i < d.free_loops(); ++i) rotations.emplace_back();
    return SignedCyclicGraph(std::move(rotations), std::move(edges));
}

std::optional<SignedCyclicGraph> graphical_certificate(const VirtualDiagram& d) {
    auto col = checkerboard_colorable(d);
    if (!col) return std::nullopt;
    return tait_graph(d, *col);
}

}  // namespace vknot
