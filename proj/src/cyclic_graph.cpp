#include "vknot/cyclic_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace vknot {

namespace {

std::string id_str(int x) { return std::to_string(x); }

// Rotate a cyclic sequence so its minimum element comes first.
std::vector<int> min_first(const std::vector<int>& cycle) {
    if (cycle.empty()) return cycle;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::vector<int> out;
    out.reserve(cycle.size());
    out.insert(out.end(), it, cycle.end());
    out.insert(out.end(), cycle.begin(), it);
    return out;
}

struct NormalForm {
    std::vector<std::vector<int>> rotations;  // min-first, sorted by first dart
    int isolated = 0;
    std::vector<SignedEdge> edges;  // darts ordered (min, max), sorted by min dart
};

NormalForm normal_form(const SignedCyclicGraph& g) {
    NormalForm nf;
    for (const auto& rot : g.rotations()) {
        if (rot.empty()) {
            ++nf.isolated;
        } else {
            nf.rotations.push_back(min_first(rot));
        }
    }
    std::sort(nf.rotations.begin(), nf.rotations.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& e : g.edges()) {
        nf.edges.push_back({std::min(e.dart_a, e.dart_b), std::max(e.dart_a, e.dart_b), e.sign});
    }
    std::sort(nf.edges.begin(), nf.edges.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return a.dart_a < b.dart_a; });
    return nf;
}

// Deterministic bounded integer from a raw 64-bit generator draw.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

SignedCyclicGraph::SignedCyclicGraph(std::vector<std::vector<int>> rotations,
                                     std::vector<SignedEdge> edges)
    : rotations_(std::move(rotations)), edges_(std::move(edges)) {
    validate_and_index();
}

SignedCyclicGraph SignedCyclicGraph::isolated_vertices(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    return SignedCyclicGraph(std::vector<std::vector<int>>(n), {});
}

void SignedCyclicGraph::validate_and_index() {
    const int darts = dart_count();
    vertex_of_.assign(darts, -1);
    mate_.assign(darts, -1);
    edge_of_.assign(darts, -1);
    next_.assign(darts, -1);

    for (int e = 0; e < edge_count(); ++e) {
        const auto& ed = edges_[e];
        for (int d : {ed.dart_a, ed.dart_b}) {
            if (d < 0 || d >= darts) {
                throw std::invalid_argument("edge " + id_str(e) + ": dart " + id_str(d) +
                                            " out of range 0.." + id_str(darts - 1));
            }
        }
        if (ed.dart_a == ed.dart_b) {
            throw std::invalid_argument("edge " + id_str(e) + " pairs dart " +
                                        id_str(ed.dart_a) + " with itself");
        }
        if (ed.sign != 1 && ed.sign != -1) {
            throw std::invalid_argument("edge " + id_str(e) + " has sign " + id_str(ed.sign) +
                                        "; expected +1 or -1");
        }
        for (int d : {ed.dart_a, ed.dart_b}) {
            if (mate_[d] != -1) {
                throw std::invalid_argument("dart " + id_str(d) +
                                            " appears in more than one edge");
            }
        }
        mate_[ed.dart_a] = ed.dart_b;
        mate_[ed.dart_b] = ed.dart_a;
        edge_of_[ed.dart_a] = e;
        edge_of_[ed.dart_b] = e;
    }

    for (int v = 0; v < vertex_count(); ++v) {
        const auto& rot = rotations_[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            if (d < 0 || d >= darts) {
                throw std::invalid_argument("vertex " + id_str(v) + ": dart " + id_str(d) +
                                            " out of range 0.." + id_str(darts - 1));
            }
            if (vertex_of_[d] != -1) {
                throw std::invalid_argument("dart " + id_str(d) +
                                            " appears in more than one rotation position");
            }
            vertex_of_[d] = v;
            next_[d] = rot[(i + 1) % rot.size()];
        }
    }
    for (int d = 0; d < darts; ++d) {
        if (vertex_of_[d] == -1) {
            throw std::invalid_argument("dart " + id_str(d) + " missing from every rotation");
        }
    }

    // Connected components of the underlying graph, isolated vertices included.
    std::vector<int> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& ed : edges_) {
        int a = find(vertex_of_[ed.dart_a]);
        int b = find(vertex_of_[ed.dart_b]);
        if (a != b) parent[a] = b;
    }
    component_count_ = 0;
    for (int v = 0; v < vertex_count(); ++v) {
        if (find(v) == v) ++component_count_;
    }
}

SignedCyclicGraph SignedCyclicGraph::with_signs(std::uint64_t positive_mask) const {
    SignedCyclicGraph out = *this;
    for (int e = 0; e < out.edge_count(); ++e) {
        out.edges_[e].sign = (positive_mask >> e) & 1 ? +1 : -1;
    }
    return out;
}

bool SignedCyclicGraph::same_as(const SignedCyclicGraph& other) const {
    NormalForm a = normal_form(*this);
    NormalForm b = normal_form(other);
    return a.isolated == b.isolated && a.rotations == b.rotations && a.edges == b.edges;
}

namespace detail {

int boundary_components(const SignedCyclicGraph& g, std::uint64_t mask, BcScratch& scratch) {
    const int darts = g.dart_count();
    auto& next_restricted = scratch.next_restricted;
    auto& seen = scratch.seen;
    next_restricted.assign(darts, -1);
    seen.assign(darts, 0);

    int count = 0;
    for (const auto& rot : g.rotations()) {
        int first = -1, prev = -1;
        for (int d : rot) {
            if (!((mask >> g.edge_of(d)) & 1)) continue;
            if (first == -1) {
                first = d;
            } else {
                next_restricted[prev] = d;
            }
            prev = d;
        }
        if (first == -1) {
            ++count;  // vertex disc with no subset dart: one boundary circle
        } else {
            next_restricted[prev] = first;
        }
    }

    for (int d = 0; d < darts; ++d) {
        if (next_restricted[d] == -1 || seen[d]) continue;
        ++count;
        int x = d;
        do {
            seen[x] = 1;
            x = next_restricted[g.mate(x)];
        } while (x != d);
    }
    return count;
}

}  // namespace detail

int boundary_components(const SignedCyclicGraph& g, EdgeSubset subset) {
    if (g.edge_count() < 64 && (subset.mask >> g.edge_count()) != 0) {
        throw std::invalid_argument("edge subset refers to edges outside the host graph");
    }
    detail::BcScratch scratch;
    return detail::boundary_components(g, subset.mask, scratch);
}

int boundary_components(const SignedCyclicGraph& g) {
    detail::BcScratch scratch;
    return detail::boundary_components(g, EdgeSubset::all(g.edge_count()).mask, scratch);
}

int genus(const SignedCyclicGraph& g) {
    int bc = boundary_components(g);
    int twice = g.edge_count() - g.vertex_count() + 2 * g.component_count() - bc;
    return twice / 2;
}

int subgraph_components(const SignedCyclicGraph& g, EdgeSubset subset) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!subset.contains(e)) continue;
        int a = find(g.vertex_of(g.edge(e).dart_a));
        int b = find(g.vertex_of(g.edge(e).dart_b));
        if (a != b) parent[a] = b;
    }
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (find(v) == v) ++count;
    }
    return count;
}

SignedCyclicGraph delete_edge(const SignedCyclicGraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) {
        throw std::invalid_argument("unknown edge " + id_str(e));
    }
    const SignedEdge& dead = g.edge(e);
    std::vector<int> remap(g.dart_count(), -1);
    int next_id = 0;
    for (int d = 0; d < g.dart_count(); ++d) {
        if (d != dead.dart_a && d != dead.dart_b) remap[d] = next_id++;
    }
    std::vector<std::vector<int>> rotations;
    rotations.reserve(g.vertex_count());
    for (const auto& rot : g.rotations()) {
        std::vector<int> out;
        out.reserve(rot.size());
        for (int d : rot) {
            if (remap[d] != -1) out.push_back(remap[d]);
        }
        rotations.push_back(std::move(out));
    }
    std::vector<SignedEdge> edges;
    edges.reserve(g.edge_count() - 1);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        edges.push_back({remap[g.edge(i).dart_a], remap[g.edge(i).dart_b], g.edge(i).sign});
    }
    return SignedCyclicGraph(std::move(rotations), std::move(edges));
}

SignedCyclicGraph partial_dual_edge(const SignedCyclicGraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) {
        throw std::invalid_argument("unknown edge " + id_str(e));
    }
    const int u = g.edge(e).dart_a;
    const int v = g.edge(e).dart_b;
    const int vu = g.vertex_of(u), vv = g.vertex_of(v);

    // Successor among the darts of e inside their vertex rotations.
    auto dual_next = [&](int d) {
        if (vu != vv) return d;  // only dart of e at its vertex
        int x = g.rotation_next(d);
        while (x != u && x != v) x = g.rotation_next(x);
        return x;
    };
    auto other = [&](int d) { return d == u ? v : u; };

    // Walk the boundary of the one-edge ribbon subgraph. Each orbit becomes a
    // vertex of the dual: it picks up the non-e darts passed on vertex-circle
    // corners and one side dart per band side crossed.
    std::vector<std::vector<int>> new_vertices;
    std::vector<char> done(2, 0);
    for (int start : {u, v}) {
        int idx = start == u ? 0 : 1;
        if (done[idx]) continue;
        std::vector<int> rotation;
        int d = start;
        do {
            done[d == u ? 0 : 1] = 1;
            int target = dual_next(d);
            for (int x = g.rotation_next(d); x != target; x = g.rotation_next(x)) {
                if (x != u && x != v) rotation.push_back(x);
            }
            rotation.push_back(target);  // side of the band beginning at target
            d = other(target);
        } while (d != start);
        new_vertices.push_back(std::move(rotation));
    }

    std::vector<std::vector<int>> rotations;
    bool inserted = false;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == vu || w == vv) {
            if (!inserted) {
                for (auto& nv : new_vertices) rotations.push_back(std::move(nv));
                inserted = true;
            }
            continue;
        }
        rotations.push_back(g.rotation(w));
    }
    return SignedCyclicGraph(std::move(rotations), g.edges());
}

SignedCyclicGraph flip_signs(const SignedCyclicGraph& g) {
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) e.sign = -e.sign;
    return SignedCyclicGraph(g.rotations(), std::move(edges));
}

SignedCyclicGraph random_cyclic_graph(int vertex_count, int edge_count, double sign_bias,
                                      std::uint64_t seed) {
    if (vertex_count < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (edge_count < 0) throw std::invalid_argument("edge count must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> rotations(vertex_count);
    for (int d = 0; d < 2 * edge_count; ++d) {
        rotations[draw_below(rng, vertex_count)].push_back(d);
    }
    for (auto& rot : rotations) {
        for (std::size_t i = rot.size(); i > 1; --i) {
            std::swap(rot[i - 1], rot[draw_below(rng, i)]);
        }
    }
    std::vector<SignedEdge> edges;
    edges.reserve(edge_count);
    for (int e = 0; e < edge_count; ++e) {
        bool positive = double(rng() >> 11) * 0x1.0p-53 < sign_bias;
        edges.push_back({2 * e, 2 * e + 1, positive ? +1 : -1});
    }
    return SignedCyclicGraph(std::move(rotations), std::move(edges));
}

bool equivalent_cyclic_graphs(const SignedCyclicGraph& g, const SignedCyclicGraph& h) {
    if (g.dart_count() > 8 || h.dart_count() > 8) {
        throw std::invalid_argument("equivalence search supports at most 8 darts");
    }
    if (g.dart_count() != h.dart_count() || g.edge_count() != h.edge_count() ||
        g.vertex_count() != h.vertex_count()) {
        return false;
    }
    const int n = g.dart_count();
    if (n == 0) return true;  // vertex counts match and there is nothing else

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int d = 0; d < n && ok; ++d) {
            if (perm[g.rotation_next(d)] != h.rotation_next(perm[d])) ok = false;
            if (ok && perm[g.mate(d)] != h.mate(perm[d])) ok = false;
        }
        for (int e = 0; e < g.edge_count() && ok; ++e) {
            int image = h.edge_of(perm[g.edge(e).dart_a]);
            if (g.edge(e).sign != h.edge(image).sign) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace vknot
