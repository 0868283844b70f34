#ifndef VKNOT_CYCLIC_GRAPH_HPP
#define VKNOT_CYCLIC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vknot {

/// One edge of a signed cyclic graph: an unordered pair of distinct darts
/// plus a sign in {+1, -1}.
struct SignedEdge {
    int dart_a = 0;
    int dart_b = 0;
    int sign = +1;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Subset of the edges of a host graph, as a bit mask over edge ids.
/// Hosts are limited to 64 edges; enumeration-heavy operations check this.
struct EdgeSubset {
    std::uint64_t mask = 0;

    static EdgeSubset none() { return {0}; }
    static EdgeSubset all(int edge_count) {
        return {edge_count >= 64 ? ~std::uint64_t(0)
                                 : ((std::uint64_t(1) << edge_count) - 1)};
    }
    bool contains(int edge) const { return (mask >> edge) & 1; }
    EdgeSubset with(int edge) const { return {mask | (std::uint64_t(1) << edge)}; }
    EdgeSubset without(int edge) const { return {mask & ~(std::uint64_t(1) << edge)}; }
    int count() const { return __builtin_popcountll(mask); }

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
};

/// A signed cyclic graph: a rotation system with edge signs.
///
/// Darts are dense integers 0..2E-1. Each vertex holds a cyclic sequence of
/// darts (counterclockwise order); the edges pair the darts up into a perfect
/// matching. Isolated vertices (empty rotation) are permitted. Instances are
/// immutable after construction and every operation on them is a pure
/// function, so concurrent reads are safe.
class SignedCyclicGraph {
public:
    SignedCyclicGraph(std::vector<std::vector<int>> rotations, std::vector<SignedEdge> edges);

    static SignedCyclicGraph isolated_vertices(int n);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }
    int component_count() const { return component_count_; }

    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    const std::vector<int>& rotation(int v) const { return rotations_[v]; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    const SignedEdge& edge(int e) const { return edges_[e]; }

    int vertex_of(int dart) const { return vertex_of_[dart]; }
    int mate(int dart) const { return mate_[dart]; }
    int edge_of(int dart) const { return edge_of_[dart]; }
    /// Successor of `dart` in its vertex's counterclockwise rotation.
    int rotation_next(int dart) const { return next_[dart]; }

    /// Structural equality after normalizing rotation start points and the
    /// order of vertices and edges. Dart ids are not relabeled.
    bool same_as(const SignedCyclicGraph& other) const;

    /// Copy with edge signs taken from the mask (bit e set = positive).
    SignedCyclicGraph with_signs(std::uint64_t positive_mask) const;

private:
    std::vector<std::vector<int>> rotations_;
    std::vector<SignedEdge> edges_;
    std::vector<int> vertex_of_;
    std::vector<int> mate_;
    std::vector<int> edge_of_;
    std::vector<int> next_;
    int component_count_ = 0;

    void validate_and_index();
};

/// Number of boundary components of the ribbon graph spanned by all vertices
/// of `g` and exactly the edges in `subset`: orbits of the restricted
/// rotation composed with the edge involution, plus one per vertex with no
/// incident subset dart.
int boundary_components(const SignedCyclicGraph& g, EdgeSubset subset);
int boundary_components(const SignedCyclicGraph& g);

/// Genus from the Euler formula bc = E - V + 2C - 2g over all edges.
int genus(const SignedCyclicGraph& g);

/// Connected components of the spanning subgraph (all vertices, subset edges).
int subgraph_components(const SignedCyclicGraph& g, EdgeSubset subset);

/// Remove edge `e` and its two darts; remaining darts are renumbered densely
/// preserving relative cyclic order, and edges above `e` shift down by one.
SignedCyclicGraph delete_edge(const SignedCyclicGraph& g, int e);

/// Partial dual along the single edge `e`, as an orientable rotation system.
/// Signs are unchanged (see README notes on the convention); applying the
/// operation twice returns the original graph.
SignedCyclicGraph partial_dual_edge(const SignedCyclicGraph& g, int e);

/// Copy of `g` with every edge sign flipped.
SignedCyclicGraph flip_signs(const SignedCyclicGraph& g);

/// Deterministic pseudo-random rotation system: `edge_count` edges placed on
/// `vertex_count` vertices with independent uniform dart placement, shuffled
/// rotations, and P(sign = +1) = sign_bias.
SignedCyclicGraph random_cyclic_graph(int vertex_count, int edge_count, double sign_bias,
                                      std::uint64_t seed);

/// Sign- and rotation-preserving isomorphism test by exhaustive dart
/// relabeling. Only supported for graphs with at most 8 darts.
bool equivalent_cyclic_graphs(const SignedCyclicGraph& g, const SignedCyclicGraph& h);

namespace detail {

/// Reusable scratch space for boundary-component counting in hot loops.
struct BcScratch {
    std::vector<int> next_restricted;
    std::vector<char> seen;
};

int boundary_components(const SignedCyclicGraph& g, std::uint64_t mask, BcScratch& scratch);

}  // namespace detail

}  // namespace vknot

#endif
