#ifndef VKNOT_MEDIAL_HPP
#define VKNOT_MEDIAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vknot/cyclic_graph.hpp"
#include "vknot/diagram.hpp"

namespace vknot {

/// Bijection between the edges of a graph and the crossings of its medial
/// diagram (edge i maps to crossing i), with the smoothing roles at each
/// crossing: the vertex-parallel smoothing closes up into the vertex
/// boundary curves, the edge-parallel smoothing into the boundary of the
/// edge's ribbon subgraph. For a positive edge the B-smoothing is
/// vertex-parallel; for a negative edge the A-smoothing is.
struct MedialMap {
    std::vector<Smoothing> vertex_parallel;

    Smoothing edge_parallel(int edge) const {
        return vertex_parallel[edge] == Smoothing::A ? Smoothing::B : Smoothing::A;
    }
    State vertex_parallel_state() const { return vertex_parallel; }
    State edge_parallel_state() const {
        State s(vertex_parallel.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = edge_parallel(static_cast<int>(i));
        return s;
    }
    /// The bracket state matching a spanning subgraph: edges in the subset
    /// take their edge-parallel smoothing, the rest vertex-parallel.
    State subset_state(std::uint64_t subset_mask) const;
};

/// Medial diagram of a signed cyclic graph: one crossing per edge, arcs
/// along the corners of the ribbon structure, over/under fixed by the edge
/// signs. Isolated vertices become free loops.
std::pair<VirtualDiagram, MedialMap> medial(const SignedCyclicGraph& g);

/// The checkerboard coloring of medial(g) whose black faces are the
/// vertex-disc faces (one per vertex of g).
Coloring medial_vertex_coloring(const SignedCyclicGraph& g, const VirtualDiagram& diagram);

/// Signed cyclic graph extracted from a checkerboard-colored diagram:
/// one vertex per black face, one edge per crossing joining the two black
/// corners there, rotations read along the face boundary walks. Each free
/// loop contributes one isolated vertex. Throws if the coloring is not a
/// proper checkerboard coloring of `d`.
SignedCyclicGraph tait_graph(const VirtualDiagram& d, const Coloring& coloring);

/// Tait graph for the canonical coloring when the diagram is checkerboard
/// colorable; otherwise nothing. A constructive witness that the diagram
/// arises from the medial construction.
std::optional<SignedCyclicGraph> graphical_certificate(const VirtualDiagram& d);

}  // namespace vknot

#endif
