#ifndef VKNOT_VERIFY_HPP
#define VKNOT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vknot/cyclic_graph.hpp"

namespace vknot {

struct VerifyOptions {
    int max_edges = 4;
    int max_vertices = 3;
    int random_instances = 200;
    int random_max_edges = 8;
    std::uint64_t seed = 20260808;
    int jobs = 1;
};

struct CheckResult {
    std::string id;
    std::string label;
    bool pass = true;
    std::uint64_t cases = 0;
    double ms = 0.0;
    std::string detail;  // first failure, when any
};

/// Runs the full property suite:
///   order-independence     recursion value identical under shuffled edge orders
///   recursion-expansion    recursion equals spanning-subgraph expansion
///   medial-bracket         expansion equals the bracket of the medial diagram
///   medial-coloring        medial diagrams checkerboard colorable; the
///                          vertex-parallel state has |V| loops, the
///                          edge-parallel state bc(G) loops
///   clasp-invariance       normalized bracket invariant under clasp insertion
///   pdual-virtualization   bracket(medial(partial dual)) equals
///                          bracket(virtualized medial)
///   virtualize-switch      bracket(virtualize) equals bracket(switch),
///                          exhaustive up to 3 crossings
/// plus the Tait round-trip suite (bracket(D) = F[tait(D)] for both
/// colorings) over the same instance family and the fixture diagrams, and
/// the combinatorial-map laws (bc parity, genus-0 bc formula, partial-dual
/// involution).
///
/// The instance family is exhaustive over all rotation placements of up to
/// max_edges edges on 1..max_vertices labeled vertices, times all sign
/// patterns, plus `random_instances` seeded random graphs.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace vknot

#endif
