#ifndef VKNOT_INVARIANTS_HPP
#define VKNOT_INVARIANTS_HPP

#include <cstdint>
#include <span>
#include <string>

#include "vknot/cyclic_graph.hpp"
#include "vknot/diagram.hpp"
#include "vknot/medial.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

/// Kauffman bracket by exact summation over all 2^n states:
/// sum of A^alpha B^beta d^(loops - 1). The empty diagram with one free
/// loop has bracket 1. `jobs` > 1 splits the state range across threads;
/// the reduction is plain polynomial addition, so results are identical.
BracketPoly bracket(const VirtualDiagram& d, int jobs = 1);

/// Normalized bracket: bracket specialized at B = A^-1, d = -(A^2 + A^-2),
/// as a Laurent polynomial in A.
Laurent normalized_bracket(const VirtualDiagram& d, int jobs = 1);

/// Jones polynomial in quarter powers of t, via the writhe-normalized
/// bracket at A = t^(-1/4), for the deterministic orientation.
QuarterLaurent jones(const VirtualDiagram& d, int jobs = 1);

/// Spanning-subgraph expansion of the signed cyclic graph polynomial:
/// F[G] = sum over edge subsets S of
///   A^(e+(S) + e-(G-S)) * B^(e-(S) + e+(G-S)) * d^(bc(S) - 1).
BracketPoly f_expansion(const SignedCyclicGraph& g);

/// The deletion-marking recursion for F[G]: split on the first unmarked
/// edge e (ascending edge id): B*F[G - e] + A*F[G with e marked] for
/// positive e, with A and B exchanged for negative e; once every edge is
/// marked the value is d^(bc(marked set) - 1).
BracketPoly f_recursive(const SignedCyclicGraph& g);

/// Same recursion processing unmarked edges in the given order
/// (a permutation of 0..E-1); the result must not depend on it.
BracketPoly f_recursive_order(const SignedCyclicGraph& g, std::span<const int> edge_order);

struct EqualityReport {
    bool ok = true;
    std::string detail;
};

/// Checks f_expansion(g) == f_recursive(g) == bracket(medial(g)) term for
/// term; on failure the detail names the differing terms and the
/// subset/state correspondence (subset edges take their edge-parallel
/// smoothing).
EqualityReport verify_f_equivalence(const SignedCyclicGraph& g);

struct TaitRoundTripReport {
    enum class Status { ok, mismatch, not_colorable };
    Status status = Status::ok;
    std::string detail;
    bool ok() const { return status == Status::ok; }
};

/// Checks bracket(d) == F[tait_graph(d, coloring)] for the canonical
/// coloring and its complement; reports non-colorable diagrams distinctly.
TaitRoundTripReport verify_tait_roundtrip(const VirtualDiagram& d);

/// Jones via the graph polynomial: F[G] evaluated at A = t^(-1/4),
/// B = t^(1/4), d = -(t^(-1/2) + t^(1/2)) with the writhe factor of the
/// medial diagram.
QuarterLaurent jones_via_f(const SignedCyclicGraph& g);

/// Same, entering from a checkerboard-colorable diagram through its Tait
/// graph. Throws if the diagram is not colorable.
QuarterLaurent jones_via_f(const VirtualDiagram& d);

struct InvariantReport {
    BracketPoly bracket;
    QuarterLaurent jones;
    int writhe = 0;
    std::uint64_t state_count = 0;
    double ms = 0.0;

    std::string to_json() const;
};

InvariantReport invariant_report(const VirtualDiagram& d, int jobs = 1);

namespace detail {

/// Shared per-instance table of bc(S) for every subset mask; index by mask.
std::vector<int> bc_table(const SignedCyclicGraph& g);

BracketPoly f_expansion_with_table(const SignedCyclicGraph& g, const std::vector<int>& bc);
BracketPoly f_recursive_with_table(const SignedCyclicGraph& g, const std::vector<int>& bc,
                                   std::span<const int> edge_order);

}  // namespace detail

}  // namespace vknot

#endif
