#include "vknot/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace vknot {

namespace {

void require_enumerable(int count, const char* what) {
    if (count > 63) {
        throw std::invalid_argument(std::string("state enumeration over ") + what +
                                    " is limited to 63 (got " + std::to_string(count) + ")");
    }
}

// Loop count of one state given as a bit mask (bit c set = B-smoothing).
// The smoothed diagram is a disjoint union of cycles alternating between
// smoothing joins and arcs; walk each once.
int loop_count_mask(const VirtualDiagram& d, std::uint64_t mask, std::vector<int>& smooth,
                    std::vector<char>& seen) {
    const int ports = d.port_count();
    smooth.resize(ports);
    for (int c = 0; c < d.crossing_count(); ++c) {
        const int base = 4 * c;
        const int f = d.flag(c);
        int x = base + f, y, z, w;
        if ((mask >> c) & 1) {  // B: joins f with f+3 and f+1 with f+2
            y = base + ((f + 3) & 3);
            z = base + ((f + 1) & 3);
            w = base + ((f + 2) & 3);
        } else {  // A: joins f with f+1 and f+2 with f+3
            y = base + ((f + 1) & 3);
            z = base + ((f + 2) & 3);
            w = base + ((f + 3) & 3);
        }
        smooth[x] = y;
        smooth[y] = x;
        smooth[z] = w;
        smooth[w] = z;
    }
    seen.assign(ports, 0);
    int loops = 0;
    for (int p = 0; p < ports; ++p) {
        if (seen[p]) continue;
        ++loops;
        int x = p;
        do {
            int y = smooth[x];
            seen[x] = 1;
            seen[y] = 1;
            x = d.mate(y);
        } while (x != p);
    }
    return loops + d.free_loops();
}

// Accumulate bracket contributions for masks in [lo, hi) into a dense
// count table indexed by (popcount, loops).
void bracket_range(const VirtualDiagram& d, std::uint64_t lo, std::uint64_t hi,
                   std::vector<std::uint64_t>& counts, int max_loops) {
    std::vector<int> smooth;
    std::vector<char> seen;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        int beta = __builtin_popcountll(mask);
        int loops = loop_count_mask(d, mask, smooth, seen);
        ++counts[static_cast<std::size_t>(beta) * (max_loops + 1) + loops];
    }
}

}  // namespace

BracketPoly bracket(const VirtualDiagram& d, int jobs) {
    const int n = d.crossing_count();
    require_enumerable(n, "crossings");
    const int max_loops = 2 * n + d.free_loops();  // every state has at most ports/2 curves
    const std::uint64_t states = std::uint64_t(1) << n;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n + 1) * (max_loops + 1), 0);

    if (jobs > 1 && states >= 1024) {
        int workers = std::min<std::uint64_t>(jobs, states / 256);
        std::vector<std::vector<std::uint64_t>> partial(
            workers, std::vector<std::uint64_t>(counts.size(), 0));
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = states * w / workers;
            std::uint64_t hi = states * (w + 1) / workers;
            threads.emplace_back(
                [&, lo, hi, w] { bracket_range(d, lo, hi, partial[w], max_loops); });
        }
        for (auto& t : threads) t.join();
        for (const auto& part : partial) {
            for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
        }
    } else {
        bracket_range(d, 0, states, counts, max_loops);
    }

    BracketPoly out;
    for (int beta = n; beta >= 0; --beta) {
        for (int loops = 0; loops <= max_loops; ++loops) {
            std::uint64_t c = counts[static_cast<std::size_t>(beta) * (max_loops + 1) + loops];
            if (c != 0) out.add_term({n - beta, beta, loops - 1}, BigInt(c));
        }
    }
    return out;
}

Laurent normalized_bracket(const VirtualDiagram& d, int jobs) {
    return specialize_bracket_normalized(bracket(d, jobs));
}

QuarterLaurent jones(const VirtualDiagram& d, int jobs) {
    return normalize_writhe(bracket(d, jobs), writhe(d));
}

namespace detail {

std::vector<int> bc_table(const SignedCyclicGraph& g) {
    require_enumerable(g.edge_count(), "edges");
    const std::uint64_t subsets = std::uint64_t(1) << g.edge_count();
    std::vector<int> table(subsets);
    BcScratch scratch;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        table[mask] = boundary_components(g, mask, scratch);
    }
    return table;
}

BracketPoly f_expansion_with_table(const SignedCyclicGraph& g, const std::vector<int>& bc) {
    const int edges = g.edge_count();
    std::uint64_t positive_mask = 0;
    for (int e = 0; e < edges; ++e) {
        if (g.edge(e).sign > 0) positive_mask |= std::uint64_t(1) << e;
    }
    const int total_pos = __builtin_popcountll(positive_mask);
    const int total_neg = edges - total_pos;
    BracketPoly out;
    const std::uint64_t subsets = std::uint64_t(1) << edges;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        int pos_in = __builtin_popcountll(mask & positive_mask);
        int neg_in = __builtin_popcountll(mask & ~positive_mask & (subsets - 1));
        int a = pos_in + (total_neg - neg_in);
        int b = neg_in + (total_pos - pos_in);
        out.add_term({a, b, bc[mask] - 1}, 1);
    }
    return out;
}

namespace {

BracketPoly f_rec(const SignedCyclicGraph& g, const std::vector<int>& bc,
                  std::span<const int> order, std::size_t depth, std::uint64_t deleted,
                  std::uint64_t marked) {
    // First edge in the given order that is neither deleted nor marked.
    while (depth < order.size()) {
        std::uint64_t bit = std::uint64_t(1) << order[depth];
        if (!((deleted | marked) & bit)) break;
        ++depth;
    }
    if (depth == order.size()) {
        return BracketPoly::monomial({0, 0, bc[marked] - 1});
    }
    const int e = order[depth];
    const std::uint64_t bit = std::uint64_t(1) << e;
    BracketPoly without = f_rec(g, bc, order, depth + 1, deleted | bit, marked);
    BracketPoly with_marked = f_rec(g, bc, order, depth + 1, deleted, marked | bit);
    if (g.edge(e).sign > 0) {
        without.shift_inplace(0, 1, 0);
        with_marked.shift_inplace(1, 0, 0);
    } else {
        without.shift_inplace(1, 0, 0);
        with_marked.shift_inplace(0, 1, 0);
    }
    without += with_marked;
    return without;
}

}  // namespace

BracketPoly f_recursive_with_table(const SignedCyclicGraph& g, const std::vector<int>& bc,
                                   std::span<const int> edge_order) {
    return f_rec(g, bc, edge_order, 0, 0, 0);
}

}  // namespace detail

BracketPoly f_expansion(const SignedCyclicGraph& g) {
    return detail::f_expansion_with_table(g, detail::bc_table(g));
}

BracketPoly f_recursive(const SignedCyclicGraph& g) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    return detail::f_recursive_with_table(g, detail::bc_table(g), order);
}

BracketPoly f_recursive_order(const SignedCyclicGraph& g, std::span<const int> edge_order) {
    std::uint64_t seen = 0;
    for (int e : edge_order) {
        if (e < 0 || e >= g.edge_count() || ((seen >> e) & 1)) {
            throw std::invalid_argument("edge order must list every edge exactly once");
        }
        seen |= std::uint64_t(1) << e;
    }
    if (static_cast<int>(edge_order.size()) != g.edge_count()) {
        throw std::invalid_argument("edge order must list every edge exactly once");
    }
    return detail::f_recursive_with_table(g, detail::bc_table(g), edge_order);
}

namespace {

std::string first_difference(const BracketPoly& x, const BracketPoly& y, const char* xn,
                             const char* yn) {
    BracketPoly diff = x - y;
    if (diff.is_zero()) return {};
    const auto& [m, c] = diff.terms().front();
    std::ostringstream os;
    os << xn << " and " << yn << " differ; first differing monomial A^" << m.a << " B^" << m.b
       << " d^" << m.k << " (coefficient difference " << c.str() << ")";
    return os.str();
}

}  // namespace

EqualityReport verify_f_equivalence(const SignedCyclicGraph& g) {
    EqualityReport report;
    auto bc = detail::bc_table(g);
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    BracketPoly expansion = detail::f_expansion_with_table(g, bc);
    BracketPoly recursion = detail::f_recursive_with_table(g, bc, order);
    auto [diagram, map] = medial(g);
    BracketPoly medial_bracket = bracket(diagram);

    if (expansion != recursion) {
        report.ok = false;
        report.detail = first_difference(expansion, recursion, "f_expansion", "f_recursive");
        return report;
    }
    if (expansion != medial_bracket) {
        report.ok = false;
        report.detail =
            first_difference(expansion, medial_bracket, "f_expansion", "bracket(medial)");
        // Locate a subset whose term disagrees with its matching state
        // (subset edges smoothed edge-parallel, the rest vertex-parallel).
        const std::uint64_t subsets = std::uint64_t(1) << g.edge_count();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            int loops = loop_count(diagram, map.subset_state(mask));
            if (loops != bc[mask]) {
                report.detail += "; subset mask " + std::to_string(mask) + " has bc " +
                                 std::to_string(bc[mask]) + " but its state has " +
                                 std::to_string(loops) + " loops";
                break;
            }
        }
    }
    return report;
}

TaitRoundTripReport verify_tait_roundtrip(const VirtualDiagram& d) {
    TaitRoundTripReport report;
    auto coloring = checkerboard_colorable(d);
    if (!coloring) {
        report.status = TaitRoundTripReport::Status::not_colorable;
        report.detail = "diagram is not checkerboard colorable";
        return report;
    }
    BracketPoly bracket_poly = bracket(d);
    for (bool complement : {false, true}) {
        Coloring col = complement ? coloring->complemented() : *coloring;
        BracketPoly f = f_expansion(tait_graph(d, col));
        if (f != bracket_poly) {
            report.status = TaitRoundTripReport::Status::mismatch;
            report.detail = first_difference(bracket_poly, f, "bracket",
                                             complement ? "F[tait, complement coloring]"
                                                        : "F[tait, canonical coloring]");
            return report;
        }
    }
    return report;
}

QuarterLaurent jones_via_f(const SignedCyclicGraph& g) {
    auto [diagram, map] = medial(g);
    return normalize_writhe(f_expansion(g), writhe(diagram));
}

QuarterLaurent jones_via_f(const VirtualDiagram& d) {
    auto coloring = checkerboard_colorable(d);
    if (!coloring) {
        throw std::invalid_argument("diagram is not checkerboard colorable");
    }
    return normalize_writhe(f_expansion(tait_graph(d, *coloring)), writhe(d));
}

std::string InvariantReport::to_json() const {
    std::ostringstream os;
    os << "{\"bracket\":" << bracket.to_json() << ",\"jones\":" << jones.to_json_quarter()
       << ",\"writhe\":" << writhe << ",\"states\":" << state_count << ",\"ms\":";
    os.precision(3);
    os << std::fixed << ms << "}";
    return os.str();
}

InvariantReport invariant_report(const VirtualDiagram& d, int jobs) {
    InvariantReport report;
    auto start = std::chrono::steady_clock::now();
    report.bracket = bracket(d, jobs);
    report.writhe = writhe(d);
    report.jones = normalize_writhe(report.bracket, report.writhe);
    report.state_count = std::uint64_t(1) << d.crossing_count();
    report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    return report;
}

}  // namespace vknot
