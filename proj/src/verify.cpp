#include "vknot/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "vknot/diagram.hpp"
#include "vknot/fixtures.hpp"
#include "vknot/formats.hpp"
#include "vknot/invariants.hpp"
#include "vknot/medial.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Check ids, in report order.
enum CheckId {
    kOrderIndependence,
    kRecursionExpansion,
    kMedialBracket,
    kMedialColoring,
    kClaspInvariance,
    kPdualVirtualization,
    kVirtualizeSwitch,
    kFEquivalence,
    kTaitRoundTrip,
    kBcParity,
    kGenus0,
    kPdualInvolution,
    kCheckCount,
};

const char* kCheckNames[kCheckCount] = {
    "order-independence", "recursion-expansion", "medial-bracket",
    "medial-coloring", "clasp-invariance", "pdual-virtualization", "virtualize-switch",
    "f-equivalence", "tait-roundtrip", "bc-parity", "genus-0", "pdual-involution",
};

const char* kCheckLabels[kCheckCount] = {
    "deletion-marking recursion is edge-order independent",
    "recursion equals spanning-subgraph expansion",
    "expansion equals bracket of the medial diagram",
    "medial colorable; parallel states count |V| and bc(G) loops",
    "normalized bracket invariant under clasp insertion",
    "partial dual matches virtualized medial under the bracket",
    "virtualize and switch agree under the bracket (<= 3 crossings)",
    "three-way polynomial equality reporter",
    "bracket equals F of both Tait graphs",
    "bc(S) = e(S) + v (mod 2)",
    "planar instances satisfy bc(S) = e(S) - v + 2c(S)",
    "partial dual twice restores the graph",
};

struct Tally {
    std::uint64_t cases[kCheckCount] = {};
    std::uint64_t failures[kCheckCount] = {};
    double ms[kCheckCount] = {};
    std::uint64_t first_fail_index[kCheckCount];
    std::string first_fail_detail[kCheckCount];

    Tally() {
        std::fill(std::begin(first_fail_index), std::end(first_fail_index),
                  ~std::uint64_t(0));
    }

    void record(CheckId id, bool ok, std::uint64_t instance, const std::string& detail) {
        ++cases[id];
        if (ok) return;
        ++failures[id];
        if (instance < first_fail_index[id]) {
            first_fail_index[id] = instance;
            first_fail_detail[id] = detail;
        }
    }

    void merge(const Tally& other) {
        for (int i = 0; i < kCheckCount; ++i) {
            cases[i] += other.cases[i];
            failures[i] += other.failures[i];
            ms[i] += other.ms[i];
            if (other.first_fail_index[i] < first_fail_index[i]) {
                first_fail_index[i] = other.first_fail_index[i];
                first_fail_detail[i] = other.first_fail_detail[i];
            }
        }
    }
};

std::string describe_instance(const SignedCyclicGraph& g) {
    std::string s = serialize_graph(g);
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

// Runs every family-level check on one signed cyclic graph. The bc table is
// shared across the sign patterns of one rotation system.
class InstanceBattery {
public:
    void run(const SignedCyclicGraph& g, const std::vector<int>& bc, int graph_genus,
             const std::vector<int>& subgraph_comp, std::uint64_t index, std::uint64_t seed,
             Tally& tally) {
        const int edges = g.edge_count();
        auto fail_detail = [&](const std::string& what) {
            return what + " [instance: " + describe_instance(g) + "]";
        };

        auto t0 = Clock::now();
        BracketPoly expansion = detail::f_expansion_with_table(g, bc);
        order_.resize(edges);
        std::iota(order_.begin(), order_.end(), 0);
        BracketPoly recursion = detail::f_recursive_with_table(g, bc, order_);
        bool agrees = expansion == recursion;
        tally.record(kRecursionExpansion, agrees, index,
                     agrees ? "" : fail_detail("f_recursive != f_expansion"));
        tally.ms[kRecursionExpansion] += ms_since(t0);

        t0 = Clock::now();
        std::mt19937_64 rng(seed ^ (index * 0x9e3779b97f4a7c15ULL));
        bool order_ok = true;
        for (int trial = 0; trial < 5 && order_ok; ++trial) {
            for (std::size_t i = order_.size(); i > 1; --i) {
                std::swap(order_[i - 1], order_[rng() % i]);
            }
            order_ok = detail::f_recursive_with_table(g, bc, order_) == expansion;
        }
        tally.record(kOrderIndependence, order_ok, index,
                     order_ok ? "" : fail_detail("recursion value depends on the edge order"));
        tally.ms[kOrderIndependence] += ms_since(t0);

        t0 = Clock::now();
        auto [diagram, map] = medial(g);
        BracketPoly medial_bracket = bracket(diagram);
        bool medial_ok = expansion == medial_bracket;
        tally.record(kMedialBracket, medial_ok, index,
                     medial_ok ? "" : fail_detail("f_expansion != bracket(medial)"));
        tally.ms[kMedialBracket] += ms_since(t0);

        t0 = Clock::now();
        auto coloring = checkerboard_colorable(diagram);
        bool anchors_ok = coloring.has_value();
        if (anchors_ok) {
            int vloops = loop_count(diagram, map.vertex_parallel_state());
            int eloops = loop_count(diagram, map.edge_parallel_state());
            anchors_ok = vloops == g.vertex_count() &&
                 eloops == bc[EdgeSubset::all(edges).mask & ((std::uint64_t(1) << edges) - 1)];
        }
        tally.record(kMedialColoring, anchors_ok, index,
                     anchors_ok ? "" : fail_detail("medial coloring anchors failed"));
        tally.ms[kMedialColoring] += ms_since(t0);

        if (coloring) {
            t0 = Clock::now();
            bool roundtrip = f_expansion(tait_graph(diagram, *coloring)) == medial_bracket &&
                       f_expansion(tait_graph(diagram, coloring->complemented())) ==
                           medial_bracket;
            tally.record(kTaitRoundTrip, roundtrip, index,
                         roundtrip ? "" : fail_detail("bracket != F[tait] on a medial instance"));
            tally.ms[kTaitRoundTrip] += ms_since(t0);
        }

        t0 = Clock::now();
        bool dual_ok = true;
        for (int e = 0; e < edges && dual_ok; ++e) {
            auto [dual_diagram, dual_map] = medial(partial_dual_edge(g, e));
            dual_ok = bracket(dual_diagram) == bracket(virtualize(diagram, e));
        }
        tally.record(kPdualVirtualization, dual_ok, index,
                     dual_ok ? "" : fail_detail("partial dual / virtualization brackets differ"));
        tally.ms[kPdualVirtualization] += ms_since(t0);

        t0 = Clock::now();
        const std::uint64_t subsets = std::uint64_t(1) << edges;
        bool parity = true;
        for (std::uint64_t mask = 0; mask < subsets && parity; ++mask) {
            parity = ((bc[mask] - __builtin_popcountll(mask) - g.vertex_count()) % 2) == 0;
        }
        tally.record(kBcParity, parity, index, parity ? "" : fail_detail("bc parity law failed"));

        if (graph_genus == 0) {
            bool planar_ok = true;
            for (std::uint64_t mask = 0; mask < subsets && planar_ok; ++mask) {
                planar_ok = bc[mask] == __builtin_popcountll(mask) - g.vertex_count() +
                                            2 * subgraph_comp[mask];
            }
            tally.record(kGenus0, planar_ok, index,
                         planar_ok ? "" : fail_detail("genus-0 bc formula failed"));
        }

        bool involution = true;
        for (int e = 0; e < edges && involution; ++e) {
            involution = partial_dual_edge(partial_dual_edge(g, e), e).same_as(g);
        }
        tally.record(kPdualInvolution, involution, index,
                     involution ? "" : fail_detail("partial dual is not an involution"));
        tally.ms[kBcParity] += ms_since(t0);
    }

private:
    std::vector<int> order_;
};

// Enumeration of every rotation placement of `edges` edges (darts 2i, 2i+1)
// over `vertices` labeled vertices. The callback receives the rotation
// system; sign patterns are layered on by the caller.
class PlacementEnumerator {
public:
    PlacementEnumerator(int edges, int vertices) : edges_(edges), vertices_(vertices) {}

    template <typename Fn>
    void for_each_with_prefix(std::span<const int> prefix, Fn&& fn) {
        assignment_.assign(2 * edges_, 0);
        std::copy(prefix.begin(), prefix.end(), assignment_.begin());
        assign_rest(static_cast<int>(prefix.size()), fn);
    }

    static std::uint64_t prefix_weight(int edges, int vertices, int prefix_len) {
        // Upper bound on instances under one prefix: assignments * orders.
        std::uint64_t w = 1;
        for (int i = prefix_len; i < 2 * edges; ++i) w *= vertices;
        return w;
    }

private:
    template <typename Fn>
    void assign_rest(int dart, Fn& fn) {
        if (dart == 2 * edges_) {
            emit_arrangements(fn);
            return;
        }
        for (int v = 0; v < vertices_; ++v) {
            assignment_[dart] = v;
            assign_rest(dart + 1, fn);
        }
    }

    template <typename Fn>
    void emit_arrangements(Fn& fn) {
        rotations_.assign(vertices_, {});
        for (int d = 0; d < 2 * edges_; ++d) rotations_[assignment_[d]].push_back(d);
        // Every cyclic order per vertex: hold the first dart fixed and
        // permute the remainder.
        arrange(0, fn);
    }

    template <typename Fn>
    void arrange(int v, Fn& fn) {
        if (v == vertices_) {
            fn(rotations_);
            return;
        }
        auto& rot = rotations_[v];
        if (rot.size() <= 2) {
            arrange(v + 1, fn);
            return;
        }
        std::sort(rot.begin() + 1, rot.end());
        do {
            arrange(v + 1, fn);
        } while (std::next_permutation(rot.begin() + 1, rot.end()));
    }

    int edges_;
    int vertices_;
    std::vector<int> assignment_;
    std::vector<std::vector<int>> rotations_;
};

struct FamilyTask {
    int edges;
    int vertices;
    std::vector<int> prefix;
    std::uint64_t index_base;  // instance indices start here
};

std::vector<FamilyTask> build_tasks(const VerifyOptions& opt) {
    std::vector<FamilyTask> tasks;
    std::uint64_t base = 0;
    for (int e = 0; e <= opt.max_edges; ++e) {
        for (int v = 1; v <= opt.max_vertices; ++v) {
            int prefix_len = std::min(2 * e, 3);
            std::vector<int> prefix(prefix_len, 0);
            while (true) {
                tasks.push_back({e, v, prefix, base});
                base += PlacementEnumerator::prefix_weight(e, v, prefix_len) * 5040 * 16;
                int i = prefix_len - 1;
                while (i >= 0 && prefix[i] == v - 1) prefix[i--] = 0;
                if (i < 0) break;
                ++prefix[i];
            }
        }
    }
    return tasks;
}

void run_family_task(const FamilyTask& task, const VerifyOptions& opt, Tally& tally) {
    PlacementEnumerator enumerator(task.edges, task.vertices);
    InstanceBattery battery;
    detail::BcScratch scratch;
    std::uint64_t index = task.index_base;
    std::vector<int> bc, comps;
    const std::uint64_t subsets = std::uint64_t(1) << task.edges;

    std::vector<SignedEdge> edges(task.edges);
    for (int e = 0; e < task.edges; ++e) edges[e] = {2 * e, 2 * e + 1, +1};

    enumerator.for_each_with_prefix(task.prefix, [&](const std::vector<std::vector<int>>& rot) {
        SignedCyclicGraph base(rot, edges);
        bc.resize(subsets);
        comps.resize(subsets);
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            bc[mask] = detail::boundary_components(base, mask, scratch);
            comps[mask] = subgraph_components(base, {mask});
        }
        int g0 = genus(base);
        for (std::uint64_t signs = 0; signs < subsets; ++signs) {
            SignedCyclicGraph g = base.with_signs(signs);
            battery.run(g, bc, g0, comps, index++, opt.seed, tally);
        }
    });
}

void run_random_instances(const VerifyOptions& opt, Tally& tally) {
    InstanceBattery battery;
    detail::BcScratch scratch;
    std::vector<int> bc, comps;
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.random_instances; ++i) {
        int vertices = 1 + static_cast<int>(rng() % 5);
        int edge_count = static_cast<int>(rng() % (opt.random_max_edges + 1));
        SignedCyclicGraph g =
            random_cyclic_graph(vertices, edge_count, 0.5, opt.seed + 1000 + i);
        const std::uint64_t subsets = std::uint64_t(1) << edge_count;
        bc.resize(subsets);
        comps.resize(subsets);
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            bc[mask] = detail::boundary_components(g, mask, scratch);
            comps[mask] = subgraph_components(g, {mask});
        }
        battery.run(g, bc, genus(g), comps, (std::uint64_t(1) << 62) + i, opt.seed, tally);
    }
}

void run_p7(Tally& tally) {
    auto t0 = Clock::now();
    // All perfect matchings on the ports of n crossings, n = 1..3.
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<int, int>> arcs;
        std::vector<int> taken(4 * n, 0);
        std::uint64_t index = 0;
        auto rec = [&](auto&& self) -> void {
            int first = -1;
            for (int p = 0; p < 4 * n; ++p) {
                if (!taken[p]) {
                    first = p;
                    break;
                }
            }
            if (first == -1) {
                VirtualDiagram d(n, arcs);
                bool ok = true;
                for (int c = 0; c < n && ok; ++c) {
                    ok = bracket(virtualize(d, c)) == bracket(switch_crossing(d, c));
                }
                tally.record(kVirtualizeSwitch, ok, index++,
                             ok ? ""
                                : "bracket(virtualize) != bracket(switch) [diagram: " +
                                      serialize_diagram(d) + "]");
                return;
            }
            taken[first] = 1;
            for (int q = first + 1; q < 4 * n; ++q) {
                if (taken[q]) continue;
                taken[q] = 1;
                arcs.emplace_back(first, q);
                self(self);
                arcs.pop_back();
                taken[q] = 0;
            }
            taken[first] = 0;
        };
        rec(rec);
    }
    tally.ms[kVirtualizeSwitch] += ms_since(t0);
}

void run_p5(const VerifyOptions& opt, Tally& tally) {
    auto t0 = Clock::now();
    auto fixtures = fixtures::all_diagrams();
    std::mt19937_64 rng(opt.seed ^ 0x5bd1e995u);
    for (int i = 0; i < 50; ++i) {
        const auto& [name, d] = fixtures[rng() % fixtures.size()];
        int arc_count = 2 * d.crossing_count();
        int refs = arc_count + d.free_loops();
        ArcRef x, y;
        do {
            int xi = static_cast<int>(rng() % refs);
            int yi = static_cast<int>(rng() % refs);
            x = xi < arc_count ? ArcRef::arc(xi) : ArcRef::loop(xi - arc_count);
            y = yi < arc_count ? ArcRef::arc(yi) : ArcRef::loop(yi - arc_count);
        } while (!x.free_loop && !y.free_loop && x.index == y.index);
        VirtualDiagram poked = r2_insert(d, x, y);
        bool ok = normalized_bracket(poked) == normalized_bracket(d);
        tally.record(kClaspInvariance, ok, i,
                     ok ? "" : "normalized bracket changed under r2_insert on " + name);

        // Tait round trip survives the clasp whenever it stays colorable.
        auto report = verify_tait_roundtrip(poked);
        bool rt = report.status != TaitRoundTripReport::Status::mismatch;
        tally.record(kTaitRoundTrip, rt, (std::uint64_t(1) << 61) + i,
                     rt ? "" : report.detail + " (after r2_insert on " + name + ")");
    }
    tally.ms[kClaspInvariance] += ms_since(t0);
}

void run_fixture_checks(Tally& tally) {
    auto t0 = Clock::now();
    // The equality reporter on the shipped graphs and a few random ones.
    std::uint64_t idx = 0;
    for (const auto& [name, g] : fixtures::all_graphs()) {
        auto report = verify_f_equivalence(g);
        tally.record(kFEquivalence, report.ok, idx++,
                     report.ok ? "" : report.detail + " (fixture " + name + ")");
    }
    for (int i = 0; i < 20; ++i) {
        SignedCyclicGraph g = random_cyclic_graph(1 + i % 4, 1 + i % 6, 0.5, 900 + i);
        auto report = verify_f_equivalence(g);
        tally.record(kFEquivalence, report.ok, idx++, report.detail);
    }
    tally.ms[kFEquivalence] += ms_since(t0);

    t0 = Clock::now();
    for (const auto& [name, d] : fixtures::all_diagrams()) {
        auto report = verify_tait_roundtrip(d);
        bool expected_colorable = name != "virtual_trefoil";
        bool ok = expected_colorable
                      ? report.status == TaitRoundTripReport::Status::ok
                      : report.status == TaitRoundTripReport::Status::not_colorable;
        tally.record(kTaitRoundTrip, ok, (std::uint64_t(1) << 60) + idx++,
                     ok ? "" : "fixture " + name + ": " + report.detail);
    }
    tally.ms[kTaitRoundTrip] += ms_since(t0);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    Tally tally;
    auto tasks = build_tasks(opt);

    int jobs = opt.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    if (jobs == 1) {
        for (const auto& task : tasks) run_family_task(task, opt, tally);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex merge_mutex;
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                Tally local;
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    run_family_task(tasks[i], opt, local);
                }
                std::scoped_lock lock(merge_mutex);
                tally.merge(local);
            });
        }
        for (auto& t : workers) t.join();
    }

    run_random_instances(opt, tally);
    run_p5(opt, tally);
    run_p7(tally);
    run_fixture_checks(tally);

    std::vector<CheckResult> results;
    results.reserve(kCheckCount);
    for (int i = 0; i < kCheckCount; ++i) {
        CheckResult r;
        r.id = kCheckNames[i];
        r.label = kCheckLabels[i];
        r.cases = tally.cases[i];
        r.pass = tally.failures[i] == 0 && tally.cases[i] > 0;
        r.ms = tally.ms[i];
        if (tally.failures[i] > 0) {
            r.detail = std::to_string(tally.failures[i]) + " failure(s); first: " +
                       tally.first_fail_detail[i];
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace vknot
