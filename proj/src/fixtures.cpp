#include "vknot/fixtures.hpp"

namespace vknot::fixtures {

VirtualDiagram unknot() { return VirtualDiagram::unknot(1); }

VirtualDiagram kink_plus() { return VirtualDiagram(1, {{0, 1}, {2, 3}}); }

VirtualDiagram kink_minus() { return VirtualDiagram(1, {{0, 3}, {1, 2}}); }

VirtualDiagram hopf_link() {
    return VirtualDiagram(2, {{2, 7}, {1, 4}, {6, 3}, {5, 0}});
}

VirtualDiagram trefoil() {
    // Closure of three identical crossings in a cycle; crossing i connects
    // to crossing i+1 through arcs (i,1)-(i+1,2) and (i,0)-(i+1,3).
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        arcs.emplace_back(4 * i + 1, 4 * j + 2);
        arcs.emplace_back(4 * i + 0, 4 * j + 3);
    }
    return VirtualDiagram(3, arcs);
}

VirtualDiagram trefoil_mirror() {
    // Every trefoil crossing switched; coincides with the medial diagram of
    // the all-positive planar triangle.
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        arcs.emplace_back(4 * i + 0, 4 * j + 1);
        arcs.emplace_back(4 * i + 3, 4 * j + 2);
    }
    return VirtualDiagram(3, arcs);
}

VirtualDiagram virtual_trefoil() {
    return VirtualDiagram(2, {{3, 5}, {7, 0}, {2, 4}, {6, 1}});
}

VirtualDiagram virtualized_trefoil() { return canonical(virtualize(trefoil(), 0)); }

SignedCyclicGraph triangle() {
    return SignedCyclicGraph({{0, 5}, {1, 2}, {3, 4}},
                             {{0, 1, +1}, {2, 3, +1}, {4, 5, +1}});
}

SignedCyclicGraph double_loop() {
    return SignedCyclicGraph({{0, 1, 2, 3}}, {{0, 2, +1}, {1, 3, +1}});
}

std::vector<std::pair<std::string, VirtualDiagram>> all_diagrams() {
    return {
        {"unknot", unknot()},
        {"kink_plus", kink_plus()},
        {"kink_minus", kink_minus()},
        {"hopf", hopf_link()},
        {"trefoil", trefoil()},
        {"trefoil_mirror", trefoil_mirror()},
        {"virtual_trefoil", virtual_trefoil()},
        {"virtualized_trefoil", virtualized_trefoil()},
    };
}

std::vector<std::pair<std::string, SignedCyclicGraph>> all_graphs() {
    return {
        {"triangle", triangle()},
        {"double_loop", double_loop()},
    };
}

}  // namespace vknot::fixtures
