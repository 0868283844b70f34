#ifndef VKNOT_FIXTURES_HPP
#define VKNOT_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "vknot/cyclic_graph.hpp"
#include "vknot/diagram.hpp"

namespace vknot::fixtures {

/// Built-in copies of the diagrams and graphs shipped under fixtures/;
/// the files are asserted against these in the tests.

VirtualDiagram unknot();
VirtualDiagram kink_plus();   // one positive R1 kink, writhe +1
VirtualDiagram kink_minus();  // the mirror kink, writhe -1
VirtualDiagram hopf_link();
VirtualDiagram trefoil();         // left-handed: writhe -3
VirtualDiagram trefoil_mirror();  // right-handed: writhe +3
VirtualDiagram virtual_trefoil();
VirtualDiagram virtualized_trefoil();  // trefoil with crossing 0 virtualized

SignedCyclicGraph triangle();     // planar triangle, all edges positive
SignedCyclicGraph double_loop();  // one vertex, two interleaved positive loops

/// All diagram fixtures with their file stem names.
std::vector<std::pair<std::string, VirtualDiagram>> all_diagrams();
std::vector<std::pair<std::string, SignedCyclicGraph>> all_graphs();

}  // namespace vknot::fixtures

#endif
