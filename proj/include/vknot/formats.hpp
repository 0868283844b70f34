#ifndef VKNOT_FORMATS_HPP
#define VKNOT_FORMATS_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vknot/cyclic_graph.hpp"
#include "vknot/diagram.hpp"

namespace vknot {

/// Error with the 1-based source position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Rotation-system text format, one graph per file:
///   v <vertex-id>: <dart-id> ...   counterclockwise order, may be empty
///   e <edge-id>: <dart-id> <dart-id> <+|->
/// '#' starts a comment. Vertex and edge ids must each be dense 0..n-1.
SignedCyclicGraph parse_graph(std::istream& in);
SignedCyclicGraph parse_graph_string(const std::string& text);
SignedCyclicGraph parse_graph_file(const std::string& path);

/// Canonical serialization: rotations start at their smallest dart,
/// vertices are ordered by first dart (isolated vertices last), edges by
/// their smaller dart. Dart ids are preserved.
std::string serialize_graph(const SignedCyclicGraph& g);

/// Diagram text format:
///   x <crossing-id>: <a0> <a1> <a2> <a3>   arc labels in ccw port order,
///                                          under-strand at positions 0 and 2
///   o <count>                              free loops (optional, default 0)
/// Every arc label appears exactly twice.
VirtualDiagram parse_diagram(std::istream& in);
VirtualDiagram parse_diagram_string(const std::string& text);
VirtualDiagram parse_diagram_file(const std::string& path);

/// Canonical serialization: crossing labeling normalized (under-strand on
/// ports 0 and 2), arc labels assigned in order of first appearance.
std::string serialize_diagram(const VirtualDiagram& d);

std::string graph_to_json(const SignedCyclicGraph& g);
std::string diagram_to_json(const VirtualDiagram& d);

}  // namespace vknot

#endif
