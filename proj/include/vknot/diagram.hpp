#ifndef VKNOT_DIAGRAM_HPP
#define VKNOT_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

/// Smoothing choice at one crossing. With the under-strand on ports
/// {0, 2}, the A-smoothing joins ports 0-1 and 2-3, the B-smoothing
/// joins 0-3 and 1-2.
enum class Smoothing : std::uint8_t { A, B };

/// One smoothing choice per crossing.
using State = std::vector<Smoothing>;

/// Abstract virtual link diagram: real crossings with counterclockwise
/// port order plus a perfect matching of ports by arcs. Virtual crossings
/// are never represented; the data is the quotient by the detour move.
///
/// Global port ids are 4*crossing + slot. In the normalized labeling the
/// under-strand occupies slots 0 and 2; a per-crossing flag tracks labelings
/// rotated by one (produced by switching a crossing), in which the
/// under-strand occupies slots 1 and 3. Zero-crossing closed curves are held
/// in a free-loop counter. Immutable after construction.
class VirtualDiagram {
public:
    VirtualDiagram(int crossings, const std::vector<std::pair<int, int>>& arcs,
                   int free_loops = 0, std::vector<std::uint8_t> flags = {});

    static VirtualDiagram unknot(int free_loops = 1);

    int crossing_count() const { return crossings_; }
    int port_count() const { return 4 * crossings_; }
    int free_loops() const { return free_loops_; }

    int mate(int port) const { return mate_[port]; }
    const std::vector<int>& mates() const { return mate_; }
    std::uint8_t flag(int crossing) const { return flags_[crossing]; }

    /// The port on the same strand across the crossing.
    static int through(int port) { return (port & ~3) | ((port + 2) & 3); }
    static int crossing_of(int port) { return port >> 2; }
    static int slot_of(int port) { return port & 3; }

    bool is_under(int port) const {
        return ((slot_of(port) ^ flags_[crossing_of(port)]) & 1) == 0;
    }

    /// Arcs as port pairs (lo, hi), sorted by lower port.
    std::vector<std::pair<int, int>> arcs() const;

    /// Per-crossing port pairs joined by the given smoothing.
    void smoothing_pairs(int crossing, Smoothing s, int out[2][2]) const;

    bool operator==(const VirtualDiagram&) const = default;

private:
    int crossings_ = 0;
    int free_loops_ = 0;
    std::vector<int> mate_;
    std::vector<std::uint8_t> flags_;
};

/// Relabel ports so every crossing has its under-strand on slots 0 and 2.
VirtualDiagram canonical(const VirtualDiagram& d);

/// Closed strands of the diagram.
struct Traversal {
    int closed_strands = 0;          // port-bearing curves
    std::vector<int> strand_of_port;  // curve index per port
    /// components() counts free loops as components too.
    int free_loops = 0;
    int components() const { return closed_strands + free_loops; }
};

Traversal trace_components(const VirtualDiagram& d);

/// Number of closed curves after applying the state's smoothings;
/// free loops are included in the count.
int loop_count(const VirtualDiagram& d, const State& s);

/// Faces of the diagram on its Carter surface (cap off the underlying
/// 4-valent ribbon structure). Corner j of a crossing is the sector between
/// ports j-1 and j; face_of_port[p] is the face whose boundary walk leaves
/// along the arc at p after turning through corner p.
struct FaceStructure {
    std::vector<std::vector<int>> faces;  // boundary walks as port sequences
    std::vector<int> face_of_port;
    int map_components = 0;  // connected components of the 4-valent map
    int free_loops = 0;      // each lives on its own sphere with two faces
    int face_count() const { return static_cast<int>(faces.size()); }
    /// Faces including the two sides of every free loop.
    int total_face_count() const { return face_count() + 2 * free_loops; }
    /// Total genus of the Carter surface (free-loop spheres contribute 0).
    int genus() const;
};

FaceStructure faces(const VirtualDiagram& d);

/// A proper 2-coloring of the Carter-surface faces: whenever two faces meet
/// across an arc they get opposite colors. The face containing the lowest
/// port of each map component is black.
struct Coloring {
    FaceStructure structure;
    std::vector<std::uint8_t> black;  // per face id

    bool face_is_black(int f) const { return black[f] != 0; }
    Coloring complemented() const;
};

std::optional<Coloring> checkerboard_colorable(const VirtualDiagram& d);

/// Direction choice per closed strand: entry[p] is 1 when the strand enters
/// the crossing at port p. Each strand is directed so that it enters at its
/// lowest-numbered port.
struct Orientation {
    std::vector<std::uint8_t> entry;
};

Orientation orient(const VirtualDiagram& d);

int writhe(const VirtualDiagram& d, const Orientation& o);
int writhe(const VirtualDiagram& d);

/// Exchange over- and under-strand at crossing c, preserving the
/// counterclockwise port order. An involution.
VirtualDiagram switch_crossing(const VirtualDiagram& d, int c);

/// Virtualize crossing c: the flanking virtual crossings exchange the arc
/// ends attached on each side of the crossing (ports 0-1 and ports 2-3 of
/// the normalized labeling) and the crossing's over/under is exchanged, so
/// that the bracket agrees with the switched diagram. An involution.
VirtualDiagram virtualize(const VirtualDiagram& d, int c);

/// Reference to an arc (by index into arcs()) or to a free loop.
struct ArcRef {
    bool free_loop = false;
    int index = 0;

    static ArcRef arc(int i) { return {false, i}; }
    static ArcRef loop(int i) { return {true, i}; }
    friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

/// Split the two referenced arcs and insert a clasp of two new crossings
/// that a classical R2 move (after a detour) would remove: one strand is
/// poked under the other, and choosing the A-smoothing at one new crossing
/// with the B-smoothing at the other reconnects both strands identically.
/// Poking a free loop (including with itself) is supported; requesting the
/// same real arc twice is an error.
VirtualDiagram r2_insert(const VirtualDiagram& d, ArcRef x, ArcRef y);

}  // namespace vknot

#endif
