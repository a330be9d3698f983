#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace jdc {

using HalfEdge = int;
using Label = std::string;

bool valid_label(const Label& label);

struct UnivalentVertex {
    HalfEdge half = 0;
    Label label;
};

// A vertex-oriented unitrivalent graph with at least one labeled univalent
// vertex. The order of each trivalent triple encodes the cyclic orientation
// (rotations are equivalent; reversal is the AS move). `sign` is an external
// coefficient carried by constructions, not part of the isomorphism type.
struct Diagram {
    std::vector<std::array<HalfEdge, 3>> trivalent;
    std::vector<UnivalentVertex> univalent;
    std::vector<std::pair<HalfEdge, HalfEdge>> edges;
    int sign = 1;

    // Throws structural_error unless every half-edge id occurs in exactly one
    // vertex record and exactly one edge, the graph is connected, there is at
    // least one univalent vertex, and no edge is a loop at a single vertex.
    void validate() const;

    int vertex_count() const { return static_cast<int>(trivalent.size() + univalent.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

int vassiliev_degree(const Diagram& d);
int first_betti(const Diagram& d);
int grope_degree(const Diagram& d);
bool is_tree(const Diagram& d);

Diagram make_strut(const Label& a, const Label& b);
Diagram make_y(const Label& a, const Label& b, const Label& c);

// Validated fixed-index view used by canonicalization, generation and IHX
// surgery. Vertices 0..T-1 are the trivalent ones, T..T+U-1 the univalent
// ones in input order; half-edges are renumbered 0..H-1.
struct FlatDiagram {
    int num_halves = 0;
    std::vector<std::array<int, 3>> tri;
    std::vector<Label> uni_label;
    std::vector<int> uni_half;
    std::vector<int> mate;      // half -> half
    std::vector<int> vertex_of; // half -> vertex index (tri first, then uni)
    int sign = 1;

    static FlatDiagram from(const Diagram& d);
    Diagram to_diagram() const;

    int tri_count() const { return static_cast<int>(tri.size()); }
    int uni_count() const { return static_cast<int>(uni_label.size()); }
};

} // namespace jdc
