#pragma once

#include "jdc/diagram.hpp"
#include "jdc/element.hpp"
#include "jdc/grope.hpp"
#include "jdc/parser.hpp"

#include <string>
#include <vector>

namespace jdc {

// Whitney disk label: a base surface i (order 0) or a pair (I,J) of brackets
// pairing intersections of the surfaces I and J. order((I,J)) = order(I) +
// order(J) + 1.
struct Bracket {
    std::string label;             // nonempty => base surface
    std::vector<Bracket> children; // size 2 otherwise

    bool is_base() const { return children.empty(); }
    int order() const;
    std::string to_text() const;

    static Bracket base(std::string label);
    static Bracket pair(Bracket a, Bracket b);
    static Bracket from_expr(const BracketExpr& e);

    friend bool operator==(const Bracket& a, const Bracket& b) { return a.to_text() == b.to_text(); }
    friend bool operator<(const Bracket& a, const Bracket& b) { return a.to_text() < b.to_text(); }
};

// An unpaired intersection point between the surfaces labeled by the two
// brackets, with its sign.
struct UnpairedPoint {
    Bracket a;
    Bracket b;
    int sign = 1;

    int order() const { return a.order() + b.order() + 1; }
};

struct TowerEncoding {
    std::vector<std::string> labels; // bottom components, in order
    std::vector<Bracket> disks;
    std::vector<UnpairedPoint> points;

    void validate() const; // disks closed under sub-brackets, labels known

    // (min over points of point order) - 1; -1 when the tower is clean.
    int order() const;
};

// The tree t(p): the rooted trees of the two brackets joined by an edge.
// Each bracket (A,B) becomes a trivalent vertex with cyclic order (A,B,up);
// base labels become univalent labels. Returns (epsilon_p, tree).
std::pair<int, Diagram> tree_of_point(const UnpairedPoint& p);

// Signed disjoint union over all points, without cancellation. All points
// must have order n.
GeometricForest intersection_forest(const TowerEncoding& t, int n);

// Summation of the forest into the AS-quotient group.
Element tau_hat(const TowerEncoding& t, int n);

// Transcribes a strict capped encoding of class n into an order n-1 tower
// whose intersection trees are the grope trees; attachment order data is
// discarded. Caps must carry exactly one intersection each.
TowerEncoding push_in(const GropeEncoding& g);

// The order-2 tower on 4 components with t_3 = (+I, -H, +X).
TowerEncoding theorem1_witness();

// Decompose an oriented tree at the edge of the given univalent vertex into
// an unpaired point whose tree_of_point reproduces the input exactly.
UnpairedPoint point_from_tree(const Diagram& tree, int sign, HalfEdge at_leaf);

} // namespace jdc
