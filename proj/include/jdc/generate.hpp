#pragma once

#include "jdc/canonical.hpp"
#include "jdc/diagram.hpp"

#include <vector>

namespace jdc {

// Exhaustive, duplicate-free list of AS-classes of trees of Vassiliev degree
// `degree` with leaves labeled from `alphabet`; `distinct` restricts to
// injective labelings. Sorted by key; two-torsion classes included & flagged.
std::vector<CanonicalDiagram> generate_trees(int degree, const std::vector<Label>& alphabet, bool distinct);

// Exhaustive list of connected unitrivalent AS-classes of grope degree
// `degree` (Vassiliev degree + first Betti number) with >= 1 univalent
// vertex; labels range over the alphabet with repeats.
std::vector<CanonicalDiagram> generate_graphs(int degree, const std::vector<Label>& alphabet);

// All unitrivalent tree shapes on the given leaf labels (each labeled tree
// exactly once, orientations arbitrary); building block for the generators
// and for test oracles.
std::vector<Diagram> tree_shapes(const std::vector<Label>& leaves);

} // namespace jdc
