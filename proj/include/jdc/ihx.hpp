#pragma once

#include "jdc/canonical.hpp"
#include "jdc/diagram.hpp"
#include "jdc/element.hpp"

#include <optional>
#include <vector>

namespace jdc {

// Span of IHX relators over an ordered ambient basis of canonical classes.
struct RelationSet {
    std::vector<CanonicalDiagram> ambient;
    std::vector<Element> rows;
};

// The two reconnections of an internal edge. With the edge written as
// (e,a,b) at one endpoint and (e',c,d) at the other (cyclic orders rotated
// edge-first), H carries (e,b,c)/(e',d,a) and X carries (e,c,a)/(e',b,d);
// the relator is I - H + X. A reconnection whose result has a loop at a
// vertex is zero by AS and comes back empty.
struct IhxPair {
    std::optional<Diagram> h;
    std::optional<Diagram> x;
};

IhxPair ihx_reconnect(const FlatDiagram& f, int half);

// Internal edges of d: one representative half-edge per edge joining two
// trivalent vertices.
std::vector<int> internal_edges(const FlatDiagram& f);

// One relator per (basis diagram, internal edge), expressed over canonical
// keys, deduplicated, zero rows dropped. Throws if a relator leaves the
// span of `basis`.
RelationSet ihx_relations(const std::vector<CanonicalDiagram>& basis);

// Relator I - H + X for the diagram at the given internal edge, as Element.
Element ihx_relator(const Diagram& d, int half);

} // namespace jdc
