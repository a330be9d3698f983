#pragma once

#include "jdc/diagram.hpp"

#include <string>

namespace jdc {

// AS-orbit representative of a diagram. Equal orbits produce identical keys.
// The key is a self-describing traversal code: decode_key() rebuilds the
// representative diagram, so keys double as a compact interchange format.
// `two_torsion` is set when some label-preserving automorphism reverses an
// odd number of vertex orientations (then 2x = 0 for the class).
struct CanonicalDiagram {
    std::string key;
    bool two_torsion = false;

    friend bool operator==(const CanonicalDiagram& a, const CanonicalDiagram& b) { return a.key == b.key; }
    friend auto operator<=>(const CanonicalDiagram& a, const CanonicalDiagram& b) { return a.key <=> b.key; }
};

struct CanonResult {
    CanonicalDiagram canon;
    int sign = 1; // input sign x (-1)^{orientation reversals to reach the representative}
};

// Throws capacity_error when the Vassiliev degree exceeds max_degree().
CanonResult canonicalize(const Diagram& d);

// Inverse of the key encoding; the result carries sign +1 and canonical
// vertex orientations (re-canonicalizing it yields the same key, sign +1).
Diagram decode_key(const std::string& key);

} // namespace jdc
