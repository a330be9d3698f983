#pragma once

#include "jdc/canonical.hpp"
#include "jdc/diagram.hpp"
#include "jdc/element.hpp"
#include "jdc/ihx.hpp"

#include <map>
#include <string>
#include <vector>

namespace jdc {

enum class ComponentKind { segment, circle };

struct SkeletonComponent {
    std::string name;
    ComponentKind kind = ComponentKind::segment;
};

// A finite union of directed circles and line segments; diagram legs attach
// at ordered sites along its components.
struct Skeleton {
    std::vector<SkeletonComponent> components;

    void validate() const;
    const SkeletonComponent* find(const std::string& name) const;
};

struct Attachment {
    std::string component;
    long long position = 0; // only the order along each component matters
};

// A tree with every univalent vertex attached at a site of the skeleton.
// Positions along a segment follow its direction; along a circle they give
// the cyclic order and canonicalization forgets the basepoint.
struct AttachedTree {
    Diagram tree;
    std::map<HalfEdge, Attachment> attachments;
    int sign = 1;
};

struct AttachedCanonResult {
    CanonicalDiagram canon;
    int sign = 1;
};

// AS-canonical key preserving attachment order data. The key is a plain
// diagram key whose leaf labels encode (kind, component, site rank), so
// decode_key applies; attached_tree_from_key reverses the encoding.
AttachedCanonResult canonicalize_attached(const AttachedTree& t, const Skeleton& skel);

AttachedTree attached_tree_from_key(const std::string& key, const Skeleton& skel);

// Composite leaf labels "s:name@rank" / "c:name@rank" used inside attached keys.
Label attached_leaf_label(const SkeletonComponent& comp, long long rank);
std::pair<std::string, long long> split_attached_label(const Label& label);

// Forgetful homomorphism: drop positions, keep component names as labels,
// re-canonicalize (classes may merge or gain two-torsion).
Element pull_off(const Element& attached, const Skeleton& skel);

// IHX reconnections at internal edges with all attachments held fixed.
RelationSet attached_ihx_relations(const std::vector<CanonicalDiagram>& basis, const Skeleton& skel);

} // namespace jdc
