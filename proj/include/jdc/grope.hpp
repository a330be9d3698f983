#pragma once

#include "jdc/element.hpp"
#include "jdc/parser.hpp"
#include "jdc/skeleton.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace jdc {

using TipId = std::string;

// Rooted binary tree of grope stages in genus-one normal form: every
// internal node has exactly two children, leaves are tips. The bracket
// [A,B] orients the dual trivalent vertex as (A, B, up).
class BranchTree {
public:
    struct Node {
        int left = -1;
        int right = -1;
        TipId tip;
        bool is_tip() const { return left < 0; }
    };

    static BranchTree tip(TipId id);
    static BranchTree join(const BranchTree& l, const BranchTree& r);
    static BranchTree from_expr(const BracketExpr& e);

    int root() const { return root_; }
    const Node& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    int tip_count() const;
    std::vector<TipId> tips() const;
    std::string to_text() const;

    // true when the two tips are the hyperbolic pair of one stage
    bool siblings(const TipId& a, const TipId& b) const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

struct GropeComponent {
    std::string root_component;
    std::vector<BranchTree> branches;
    std::vector<int> signs;               // per-branch orientation sign
    std::vector<long long> root_sites;    // optional; empty = after the branch's own cap sites
};

struct CapHit {
    std::string component;
    long long site = 0;
    int sign = 1;
};

// Symmetric tip linking data. Same-stage dual pairs may be stored but are
// ignored by the bracket maps; self-links are undefined.
struct LinkTable {
    std::map<std::pair<TipId, TipId>, long long> tip_tip;
    std::map<std::pair<TipId, std::string>, long long> tip_comp;

    long long tips(const TipId& a, const TipId& b) const;
    long long comp(const TipId& t, const std::string& x) const;
    void set_tips(const TipId& a, const TipId& b, long long v);
    void set_comp(const TipId& t, const std::string& x, long long v);
};

struct GropeEncoding {
    Skeleton skeleton;
    std::vector<GropeComponent> components;
    LinkTable links;
    bool capped = false;
    std::map<TipId, std::vector<CapHit>> caps;

    void validate() const;
};

inline constexpr int kClassInfinity = std::numeric_limits<int>::max();

// Minimum over branches of the Vassiliev degree of the branch tree with its
// root; genus-zero components count as class n for every n.
int grope_class(const GropeComponent& g);
int grope_class(const GropeEncoding& g);

// Sum over components, branches and per-cap intersection choices of signed
// attached trees; the coefficient of a term is the branch sign times the
// product of the chosen intersection signs.
Element psi_capped(const GropeEncoding& g);

struct LeafLabel {
    bool is_tip = false;
    std::string target; // component name or tip id
};

// A branch tree with each tip resolved to a component or to another tip;
// component choices carry their linking weight in `coeff`, tip-tip weights
// are applied by the matching step.
struct LabeledTree {
    BranchTree shape;
    std::string root_component;
    std::map<TipId, LeafLabel> labels;
    Int coeff = 1;
};

// Multilinear expansion of every branch of g over {components} u {tips of g
// on other stages}; choices with zero linking contribute nothing.
std::vector<LabeledTree> bracket_expand(const GropeComponent& g, const LinkTable& links, const Skeleton& skel);

// Sum over matchings of the tip-labeled leaves (pairs must be mutually
// labeled); each matched pair glues into an edge weighted lk(T_i,T_j).
// Gluing two leaves of one vertex gives a loop, which is zero by AS.
Element matching_bracket(const LabeledTree& t, const LinkTable& links);

// <((G))>: matching_bracket over all expanded trees of all components.
// Requires class(G) >= n.
Element psi_uncapped(const GropeEncoding& g, int n);
Element psi_uncapped(const GropeEncoding& g);

// Reinterpret a capped encoding as an uncapped one: tip-component linking
// numbers are the signed counts of cap intersections.
GropeEncoding forget_caps(const GropeEncoding& g);

// One hyperbolic pair of a top stage (two sibling tips).
struct TipPair {
    TipId alpha;
    TipId beta;
};

// The six Sp(2m,Z) generator families acting on the tip rows of a genus-m
// top stage (m sibling pairs). Families 1-2 use index i only; families 3-6
// use i != j. The underlying trees are unchanged; returns the new table.
LinkTable symplectic_transform(const GropeEncoding& g, const std::vector<TipPair>& stage, int family,
                               size_t i, size_t j);

enum class WitnessKind {
    construction_41,     // the genus-3 singular grope over three strands and a circle
    theorem_3,           // the 4-strand string link version
    theorem_ihxn,        // degree-n triple on n+1 strands, distinct labels
    theorem_genihx_graph // degree-4 diagram triple with one Hopf-linked cut edge
};

GropeEncoding builtin_witness(WitnessKind kind, int n = 0);

} // namespace jdc
