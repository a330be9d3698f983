#include "jdc/grope.hpp"

#include "jdc/errors.hpp"

#include <algorithm>
#include <set>

namespace jdc {

BranchTree BranchTree::tip(TipId id) {
    BranchTree t;
    Node n;
    n.tip = std::move(id);
    t.nodes_.push_back(std::move(n));
    t.root_ = 0;
    return t;
}

BranchTree BranchTree::join(const BranchTree& l, const BranchTree& r) {
    BranchTree t;
    t.nodes_ = l.nodes_;
    int offset = l.node_count();
    for (const auto& n : r.nodes_) {
        Node shifted = n;
        if (!n.is_tip()) {
            shifted.left += offset;
            shifted.right += offset;
        }
        t.nodes_.push_back(std::move(shifted));
    }
    Node root;
    root.left = l.root_;
    root.right = r.root_ + offset;
    t.nodes_.push_back(std::move(root));
    t.root_ = t.node_count() - 1;
    return t;
}

BranchTree BranchTree::from_expr(const BracketExpr& e) {
    if (e.is_leaf()) return tip(e.label);
    return join(from_expr(e.children[0]), from_expr(e.children[1]));
}

int BranchTree::tip_count() const {
    int count = 0;
    for (const auto& n : nodes_)
        if (n.is_tip()) ++count;
    return count;
}

std::vector<TipId> BranchTree::tips() const {
    std::vector<TipId> out;
    auto walk = [&](auto&& self, int i) -> void {
        const Node& n = node(i);
        if (n.is_tip()) {
            out.push_back(n.tip);
            return;
        }
        self(self, n.left);
        self(self, n.right);
    };
    if (root_ >= 0) walk(walk, root_);
    return out;
}

std::string BranchTree::to_text() const {
    auto walk = [&](auto&& self, int i) -> std::string {
        const Node& n = node(i);
        if (n.is_tip()) return n.tip;
        return "[" + self(self, n.left) + "," + self(self, n.right) + "]";
    };
    return root_ >= 0 ? walk(walk, root_) : std::string();
}

bool BranchTree::siblings(const TipId& a, const TipId& b) const {
    for (const auto& n : nodes_) {
        if (n.is_tip()) continue;
        const Node& l = node(n.left);
        const Node& r = node(n.right);
        if (!l.is_tip() || !r.is_tip()) continue;
        if ((l.tip == a && r.tip == b) || (l.tip == b && r.tip == a)) return true;
    }
    return false;
}

long long LinkTable::tips(const TipId& a, const TipId& b) const {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = tip_tip.find(key);
    return it != tip_tip.end() ? it->second : 0;
}

long long LinkTable::comp(const TipId& t, const std::string& x) const {
    auto it = tip_comp.find({t, x});
    return it != tip_comp.end() ? it->second : 0;
}

void LinkTable::set_tips(const TipId& a, const TipId& b, long long v) {
    if (a == b) throw structural_error("self-linking of a tip is undefined");
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (v == 0)
        tip_tip.erase(key);
    else
        tip_tip[key] = v;
}

void LinkTable::set_comp(const TipId& t, const std::string& x, long long v) {
    if (v == 0)
        tip_comp.erase({t, x});
    else
        tip_comp[{t, x}] = v;
}

namespace {

std::set<TipId> all_tips(const GropeEncoding& g) {
    std::set<TipId> out;
    for (const auto& comp : g.components)
        for (const auto& b : comp.branches)
            for (const auto& t : b.tips())
                if (!out.insert(t).second) throw structural_error("duplicate tip id '" + t + "'");
    return out;
}

} // namespace

void GropeEncoding::validate() const {
    skeleton.validate();
    std::set<TipId> tips = all_tips(*this);
    for (const auto& comp : components) {
        if (!skeleton.find(comp.root_component))
            throw structural_error("grope component rooted on unknown component '" + comp.root_component + "'");
        if (comp.signs.size() != comp.branches.size())
            throw structural_error("branch sign list does not match branch list");
        if (!comp.root_sites.empty() && comp.root_sites.size() != comp.branches.size())
            throw structural_error("root site list does not match branch list");
        for (int s : comp.signs)
            if (s != 1 && s != -1) throw structural_error("branch sign must be +1 or -1");
    }
    for (const auto& [pair, v] : links.tip_tip) {
        if (!tips.count(pair.first) || !tips.count(pair.second))
            throw structural_error("link table references unknown tip");
        (void)v;
    }
    for (const auto& [pair, v] : links.tip_comp) {
        if (!tips.count(pair.first)) throw structural_error("link table references unknown tip");
        if (!skeleton.find(pair.second))
            throw structural_error("link table references unknown component '" + pair.second + "'");
        (void)v;
    }
    std::set<std::pair<std::string, long long>> sites;
    for (const auto& [tip, hits] : caps) {
        if (!tips.count(tip)) throw structural_error("cap on unknown tip '" + tip + "'");
        for (const auto& hit : hits) {
            if (!skeleton.find(hit.component))
                throw structural_error("cap intersects unknown component '" + hit.component + "'");
            if (hit.sign != 1 && hit.sign != -1) throw structural_error("cap sign must be +1 or -1");
            if (!sites.insert({hit.component, hit.site}).second)
                throw structural_error("two cap intersections share site " + std::to_string(hit.site) +
                                       " on component '" + hit.component + "'");
        }
    }
}

int grope_class(const GropeComponent& g) {
    if (g.branches.empty()) return kClassInfinity;
    int best = kClassInfinity;
    for (const auto& b : g.branches) best = std::min(best, b.tip_count());
    return best;
}

int grope_class(const GropeEncoding& g) {
    int best = kClassInfinity;
    for (const auto& comp : g.components) best = std::min(best, grope_class(comp));
    return best;
}

namespace {

// Builds the tree diagram of a branch: internal nodes become trivalent
// vertices oriented (left, right, up); tips and the root become univalent
// vertices. Returns the diagram plus the univalent half-edge per tip.
struct BranchDiagram {
    Diagram tree;
    std::map<TipId, HalfEdge> tip_half;
    HalfEdge root_half = -1;
};

BranchDiagram branch_diagram(const BranchTree& b, const Label& root_label, const Label& tip_label) {
    BranchDiagram out;
    int next = 0;
    auto build = [&](auto&& self, int i) -> HalfEdge {
        const auto& n = b.node(i);
        if (n.is_tip()) {
            HalfEdge h = next++;
            out.tree.univalent.push_back({h, tip_label});
            out.tip_half[n.tip] = h;
            return h;
        }
        HalfEdge hl = self(self, n.left);
        HalfEdge hr = self(self, n.right);
        HalfEdge sl = next++, sr = next++, up = next++;
        out.tree.trivalent.push_back({sl, sr, up});
        out.tree.edges.emplace_back(sl, hl);
        out.tree.edges.emplace_back(sr, hr);
        return up;
    };
    HalfEdge top = build(build, b.root());
    HalfEdge root_half = next++;
    out.tree.univalent.push_back({root_half, root_label});
    out.tree.edges.emplace_back(top, root_half);
    out.root_half = root_half;
    return out;
}

} // namespace

Element psi_capped(const GropeEncoding& g) {
    g.validate();
    if (!g.capped) throw structural_error("psi_capped needs a capped encoding");

    std::set<TipId> tips = all_tips(g);
    for (const auto& t : tips)
        if (!g.caps.count(t)) throw structural_error("uncapped tip '" + t + "'");

    Element out;
    for (const auto& comp : g.components) {
        for (size_t bi = 0; bi < comp.branches.size(); ++bi) {
            const BranchTree& branch = comp.branches[bi];
            std::vector<TipId> branch_tips = branch.tips();
            std::vector<const std::vector<CapHit>*> hit_lists;
            bool empty_cap = false;
            for (const auto& t : branch_tips) {
                const auto& hits = g.caps.at(t);
                if (hits.empty()) empty_cap = true;
                hit_lists.push_back(&hits);
            }
            if (empty_cap) continue; // a cap with no intersections contributes nothing

            std::vector<size_t> choice(branch_tips.size(), 0);
            while (true) {
                BranchDiagram bd = branch_diagram(branch, comp.root_component, "leaf");
                AttachedTree at;
                at.tree = bd.tree;
                int sign = comp.signs[bi];
                long long max_root_comp_site = 0;
                bool saw_root_comp_site = false;
                for (size_t k = 0; k < branch_tips.size(); ++k) {
                    const CapHit& hit = (*hit_lists[k])[choice[k]];
                    at.attachments[bd.tip_half.at(branch_tips[k])] = Attachment{hit.component, hit.site};
                    sign *= hit.sign;
                    if (hit.component == comp.root_component) {
                        max_root_comp_site = saw_root_comp_site ? std::max(max_root_comp_site, hit.site) : hit.site;
                        saw_root_comp_site = true;
                    }
                }
                long long root_site = comp.root_sites.empty()
                                          ? (saw_root_comp_site ? max_root_comp_site + 1 : 1)
                                          : comp.root_sites[bi];
                at.attachments[bd.root_half] = Attachment{comp.root_component, root_site};
                at.sign = sign;
                AttachedCanonResult cr = canonicalize_attached(at, g.skeleton);
                out.add_term(cr.canon, cr.sign);

                size_t pos = 0;
                while (pos < choice.size() && ++choice[pos] == hit_lists[pos]->size()) choice[pos++] = 0;
                if (pos == choice.size()) break;
            }
        }
    }
    return out;
}

std::vector<LabeledTree> bracket_expand(const GropeComponent& g, const LinkTable& links, const Skeleton& skel) {
    std::vector<LabeledTree> out;
    std::vector<TipId> component_tips;
    for (const auto& b : g.branches)
        for (const auto& t : b.tips()) component_tips.push_back(t);

    for (size_t bi = 0; bi < g.branches.size(); ++bi) {
        const BranchTree& branch = g.branches[bi];
        std::vector<TipId> branch_tips = branch.tips();

        // per tip: candidate labels with their expansion weight
        std::vector<std::vector<std::pair<LeafLabel, long long>>> domains;
        for (const auto& t : branch_tips) {
            std::vector<std::pair<LeafLabel, long long>> domain;
            for (const auto& comp : skel.components) {
                long long w = links.comp(t, comp.name);
                if (w != 0) domain.push_back({LeafLabel{false, comp.name}, w});
            }
            for (const auto& other : component_tips) {
                if (other == t) continue;
                if (branch.siblings(t, other)) continue; // same stage: never seen by psi
                if (links.tips(t, other) == 0) continue;
                domain.push_back({LeafLabel{true, other}, 1}); // pair weight applied when gluing
            }
            domains.push_back(std::move(domain));
        }
        if (std::any_of(domains.begin(), domains.end(), [](const auto& d) { return d.empty(); }))
            continue; // a leaf with no nonzero linking kills the branch

        std::vector<size_t> choice(branch_tips.size(), 0);
        while (true) {
            LabeledTree t;
            t.shape = branch;
            t.root_component = g.root_component;
            t.coeff = g.signs[bi];
            for (size_t k = 0; k < branch_tips.size(); ++k) {
                const auto& [label, weight] = domains[k][choice[k]];
                t.labels[branch_tips[k]] = label;
                t.coeff *= weight;
            }
            out.push_back(std::move(t));

            size_t pos = 0;
            while (pos < choice.size() && ++choice[pos] == domains[pos].size()) choice[pos++] = 0;
            if (pos == choice.size()) break;
        }
    }
    return out;
}

Element matching_bracket(const LabeledTree& t, const LinkTable& links) {
    // the labels force the matching: leaf i labeled (L_i,T_j) can only pair
    // with leaf j labeled (L_j,T_i)
    std::vector<std::pair<TipId, TipId>> pairs;
    std::set<TipId> matched;
    for (const auto& [tip, label] : t.labels) {
        if (!label.is_tip) continue;
        if (matched.count(tip)) continue;
        const TipId& target = label.target;
        if (target == tip) return {}; // no valid partner
        auto partner = t.labels.find(target);
        if (partner == t.labels.end() || !partner->second.is_tip || partner->second.target != tip)
            return {}; // unmatched tip-labeled leaf: no matchings
        pairs.emplace_back(tip, target);
        matched.insert(tip);
        matched.insert(target);
    }

    BranchDiagram bd = branch_diagram(t.shape, t.root_component, "leaf");

    Int coeff = t.coeff;
    Diagram d = bd.tree;
    std::set<HalfEdge> glued;
    for (const auto& [a, b] : pairs) {
        if (t.shape.siblings(a, b)) return {}; // loop at a vertex: zero by AS
        coeff *= links.tips(a, b);
        glued.insert(bd.tip_half.at(a));
        glued.insert(bd.tip_half.at(b));
    }
    if (coeff == 0) return {};

    // rewire: drop each matched pair of leaves and join their stage halves
    Diagram result;
    result.trivalent = d.trivalent;
    std::map<HalfEdge, HalfEdge> stage_half; // leaf half -> half at its stage vertex
    for (const auto& [x, y] : d.edges) {
        bool gx = glued.count(x), gy = glued.count(y);
        if (!gx && !gy) {
            result.edges.emplace_back(x, y);
        } else if (gx && !gy) {
            stage_half[x] = y;
        } else if (!gx && gy) {
            stage_half[y] = x;
        } else {
            throw structural_error("two glued leaves share an edge");
        }
    }
    for (const auto& [a, b] : pairs)
        result.edges.emplace_back(stage_half.at(bd.tip_half.at(a)), stage_half.at(bd.tip_half.at(b)));
    for (const auto& u : d.univalent) {
        if (glued.count(u.half)) continue;
        UnivalentVertex v = u;
        if (u.half == bd.root_half) {
            v.label = t.root_component;
        } else {
            // find the tip carried by this leaf half
            for (const auto& [tip, half] : bd.tip_half)
                if (half == u.half) {
                    v.label = t.labels.at(tip).target;
                    break;
                }
        }
        result.univalent.push_back(std::move(v));
    }

    return Element::from_diagram(result, coeff);
}

Element psi_uncapped(const GropeEncoding& g, int n) {
    g.validate();
    if (g.capped) throw structural_error("psi_uncapped expects an uncapped encoding (use forget_caps)");
    if (grope_class(g) < n)
        throw structural_error("class " + std::to_string(grope_class(g)) + " is below the requested degree " +
                               std::to_string(n));
    Element out;
    for (const auto& comp : g.components)
        for (const auto& t : bracket_expand(comp, g.links, g.skeleton)) out += matching_bracket(t, g.links);
    return out;
}

Element psi_uncapped(const GropeEncoding& g) {
    int n = grope_class(g);
    return psi_uncapped(g, n == kClassInfinity ? 1 : n);
}

GropeEncoding forget_caps(const GropeEncoding& g) {
    g.validate();
    if (!g.capped) return g;
    GropeEncoding out = g;
    out.capped = false;
    out.caps.clear();
    out.links.tip_comp.clear();
    for (const auto& [tip, hits] : g.caps) {
        std::map<std::string, long long> sums;
        for (const auto& hit : hits) sums[hit.component] += hit.sign;
        for (const auto& [comp, v] : sums) out.links.set_comp(tip, comp, v);
    }
    return out;
}

LinkTable symplectic_transform(const GropeEncoding& g, const std::vector<TipPair>& stage, int family,
                               size_t i, size_t j) {
    g.validate();
    if (stage.empty()) throw structural_error("empty stage");
    if (family < 1 || family > 6) throw structural_error("generator family must be 1..6");
    if (i >= stage.size()) throw structural_error("index i out of range");
    if (family >= 3 && (j >= stage.size() || j == i)) throw structural_error("families 3-6 need i != j in range");

    // each pair must be the hyperbolic pair of one stage of g
    for (const auto& p : stage) {
        bool found = false;
        for (const auto& comp : g.components)
            for (const auto& b : comp.branches)
                if (b.siblings(p.alpha, p.beta)) found = true;
        if (!found)
            throw structural_error("(" + p.alpha + "," + p.beta + ") is not a hyperbolic pair of any stage");
    }

    // transformation rows: target tip -> {(source tip, coefficient)}
    std::vector<std::pair<TipId, std::pair<TipId, long long>>> updates;
    const TipPair& pi = stage[i];
    switch (family) {
        case 1: updates = {{pi.alpha, {pi.beta, 1}}}; break;
        case 2: updates = {{pi.beta, {pi.alpha, 1}}}; break;
        case 3:
            updates = {{pi.alpha, {stage[j].alpha, 1}}, {stage[j].beta, {pi.beta, -1}}};
            break;
        case 4:
            updates = {{pi.alpha, {stage[j].beta, 1}}, {stage[j].alpha, {pi.beta, 1}}};
            break;
        case 5:
            updates = {{pi.beta, {stage[j].alpha, 1}}, {stage[j].beta, {pi.alpha, 1}}};
            break;
        case 6:
            updates = {{pi.beta, {stage[j].beta, 1}}, {stage[j].alpha, {pi.alpha, -1}}};
            break;
        default: break;
    }

    // dense symmetric form over tips + components, diagonal treated as zero
    std::vector<TipId> tip_list(all_tips(g).begin(), all_tips(g).end());
    std::map<TipId, size_t> tip_index;
    for (size_t k = 0; k < tip_list.size(); ++k) tip_index.emplace(tip_list[k], k);
    size_t nt = tip_list.size(), nc = g.skeleton.components.size();
    size_t dim = nt + nc;
    std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
    for (size_t a = 0; a < nt; ++a) {
        for (size_t b = a + 1; b < nt; ++b) {
            long long v = g.links.tips(tip_list[a], tip_list[b]);
            m[a][b] = m[b][a] = v;
        }
        for (size_t c = 0; c < nc; ++c) {
            long long v = g.links.comp(tip_list[a], g.skeleton.components[c].name);
            m[a][nt + c] = m[nt + c][a] = v;
        }
    }

    // M' = A M A^T with A = I + sum coeff * E_{target,source}
    std::vector<std::vector<long long>> a_mat(dim, std::vector<long long>(dim, 0));
    for (size_t k = 0; k < dim; ++k) a_mat[k][k] = 1;
    for (const auto& [target, src] : updates) a_mat[tip_index.at(target)][tip_index.at(src.first)] += src.second;

    auto mul = [&](const auto& x, const auto& y) {
        std::vector<std::vector<long long>> r(dim, std::vector<long long>(dim, 0));
        for (size_t p = 0; p < dim; ++p)
            for (size_t q = 0; q < dim; ++q) {
                if (x[p][q] == 0) continue;
                for (size_t r2 = 0; r2 < dim; ++r2) r[p][r2] += x[p][q] * y[q][r2];
            }
        return r;
    };
    auto am = mul(a_mat, m);
    std::vector<std::vector<long long>> at(dim, std::vector<long long>(dim, 0));
    for (size_t p = 0; p < dim; ++p)
        for (size_t q = 0; q < dim; ++q) at[p][q] = a_mat[q][p];
    auto result = mul(am, at);

    LinkTable out;
    for (size_t a = 0; a < nt; ++a) {
        for (size_t b = a + 1; b < nt; ++b) out.set_tips(tip_list[a], tip_list[b], result[a][b]);
        for (size_t c = 0; c < nc; ++c) out.set_comp(tip_list[a], g.skeleton.components[c].name, result[a][nt + c]);
    }
    return out;
}

namespace {

GropeEncoding ihx_triple_witness(const std::vector<std::string>& strands, const std::string& root,
                                 ComponentKind root_kind, int n) {
    // branch trees: the IHX core [[1,2],3] / [1,[2,3]] / [[3,1],2], extended
    // by a chain of extra leaves up to n tips, rooted on `root`
    GropeEncoding g;
    for (const auto& s : strands) g.skeleton.components.push_back({s, ComponentKind::segment});
    g.skeleton.components.push_back({root, root_kind});
    g.capped = true;

    GropeComponent comp;
    comp.root_component = root;
    auto chain = [&](BranchTree core, int branch_id) {
        // tip t<branch>_<k> hits strand k once, positively
        for (int k = 4; k <= n; ++k) {
            TipId id = "t" + std::to_string(branch_id) + "_" + std::to_string(k);
            core = BranchTree::join(core, BranchTree::tip(id));
            g.caps[id] = {CapHit{strands[static_cast<size_t>(k) - 1], branch_id, 1}};
        }
        return core;
    };
    auto tip = [&](int branch_id, int k) {
        TipId id = "t" + std::to_string(branch_id) + "_" + std::to_string(k);
        g.caps[id] = {CapHit{strands[static_cast<size_t>(k) - 1], branch_id, 1}};
        return BranchTree::tip(id);
    };

    // I = [[1,2],3], H = [1,[2,3]], X = [[3,1],2]
    comp.branches.push_back(chain(
        BranchTree::join(BranchTree::join(tip(1, 1), tip(1, 2)), tip(1, 3)), 1));
    comp.branches.push_back(chain(
        BranchTree::join(tip(2, 1), BranchTree::join(tip(2, 2), tip(2, 3))), 2));
    comp.branches.push_back(chain(
        BranchTree::join(BranchTree::join(tip(3, 3), tip(3, 1)), tip(3, 2)), 3));
    comp.signs = {1, -1, 1};
    comp.root_sites = {1, 2, 3};
    g.components.push_back(std::move(comp));
    return g;
}

} // namespace

GropeEncoding builtin_witness(WitnessKind kind, int n) {
    switch (kind) {
        case WitnessKind::construction_41: {
            // three strands and the unknotted boundary circle labeled 4
            return ihx_triple_witness({"1", "2", "3"}, "4", ComponentKind::circle, 3);
        }
        case WitnessKind::theorem_3: {
            return ihx_triple_witness({"1", "2", "3"}, "4", ComponentKind::segment, 3);
        }
        case WitnessKind::theorem_ihxn: {
            if (n < 3) throw structural_error("theorem-ihxn needs degree >= 3");
            // strands 1..n+1, with strand 4 playing the root
            std::vector<std::string> strands;
            for (int k = 1; k <= n + 1; ++k)
                if (k != 4) strands.push_back(std::to_string(k));
            GropeEncoding g;
            for (const auto& s : strands) g.skeleton.components.push_back({s, ComponentKind::segment});
            g.skeleton.components.push_back({"4", ComponentKind::segment});
            g.capped = true;
            GropeComponent comp;
            comp.root_component = "4";
            auto tip = [&](int branch_id, const std::string& strand) {
                TipId id = "t" + std::to_string(branch_id) + "_" + strand;
                g.caps[id] = {CapHit{strand, branch_id, 1}};
                return BranchTree::tip(id);
            };
            auto extend = [&](BranchTree core, int branch_id) {
                for (int k = 5; k <= n + 1; ++k) core = BranchTree::join(core, tip(branch_id, std::to_string(k)));
                return core;
            };
            comp.branches.push_back(extend(
                BranchTree::join(BranchTree::join(tip(1, "1"), tip(1, "2")), tip(1, "3")), 1));
            comp.branches.push_back(extend(
                BranchTree::join(tip(2, "1"), BranchTree::join(tip(2, "2"), tip(2, "3"))), 2));
            comp.branches.push_back(extend(
                BranchTree::join(BranchTree::join(tip(3, "3"), tip(3, "1")), tip(3, "2")), 3));
            comp.signs = {1, -1, 1};
            comp.root_sites = {1, 2, 3};
            g.components.push_back(std::move(comp));
            return g;
        }
        case WitnessKind::theorem_genihx_graph: {
            // degree-4 triple with one cut edge realized by a Hopf pair per
            // branch: B_I = [[[a,b],c],d], B_H = [[a,[b,c]],d], B_X =
            // [[[c,a],b],d] with lk(c,d)=1 and a,b hitting strands 1,2
            GropeEncoding g;
            g.skeleton.components = {{"1", ComponentKind::segment},
                                     {"2", ComponentKind::segment},
                                     {"4", ComponentKind::segment}};
            g.capped = false;
            GropeComponent comp;
            comp.root_component = "4";
            auto tips4 = [&](int branch_id) {
                std::array<TipId, 4> t;
                const char* names[4] = {"a", "b", "c", "d"};
                for (int k = 0; k < 4; ++k) t[static_cast<size_t>(k)] = std::string(names[k]) + std::to_string(branch_id);
                return t;
            };
            for (int branch_id = 1; branch_id <= 3; ++branch_id) {
                auto t = tips4(branch_id);
                BranchTree a = BranchTree::tip(t[0]), b = BranchTree::tip(t[1]), c = BranchTree::tip(t[2]),
                           d = BranchTree::tip(t[3]);
                BranchTree core = branch_id == 1   ? BranchTree::join(BranchTree::join(a, b), c)
                                  : branch_id == 2 ? BranchTree::join(a, BranchTree::join(b, c))
                                                   : BranchTree::join(BranchTree::join(c, a), b);
                comp.branches.push_back(BranchTree::join(core, d));
                g.links.set_comp(t[0], "1", 1);
                g.links.set_comp(t[1], "2", 1);
                g.links.set_tips(t[2], t[3], 1);
            }
            comp.signs = {1, -1, 1};
            g.components.push_back(std::move(comp));
            return g;
        }
    }
    throw structural_error("unknown witness kind");
}

} // namespace jdc
