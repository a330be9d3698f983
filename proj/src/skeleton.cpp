#include "jdc/skeleton.hpp"

#include "jdc/errors.hpp"

#include <algorithm>
#include <set>

namespace jdc {

namespace {

bool valid_component_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

} // namespace

void Skeleton::validate() const {
    if (components.empty()) throw structural_error("skeleton needs at least one component");
    std::set<std::string> names;
    for (const auto& c : components) {
        if (!valid_component_name(c.name)) throw structural_error("invalid component name '" + c.name + "'");
        if (!names.insert(c.name).second) throw structural_error("duplicate component name '" + c.name + "'");
    }
}

const SkeletonComponent* Skeleton::find(const std::string& name) const {
    for (const auto& c : components)
        if (c.name == name) return &c;
    return nullptr;
}

Label attached_leaf_label(const SkeletonComponent& comp, long long rank) {
    return std::string(comp.kind == ComponentKind::segment ? "s:" : "c:") + comp.name + "@" +
           std::to_string(rank);
}

std::pair<std::string, long long> split_attached_label(const Label& label) {
    auto colon = label.find(':');
    auto at = label.rfind('@');
    if (colon == std::string::npos || at == std::string::npos || at < colon)
        throw structural_error("not an attached leaf label: '" + label + "'");
    std::string name = label.substr(colon + 1, at - colon - 1);
    long long rank = 0;
    try {
        rank = std::stoll(label.substr(at + 1));
    } catch (const std::exception&) {
        throw structural_error("bad rank in attached label '" + label + "'");
    }
    return {name, rank};
}

namespace {

struct RankedAttachments {
    // per univalent half: (component index, rank 1..k within the component)
    std::map<HalfEdge, std::pair<size_t, long long>> ranks;
    std::vector<long long> per_component_count;
};

RankedAttachments rank_attachments(const AttachedTree& t, const Skeleton& skel) {
    RankedAttachments out;
    out.per_component_count.assign(skel.components.size(), 0);

    std::map<std::string, size_t> index;
    for (size_t i = 0; i < skel.components.size(); ++i) index.emplace(skel.components[i].name, i);

    std::vector<std::vector<std::pair<long long, HalfEdge>>> sites(skel.components.size());
    for (const auto& u : t.tree.univalent) {
        auto it = t.attachments.find(u.half);
        if (it == t.attachments.end())
            throw structural_error("univalent vertex " + std::to_string(u.half) + " is not attached");
        auto ci = index.find(it->second.component);
        if (ci == index.end())
            throw structural_error("attachment references unknown component '" + it->second.component + "'");
        sites[ci->second].emplace_back(it->second.position, u.half);
    }
    for (size_t c = 0; c < sites.size(); ++c) {
        auto& list = sites[c];
        std::sort(list.begin(), list.end());
        for (size_t i = 1; i < list.size(); ++i)
            if (list[i].first == list[i - 1].first)
                throw structural_error("duplicate attachment position " + std::to_string(list[i].first) +
                                       " on component '" + skel.components[c].name + "'");
        for (size_t i = 0; i < list.size(); ++i)
            out.ranks[list[i].second] = {c, static_cast<long long>(i) + 1};
        out.per_component_count[c] = static_cast<long long>(list.size());
    }
    return out;
}

} // namespace

AttachedCanonResult canonicalize_attached(const AttachedTree& t, const Skeleton& skel) {
    skel.validate();
    if (!is_tree(t.tree)) throw structural_error("attached generator must be a tree");
    RankedAttachments ranked = rank_attachments(t, skel);

    // rotation choices for the circle components that carry attachments
    std::vector<size_t> circle_components;
    for (size_t c = 0; c < skel.components.size(); ++c)
        if (skel.components[c].kind == ComponentKind::circle && ranked.per_component_count[c] > 1)
            circle_components.push_back(c);

    std::vector<long long> rotation(circle_components.size(), 0);
    AttachedCanonResult best;
    bool first = true;
    bool even_hit = false, odd_hit = false, torsion_hit = false;

    while (true) {
        Diagram labeled = t.tree;
        labeled.sign = 1;
        for (auto& u : labeled.univalent) {
            auto [c, rank] = ranked.ranks.at(u.half);
            long long k = ranked.per_component_count[c];
            for (size_t ri = 0; ri < circle_components.size(); ++ri)
                if (circle_components[ri] == c) rank = ((rank - 1 + rotation[ri]) % k) + 1;
            u.label = attached_leaf_label(skel.components[c], rank);
        }
        CanonResult cr = canonicalize(labeled);
        int cmp = first ? -1 : cr.canon.key.compare(best.canon.key);
        if (cmp < 0) {
            best.canon = cr.canon;
            best.sign = cr.sign;
            even_hit = cr.sign > 0;
            odd_hit = cr.sign < 0;
            torsion_hit = cr.canon.two_torsion;
            first = false;
        } else if (cmp == 0) {
            (cr.sign > 0 ? even_hit : odd_hit) = true;
            torsion_hit = torsion_hit || cr.canon.two_torsion;
        }
        size_t pos = 0;
        while (pos < rotation.size() &&
               ++rotation[pos] == ranked.per_component_count[circle_components[pos]])
            rotation[pos++] = 0;
        if (pos == rotation.size()) break;
    }

    best.canon.two_torsion = torsion_hit || (even_hit && odd_hit);
    best.sign = best.canon.two_torsion ? t.sign : t.sign * (even_hit ? 1 : -1);
    return best;
}

AttachedTree attached_tree_from_key(const std::string& key, const Skeleton& skel) {
    AttachedTree t;
    t.tree = decode_key(key);
    t.sign = 1;
    for (const auto& u : t.tree.univalent) {
        auto [name, rank] = split_attached_label(u.label);
        if (!skel.find(name)) throw structural_error("attached key references unknown component '" + name + "'");
        t.attachments[u.half] = Attachment{name, rank};
    }
    return t;
}

Element pull_off(const Element& attached, const Skeleton& skel) {
    skel.validate();
    Element out;
    for (const auto& [key, entry] : attached.terms()) {
        Diagram d = decode_key(key);
        for (auto& u : d.univalent) {
            auto [name, rank] = split_attached_label(u.label);
            u.label = name;
        }
        out += entry.coeff * Element::from_diagram(d);
    }
    return out;
}

RelationSet attached_ihx_relations(const std::vector<CanonicalDiagram>& basis, const Skeleton& skel) {
    skel.validate();
    RelationSet rs;
    rs.ambient = basis;
    std::sort(rs.ambient.begin(), rs.ambient.end());
    std::set<std::string> ambient_keys;
    for (const auto& c : rs.ambient) ambient_keys.insert(c.key);

    auto canonical_attached_element = [&](const Diagram& d, int coeff) {
        AttachedTree at;
        at.tree = d;
        at.sign = 1;
        for (const auto& u : d.univalent) {
            auto [name, rank] = split_attached_label(u.label);
            at.attachments[u.half] = Attachment{name, rank};
        }
        AttachedCanonResult cr = canonicalize_attached(at, skel);
        return Element::from_canonical(cr.canon, Int(coeff) * cr.sign);
    };

    std::set<std::string> seen;
    for (const auto& c : rs.ambient) {
        Diagram d = decode_key(c.key);
        FlatDiagram f = FlatDiagram::from(d);
        for (int h : internal_edges(f)) {
            IhxPair pair = ihx_reconnect(f, h);
            Element row = canonical_attached_element(d, 1);
            if (pair.h) row -= canonical_attached_element(*pair.h, 1);
            if (pair.x) row += canonical_attached_element(*pair.x, 1);
            if (row.is_zero()) continue;
            if (row.terms().begin()->second.coeff < 0) row = Int(-1) * row;
            for (const auto& [key, entry] : row.terms())
                if (!ambient_keys.count(key))
                    throw structural_error("attached IHX relator leaves the ambient basis (key " + key + ")");
            if (seen.insert(row.to_text()).second) rs.rows.push_back(std::move(row));
        }
    }
    return rs;
}

} // namespace jdc
