#include "jdc/ihx.hpp"

#include "jdc/errors.hpp"

#include <algorithm>
#include <set>

namespace jdc {

namespace {

// Rotate the triple of vertex v so the given half-edge comes first.
std::array<int, 3> rotated(const FlatDiagram& f, int v, int first) {
    const auto& t = f.tri[v];
    int pos = 0;
    while (t[pos] != first) ++pos;
    return {t[pos], t[(pos + 1) % 3], t[(pos + 2) % 3]};
}

std::optional<Diagram> rebuild(const FlatDiagram& f, int v, std::array<int, 3> tv, int w, std::array<int, 3> tw) {
    FlatDiagram g = f;
    g.tri[v] = tv;
    g.tri[w] = tw;
    for (int x = 0; x < 3; ++x) {
        g.vertex_of[tv[x]] = v;
        g.vertex_of[tw[x]] = w;
    }
    // loop at a vertex => zero by AS
    for (int h = 0; h < g.num_halves; ++h)
        if (g.vertex_of[h] == g.vertex_of[g.mate[h]]) return std::nullopt;
    return g.to_diagram();
}

} // namespace

IhxPair ihx_reconnect(const FlatDiagram& f, int half) {
    int e = half;
    int e2 = f.mate[e];
    int v = f.vertex_of[e];
    int w = f.vertex_of[e2];
    const int T = f.tri_count();
    if (v >= T || w >= T) throw structural_error("IHX reconnection needs an edge between trivalent vertices");

    auto tv = rotated(f, v, e);
    auto tw = rotated(f, w, e2);
    int a = tv[1], b = tv[2], c = tw[1], d = tw[2];

    IhxPair out;
    out.h = rebuild(f, v, {e, b, c}, w, {e2, d, a});
    out.x = rebuild(f, v, {e, c, a}, w, {e2, b, d});
    return out;
}

std::vector<int> internal_edges(const FlatDiagram& f) {
    std::vector<int> out;
    const int T = f.tri_count();
    for (int h = 0; h < f.num_halves; ++h) {
        if (h > f.mate[h]) continue;
        if (f.vertex_of[h] < T && f.vertex_of[f.mate[h]] < T) out.push_back(h);
    }
    return out;
}

Element ihx_relator(const Diagram& d, int half) {
    FlatDiagram f = FlatDiagram::from(d);
    f.sign = 1;
    IhxPair pair = ihx_reconnect(f, half);
    Element row = Element::from_diagram(f.to_diagram());
    if (pair.h) row -= Element::from_diagram(*pair.h);
    if (pair.x) row += Element::from_diagram(*pair.x);
    return row;
}

RelationSet ihx_relations(const std::vector<CanonicalDiagram>& basis) {
    RelationSet rs;
    rs.ambient = basis;
    std::sort(rs.ambient.begin(), rs.ambient.end());
    std::set<std::string> ambient_keys;
    for (const auto& c : rs.ambient) ambient_keys.insert(c.key);

    std::set<std::string> seen;
    for (const auto& c : rs.ambient) {
        Diagram d = decode_key(c.key);
        FlatDiagram f = FlatDiagram::from(d);
        for (int h : internal_edges(f)) {
            Element row = ihx_relator(d, h);
            if (row.is_zero()) continue;
            // normalize: positive coefficient on the lexicographically least key
            if (row.terms().begin()->second.coeff < 0) row = Int(-1) * row;
            for (const auto& [key, entry] : row.terms())
                if (!ambient_keys.count(key))
                    throw structural_error("IHX relator leaves the ambient basis (key " + key + ")");
            if (seen.insert(row.to_text()).second) rs.rows.push_back(std::move(row));
        }
    }
    return rs;
}

} // namespace jdc
