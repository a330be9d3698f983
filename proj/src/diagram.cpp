#include "jdc/diagram.hpp"

#include "jdc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jdc {

bool valid_label(const Label& label) {
    if (label.empty()) return false;
    for (char c : label) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                  c == '@' || c == ':' || c == '-';
        if (!ok) return false;
    }
    return true;
}

void Diagram::validate() const {
    if (sign != 1 && sign != -1) throw structural_error("diagram sign must be +1 or -1");
    if (univalent.empty()) throw structural_error("diagram needs at least one univalent vertex");

    std::map<HalfEdge, int> vertex_use;
    int vertex_index = 0;
    for (const auto& t : trivalent) {
        for (HalfEdge h : t) {
            if (!vertex_use.emplace(h, vertex_index).second)
                throw structural_error("half-edge " + std::to_string(h) + " occurs in two vertex records");
        }
        ++vertex_index;
    }
    for (const auto& u : univalent) {
        if (!valid_label(u.label)) throw structural_error("invalid label '" + u.label + "'");
        if (!vertex_use.emplace(u.half, vertex_index).second)
            throw structural_error("half-edge " + std::to_string(u.half) + " occurs in two vertex records");
        ++vertex_index;
    }

    if (edges.size() * 2 != vertex_use.size())
        throw structural_error("edge count does not match half-edge count");

    std::map<HalfEdge, int> edge_use;
    for (const auto& [a, b] : edges) {
        if (a == b) throw structural_error("edge joins a half-edge to itself");
        if (!vertex_use.count(a) || !vertex_use.count(b))
            throw structural_error("edge references unknown half-edge");
        if (vertex_use.at(a) == vertex_use.at(b))
            throw structural_error("loop edge at a single vertex (zero by AS); rejected at construction");
        if (edge_use.count(a) || edge_use.count(b))
            throw structural_error("half-edge occurs in two edges");
        edge_use[a] = 1;
        edge_use[b] = 1;
    }
    if (edge_use.size() != vertex_use.size())
        throw structural_error("some half-edge occurs in no edge");

    // connectivity over vertices
    int n = vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[vertex_use.at(a)].push_back(vertex_use.at(b));
        adj[vertex_use.at(b)].push_back(vertex_use.at(a));
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) throw structural_error("diagram is disconnected");
}

int vassiliev_degree(const Diagram& d) {
    d.validate();
    int v = d.vertex_count();
    if (v % 2 != 0) throw structural_error("odd vertex count");
    return v / 2;
}

int first_betti(const Diagram& d) {
    d.validate();
    return d.edge_count() - d.vertex_count() + 1;
}

int grope_degree(const Diagram& d) { return vassiliev_degree(d) + first_betti(d); }

bool is_tree(const Diagram& d) { return first_betti(d) == 0; }

Diagram make_strut(const Label& a, const Label& b) {
    Diagram d;
    d.univalent = {{0, a}, {1, b}};
    d.edges = {{0, 1}};
    return d;
}

Diagram make_y(const Label& a, const Label& b, const Label& c) {
    Diagram d;
    d.trivalent = {{0, 1, 2}};
    d.univalent = {{3, a}, {4, b}, {5, c}};
    d.edges = {{0, 3}, {1, 4}, {2, 5}};
    return d;
}

FlatDiagram FlatDiagram::from(const Diagram& d) {
    d.validate();
    FlatDiagram f;
    f.sign = d.sign;
    std::map<HalfEdge, int> renumber;
    auto id_of = [&](HalfEdge h) {
        auto it = renumber.find(h);
        if (it != renumber.end()) return it->second;
        int id = static_cast<int>(renumber.size());
        renumber.emplace(h, id);
        return id;
    };
    int vertex = 0;
    for (const auto& t : d.trivalent) {
        f.tri.push_back({id_of(t[0]), id_of(t[1]), id_of(t[2])});
        ++vertex;
    }
    for (const auto& u : d.univalent) {
        f.uni_half.push_back(id_of(u.half));
        f.uni_label.push_back(u.label);
        ++vertex;
    }
    f.num_halves = static_cast<int>(renumber.size());
    f.mate.assign(f.num_halves, -1);
    for (const auto& [a, b] : d.edges) {
        int x = renumber.at(a), y = renumber.at(b);
        f.mate[x] = y;
        f.mate[y] = x;
    }
    f.vertex_of.assign(f.num_halves, -1);
    for (int v = 0; v < f.tri_count(); ++v)
        for (int h : f.tri[v]) f.vertex_of[h] = v;
    for (int u = 0; u < f.uni_count(); ++u) f.vertex_of[f.uni_half[u]] = f.tri_count() + u;
    return f;
}

Diagram FlatDiagram::to_diagram() const {
    Diagram d;
    d.sign = sign;
    for (const auto& t : tri) d.trivalent.push_back({t[0], t[1], t[2]});
    for (int u = 0; u < uni_count(); ++u) d.univalent.push_back({uni_half[u], uni_label[u]});
    for (int h = 0; h < num_halves; ++h)
        if (h < mate[h]) d.edges.emplace_back(h, mate[h]);
    return d;
}

} // namespace jdc
