#include "jdc/generate.hpp"

#include "jdc/config.hpp"
#include "jdc/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace jdc {

namespace {

// Insert a new leaf into every edge of the tree: subdivide {a,b} with a new
// trivalent vertex carrying the leaf.
std::vector<Diagram> insert_leaf(const Diagram& t, const Label& leaf) {
    std::vector<Diagram> out;
    int next = 0;
    for (const auto& tri : t.trivalent)
        for (HalfEdge h : tri) next = std::max(next, h + 1);
    for (const auto& u : t.univalent) next = std::max(next, u.half + 1);

    for (size_t e = 0; e < t.edges.size(); ++e) {
        Diagram d = t;
        auto [a, b] = d.edges[e];
        HalfEdge va = next, vb = next + 1, vleaf = next + 2, leaf_half = next + 3;
        d.edges.erase(d.edges.begin() + static_cast<long>(e));
        d.edges.emplace_back(a, va);
        d.edges.emplace_back(b, vb);
        d.edges.emplace_back(vleaf, leaf_half);
        d.trivalent.push_back({va, vb, vleaf});
        d.univalent.push_back({leaf_half, leaf});
        out.push_back(std::move(d));
    }
    return out;
}

void check_degree_bound(int degree) {
    if (degree > max_degree())
        throw capacity_error("degree " + std::to_string(degree) + " exceeds bound " +
                             std::to_string(max_degree()));
}

std::vector<CanonicalDiagram> sorted_classes(std::map<std::string, CanonicalDiagram>&& classes) {
    std::vector<CanonicalDiagram> out;
    out.reserve(classes.size());
    for (auto& [key, canon] : classes) out.push_back(std::move(canon));
    return out;
}

} // namespace

std::vector<Diagram> tree_shapes(const std::vector<Label>& leaves) {
    if (leaves.size() < 2) throw structural_error("a tree needs at least two leaves");
    std::vector<Diagram> trees{make_strut(leaves[0], leaves[1])};
    for (size_t i = 2; i < leaves.size(); ++i) {
        std::vector<Diagram> grown;
        for (const auto& t : trees)
            for (auto& g : insert_leaf(t, leaves[i])) grown.push_back(std::move(g));
        trees = std::move(grown);
    }
    return trees;
}

std::vector<CanonicalDiagram> generate_trees(int degree, const std::vector<Label>& alphabet, bool distinct) {
    if (degree < 1) throw structural_error("degree must be >= 1");
    if (alphabet.empty()) throw structural_error("alphabet must be nonempty");
    check_degree_bound(degree);
    const size_t leaves = static_cast<size_t>(degree) + 1;

    std::map<std::string, CanonicalDiagram> classes;
    if (distinct) {
        if (alphabet.size() < leaves) return {};
        std::vector<Label> sorted_alpha(alphabet.begin(), alphabet.end());
        std::sort(sorted_alpha.begin(), sorted_alpha.end());
        // enumerate leaf subsets; insertion order enumeration yields every
        // labeled tree on a subset exactly once
        std::vector<size_t> pick(leaves);
        auto choose = [&](auto&& self, size_t slot, size_t from) -> void {
            if (slot == leaves) {
                std::vector<Label> subset;
                for (size_t i : pick) subset.push_back(sorted_alpha[i]);
                for (const auto& t : tree_shapes(subset)) {
                    CanonResult cr = canonicalize(t);
                    classes.emplace(cr.canon.key, cr.canon);
                }
                return;
            }
            for (size_t i = from; i < sorted_alpha.size(); ++i) {
                pick[slot] = i;
                self(self, slot + 1, i + 1);
            }
        };
        choose(choose, 0, 0);
    } else {
        std::vector<Label> placeholders;
        for (size_t i = 0; i < leaves; ++i) placeholders.push_back("p" + std::to_string(i));
        auto shapes = tree_shapes(placeholders);
        std::vector<size_t> assign(leaves, 0);
        while (true) {
            for (const auto& shape : shapes) {
                Diagram d = shape;
                for (size_t i = 0; i < d.univalent.size(); ++i) d.univalent[i].label = alphabet[assign[i]];
                CanonResult cr = canonicalize(d);
                classes.emplace(cr.canon.key, cr.canon);
            }
            size_t pos = 0;
            while (pos < leaves && ++assign[pos] == alphabet.size()) assign[pos++] = 0;
            if (pos == leaves) break;
        }
    }
    return sorted_classes(std::move(classes));
}

namespace {

// All perfect matchings of the half-edges; reject loops at a vertex,
// disconnected results are filtered by Diagram::validate via canonicalize.
void enumerate_matchings(std::vector<int>& mate, const std::vector<int>& vertex_of,
                         const std::function<void(const std::vector<int>&)>& emit) {
    int h0 = -1;
    for (size_t h = 0; h < mate.size(); ++h)
        if (mate[h] < 0) {
            h0 = static_cast<int>(h);
            break;
        }
    if (h0 < 0) {
        emit(mate);
        return;
    }
    for (size_t h = static_cast<size_t>(h0) + 1; h < mate.size(); ++h) {
        if (mate[h] >= 0 || vertex_of[h] == vertex_of[static_cast<size_t>(h0)]) continue;
        mate[static_cast<size_t>(h0)] = static_cast<int>(h);
        mate[h] = h0;
        enumerate_matchings(mate, vertex_of, emit);
        mate[static_cast<size_t>(h0)] = -1;
        mate[h] = -1;
    }
}

bool connected_matching(const std::vector<int>& mate, const std::vector<int>& vertex_of, int vertices) {
    if (vertices == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertices));
    for (size_t h = 0; h < mate.size(); ++h) {
        int m = mate[h];
        adj[static_cast<size_t>(vertex_of[h])].push_back(vertex_of[static_cast<size_t>(m)]);
    }
    std::vector<char> seen(static_cast<size_t>(vertices), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertices;
}

} // namespace

std::vector<CanonicalDiagram> generate_graphs(int degree, const std::vector<Label>& alphabet) {
    if (degree < 1) throw structural_error("degree must be >= 1");
    if (alphabet.empty()) throw structural_error("alphabet must be nonempty");
    check_degree_bound(degree);

    const int t = degree - 1; // trivalent count; grope degree = t + 1 for connected diagrams
    std::map<std::string, CanonicalDiagram> classes;
    for (int u = t + 2; u >= 1; u -= 2) {
        const int halves = 3 * t + u;
        std::vector<int> vertex_of(static_cast<size_t>(halves));
        for (int v = 0; v < t; ++v)
            for (int s = 0; s < 3; ++s) vertex_of[static_cast<size_t>(3 * v + s)] = v;
        for (int l = 0; l < u; ++l) vertex_of[static_cast<size_t>(3 * t + l)] = t + l;

        std::vector<int> mate(static_cast<size_t>(halves), -1);
        std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& m) {
            if (!connected_matching(m, vertex_of, t + u)) return;
            Diagram shape;
            for (int v = 0; v < t; ++v) shape.trivalent.push_back({3 * v, 3 * v + 1, 3 * v + 2});
            for (int l = 0; l < u; ++l) shape.univalent.push_back({3 * t + l, "p"});
            for (int h = 0; h < halves; ++h)
                if (h < m[static_cast<size_t>(h)]) shape.edges.emplace_back(h, m[static_cast<size_t>(h)]);
            std::vector<size_t> assign(static_cast<size_t>(u), 0);
            while (true) {
                for (int l = 0; l < u; ++l) shape.univalent[static_cast<size_t>(l)].label = alphabet[assign[static_cast<size_t>(l)]];
                CanonResult cr = canonicalize(shape);
                classes.emplace(cr.canon.key, cr.canon);
                size_t pos = 0;
                while (pos < static_cast<size_t>(u) && ++assign[pos] == alphabet.size()) assign[pos++] = 0;
                if (pos == static_cast<size_t>(u)) break;
            }
        };
        enumerate_matchings(mate, vertex_of, emit);
    }
    return sorted_classes(std::move(classes));
}

} // namespace jdc
