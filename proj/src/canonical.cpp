#include "jdc/canonical.hpp"

#include "jdc/config.hpp"
#include "jdc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace jdc {

namespace {

// One step of the canonical traversal code. Tags order: new trivalent vertex
// < new univalent vertex < back-reference to an already numbered half-edge.
struct Rec {
    int tag = 0; // 0 = tri, 1 = uni(label), 2 = old(idx)
    int idx = 0;
    Label label;

    friend bool operator<(const Rec& a, const Rec& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        if (a.tag == 1) return a.label < b.label;
        if (a.tag == 2) return a.idx < b.idx;
        return false;
    }
    friend bool operator==(const Rec& a, const Rec& b) {
        return a.tag == b.tag && (a.tag != 1 || a.label == b.label) && (a.tag != 2 || a.idx == b.idx);
    }
};

using Code = std::vector<Rec>;

// Emits the traversal code of `f` starting at half-edge h0 with the vertex
// orientations flipped on the bits of `reversed`. When `best` is nonempty the
// construction aborts early as soon as the code compares greater.
// Returns -1 (smaller), 0 (equal), +1 (greater or aborted) against best.
int traverse(const FlatDiagram& f, int h0, const std::vector<char>& reversed, const Code& best, Code& out) {
    out.clear();
    const int H = f.num_halves;
    const int T = f.tri_count();
    std::vector<int> idx(H, -1);
    std::vector<int> order;
    order.reserve(H);

    int verdict = best.empty() ? -1 : 0; // -1 strictly smaller so far, 0 equal so far

    auto emit = [&](Rec r) -> bool {
        if (verdict == 0) {
            size_t at = out.size();
            if (at >= best.size() || best[at] < r) return false; // greater: abort
            if (r < best[at]) verdict = -1;
        }
        out.push_back(std::move(r));
        return true;
    };

    auto assign_vertex = [&](int v, int entry) {
        if (v < T) {
            const auto& t = f.tri[v];
            int pos = 0;
            while (t[pos] != entry) ++pos;
            int step1 = reversed[v] ? 2 : 1;
            int a = t[(pos + step1) % 3];
            int b = t[(pos + 2 * step1) % 3];
            for (int h : {entry, a, b}) {
                idx[h] = static_cast<int>(order.size());
                order.push_back(h);
            }
        } else {
            idx[entry] = static_cast<int>(order.size());
            order.push_back(entry);
        }
    };

    int v0 = f.vertex_of[h0];
    Rec header;
    if (v0 < T) {
        header.tag = 0;
    } else {
        header.tag = 1;
        header.label = f.uni_label[v0 - T];
    }
    if (!emit(std::move(header))) return 1;
    assign_vertex(v0, h0);

    for (int q = 0; q < H; ++q) {
        int h = order[q];
        int m = f.mate[h];
        if (idx[m] < 0) {
            int w = f.vertex_of[m];
            Rec r;
            if (w < T) {
                r.tag = 0;
            } else {
                r.tag = 1;
                r.label = f.uni_label[w - T];
            }
            if (!emit(std::move(r))) return 1;
            assign_vertex(w, m);
        } else {
            Rec r;
            r.tag = 2;
            r.idx = idx[m];
            if (!emit(std::move(r))) return 1;
        }
    }
    return verdict;
}

std::string serialize_code(const Code& code) {
    std::ostringstream out;
    bool header = true;
    for (const auto& r : code) {
        if (!header) out << '.';
        switch (r.tag) {
            case 0: out << (header ? "T" : "t"); break;
            case 1: out << (header ? "U(" : "u(") << r.label << ')'; break;
            default: out << 'o' << r.idx; break;
        }
        header = false;
    }
    return out.str();
}

struct SearchResult {
    Code code;
    int sign = 1;
    bool two_torsion = false;
};

SearchResult minimize(const FlatDiagram& f) {
    const int T = f.tri_count();
    SearchResult res;
    bool even_hit = false, odd_hit = false;

    std::vector<char> reversed(std::max(T, 1), 0);
    Code candidate;
    for (unsigned mask = 0; mask < (1u << T); ++mask) {
        int parity = 0;
        for (int v = 0; v < T; ++v) {
            reversed[v] = (mask >> v) & 1u;
            parity ^= reversed[v];
        }
        for (int h0 = 0; h0 < f.num_halves; ++h0) {
            int cmp = traverse(f, h0, reversed, res.code, candidate);
            if (cmp > 0) continue;
            if (cmp < 0) {
                res.code = candidate;
                even_hit = odd_hit = false;
            }
            (parity ? odd_hit : even_hit) = true;
        }
    }
    res.two_torsion = even_hit && odd_hit;
    res.sign = (even_hit || res.two_torsion) ? 1 : -1;
    return res;
}

struct CacheEntry {
    std::string key;
    bool two_torsion = false;
    int sign = 1; // relative to input presentation with sign +1
};

std::string raw_presentation(const FlatDiagram& f) {
    std::ostringstream out;
    for (const auto& t : f.tri) out << 'v' << t[0] << ',' << t[1] << ',' << t[2];
    for (int u = 0; u < f.uni_count(); ++u) out << 'l' << f.uni_half[u] << '=' << f.uni_label[u];
    for (int h = 0; h < f.num_halves; ++h)
        if (h < f.mate[h]) out << 'e' << h << '-' << f.mate[h];
    return out.str();
}

} // namespace

CanonResult canonicalize(const Diagram& d) {
    FlatDiagram f = FlatDiagram::from(d);
    if (f.vertex_of.size() > 0 && (f.tri_count() + f.uni_count()) / 2 > max_degree())
        throw capacity_error("diagram degree " + std::to_string((f.tri_count() + f.uni_count()) / 2) +
                             " exceeds bound " + std::to_string(max_degree()));

    thread_local std::unordered_map<std::string, CacheEntry> cache;
    std::string raw = raw_presentation(f);
    auto it = cache.find(raw);
    if (it == cache.end()) {
        SearchResult sr = minimize(f);
        CacheEntry entry{serialize_code(sr.code), sr.two_torsion, sr.sign};
        it = cache.emplace(std::move(raw), std::move(entry)).first;
    }
    const CacheEntry& e = it->second;
    return {CanonicalDiagram{e.key, e.two_torsion}, d.sign * e.sign};
}

Diagram decode_key(const std::string& key) {
    if (key.empty()) throw structural_error("empty canonical key");
    std::vector<std::string> tokens;
    {
        size_t start = 0;
        while (start <= key.size()) {
            size_t dot = key.find('.', start);
            if (dot == std::string::npos) dot = key.size();
            tokens.push_back(key.substr(start, dot - start));
            start = dot + 1;
        }
    }

    Diagram d;
    int counter = 0;
    std::set<std::pair<int, int>> edge_set;

    auto new_tri = [&]() {
        int e = counter;
        d.trivalent.push_back({e, e + 1, e + 2});
        counter += 3;
        return e;
    };
    auto new_uni = [&](const Label& l) {
        int e = counter;
        d.univalent.push_back({e, l});
        counter += 1;
        return e;
    };
    auto parse_uni = [&](const std::string& tok, char open) -> Label {
        if (tok.size() < 4 || tok[1] != open || tok.back() != ')')
            throw structural_error("bad key token '" + tok + "'");
        Label l = tok.substr(2, tok.size() - 3);
        if (!valid_label(l)) throw structural_error("bad label in key token '" + tok + "'");
        return l;
    };

    const std::string& head = tokens[0];
    if (head == "T") {
        new_tri();
    } else if (head[0] == 'U') {
        new_uni(parse_uni(head, '('));
    } else {
        throw structural_error("bad key header '" + head + "'");
    }

    for (int q = 0; q < counter; ++q) {
        size_t ti = static_cast<size_t>(q) + 1;
        if (ti >= tokens.size()) throw structural_error("truncated canonical key");
        const std::string& tok = tokens[ti];
        if (tok == "t") {
            int e = new_tri();
            edge_set.insert({q, e});
            d.edges.emplace_back(q, e);
        } else if (tok[0] == 'u') {
            int e = new_uni(parse_uni(tok, '('));
            edge_set.insert({q, e});
            d.edges.emplace_back(q, e);
        } else if (tok[0] == 'o') {
            int j = 0;
            try {
                j = std::stoi(tok.substr(1));
            } catch (const std::exception&) {
                throw structural_error("bad key token '" + tok + "'");
            }
            auto pair = std::minmax(q, j);
            if (edge_set.insert({pair.first, pair.second}).second) d.edges.emplace_back(pair.first, pair.second);
        } else {
            throw structural_error("bad key token '" + tok + "'");
        }
    }
    if (tokens.size() != static_cast<size_t>(counter) + 1)
        throw structural_error("canonical key has trailing tokens");
    d.validate();
    return d;
}

} // namespace jdc
