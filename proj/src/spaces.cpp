#include "jdc/spaces.hpp"

#include "jdc/errors.hpp"

#include <algorithm>
#include <map>

namespace jdc {

std::string to_string(Grading g) { return g == Grading::vassiliev ? "vassiliev" : "grope"; }

SpaceReport rank_and_torsion(const std::vector<CanonicalDiagram>& basis, const RelationSet& relations,
                             int degree, Grading grading) {
    std::vector<CanonicalDiagram> sorted = basis;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::map<std::string, size_t> free_col;
    int torsion_generators = 0;
    for (const auto& c : sorted) {
        if (c.two_torsion) {
            ++torsion_generators;
        } else {
            size_t col = free_col.size();
            free_col.emplace(c.key, col);
        }
    }

    Matrix m;
    for (const auto& row : relations.rows) {
        Row r(free_col.size(), 0);
        bool nonzero = false;
        for (const auto& [key, entry] : row.terms()) {
            auto it = free_col.find(key);
            if (it == free_col.end()) continue; // torsion column: handled by the Z/2 bookkeeping
            r[it->second] = entry.coeff;
            nonzero = true;
        }
        if (nonzero) m.push_back(std::move(r));
    }

    SpaceReport report;
    report.degree = degree;
    report.grading = grading;
    report.generator_count = static_cast<int>(sorted.size());
    int relation_rank = m.empty() ? 0 : bareiss_rank(m);
    report.rank = static_cast<int>(free_col.size()) - relation_rank;
    for (const Int& f : smith_invariant_factors(m))
        if (f > 1) report.torsion.push_back(f);
    for (int i = 0; i < torsion_generators; ++i) report.torsion.push_back(2);
    std::sort(report.torsion.begin(), report.torsion.end());
    return report;
}

Element reduce_mod(const Element& e, const RelationSet& relations) {
    std::vector<CanonicalDiagram> ambient = relations.ambient;
    std::sort(ambient.begin(), ambient.end());
    ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());

    std::map<std::string, size_t> col;
    for (const auto& c : ambient) col.emplace(c.key, col.size());
    for (const auto& [key, entry] : e.terms())
        if (!col.count(key)) throw structural_error("element key outside ambient basis: " + key);

    Matrix rows;
    for (const auto& row : relations.rows) {
        Row r(ambient.size(), 0);
        for (const auto& [key, entry] : row.terms()) r[col.at(key)] = entry.coeff;
        rows.push_back(std::move(r));
    }
    // two-torsion classes obey 2x = 0
    for (size_t i = 0; i < ambient.size(); ++i) {
        if (!ambient[i].two_torsion) continue;
        Row r(ambient.size(), 0);
        r[i] = 2;
        rows.push_back(std::move(r));
    }

    IntegerEchelon echelon(std::move(rows));
    Row v(ambient.size(), 0);
    for (const auto& [key, entry] : e.terms()) v[col.at(key)] = entry.coeff;
    Row reduced = echelon.reduce(std::move(v));

    Element out;
    for (size_t i = 0; i < ambient.size(); ++i)
        if (reduced[i] != 0) out.add_term(ambient[i], reduced[i]);
    return out;
}

} // namespace jdc
