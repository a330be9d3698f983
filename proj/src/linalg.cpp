#include "jdc/linalg.hpp"

#include "jdc/errors.hpp"

#include <algorithm>

namespace jdc {

int bareiss_rank(Matrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

namespace {

struct MinPivot {
    size_t row = 0, col = 0;
    bool found = false;
};

MinPivot find_min_pivot(const Matrix& m, size_t t) {
    MinPivot best;
    Int best_abs = 0;
    for (size_t i = t; i < m.size(); ++i)
        for (size_t j = t; j < m[i].size(); ++j) {
            if (m[i][j] == 0) continue;
            Int a = abs(m[i][j]);
            if (!best.found || a < best_abs) {
                best = {i, j, true};
                best_abs = a;
            }
        }
    return best;
}

} // namespace

std::vector<Int> smith_invariant_factors(Matrix m) {
    std::vector<Int> factors;
    if (m.empty() || m[0].empty()) return factors;
    const size_t rows = m.size(), cols = m[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        MinPivot p = find_min_pivot(m, t);
        if (!p.found) break;
        std::swap(m[t], m[p.row]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][p.col]);

        bool clean = true;
        // clear column t
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            Int q = m[i][t] / m[t][t];
            for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;
        }
        // clear row t
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            Int q = m[t][j] / m[t][t];
            for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue; // remainders left; re-pivot on a smaller entry

        // enforce divisibility of the remaining block by the pivot
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        if (m[t][t] < 0) m[t][t] = -m[t][t];
        factors.push_back(m[t][t]);
        ++t;
    }
    return factors;
}

IntegerEchelon::IntegerEchelon(Matrix rows) {
    if (!rows.empty()) cols_ = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols_) throw structural_error("ragged relation matrix");

    std::vector<Row> pending = std::move(rows);
    for (size_t c = 0; c < cols_; ++c) {
        // gcd-combine all pending rows with support starting at column c
        while (true) {
            int best = -1;
            Int best_abs = 0;
            for (size_t i = 0; i < pending.size(); ++i) {
                if (pending[i][c] == 0) continue;
                Int a = abs(pending[i][c]);
                if (best < 0 || a < best_abs) {
                    best = static_cast<int>(i);
                    best_abs = a;
                }
            }
            if (best < 0) break;
            Row pivot_row = std::move(pending[best]);
            pending.erase(pending.begin() + best);
            bool residue = false;
            for (auto& r : pending) {
                if (r[c] == 0) continue;
                Int q = r[c] / pivot_row[c];
                for (size_t j = c; j < cols_; ++j) r[j] -= q * pivot_row[j];
                if (r[c] != 0) residue = true;
            }
            if (residue) {
                pending.push_back(std::move(pivot_row));
                continue; // smaller residues remain; iterate the gcd loop
            }
            if (pivot_row[c] < 0)
                for (auto& x : pivot_row) x = -x;
            pivots_.emplace_back(static_cast<int>(c), std::move(pivot_row));
            break;
        }
        // drop rows that became zero
        std::erase_if(pending, [](const Row& r) {
            return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
        });
    }
}

Row IntegerEchelon::reduce(Row v) const {
    if (v.size() != cols_) throw structural_error("vector length does not match relation columns");
    for (const auto& [c, row] : pivots_) {
        if (v[c] == 0) continue;
        // floor division keeps the representative coefficient in [0, pivot)
        Int q = v[c] / row[c];
        if (v[c] % row[c] != 0 && ((v[c] < 0) != (row[c] < 0))) q -= 1;
        if (q == 0) continue;
        for (size_t j = c; j < cols_; ++j) v[j] -= q * row[j];
    }
    return v;
}

bool IntegerEchelon::contains(Row v) const {
    Row r = reduce(std::move(v));
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

} // namespace jdc
