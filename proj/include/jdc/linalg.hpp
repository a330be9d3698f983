#pragma once

#include "jdc/element.hpp"

#include <vector>

namespace jdc {

using Row = std::vector<Int>;
using Matrix = std::vector<Row>;

// Rank over Q by fraction-free (Bareiss) elimination; exact.
int bareiss_rank(Matrix m);

// Invariant factors of the Smith normal form over Z, including 1s, sorted in
// divisibility order. Pivoting on minimal absolute value.
std::vector<Int> smith_invariant_factors(Matrix m);

// Integer row echelon of a relation matrix with one pivot per column,
// pivots positive, built deterministically; used for coset reduction.
class IntegerEchelon {
public:
    explicit IntegerEchelon(Matrix rows);

    // Reduces v against the pivot rows (floor division), producing the
    // canonical coset representative. v.size() must equal column count.
    Row reduce(Row v) const;

    // True iff v lies in the integer row span.
    bool contains(Row v) const;

private:
    std::vector<std::pair<int, Row>> pivots_; // (pivot column, row)
    size_t cols_ = 0;
};

} // namespace jdc
