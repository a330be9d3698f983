#pragma once

#include "jdc/element.hpp"
#include "jdc/ihx.hpp"
#include "jdc/linalg.hpp"

#include <string>
#include <vector>

namespace jdc {

enum class Grading { vassiliev, grope };

std::string to_string(Grading g);

// Exact rank and torsion of an AS(+IHX) quotient. Rank counts the free part
// (free generators minus the rational rank of the relation matrix); torsion
// lists the Smith invariant factors > 1 plus one Z/2 per two-torsion
// generator class.
struct SpaceReport {
    int degree = 0;
    Grading grading = Grading::vassiliev;
    int generator_count = 0;
    int rank = 0;
    std::vector<Int> torsion;
};

SpaceReport rank_and_torsion(const std::vector<CanonicalDiagram>& basis, const RelationSet& relations,
                             int degree, Grading grading);

// Canonical coset representative of e against the echelonized relation rows
// (two-torsion generators contribute implicit 2x = 0 rows). The result is 0
// exactly when e lies in the integer span of the relations up to parity.
Element reduce_mod(const Element& e, const RelationSet& relations);

} // namespace jdc
