#pragma once

#include "jdc/canonical.hpp"
#include "jdc/diagram.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace jdc {

using Int = boost::multiprecision::cpp_int;

// Finite integer combination of canonical diagram classes. Coefficients on
// two-torsion keys are stored reduced mod 2 (in {1}); zero coefficients are
// never stored. Keys are ordered, so iteration is deterministic.
class Element {
public:
    struct Entry {
        Int coeff;
        bool two_torsion = false;
    };

    Element() = default;

    static Element from_diagram(const Diagram& d, const Int& multiple = 1);
    static Element from_canonical(const CanonicalDiagram& c, const Int& coeff);

    void add_term(const CanonicalDiagram& c, const Int& coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::string, Entry>& terms() const { return terms_; }
    Int coeff(const std::string& key) const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Int& k, const Element& a);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    std::string to_text() const;

private:
    std::map<std::string, Entry> terms_;
};

inline bool operator==(const Element::Entry& a, const Element::Entry& b) {
    return a.coeff == b.coeff && a.two_torsion == b.two_torsion;
}

Element add(const Element& a, const Element& b);
Element scalar_mul(const Int& k, const Element& a);

// Disjoint union of signed diagrams, kept without cancellation.
struct GeometricForest {
    std::vector<std::pair<int, Diagram>> terms;
};

// Summation of a forest into the AS-quotient group.
Element sum_forest(const GeometricForest& forest);

} // namespace jdc
