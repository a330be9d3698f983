#include "jdc/element.hpp"

#include <sstream>

namespace jdc {

Element Element::from_diagram(const Diagram& d, const Int& multiple) {
    CanonResult cr = canonicalize(d);
    Element e;
    e.add_term(cr.canon, multiple * cr.sign);
    return e;
}

Element Element::from_canonical(const CanonicalDiagram& c, const Int& coeff) {
    Element e;
    e.add_term(c, coeff);
    return e;
}

void Element::add_term(const CanonicalDiagram& c, const Int& coeff) {
    auto it = terms_.find(c.key);
    Int next = coeff + (it != terms_.end() ? it->second.coeff : Int(0));
    if (c.two_torsion) next = ((next % 2) + 2) % 2;
    if (next == 0) {
        if (it != terms_.end()) terms_.erase(it);
        return;
    }
    if (it != terms_.end()) {
        it->second.coeff = next;
    } else {
        terms_.emplace(c.key, Entry{next, c.two_torsion});
    }
}

Int Element::coeff(const std::string& key) const {
    auto it = terms_.find(key);
    return it != terms_.end() ? it->second.coeff : Int(0);
}

Element& Element::operator+=(const Element& other) {
    for (const auto& [key, entry] : other.terms_) add_term({key, entry.two_torsion}, entry.coeff);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    for (const auto& [key, entry] : other.terms_) add_term({key, entry.two_torsion}, -entry.coeff);
    return *this;
}

Element operator*(const Int& k, const Element& a) {
    Element out;
    for (const auto& [key, entry] : a.terms_) out.add_term({key, entry.two_torsion}, k * entry.coeff);
    return out;
}

std::string Element::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, entry] : terms_) {
        Int c = entry.coeff;
        if (first) {
            if (c < 0) out << "- ";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1) out << a.str() << "*";
        out << key;
        if (entry.two_torsion) out << " [2t]";
        first = false;
    }
    return out.str();
}

Element add(const Element& a, const Element& b) { return a + b; }

Element scalar_mul(const Int& k, const Element& a) { return k * a; }

Element sum_forest(const GeometricForest& forest) {
    Element out;
    for (const auto& [sign, diagram] : forest.terms) out += Element::from_diagram(diagram, sign);
    return out;
}

} // namespace jdc
