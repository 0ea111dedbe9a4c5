#include "prook/algebra.hpp"

#include <ostream>
#include <stdexcept>

namespace prook {

AlgebraElement AlgebraElement::from_diagram(const PlanarDiagram& d) {
    AlgebraElement a(d.size());
    a.terms_.emplace(d, 1);
    return a;
}

Rational AlgebraElement::coeff(const PlanarDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const PlanarDiagram& d, const Rational& c) {
    if (d.size() != n_)
        throw std::invalid_argument("term size differs from element size");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    if (rhs.n_ != n_)
        throw std::invalid_argument("element sizes differ");
    for (const auto& [d, c] : rhs.terms_)
        add_term(d, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    if (rhs.n_ != n_)
        throw std::invalid_argument("element sizes differ");
    for (const auto& [d, c] : rhs.terms_)
        add_term(d, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, coeff] : terms_)
        coeff *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("element sizes differ");
    AlgebraElement out(a.n_);
    for (const auto& [d1, c1] : a.terms_)
        for (const auto& [d2, c2] : b.terms_)
            out.add_term(compose(d1, d2), c1 * c2);
    return out;
}

AlgebraElement x_of(const PlanarDiagram& d) {
    AlgebraElement out(d.size());
    for (const auto& [sub, deleted] : subdiagrams(d))
        out.add_term(sub, (deleted % 2) ? Rational(-1) : Rational(1));
    return out;
}

AlgebraElement x_unit(int n, Mask s, Mask t) {
    return x_of(PlanarDiagram::from_sets(n, s, t));
}

std::map<PlanarDiagram, Rational> to_x_coords(const AlgebraElement& a) {
    // invert the unitriangular expansion: d = sum_{d' <= d} x_{d'}
    std::map<PlanarDiagram, Rational> coords;
    for (const auto& [d, c] : a.terms()) {
        for (const auto& [sub, deleted] : subdiagrams(d)) {
            (void)deleted;
            auto [it, inserted] = coords.emplace(sub, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    coords.erase(it);
            }
        }
    }
    return coords;
}

AlgebraElement from_x_coords(int n,
                             const std::map<PlanarDiagram, Rational>& coords) {
    AlgebraElement out(n);
    for (const auto& [d, c] : coords) {
        if (d.size() != n)
            throw std::invalid_argument("coordinate size differs");
        if (c == 0)
            continue;
        out += c * x_of(d);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) {
    if (a.is_zero())
        return os << "0";
    bool first = true;
    for (const auto& [d, c] : a.terms()) {
        if (!first)
            os << " + ";
        os << rational_to_string(c) << "*[" << d << "]";
        first = false;
    }
    return os;
}

} // namespace prook
