#pragma once

#include "prook/diagram.hpp"
#include "prook/rational.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace prook {

// An element of the diagram algebra on n vertices: a finite rational linear
// combination of diagrams, stored as a map in canonical diagram order with
// no zero coefficients.
class AlgebraElement {
public:
    explicit AlgebraElement(int n = 0) : n_(n) {}

    static AlgebraElement from_diagram(const PlanarDiagram& d);

    int size() const { return n_; }
    const std::map<PlanarDiagram, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const PlanarDiagram& d) const;

    // Accumulates c * d and drops the term if the total vanishes.
    void add_term(const PlanarDiagram& d, const Rational& c);

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const Rational& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
        a += b;
        return a;
    }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
        a -= b;
        return a;
    }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) {
        a *= c;
        return a;
    }

    // Bilinear extension of diagram composition.
    friend AlgebraElement operator*(const AlgebraElement& a,
                                    const AlgebraElement& b);

private:
    int n_ = 0;
    std::map<PlanarDiagram, Rational> terms_;
};

// x_d = sum over edge-subsets d' of d of (-1)^(deleted edges) d'.
// The family {x_d} is a basis; the change of basis is unitriangular with
// respect to the subdiagram order, with inverse d = sum of x_d' over d' <= d.
AlgebraElement x_of(const PlanarDiagram& d);

// x_d for the diagram with top set S and bottom set T.  These multiply like
// matrix units: x_{S,T} x_{U,V} = [T == U] x_{S,V}.
AlgebraElement x_unit(int n, Mask s, Mask t);

// Coordinates of a in the x-basis (zero-free, canonical order).
std::map<PlanarDiagram, Rational> to_x_coords(const AlgebraElement& a);

AlgebraElement from_x_coords(int n,
                             const std::map<PlanarDiagram, Rational>& coords);

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

} // namespace prook
