#pragma once

// Kauffman bracket state sum and exact Jones evaluation. Independent of the
// cube complex machinery; serves as a cross-check oracle for determinants
// and graded Euler characteristics.

#include "sts/diagram.hpp"
#include "sts/ring.hpp"

#include <map>

namespace sts {

// Laurent polynomial, exponent -> coefficient
using Laurent = std::map<int, Int>;

// Kauffman bracket <D> in the variable A, normalized so <unknot> = 1.
Laurent kauffman_bracket(const PlanarDiagram& d);

// Writhe-normalized bracket (-A^3)^{-w} <D>, collected in x = A^{-2};
// substituting x = -q gives the Jones polynomial in q with V(unknot) = 1.
Laurent jones_in_x(const PlanarDiagram& d);

struct GaussRat {
    Rat re, im;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
};

// V(L) at an exact rational value t. Supported evaluation points: those where
// sqrt(t) is rational or purely imaginary rational (covers t = -1 and squares).
GaussRat jones_at(const PlanarDiagram& d, const Rat& t);

// |V(L)(-1)| as an integer; the state-sum determinant oracle.
Int jones_determinant(const PlanarDiagram& d);

}  // namespace sts
