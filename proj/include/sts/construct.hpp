#pragma once

// Programmatic diagram sources: braid closures, torus links, rational
// tangles / Montesinos / pretzel diagrams, and realization of
// Dowker-Thistlethwaite codes. These feed the shipped knot catalog and the
// test fixtures.

#include "sts/diagram.hpp"

#include <optional>

namespace sts {

// word entries: +i / -i for the i-th positive/negative Artin generator
PlanarDiagram braid_closure(int strands, const std::vector<int>& word, std::string name = "");

PlanarDiagram torus_pd(int p, int q, std::string name = "");

// numerator closure of a sum of rational tangles, with e extra horizontal
// half-twists: the Montesinos link M(e; p1/q1, ..., pn/qn)
PlanarDiagram montesinos_pd(int e, const std::vector<std::pair<int, int>>& fractions,
                            std::string name = "");

// two-bridge (rational) knot/link b(p, q) as the closure of the p/q tangle
PlanarDiagram rational_pd(int p, int q, std::string name = "");

PlanarDiagram pretzel_pd(const std::vector<int>& twists, std::string name = "");

// Realize an alternating Dowker-Thistlethwaite pairing: code[k] is the even
// position paired with odd position 2k+1. Returns every planar realization
// up to reflection being possible (the first found); nullopt if none.
std::optional<PlanarDiagram> dt_realize_alternating(const std::vector<int>& code);

}  // namespace sts
