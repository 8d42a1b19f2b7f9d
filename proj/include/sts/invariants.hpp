#pragma once

// Classical diagram invariants (Goeritz form, Gordon-Litherland signature,
// determinant, torus knot closed forms) and the concordance invariants
// extracted from Bar-Natan homology.

#include "sts/diagram.hpp"
#include "sts/jones.hpp"
#include "sts/ring.hpp"

namespace sts {

struct GoeritzForm {
    std::vector<std::vector<Int>> matrix;  // symmetric, white regions minus one
    int correction = 0;                    // Gordon-Litherland mu for this colouring
};

// Goeritz matrix on the white regions of the chosen checkerboard colouring.
GoeritzForm goeritz(const PlanarDiagram& d, bool swap_colors = false);

// signature via sig(Goeritz) - mu; colouring-independent
int signature_gl(const PlanarDiagram& d);

// |det(Goeritz)| for connected diagrams; 0 for split diagrams
Int determinant(const PlanarDiagram& d);

struct TorusKnotParams {
    int p = 2, q = 3;
};

// slice-torus value (p-1)(q-1)/2
int torus_slice_torus_value(const TorusKnotParams& t);

// signature by descent in q steps of 2p; base cases are computed on explicit
// torus braid diagrams and cross-checked in the test suite
int torus_signature(const TorusKnotParams& t);

// --- homological invariants (reduced Bar-Natan homology over R[H]) -----------

enum class CoeffRing { Z, Q, F2, F3 };

CoeffRing parse_ring_tag(const std::string& s);   // "Z", "Q", "F2", "F3"
std::string ring_tag_name(CoeffRing r);

// q-grading of the free summand, halved; 0 for the unknot, 1 for T(2,3)
int ss_tilde(const PlanarDiagram& d, CoeffRing coeffs);

// Rasmussen invariant over a field: 2 * ss_tilde
int rasmussen_s(const PlanarDiagram& d, CoeffRing field);

struct InvariantReport {
    std::string name;
    int ss_tilde_h = 0;                  // over Z[H]
    std::map<std::string, int> s_field;  // field tag -> s
    int signature = 0;
    Int det = 0;
    std::string chirality_note;
};

InvariantReport invariant_report(const PlanarDiagram& d, bool with_homological = true);
nlohmann::json report_to_json(const InvariantReport& r);

}  // namespace sts
