#pragma once

#include <cstdint>
#include <vector>

#include "quandlelab/assoc.hpp"
#include "quandlelab/coloring.hpp"
#include "quandlelab/linkdiagram.hpp"
#include "quandlelab/presentation.hpp"

namespace ql {

// Reidemeister-Schreier presentation of pi_1 of the t-fold cyclic cover
// of S^3 branched over the link: generators gamma_{i,s} (arc i, sheet s),
// crossing relations lifted sheetwise, and gamma_{0,s} = 1 for all s
// (s <= t-2 for the unbranched complement, plus s = t-1 when branched).
struct CoverPresentation {
    int fold = 1;
    int num_arcs = 0;
    int base_arc = 0;
    Presentation pres; // generator index of (arc i, sheet s) = i*t + s + 1
    bool branched = true;

    int gen_of(int arc, int sheet) const { return arc * fold + sheet + 1; }
};

CoverPresentation branched_cover_presentation(const LinkDiagram& d, int t,
                                              bool branched = true);

// H_1 of the covering space: abelianization of the presentation.
AbGroup cover_h1(const CoverPresentation& cp);

// theta_{X,D}: gamma_{i,s} -> e_{C(g0)}^{s-1} e_{C(gi)} e_{C(g0)}^{-s},
// evaluated in the adjoint representation. Only knots are accepted, and
// t must equal type_of(Q).
struct ThetaResult {
    bool well_defined = false; // every relator maps to the identity
    bool equivariant = false;  // deck shift corresponds to conjugation by e_{C(g0)}
    std::vector<std::vector<int>> image; // [arc][sheet] -> Ker-eps coset
    std::vector<int> image_subgroup;     // sorted cosets of the generated subgroup
    long image_order = 0;
    std::vector<int> image_conj_canonical; // minimal sorted conjugate, for comparisons
};

ThetaResult theta(const LinkDiagram& d, const Coloring& c, const AssocGroup& g);

} // namespace ql
