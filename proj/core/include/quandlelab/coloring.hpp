#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandlelab/assoc.hpp"
#include "quandlelab/linkdiagram.hpp"
#include "quandlelab/quandle.hpp"
#include "quandlelab/rackhomology.hpp"

namespace ql {

// Arc labeling with C(under-out) = C(under-in) ◁ C(over) at positive
// crossings (the inverse operation at negative ones).
using Coloring = std::vector<int>;

// All X-colorings, deterministic order (lexicographic in arc values).
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const QuandleTable& q);

bool coloring_is_valid(const LinkDiagram& d, const QuandleTable& q, const Coloring& c);

// Evaluates Gamma_C on every Wirtinger relator and every
// meridian/longitude pair in the adjoint representation. Failures are
// implementation bugs, reported with a witness.
struct GammaCheckReport {
    bool ok = true;
    std::string failure;
};
GammaCheckReport gamma_check(const LinkDiagram& d, const AssocGroup& g, const Coloring& c);

// State-sum 2-cycle of a coloring: sum over crossings of
// sign * (C(under-in), C(over)) (under-out at negative crossings).
Chain state_sum_chain(const LinkDiagram& d, const Coloring& c);

// Its class in H_2^Q(X); h2 must be RackHomology(Q, 2, quandle, point, classes).
std::vector<std::int64_t> state_sum_class(const LinkDiagram& d, const Coloring& c,
                                          const RackHomology& h2);

// Cocycle invariant: multiset over Z/m of the pairings of phi with each
// coloring's state sum. Rejects non-cocycles.
std::map<std::int64_t, long> cocycle_invariant(const LinkDiagram& d, const QuandleTable& q,
                                               const CocycleTable& phi);

// Colouring polynomial: per coloring, the class of
// Gamma_C(l_1)...Gamma_C(l_#L) in ⊕_i (Stab(x_i) ∩ Ker eps_i)_ab,
// as concatenated per-orbit coordinates.
struct ColoringPolynomial {
    // coordinate vector (concatenated orbit summands) -> multiplicity
    std::map<std::vector<std::int64_t>, long> classes;
    std::map<std::int64_t, long> orders; // order of class -> multiplicity
};
ColoringPolynomial coloring_polynomial(const LinkDiagram& d, const QuandleTable& q,
                                       const EisermannH2& h2);

} // namespace ql
