#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quandlelab/fq.hpp"
#include "quandlelab/permgroup.hpp"

namespace ql {

// Provenance payload for quandles built from a Z[T,T^-1]-module:
// module = ⊕ Z/m_i, T an invertible integer matrix on it.
struct AlexanderData {
    std::vector<long> moduli;
    std::vector<std::vector<long>> tmat; // column-vector action x -> T x
};

// Finite quandle as operation tables. op[x][y] = x ◁ y; inv_op[x][y] is
// the unique z with z ◁ y = x. Elements are 0..n-1; labels optional.
struct QuandleTable {
    int n = 0;
    std::vector<std::vector<int>> op;
    std::vector<std::vector<int>> inv_op;
    std::vector<std::string> labels;
    std::vector<std::string> notes; // construction advisories
    std::optional<AlexanderData> alexander;

    int apply(int x, int y) const { return op[x][y]; }
    int apply_inv(int x, int y) const { return inv_op[x][y]; }
    // x . e_y^sign
    int act(int x, int y, int sign) const { return sign > 0 ? op[x][y] : inv_op[x][y]; }

    // Builds inv_op from op; requires every column to be a permutation.
    static QuandleTable from_op(std::vector<std::vector<int>> op,
                                std::vector<std::string> labels = {});

    // {"size": n, "table": [[...]], "labels": [...]}
    std::string to_json() const;
    static QuandleTable from_json(const std::string& text);
};

struct AxiomViolation {
    int axiom;                  // 1 = idempotence, 2 = right-invertibility, 3 = distributivity
    std::array<int, 3> witness; // first violating tuple in lex order (unused slots -1)
};

// nullopt = all axioms hold (exhaustive O(n^3) check).
std::optional<AxiomViolation> check_axioms(const QuandleTable& q);

struct OrbitData {
    std::vector<int> orbit_id;        // per element
    std::vector<int> representatives; // smallest element per orbit, ascending
    bool connected = false;
};

OrbitData orbits(const QuandleTable& q);

// Least N >= 1 with x ◁^N y = x for all x, y (lcm of the orders of the
// right-translation permutations).
long type_of(const QuandleTable& q);

// Inn(X) = group generated by the right translations (• ◁ y).
PermGroup inner_group(const QuandleTable& q);

// The right-translation permutation (• ◁ y).
Perm right_translation(const QuandleTable& q, int y);

// ---- constructions ------------------------------------------------------

QuandleTable make_alexander(const std::vector<long>& moduli,
                            const std::vector<std::vector<long>>& tmat);
// F_q[T]/(T - omega): T = multiplication by omega on (Z/p)^d.
QuandleTable make_alexander_fq(const FqContext& fq, long omega);
QuandleTable make_dihedral(long n); // Z/n with T = -1

// Symplectic quandle over F_q (q odd): F_q^{2n} \ {0}, x◁y = <x,y>y + x.
QuandleTable make_symplectic(long q, int n);
// Spherical quandle over F_q (q odd): {x in F_q^{n+1} : <x,x> = 1},
// x◁y = 2<x,y>y - x.
QuandleTable make_spherical(long q, int n);

// Conjugacy-class quandle: closure of seed under conjugation by the
// generated group, x ◁ y = y^-1 x y.
QuandleTable make_conjugation(const std::vector<Perm>& group_generators, const Perm& seed,
                              long class_cap = 4096);

QuandleTable make_trivial(int n); // x ◁ y = x

// Is (1-T)M = M for alexander data? (connectivity criterion)
bool alexander_is_connected(const AlexanderData& a);

// Brute-force table isomorphism search (tiny n only; used by tests).
bool quandles_isomorphic(const QuandleTable& a, const QuandleTable& b);

} // namespace ql
