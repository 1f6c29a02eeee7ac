#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quandlelab/abgroup.hpp"
#include "quandlelab/intmatrix.hpp"

namespace ql {

struct SnfOptions {
    bool want_U = false;
    bool want_Uinv = false;
    bool want_V = false;
    bool want_Vinv = false;
    // Elimination aborts with CapError when the working matrix holds more
    // than this many nonzeros (fill-in guard on the sparse path).
    std::size_t max_fill = 200u * 1000u * 1000u;
};

struct SnfResult {
    // Invariant factors d1 | d2 | ... | dr, all positive.
    std::vector<std::int64_t> factors;
    long rank = 0;
    long rows = 0, cols = 0;
    // S = U * M * V; U, V unimodular. Present only if requested.
    std::optional<IntMatrix> U, Uinv, V, Vinv;

    IntMatrix diagonal() const;
    // Torsion part Z^? / (factors): factors > 1 as an AbGroup with given rank.
    AbGroup quotient_group(long ambient_rank) const;
};

// Smith normal form by fraction-free elimination with pivoting on
// (|entry|, row nnz + col nnz, row, col). Arithmetic is checked int64,
// re-run on GMP integers if it overflows.
SnfResult smith_normal_form(const IntMatrix& M, const SnfOptions& opts = {});

inline long rank_of(const IntMatrix& M) { return smith_normal_form(M).rank; }

// ---- chain-complex homology -------------------------------------------

// Class coordinates of cycles in ker(d_out)/im(d_in): free coordinates
// first, then one per torsion factor.
class HomologyClassMap {
  public:
    std::vector<std::int64_t> coords_of(const std::vector<std::int64_t>& cycle) const;
    const AbGroup& group() const { return group_; }

  private:
    friend struct HomologyBuilder;
    AbGroup group_;
    IntMatrix ker_proj_;               // k x n: cycle -> kernel-lattice coords
    IntMatrix u3_;                     // k x k: kernel coords -> aligned coords
    std::vector<long> free_rows_;      // rows of u3_ giving free coordinates
    std::vector<std::pair<long, std::int64_t>> torsion_rows_; // (row, factor)
};

struct HomologyResult {
    AbGroup group;
    std::optional<HomologyClassMap> classes;
};

// Homology at the middle of  C_in --d_in--> C --d_out--> C_out.
// Checks d_out * d_in = 0 (ConsistencyError otherwise). With
// want_classes the coordinate map is built (costs an n x n inverse of
// the d_out column transform; keep n modest).
HomologyResult homology_at(const IntMatrix& d_in, const IntMatrix& d_out,
                           bool want_classes = false);

} // namespace ql
