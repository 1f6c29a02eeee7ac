#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quandlelab/assoc.hpp"
#include "quandlelab/rackhomology.hpp"

namespace ql {

// Unnormalized bar complex of As(X): formal integer combinations of
// tuples of group elements (decided in the adjoint representation),
// canonically ordered by element encoding.
using BarTuple = std::vector<AssocGroup::Element>;

struct BarChain {
    int degree = 0;
    std::map<BarTuple, std::int64_t> terms;

    void add(const BarTuple& t, std::int64_t c);
    void add_chain(const BarChain& o, std::int64_t scale = 1);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const BarChain& o) const { return terms == o.terms; }
};

// Kabaya's chain maps c_n : C_n^R(X) -> C_n^gr(As X) (n <= 3) and the
// homotopies h_n : C_n^R(X) -> C_{n+1}^gr(As X) for a connected quandle
// of type t, plus the standard inhomogeneous bar boundary:
//   d(g_1..g_n) = (g_2..g_n) + sum_i (-1)^i (g_1..g_i g_{i+1}..g_n)
//               + (-1)^n (g_1..g_{n-1}).
class AppendixVerifier {
  public:
    explicit AppendixVerifier(const QuandleTable& q, long max_cosets = 1000000);

    const AssocGroup& group() const { return g_; }
    long type() const { return t_; }

    BarChain c_map(int n, const std::vector<int>& xs) const;
    BarChain h_map(int n, const std::vector<int>& xs) const;
    BarChain bar_boundary(const BarChain& z) const;

    // linear extension of c2/h1/h2 over rack chains (point Y-set)
    BarChain c2_of(const Chain& z) const;
    BarChain h1_of(const Chain& z) const;
    BarChain h2_of(const Chain& z) const;

    // h1 ∘ d2^R - d3^gr ∘ h2 = t * c2, exhaustively over X^2
    bool verify_tthm21() const;
    // F(x,y,z) = t*c3 - h2(d3^R) - d4^gr(h3) is independent of x, and
    // c3(x,x,z) = 0; exhaustive for |X| <= exhaustive_limit, else sampled.
    bool verify_tthm23(int exhaustive_limit = 8, int samples = 1000) const;
    // e_x^t equal for all x and central
    bool verify_daiji() const;

  private:
    AssocGroup::Element e(int x) const { return g_.gen_element(x); }
    AssocGroup::Element epow(int x, long j) const;
    BarChain F_of(int x, int y, int z) const;

    QuandleTable q_;
    AssocGroup g_;
    long t_;
    RackComplexSpec rack_spec_;
};

} // namespace ql
