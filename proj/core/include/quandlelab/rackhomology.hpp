#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandlelab/abgroup.hpp"
#include "quandlelab/quandle.hpp"
#include "quandlelab/snf.hpp"

namespace ql {

enum class Flavor { rack, quandle };
enum class YSet { point, primitive }; // pt, or X acted on by As(X)

struct RackComplexSpec {
    QuandleTable q;
    YSet yset = YSet::point;
    Flavor flavor = Flavor::quandle;
    // Boundary matrices refuse more columns than this unless large_ok.
    long column_cap = 500000;
    bool large_ok = false;
};

// Basis of C_n: tuples (y, x_1..x_n) — the y slot only when yset is
// primitive — in lexicographic order; the quandle flavor keeps only
// tuples with no adjacent equal x_i.
class RackBasis {
  public:
    RackBasis(const RackComplexSpec& spec, int degree);

    long size() const { return long(tuples_.size()); }
    const std::vector<int>& tuple(long i) const { return tuples_[i]; }
    // -1 when the tuple is degenerate in the quandle flavor
    long index_of(const std::vector<int>& t) const;
    int degree() const { return degree_; }

  private:
    int degree_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, long> index_;
};

// Sparse integer chain in a fixed degree.
struct Chain {
    int degree = 0;
    std::map<std::vector<int>, std::int64_t> terms;

    void add(const std::vector<int>& t, std::int64_t c);
    bool is_zero() const { return terms.empty(); }
};

// Boundary of one basis tuple, as (tuple, coefficient) pairs; degenerate
// targets are dropped in the quandle flavor.
Chain boundary_of_tuple(const RackComplexSpec& spec, const std::vector<int>& t);
Chain boundary_of_chain(const RackComplexSpec& spec, const Chain& z);

// Matrix of ∂_n : C_n -> C_{n-1} in the chosen bases.
IntMatrix boundary_matrix(const RackComplexSpec& spec, int n);

// Homology at degree n with optional cycle-class coordinates.
class RackHomology {
  public:
    RackHomology(const RackComplexSpec& spec, int degree, bool want_classes = false);

    const AbGroup& group() const { return result_.group; }
    const RackBasis& basis() const { return basis_n_; }
    // Class coordinates of a cycle (checked: quandle-degenerate terms are
    // projected out first, then ∂z = 0 is verified).
    std::vector<std::int64_t> class_of(const Chain& z) const;
    std::int64_t order_of_class(const std::vector<std::int64_t>& coords) const;

  private:
    RackComplexSpec spec_;
    RackBasis basis_n_;
    HomologyResult result_;
};

AbGroup homology(const QuandleTable& q, int n, Flavor flavor, YSet yset = YSet::point,
                 long column_cap = 500000, bool large_ok = false);

// ---- quandle 2-cocycles ---------------------------------------------------

struct CocycleTable {
    std::int64_t modulus = 2;
    std::vector<std::vector<std::int64_t>> values; // values[x][y], zero diagonal

    std::int64_t at(int x, int y) const { return values[x][y]; }
    // {"modulus": m, "values": {"x,y": v, ...}} omitting zeros
    std::string to_json() const;
    static CocycleTable from_json(const std::string& text, int quandle_size);
};

// phi(x ◁ y, z) - phi(x, z) - phi(x ◁ z, y ◁ z) + phi(x, y) == 0 and
// phi(x, x) == 0, all mod m.
bool is_quandle_two_cocycle(const QuandleTable& q, const CocycleTable& phi);

struct TwoCocycleBasis {
    AbGroup h2;                        // H^2_Q(X; Z/m)
    std::vector<CocycleTable> cocycles; // zero table first, then one per generator
};

TwoCocycleBasis two_cocycles(const QuandleTable& q, std::int64_t m);

} // namespace ql
