#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ql {

// Finitely generated abelian group in invariant-factor form:
// Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, every di >= 2.
// Equality is structural equality of the canonical form.
class AbGroup {
  public:
    AbGroup() = default;
    AbGroup(long rank, std::vector<std::int64_t> torsion);

    static AbGroup trivial() { return AbGroup(0, {}); }
    static AbGroup free(long rank) { return AbGroup(rank, {}); }
    static AbGroup cyclic(std::int64_t n);

    long rank() const { return rank_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    // |G| for finite groups; throws InputError if rank > 0.
    std::int64_t order() const;

    AbGroup direct_sum(const AbGroup& other) const;
    // Subgroup of elements of odd order (torsion factors with 2-parts removed).
    AbGroup odd_part() const;

    // Order of the element with the given canonical coordinates
    // (free coordinates first, then one per torsion factor).
    // Returns 0 for infinite order.
    std::int64_t element_order(const std::vector<std::int64_t>& coords) const;

    // Componentwise sum of coordinate vectors, reduced mod the factors.
    std::vector<std::int64_t> add_coords(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) const;
    std::vector<std::int64_t> zero_coords() const;

    bool operator==(const AbGroup& other) const = default;

    // "0", "Z", "Z^2 + Z/2 + Z/4", ...
    std::string str() const;

  private:
    long rank_ = 0;
    std::vector<std::int64_t> torsion_;
};

// Canonical invariant factors of a multiset of cyclic orders, without
// factoring: bubbles (a,b) -> (gcd,lcm) until the divisibility chain holds.
std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> orders);

} // namespace ql
