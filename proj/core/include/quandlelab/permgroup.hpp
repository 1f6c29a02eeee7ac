#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ql {

// Permutation of 0..n-1 as an image vector; x acted on the right:
// x . g = g[x], so (a*b)[x] = b[a[x]] applies a first.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);
long perm_order(const Perm& a);
std::string perm_cycle_str(const Perm& a, int index_base = 1);

// Permutation group with exact order via a Schreier-Sims stabilizer
// chain; BFS closure available as an independent cross-check.
class PermGroup {
  public:
    PermGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    std::int64_t order() const { return order_; }
    bool contains(const Perm& g) const;

    // Full element enumeration by BFS; CapError above the cap.
    std::int64_t closure_size(std::int64_t cap = 10000) const;

  private:
    struct Level {
        int base = 0;
        std::vector<Perm> gens;
        std::map<int, Perm> transversal; // point -> rep u with base.u = point
    };
    void rebuild_orbit(Level& lv);
    void insert_generator(size_t level, const Perm& g);
    void sift(const Perm& g, size_t level);

    int degree_;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    std::int64_t order_ = 1;
};

} // namespace ql
