#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ql {

// Arithmetic context for F_q, q = p^d. Elements are encoded as integers
// 0..q-1, the base-p digit expansion giving the coefficient tuple of a
// degree-< d polynomial over Z/p (constant term = least significant digit).
// The reduction polynomial is the canonically smallest monic irreducible
// of degree d (smallest integer encoding), found by exhaustive search.
class FqContext {
  public:
    FqContext(int p, int d);

    int p() const { return p_; }
    int d() const { return d_; }
    long q() const { return q_; }
    // Coefficients c0..c_{d-1} of the monic reduction polynomial
    // x^d + c_{d-1} x^{d-1} + ... + c0.
    const std::vector<int>& reduction_poly() const { return red_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const; // throws InputError on 0
    long pow(long a, long e) const;
    long scalar(long k) const; // image of the integer k (k * 1)

    // All q elements, 0..q-1 once each.
    std::vector<long> enumerate() const;

    // The class of x (a generator of the extension when d > 1).
    long gen() const { return d_ == 1 ? 1 % q_ : p_; }

    std::string element_str(long a) const; // "0", "1", "g", "g+1", ...

  private:
    int p_, d_;
    long q_;
    std::vector<int> red_;
    std::vector<long> mul_table_; // only for small q; else computed on the fly
    long raw_mul(long a, long b) const;
};

} // namespace ql
