#include "quandlelab/fq.hpp"

#include <algorithm>
#include <numeric>

#include "quandlelab/errors.hpp"

namespace ql {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

// polynomials over Z/p as coefficient vectors, constant term first
using Poly = std::vector<int>;

Poly poly_from_code(long code, int p) {
    Poly f;
    while (code > 0) {
        f.push_back(int(code % p));
        code /= p;
    }
    return f;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = int((c[i + j] + long(a[i]) * b[j]) % p);
    trim(c);
    return c;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    while (a.size() >= m.size()) {
        int lead = a.back();
        if (lead != 0) {
            // m monic
            size_t shift = a.size() - m.size();
            for (size_t i = 0; i < m.size(); ++i) {
                long v = a[shift + i] - long(lead) * m[i];
                a[shift + i] = int(((v % p) + p) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

// m = x^d + (digits of code); irreducible over Z/p by trial division
// against every monic polynomial of degree 1..d/2.
bool is_irreducible(const Poly& m, int p) {
    int d = int(m.size()) - 1;
    for (int deg = 1; 2 * deg <= d; ++deg) {
        long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly g = poly_from_code(code, p);
            g.resize(deg + 1, 0);
            g[deg] = 1;
            Poly r = poly_mod(m, g, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

} // namespace

FqContext::FqContext(int p, int d) : p_(p), d_(d) {
    if (!is_prime(p)) throw InputError("FqContext: p must be prime");
    if (d < 1 || d > 4) throw InputError("FqContext: extension degree must be 1..4");
    q_ = 1;
    for (int i = 0; i < d; ++i) q_ *= p;
    if (d == 1) {
        red_ = {0}; // x + 0, unused
    } else {
        bool found = false;
        for (long code = 0; code < q_ && !found; ++code) {
            Poly m = poly_from_code(code, p);
            m.resize(d + 1, 0);
            m[d] = 1;
            if (is_irreducible(m, p)) {
                red_.assign(m.begin(), m.end() - 1);
                found = true;
            }
        }
        if (!found) throw ConsistencyError("no irreducible polynomial found");
    }
    if (q_ <= 4096) {
        mul_table_.assign(size_t(q_) * q_, 0);
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b) mul_table_[size_t(a) * q_ + b] = raw_mul(a, b);
    }
}

long FqContext::add(long a, long b) const {
    long r = 0, m = 1;
    for (int i = 0; i < d_; ++i) {
        r += ((a % p_ + b % p_) % p_) * m;
        a /= p_;
        b /= p_;
        m *= p_;
    }
    return r;
}

long FqContext::neg(long a) const {
    long r = 0, m = 1;
    for (int i = 0; i < d_; ++i) {
        r += ((p_ - a % p_) % p_) * m;
        a /= p_;
        m *= p_;
    }
    return r;
}

long FqContext::sub(long a, long b) const { return add(a, neg(b)); }

long FqContext::raw_mul(long a, long b) const {
    if (d_ == 1) return (a * b) % p_;
    Poly fa = poly_from_code(a, p_), fb = poly_from_code(b, p_);
    Poly m(red_);
    m.push_back(1);
    Poly r = poly_mod(poly_mul(fa, fb, p_), m, p_);
    long code = 0, mult = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        code += r[i] * mult;
        mult *= p_;
    }
    return code;
}

long FqContext::mul(long a, long b) const {
    if (!mul_table_.empty()) return mul_table_[size_t(a) * q_ + b];
    return raw_mul(a, b);
}

long FqContext::pow(long a, long e) const {
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
    long r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

long FqContext::inv(long a) const {
    if (a == 0) throw InputError("F_q: division by zero");
    return pow(a, q_ - 2);
}

long FqContext::scalar(long k) const {
    long r = ((k % p_) + p_) % p_;
    return r;
}

std::vector<long> FqContext::enumerate() const {
    std::vector<long> all(q_);
    std::iota(all.begin(), all.end(), 0);
    return all;
}

std::string FqContext::element_str(long a) const {
    if (d_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string s;
    long rest = a;
    for (int i = 0; i < d_; ++i) {
        int c = int(rest % p_);
        rest /= p_;
        if (c == 0) continue;
        std::string term;
        if (i == 0) term = std::to_string(c);
        else {
            if (c != 1) term = std::to_string(c) + "*";
            term += "g";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!s.empty()) s = term + "+" + s;
        else s = term;
    }
    return s;
}

} // namespace ql
