#include "quandlelab/barcomplex.hpp"

#include <random>

#include "quandlelab/errors.hpp"

namespace ql {

void BarChain::add(const BarTuple& t, std::int64_t c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) terms[t] = c;
    else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

void BarChain::add_chain(const BarChain& o, std::int64_t scale) {
    for (auto& [t, c] : o.terms) add(t, c * scale);
}

AppendixVerifier::AppendixVerifier(const QuandleTable& q, long max_cosets)
    : q_(q), g_(AssocGroup::build(q, max_cosets)), t_(type_of(q)) {
    rack_spec_ = RackComplexSpec{q_, YSet::point, Flavor::rack, 500000, false};
}

AssocGroup::Element AppendixVerifier::epow(int x, long j) const {
    auto r = g_.identity_element();
    auto ex = e(x);
    auto exi = g_.inv(ex);
    for (long i = 0; i < j; ++i) r = g_.mul(r, ex);
    for (long i = 0; i < -j; ++i) r = g_.mul(r, exi);
    return r;
}

BarChain AppendixVerifier::c_map(int n, const std::vector<int>& xs) const {
    if (int(xs.size()) != n) throw InputError("c_map: tuple arity mismatch");
    const auto& q = q_;
    BarChain out;
    out.degree = n;
    if (n == 1) {
        out.add({e(xs[0])}, 1);
    } else if (n == 2) {
        int x = xs[0], y = xs[1];
        out.add({e(x), e(y)}, 1);
        out.add({e(y), e(q.op[x][y])}, -1);
    } else if (n == 3) {
        int x = xs[0], y = xs[1], z = xs[2];
        int xy = q.op[x][y], xz = q.op[x][z], yz = q.op[y][z];
        int A = q.op[xy][z];
        out.add({e(x), e(y), e(z)}, 1);
        out.add({e(x), e(z), e(yz)}, -1);
        out.add({e(y), e(z), e(A)}, 1);
        out.add({e(y), e(xy), e(z)}, -1);
        out.add({e(z), e(xz), e(yz)}, 1);
        out.add({e(z), e(yz), e(A)}, -1);
    } else {
        throw InputError("c_map: n must be 1..3");
    }
    return out;
}

BarChain AppendixVerifier::h_map(int n, const std::vector<int>& xs) const {
    if (int(xs.size()) != n) throw InputError("h_map: tuple arity mismatch");
    const auto& q = q_;
    BarChain out;
    out.degree = n + 1;
    if (n == 1) {
        int x = xs[0];
        for (long j = 1; j <= t_ - 1; ++j) out.add({e(x), epow(x, j)}, 1);
    } else if (n == 2) {
        int x = xs[0], y = xs[1];
        int xy = q.op[x][y];
        for (long j = 1; j <= t_ - 1; ++j) {
            out.add({e(x), e(y), epow(xy, j)}, 1);
            out.add({e(x), epow(x, j), e(y)}, -1);
            out.add({e(y), e(xy), epow(xy, j)}, -1);
            out.add({e(y), epow(y, j), e(y)}, 1);
        }
    } else if (n == 3) {
        int x = xs[0], y = xs[1], z = xs[2];
        int xy = q.op[x][y], xz = q.op[x][z], yz = q.op[y][z];
        int A = q.op[xy][z];
        for (long j = 1; j <= t_ - 1; ++j) {
            out.add({e(x), e(y), e(z), epow(A, j)}, 1);
            out.add({e(x), e(z), e(yz), epow(A, j)}, -1);
            out.add({e(x), e(y), epow(xy, j), e(z)}, -1);
            out.add({e(y), e(xy), e(z), epow(A, j)}, -1);
            out.add({e(x), e(z), epow(xz, j), e(yz)}, 1);
            out.add({e(z), e(xz), e(yz), epow(A, j)}, 1);
            out.add({e(x), epow(x, j), e(y), e(z)}, 1);
            out.add({e(x), epow(x, j), e(z), e(yz)}, -1);
            out.add({e(y), e(z), e(A), epow(A, j)}, 1);
            out.add({e(z), e(yz), e(A), epow(A, j)}, -1);
            out.add({e(z), e(xz), epow(xz, j), e(yz)}, -1);
            out.add({e(y), e(xy), epow(xy, j), e(z)}, 1);
        }
    } else {
        throw InputError("h_map: n must be 1..3");
    }
    return out;
}

BarChain AppendixVerifier::bar_boundary(const BarChain& z) const {
    BarChain out;
    out.degree = z.degree - 1;
    for (auto& [t, c] : z.terms) {
        int n = int(t.size());
        if (n == 0) continue;
        BarTuple head(t.begin() + 1, t.end());
        out.add(head, c);
        std::int64_t sign = 1;
        for (int i = 1; i <= n - 1; ++i) {
            sign = -sign; // (-1)^i
            BarTuple m;
            m.reserve(n - 1);
            for (int k = 0; k < i - 1; ++k) m.push_back(t[k]);
            m.push_back(g_.mul(t[i - 1], t[i]));
            for (int k = i + 1; k < n; ++k) m.push_back(t[k]);
            out.add(m, c * sign);
        }
        BarTuple tail(t.begin(), t.end() - 1);
        out.add(tail, c * (n % 2 == 0 ? 1 : -1));
    }
    return out;
}

BarChain AppendixVerifier::c2_of(const Chain& z) const {
    BarChain out;
    out.degree = 2;
    for (auto& [t, c] : z.terms) out.add_chain(c_map(2, t), c);
    return out;
}

BarChain AppendixVerifier::h1_of(const Chain& z) const {
    BarChain out;
    out.degree = 2;
    for (auto& [t, c] : z.terms) out.add_chain(h_map(1, t), c);
    return out;
}

BarChain AppendixVerifier::h2_of(const Chain& z) const {
    BarChain out;
    out.degree = 3;
    for (auto& [t, c] : z.terms) out.add_chain(h_map(2, t), c);
    return out;
}

bool AppendixVerifier::verify_tthm21() const {
    for (int x = 0; x < q_.n; ++x)
        for (int y = 0; y < q_.n; ++y) {
            Chain d2 = boundary_of_tuple(rack_spec_, {x, y});
            BarChain lhs = h1_of(d2);
            lhs.add_chain(bar_boundary(h_map(2, {x, y})), -1);
            BarChain rhs = c_map(2, {x, y});
            BarChain scaled;
            scaled.degree = 2;
            scaled.add_chain(rhs, t_);
            if (!(lhs == scaled)) return false;
        }
    return true;
}

BarChain AppendixVerifier::F_of(int x, int y, int z) const {
    BarChain f;
    f.degree = 3;
    f.add_chain(c_map(3, {x, y, z}), t_);
    Chain d3 = boundary_of_tuple(rack_spec_, {x, y, z});
    f.add_chain(h2_of(d3), -1);
    f.add_chain(bar_boundary(h_map(3, {x, y, z})), -1);
    return f;
}

bool AppendixVerifier::verify_tthm23(int exhaustive_limit, int samples) const {
    // c3(x,x,z) = 0
    for (int x = 0; x < q_.n; ++x)
        for (int z = 0; z < q_.n; ++z)
            if (!c_map(3, {x, x, z}).is_zero()) return false;
    if (q_.n <= exhaustive_limit) {
        for (int y = 0; y < q_.n; ++y)
            for (int z = 0; z < q_.n; ++z) {
                BarChain ref = F_of(0, y, z);
                for (int x = 1; x < q_.n; ++x)
                    if (!(F_of(x, y, z) == ref)) return false;
            }
        return true;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, q_.n - 1);
    for (int s = 0; s < samples; ++s) {
        int x = pick(rng), y = pick(rng), z = pick(rng);
        if (!(F_of(x, y, z) == F_of(0, y, z))) return false;
    }
    return true;
}

bool AppendixVerifier::verify_daiji() const {
    auto p = epow(0, t_);
    for (int x = 1; x < q_.n; ++x)
        if (!(epow(x, t_) == p)) return false;
    for (int y = 0; y < q_.n; ++y) {
        auto ey = e(y);
        if (!(g_.mul(p, ey) == g_.mul(ey, p))) return false;
    }
    return true;
}

} // namespace ql
