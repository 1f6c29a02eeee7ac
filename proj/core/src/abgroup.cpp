#include "quandlelab/abgroup.hpp"

#include <algorithm>
#include <numeric>

#include "quandlelab/errors.hpp"

namespace ql {

AbGroup::AbGroup(long rank, std::vector<std::int64_t> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
    if (rank_ < 0) throw InputError("AbGroup: negative rank");
    std::erase(torsion_, 1);
    torsion_ = invariant_factors(std::move(torsion_));
}

AbGroup AbGroup::cyclic(std::int64_t n) {
    if (n < 0) throw InputError("AbGroup::cyclic: negative order");
    if (n == 0) return free(1); // Z/0 = Z
    if (n == 1) return trivial();
    return AbGroup(0, {n});
}

std::int64_t AbGroup::order() const {
    if (rank_ > 0) throw InputError("AbGroup::order: infinite group");
    std::int64_t o = 1;
    for (auto d : torsion_) o *= d;
    return o;
}

AbGroup AbGroup::direct_sum(const AbGroup& other) const {
    std::vector<std::int64_t> t = torsion_;
    t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());
    return AbGroup(rank_ + other.rank_, std::move(t));
}

AbGroup AbGroup::odd_part() const {
    std::vector<std::int64_t> t;
    for (auto d : torsion_) {
        while (d % 2 == 0) d /= 2;
        if (d > 1) t.push_back(d);
    }
    return AbGroup(0, std::move(t));
}

std::int64_t AbGroup::element_order(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != static_cast<size_t>(rank_) + torsion_.size())
        throw InputError("AbGroup::element_order: coordinate count mismatch");
    for (long i = 0; i < rank_; ++i)
        if (coords[i] != 0) return 0;
    std::int64_t ord = 1;
    for (size_t k = 0; k < torsion_.size(); ++k) {
        std::int64_t d = torsion_[k];
        std::int64_t c = ((coords[rank_ + k] % d) + d) % d;
        ord = std::lcm(ord, d / std::gcd(c, d));
    }
    return ord;
}

std::vector<std::int64_t> AbGroup::add_coords(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& b) const {
    size_t len = size_t(rank_) + torsion_.size();
    if (a.size() != len || b.size() != len)
        throw InputError("AbGroup::add_coords: coordinate count mismatch");
    std::vector<std::int64_t> out(len);
    for (long i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
    for (size_t k = 0; k < torsion_.size(); ++k) {
        std::int64_t d = torsion_[k];
        out[rank_ + k] = (((a[rank_ + k] + b[rank_ + k]) % d) + d) % d;
    }
    return out;
}

std::vector<std::int64_t> AbGroup::zero_coords() const {
    return std::vector<std::int64_t>(size_t(rank_) + torsion_.size(), 0);
}

std::string AbGroup::str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (rank_ == 1) s = "Z";
    else if (rank_ > 1) s = "Z^" + std::to_string(rank_);
    for (auto d : torsion_) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> orders) {
    std::erase_if(orders, [](std::int64_t d) { return d == 1; });
    for (auto d : orders)
        if (d < 1) throw InputError("invariant_factors: nonpositive order");
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < orders.size(); ++i)
            for (size_t j = i + 1; j < orders.size(); ++j) {
                if (orders[j] % orders[i] != 0) {
                    auto g = std::gcd(orders[i], orders[j]);
                    auto l = orders[i] / g * orders[j];
                    orders[i] = g;
                    orders[j] = l;
                    changed = true;
                }
            }
    }
    std::erase(orders, 1);
    std::sort(orders.begin(), orders.end());
    return orders;
}

} // namespace ql
