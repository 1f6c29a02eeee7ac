#include "quandlelab/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quandlelab/errors.hpp"

namespace ql {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = int(i);
    return c;
}

bool perm_is_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != int(i)) return false;
    return true;
}

long perm_order(const Perm& a) {
    long ord = 1;
    std::vector<bool> seen(a.size(), false);
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = a[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string perm_cycle_str(const Perm& a, int index_base) {
    std::string s;
    std::vector<bool> seen(a.size(), false);
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || a[i] == int(i)) continue;
        s += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            s += std::to_string(long(j) + index_base);
            first = false;
            j = a[j];
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
    for (auto& g : gens_)
        if (int(g.size()) != degree) throw InputError("PermGroup: generator degree mismatch");
    for (auto& g : gens_)
        if (!perm_is_identity(g)) sift(g, 0);
    order_ = 1;
    for (auto& lv : levels_) {
        std::int64_t sz = std::int64_t(lv.transversal.size());
        if (order_ > (std::int64_t(1) << 62) / std::max<std::int64_t>(sz, 1))
            throw CapError("PermGroup: order overflow");
        order_ *= sz;
    }
}

void PermGroup::rebuild_orbit(Level& lv) {
    lv.transversal.clear();
    lv.transversal[lv.base] = perm_identity(degree_);
    std::vector<int> queue{lv.base};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int p = queue[qi];
        const Perm up = lv.transversal.at(p);
        for (auto& s : lv.gens) {
            int q = s[p];
            if (!lv.transversal.count(q)) {
                lv.transversal[q] = perm_mul(up, s);
                queue.push_back(q);
            }
        }
    }
}

void PermGroup::insert_generator(size_t level, const Perm& g) {
    if (level == levels_.size()) {
        Level lv;
        lv.base = -1;
        for (int i = 0; i < degree_; ++i)
            if (g[i] != i) {
                lv.base = i;
                break;
            }
        if (lv.base < 0) return; // identity
        levels_.push_back(std::move(lv));
    }
    levels_[level].gens.push_back(g);
    rebuild_orbit(levels_[level]);
    // Process all Schreier generators of this level. Deeper recursion can
    // reallocate levels_, so take copies and index instead of holding refs.
    std::vector<std::pair<int, Perm>> trans(levels_[level].transversal.begin(),
                                            levels_[level].transversal.end());
    size_t ngens = levels_[level].gens.size();
    for (auto& [p, up] : trans)
        for (size_t gi = 0; gi < ngens; ++gi) {
            Perm s = levels_[level].gens[gi];
            Perm sg = perm_mul(perm_mul(up, s),
                               perm_inverse(levels_[level].transversal.at(s[p])));
            if (!perm_is_identity(sg)) sift(sg, level + 1);
        }
}

void PermGroup::sift(const Perm& g, size_t level) {
    Perm h = g;
    for (size_t l = level; l < levels_.size(); ++l) {
        int p = h[levels_[l].base];
        auto it = levels_[l].transversal.find(p);
        if (it == levels_[l].transversal.end()) {
            insert_generator(l, h);
            return;
        }
        h = perm_mul(h, perm_inverse(it->second));
        if (perm_is_identity(h)) return;
    }
    if (!perm_is_identity(h)) insert_generator(levels_.size(), h);
}

bool PermGroup::contains(const Perm& g) const {
    if (int(g.size()) != degree_) return false;
    Perm h = g;
    for (auto& lv : levels_) {
        if (perm_is_identity(h)) return true;
        int p = h[lv.base];
        auto it = lv.transversal.find(p);
        if (it == lv.transversal.end()) return false;
        h = perm_mul(h, perm_inverse(it->second));
    }
    return perm_is_identity(h);
}

std::int64_t PermGroup::closure_size(std::int64_t cap) const {
    std::set<Perm> seen{perm_identity(degree_)};
    std::vector<Perm> queue{perm_identity(degree_)};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (auto& g : gens_) {
            Perm h = perm_mul(queue[qi], g);
            if (seen.insert(h).second) {
                if (std::int64_t(seen.size()) > cap) throw CapError("closure cap exceeded");
                queue.push_back(std::move(h));
            }
        }
    }
    return std::int64_t(seen.size());
}

} // namespace ql
