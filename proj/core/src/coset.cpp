#include "quandlelab/coset.hpp"

#include <deque>
#include <numeric>

#include "quandlelab/errors.hpp"

namespace ql {

namespace {

// Working enumerator. Signed-letter columns: generator g (0-based) has
// forward column 2g and inverse column 2g+1.
struct Enumerator {
    int ngens;
    long max_cosets;
    std::vector<std::vector<int>> tab; // tab[c][col], -1 undefined
    std::vector<int> parent;           // union-find, parent[c] <= c for dead
    std::deque<int> coincidence_queue;
    long live = 1;

    explicit Enumerator(int ngens, long max_cosets) : ngens(ngens), max_cosets(max_cosets) {
        tab.push_back(std::vector<int>(2 * ngens, -1));
        parent.push_back(0);
    }

    static int col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
    static int inv_col(int c) { return c ^ 1; }

    int rep(int c) {
        while (parent[c] != c) {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        return c;
    }
    bool is_live(int c) { return parent[c] == c; }

    int define(int a, int c) {
        if (long(tab.size()) >= max_cosets)
            throw CapError("coset enumeration: max-cosets limit exceeded");
        int b = int(tab.size());
        tab.push_back(std::vector<int>(2 * ngens, -1));
        parent.push_back(b);
        tab[a][c] = b;
        tab[b][inv_col(c)] = a;
        ++live;
        return b;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        int mu = std::min(a, b), nu = std::max(a, b);
        parent[nu] = mu;
        --live;
        coincidence_queue.push_back(nu);
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!coincidence_queue.empty()) {
            int e = coincidence_queue.front();
            coincidence_queue.pop_front();
            for (int c = 0; c < 2 * ngens; ++c) {
                int f = tab[e][c];
                if (f < 0) continue;
                tab[f][inv_col(c)] = -1;
                int e1 = rep(e), f1 = rep(f);
                if (tab[e1][c] >= 0) {
                    merge(f1, tab[e1][c]);
                } else if (tab[f1][inv_col(c)] >= 0) {
                    merge(e1, tab[f1][inv_col(c)]);
                } else {
                    tab[e1][c] = f1;
                    tab[f1][inv_col(c)] = e1;
                }
            }
        }
    }

    void scan_and_fill(int a, const Word& w) {
        if (w.empty()) return;
        int f = a, i = 0;
        int b = a, j = int(w.size()) - 1;
        while (true) {
            while (i <= j && tab[f][col(w[i])] >= 0) f = tab[f][col(w[i])], ++i;
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && tab[b][inv_col(col(w[j]))] >= 0)
                b = tab[b][inv_col(col(w[j]))], --j;
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) { // deduction
                tab[f][col(w[i])] = b;
                tab[b][inv_col(col(w[i]))] = f;
                return;
            }
            define(f, col(w[i]));
        }
    }

    void run(const Presentation& p, const std::vector<Word>& subgroup) {
        for (auto& w : subgroup) scan_and_fill(0, w);
        for (size_t i = 0; i < tab.size(); ++i) {
            if (!is_live(int(i))) continue;
            for (auto& r : p.relators) {
                scan_and_fill(int(i), r);
                if (!is_live(int(i))) break;
            }
            if (!is_live(int(i))) continue;
            for (int c = 0; c < 2 * ngens; ++c)
                if (tab[i][c] < 0) define(int(i), c);
        }
    }
};

} // namespace

void CosetTable::validate() const {
    for (int g = 0; g < num_generators; ++g) {
        if (int(act[g].size()) != num_cosets || int(act_inv[g].size()) != num_cosets)
            throw ConsistencyError("coset table: ragged action");
        for (int c = 0; c < num_cosets; ++c) {
            int d = act[g][c];
            if (d < 0 || d >= num_cosets || act_inv[g][d] != c)
                throw ConsistencyError("coset table: action not bijective");
        }
    }
    for (auto& r : presentation.relators)
        for (int c = 0; c < num_cosets; ++c)
            if (trace(c, r) != c) throw ConsistencyError("coset table: relator does not close");
    for (auto& w : subgroup_words)
        if (trace(0, w) != 0) throw ConsistencyError("coset table: subgroup word leaves coset 0");
}

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_words,
                           long max_cosets) {
    p.validate();
    for (auto& w : subgroup_words)
        for (int s : w)
            if (s == 0 || std::abs(s) > p.num_generators)
                throw InputError("subgroup word letter out of range");

    Enumerator e(p.num_generators, max_cosets);
    e.run(p, subgroup_words);

    // Collect live cosets, then renumber in BFS order from 0 over the
    // letters +1, -1, +2, -2, ... for a standardized, history-free table.
    int root = e.rep(0);
    std::vector<int> order;            // live coset (old id) in BFS order
    std::vector<int> newid(e.tab.size(), -1);
    std::vector<Word> words;
    order.push_back(root);
    newid[root] = 0;
    words.push_back({});
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int c = order[qi];
        for (int g = 1; g <= p.num_generators; ++g)
            for (int s : {g, -g}) {
                int d = e.rep(e.tab[c][Enumerator::col(s)]);
                if (newid[d] < 0) {
                    newid[d] = int(order.size());
                    order.push_back(d);
                    Word w = words[qi];
                    w.push_back(s);
                    words.push_back(std::move(w));
                }
            }
    }
    long nlive = long(order.size());
    if (nlive != e.live) throw ConsistencyError("coset enumeration: live count mismatch");

    CosetTable ct;
    ct.num_cosets = int(nlive);
    ct.num_generators = p.num_generators;
    ct.presentation = p;
    ct.subgroup_words = subgroup_words;
    ct.act.assign(p.num_generators, std::vector<int>(nlive, -1));
    ct.act_inv.assign(p.num_generators, std::vector<int>(nlive, -1));
    for (long c = 0; c < nlive; ++c) {
        int old = order[c];
        for (int g = 0; g < p.num_generators; ++g) {
            ct.act[g][c] = newid[e.rep(e.tab[old][2 * g])];
            ct.act_inv[g][c] = newid[e.rep(e.tab[old][2 * g + 1])];
        }
    }
    ct.schreier_words = std::move(words);
    ct.validate();
    return ct;
}

} // namespace ql
