#include "quandlelab/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "quandlelab/errors.hpp"

namespace ql {

namespace {

// Static assignment order: greedy most-constrained (crossings with two
// already-ordered arcs first, then one, then total degree), ties to the
// smallest index.
std::vector<int> arc_order(const LinkDiagram& d) {
    int n = d.num_arcs;
    std::vector<int> degree(n, 0);
    for (auto& cr : d.crossings) {
        ++degree[cr.under_in_arc];
        ++degree[cr.over_arc];
        ++degree[cr.under_out_arc];
    }
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::array<int, 3> best_key{-1, -1, -1};
        for (int a = 0; a < n; ++a) {
            if (placed[a]) continue;
            int two = 0, one = 0;
            for (auto& cr : d.crossings) {
                std::array<int, 3> arcs{cr.under_in_arc, cr.over_arc, cr.under_out_arc};
                if (std::find(arcs.begin(), arcs.end(), a) == arcs.end()) continue;
                int got = 0;
                for (int x : arcs)
                    if (x != a && placed[x]) ++got;
                if (got >= 2) ++two;
                else if (got == 1) ++one;
            }
            std::array<int, 3> key{two, one, degree[a]};
            if (best == -1 || key > best_key) {
                best = a;
                best_key = key;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

} // namespace

bool coloring_is_valid(const LinkDiagram& d, const QuandleTable& q, const Coloring& c) {
    if (int(c.size()) != d.num_arcs) return false;
    for (auto& cr : d.crossings) {
        int expect = cr.sign > 0 ? q.op[c[cr.under_in_arc]][c[cr.over_arc]]
                                 : q.inv_op[c[cr.under_in_arc]][c[cr.over_arc]];
        if (c[cr.under_out_arc] != expect) return false;
    }
    return true;
}

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const QuandleTable& q) {
    std::vector<int> order = arc_order(d);
    int n = d.num_arcs;
    std::vector<int> pos(n); // arc -> position in order
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // crossings checkable at each depth: all three arcs within the prefix
    std::vector<std::vector<const Crossing*>> check_at(n);
    // forced value sources: crossing where the two other arcs come earlier
    struct Force {
        const Crossing* cr;
        int role; // 0 = under_in, 1 = over, 2 = under_out (the arc's role)
    };
    std::vector<std::vector<Force>> forcers(n);
    for (auto& cr : d.crossings) {
        int pi = pos[cr.under_in_arc], po = pos[cr.over_arc], pk = pos[cr.under_out_arc];
        int last = std::max({pi, po, pk});
        check_at[last].push_back(&cr);
        int arc = order[last];
        if (arc == cr.under_out_arc && pi < pk && po < pk) forcers[last].push_back({&cr, 2});
        else if (arc == cr.under_in_arc && po < pi && pk < pi) forcers[last].push_back({&cr, 0});
    }
    std::vector<Coloring> out;
    Coloring col(n, -1);
    std::vector<int> chosen(n, -1);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == n) {
            out.push_back(col);
            return;
        }
        int arc = order[depth];
        int forced = -1;
        bool dead = false;
        for (auto& f : forcers[depth]) {
            int v;
            if (f.role == 2) {
                v = f.cr->sign > 0 ? q.op[col[f.cr->under_in_arc]][col[f.cr->over_arc]]
                                   : q.inv_op[col[f.cr->under_in_arc]][col[f.cr->over_arc]];
            } else { // role 0: under_in from under_out and over
                v = f.cr->sign > 0 ? q.inv_op[col[f.cr->under_out_arc]][col[f.cr->over_arc]]
                                   : q.op[col[f.cr->under_out_arc]][col[f.cr->over_arc]];
            }
            if (forced == -1) forced = v;
            else if (forced != v) dead = true;
        }
        if (dead) return;
        int lo = forced == -1 ? 0 : forced;
        int hi = forced == -1 ? q.n - 1 : forced;
        for (int v = lo; v <= hi; ++v) {
            col[arc] = v;
            bool ok = true;
            for (const Crossing* cr : check_at[depth]) {
                int expect = cr->sign > 0 ? q.op[col[cr->under_in_arc]][col[cr->over_arc]]
                                          : q.inv_op[col[cr->under_in_arc]][col[cr->over_arc]];
                if (col[cr->under_out_arc] != expect) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(depth + 1);
        }
        col[arc] = -1;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

GammaCheckReport gamma_check(const LinkDiagram& d, const AssocGroup& g, const Coloring& c) {
    GammaCheckReport rep;
    const QuandleTable& q = g.quandle();
    if (!coloring_is_valid(d, q, c)) return {false, "coloring does not satisfy crossings"};
    auto color_word = [&](const Word& arcs) {
        Word w;
        for (int s : arcs) {
            int arc = std::abs(s) - 1;
            w.push_back(s > 0 ? c[arc] + 1 : -(c[arc] + 1));
        }
        return w;
    };
    WirtingerData wd = wirtinger(d);
    for (auto& r : wd.pres.relators)
        if (!(g.eval(color_word(r)) == g.identity_element()))
            return {false, "Wirtinger relator not sent to identity"};
    for (int comp = 0; comp < d.num_components; ++comp) {
        int x = c[d.base_arc[comp]];
        auto m = g.eval(color_word(wd.meridians[comp]));
        if (!(m == g.gen_element(x))) return {false, "Gamma(m_i) != e_{x_i}"};
        auto l = g.eval(color_word(wd.longitudes[comp]));
        // x_i . Gamma(l_i) = x_i  via the quandle action
        int y = x;
        for (int s : wd.longitudes[comp]) {
            int col = c[std::abs(s) - 1];
            y = q.act(y, col, s);
        }
        if (y != x) return {false, "longitude does not stabilize its color"};
        // and Gamma(l_i) commutes with e_{x_i}
        if (!(g.mul(l, g.gen_element(x)) == g.mul(g.gen_element(x), l)))
            return {false, "Gamma(l_i) does not commute with the meridian image"};
    }
    return rep;
}

Chain state_sum_chain(const LinkDiagram& d, const Coloring& c) {
    Chain z;
    z.degree = 2;
    for (auto& cr : d.crossings) {
        if (cr.sign > 0) z.add({c[cr.under_in_arc], c[cr.over_arc]}, 1);
        else z.add({c[cr.under_out_arc], c[cr.over_arc]}, -1);
    }
    return z;
}

std::vector<std::int64_t> state_sum_class(const LinkDiagram& d, const Coloring& c,
                                          const RackHomology& h2) {
    return h2.class_of(state_sum_chain(d, c));
}

std::map<std::int64_t, long> cocycle_invariant(const LinkDiagram& d, const QuandleTable& q,
                                               const CocycleTable& phi) {
    if (!is_quandle_two_cocycle(q, phi))
        throw InputError("cocycle_invariant: phi is not a quandle 2-cocycle");
    std::map<std::int64_t, long> multiset;
    for (auto& c : enumerate_colorings(d, q)) {
        std::int64_t acc = 0;
        for (auto& cr : d.crossings) {
            if (cr.sign > 0) acc += phi.at(c[cr.under_in_arc], c[cr.over_arc]);
            else acc -= phi.at(c[cr.under_out_arc], c[cr.over_arc]);
        }
        acc = ((acc % phi.modulus) + phi.modulus) % phi.modulus;
        ++multiset[acc];
    }
    return multiset;
}

ColoringPolynomial coloring_polynomial(const LinkDiagram& d, const QuandleTable& q,
                                       const EisermannH2& h2) {
    ColoringPolynomial out;
    WirtingerData wd = wirtinger(d);
    auto od = orbits(q);
    int norb = int(od.representatives.size());
    for (auto& c : enumerate_colorings(d, q)) {
        // per-orbit accumulated coordinates
        std::vector<std::vector<std::int64_t>> acc(norb);
        for (int i = 0; i < norb; ++i) acc[i] = h2.orbit_group(i).zero_coords();
        for (int comp = 0; comp < d.num_components; ++comp) {
            int xj = c[d.base_arc[comp]];
            int orbit = h2.orbit_index_of(xj);
            // color word of the longitude
            Word w;
            for (int s : wd.longitudes[comp]) {
                int colr = c[std::abs(s) - 1];
                w.push_back(s > 0 ? colr + 1 : -(colr + 1));
            }
            // Ker(eps_j) membership: the orbit-graded exponent sum must vanish
            long eps_j = 0;
            for (int s : w) {
                int x = std::abs(s) - 1;
                if (od.orbit_id[x] == orbit) eps_j += s > 0 ? 1 : -1;
            }
            if (eps_j != 0)
                throw InputError(
                    "coloring_polynomial: longitude image lies outside Ker(eps_j) "
                    "(multi-component framing ambiguity); refusing");
            // conjugate into the stabilizer of the orbit representative
            const Word& g = h2.conjugator(xj);
            Word conj = concat(concat(g, w), inverse_word(g));
            auto coords = h2.class_coords(orbit, conj);
            acc[orbit] = h2.orbit_group(orbit).add_coords(acc[orbit], coords);
        }
        std::vector<std::int64_t> total;
        std::int64_t order = 1;
        for (int i = 0; i < norb; ++i) {
            total.insert(total.end(), acc[i].begin(), acc[i].end());
            order = std::lcm(order, h2.orbit_group(i).element_order(acc[i]));
        }
        ++out.classes[total];
        ++out.orders[order];
    }
    return out;
}

} // namespace ql
