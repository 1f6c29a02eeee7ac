#include "quandlelab/assoc.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quandlelab/errors.hpp"
#include "quandlelab/snf.hpp"

namespace ql {

Presentation as_presentation(const QuandleTable& q) {
    Presentation p;
    p.num_generators = q.n;
    for (int x = 0; x < q.n; ++x)
        for (int y = 0; y < q.n; ++y) {
            int z = q.op[x][y];
            p.add_relator({-(z + 1), -(y + 1), x + 1, y + 1});
        }
    return p;
}

AssocGroup AssocGroup::build(const QuandleTable& q, long max_cosets) {
    auto od = orbits(q);
    if (!od.connected)
        throw InputError("ker_eps_group: quandle is not connected");
    AssocGroup g;
    g.q_ = q;
    g.base_ = od.representatives[0];
    g.ct_ = coset_enumerate(as_presentation(q), {Word{g.base_ + 1}}, max_cosets);
    g.word_eps_.resize(g.ct_.num_cosets);
    g.orbit_image_.resize(g.ct_.num_cosets);
    for (int c = 0; c < g.ct_.num_cosets; ++c) {
        long eps = 0;
        int x = g.base_;
        for (int s : g.ct_.schreier_words[c]) {
            eps += s > 0 ? 1 : -1;
            x = q.act(x, std::abs(s) - 1, s);
        }
        g.word_eps_[c] = eps;
        g.orbit_image_[c] = x;
    }
    return g;
}

int AssocGroup::mul(int a, int b) const {
    // a * b = coset of (element a) * e_base^{-eps_b} w_b
    long eb = word_eps_[b];
    int c = a;
    for (long i = 0; i < std::abs(eb); ++i) c = ct_.step(c, eb > 0 ? -(base_ + 1) : base_ + 1);
    return ct_.trace(c, ct_.schreier_words[b]);
}

Word AssocGroup::element_word(int c) const {
    Word w;
    long e = word_eps_[c];
    for (long i = 0; i < std::abs(e); ++i) w.push_back(e > 0 ? -(base_ + 1) : base_ + 1);
    return concat(w, ct_.schreier_words[c]);
}

int AssocGroup::inverse(int a) const {
    Word inv = inverse_word(element_word(a));
    return ct_.trace(0, inv);
}

long AssocGroup::element_order(int a) const {
    long ord = 1;
    int c = a;
    while (c != 0) {
        c = mul(c, a);
        ++ord;
        if (ord > ct_.num_cosets) throw ConsistencyError("element order exceeds group size");
    }
    return ord;
}

AssocGroup::Element AssocGroup::identity_element() const {
    return {perm_identity(ct_.num_cosets), 0};
}

AssocGroup::Element AssocGroup::gen_element(int x) const {
    return {ct_.generator_perm(x), 1};
}

AssocGroup::Element AssocGroup::eval(const Word& w) const {
    Element e = identity_element();
    for (int s : w) {
        int g = std::abs(s) - 1;
        if (g >= q_.n) throw InputError("AssocGroup::eval: generator out of range");
        const auto& col = s > 0 ? ct_.act[g] : ct_.act_inv[g];
        for (int& v : e.perm) v = col[v];
        e.eps += s > 0 ? 1 : -1;
    }
    return e;
}

AssocGroup::Element AssocGroup::mul(const Element& a, const Element& b) const {
    return {perm_mul(a.perm, b.perm), a.eps + b.eps};
}

AssocGroup::Element AssocGroup::inv(const Element& a) const {
    return {perm_inverse(a.perm), -a.eps};
}

int AssocGroup::coset_of(const Element& e) const {
    if (e.eps != 0) throw InputError("coset_of: element not in Ker(eps)");
    return e.perm[0];
}

void AssocGroup::check_regular_freeness() const {
    for (int c = 1; c < ct_.num_cosets; ++c) {
        Element e = eval(element_word(c));
        if (e.eps != 0) throw ConsistencyError("Ker-eps element with nonzero eps");
        if (e.perm[0] != c) throw ConsistencyError("regular action misaligned");
        for (int d = 0; d < ct_.num_cosets; ++d)
            if (e.perm[d] == d) throw ConsistencyError("regular action has a fixed point");
    }
}

ExtendedQuandle extended_quandle(const AssocGroup& g) {
    const auto& ct = g.cosets();
    int n = ct.num_cosets;
    std::vector<std::vector<int>> op(n, std::vector<int>(n));
    for (int c = 0; c < n; ++c) {
        int x = g.orbit_image(c); // p(c)
        for (int b = 0; b < n; ++b) op[b][c] = ct.act[x][b];
    }
    ExtendedQuandle ext;
    std::vector<std::string> labels(n);
    for (int c = 0; c < n; ++c) labels[c] = "k" + std::to_string(c);
    ext.table = QuandleTable::from_op(std::move(op), std::move(labels));
    ext.covering.resize(n);
    for (int c = 0; c < n; ++c) ext.covering[c] = g.orbit_image(c);
    return ext;
}

// ---- Reidemeister-Schreier stabilizer presentation ------------------------

StabilizerPresentation::StabilizerPresentation(const QuandleTable& q, int x0)
    : q_(q), x0_(x0) {
    if (x0 < 0 || x0 >= q.n) throw InputError("stabilizer: base out of range");
    // orbit BFS over signed quandle action, building the Schreier tree
    transversal_.assign(q.n, {});
    in_orbit_.assign(q.n, 0);
    std::vector<std::vector<int>> tree(q.n, std::vector<int>(q.n, 0)); // (z,y) tree edge flag
    in_orbit_[x0] = 1;
    std::vector<int> order{x0};
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int z = order[qi];
        for (int y = 0; y < q.n; ++y)
            for (int s : {+1, -1}) {
                int z2 = q.act(z, y, s);
                if (!in_orbit_[z2]) {
                    in_orbit_[z2] = 1;
                    Word w = transversal_[z];
                    w.push_back(s > 0 ? y + 1 : -(y + 1));
                    transversal_[z2] = std::move(w);
                    order.push_back(z2);
                    // the tree edge is z --e_y--> z◁y (resp. from z2 when s < 0)
                    if (s > 0) tree[z][y] = 1;
                    else tree[z2][y] = 1;
                }
            }
    }
    // number non-tree Schreier generators densely, z-major
    sgen_.assign(q.n, std::vector<int>(q.n, 0));
    int next = 1;
    for (int z : order) {
        std::ignore = z;
    }
    std::vector<int> sorted_orbit = order;
    std::sort(sorted_orbit.begin(), sorted_orbit.end());
    for (int z : sorted_orbit)
        for (int y = 0; y < q.n; ++y)
            if (!tree[z][y]) sgen_[z][y] = next++;
    pres_.num_generators = next - 1;
    // rewritten relators of As(X), one per (relator, orbit element)
    Presentation as_p = as_presentation(q_);
    for (auto& r : as_p.relators)
        for (int z : sorted_orbit) {
            Word out;
            int cur = z;
            for (int s : r) {
                int y = std::abs(s) - 1;
                if (s > 0) {
                    if (int idx = sgen_[cur][y]) out.push_back(idx);
                    cur = q.op[cur][y];
                } else {
                    int prev = q.inv_op[cur][y];
                    if (int idx = sgen_[prev][y]) out.push_back(-idx);
                    cur = prev;
                }
            }
            if (cur != z) throw ConsistencyError("relator does not act trivially");
            pres_.add_relator(out);
        }
}

Word StabilizerPresentation::rewrite(const Word& w) const {
    Word out;
    int cur = x0_;
    for (int s : w) {
        int y = std::abs(s) - 1;
        if (y < 0 || y >= q_.n) throw InputError("rewrite: letter out of range");
        if (s > 0) {
            if (int idx = sgen_[cur][y]) out.push_back(idx);
            cur = q_.op[cur][y];
        } else {
            int prev = q_.inv_op[cur][y];
            if (int idx = sgen_[prev][y]) out.push_back(-idx);
            cur = prev;
        }
    }
    if (cur != x0_) throw InputError("rewrite: word does not stabilize the base point");
    return free_reduce(out);
}

// ---- Eisermann H2 ----------------------------------------------------------

namespace {
Presentation with_extra_relator(Presentation p, const Word& w) {
    p.add_relator(w);
    return p;
}
} // namespace

EisermannH2::EisermannH2(const QuandleTable& q) {
    od_ = orbits(q);
    const auto& od = od_;
    for (int rep : od.representatives) {
        StabilizerPresentation stab(q, rep);
        // kill the class of e_rep: Stab(x_i)_ab / <[e_{x_i}]>
        Presentation pres = with_extra_relator(stab.presentation(), stab.rewrite({rep + 1}));
        AbelianizedGroup ab(pres);
        AbGroup grp = ab.group();
        parts_.push_back(Part{rep, std::move(stab), std::move(ab), grp});
    }
    total_ = AbGroup::trivial();
    for (auto& part : parts_) total_ = total_.direct_sum(part.group);
}

std::vector<std::int64_t> EisermannH2::class_coords(int orbit, const Word& w) const {
    const Part& p = parts_.at(orbit);
    return p.ab.coords_of(p.stab.rewrite(w));
}

std::int64_t EisermannH2::class_order(int orbit, const std::vector<std::int64_t>& coords) const {
    return parts_.at(orbit).group.element_order(coords);
}

const Word& EisermannH2::conjugator(int x) const {
    return parts_.at(od_.orbit_id.at(x)).stab.transversal_word(x);
}

size_t EisermannH2::coord_len(int orbit) const {
    const AbGroup& g = parts_.at(orbit).group;
    return size_t(g.rank()) + g.torsion().size();
}

// ---- Clauwens --------------------------------------------------------------

ClauwensResult clauwensresult_impl(const AlexanderData& a) {
    size_t r = a.moduli.size();
    // X ⊗_Z X: generators g_{ij} with gcd(m_i, m_j) g_{ij} = 0
    auto gid = [&](size_t i, size_t j) { return long(i * r + j); };
    long ngen = long(r * r);
    std::vector<std::tuple<long, long, std::int64_t>> trips;
    long col = 0;
    // relations ofic the ambient tensor group
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            trips.push_back({gid(i, j), col, std::gcd(a.moduli[i], a.moduli[j])});
            ++col;
        }
    // image of mu: columns mu(e_i ⊗ e_j) = g_{ij} - sum_k T[k][j] g_{ki}
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            trips.push_back({gid(i, j), col, 1});
            for (size_t k = 0; k < r; ++k) {
                long coeff = a.tmat[k][j];
                if (coeff != 0) trips.push_back({gid(k, i), col, -coeff});
            }
            ++col;
        }
    IntMatrix rel = IntMatrix::from_triplets(ngen, col, trips);
    auto s = smith_normal_form(rel);
    AbGroup coker = s.quotient_group(ngen);
    if (coker.rank() != 0) throw ConsistencyError("Coker(mu) of a finite module is finite");
    std::int64_t msize = 1;
    for (long m : a.moduli) msize *= m;
    return {coker, msize * coker.order()};
}

ClauwensResult clauwens_model(const QuandleTable& q) {
    if (!q.alexander)
        throw InputError("clauwens_model: quandle was not built as an Alexander quandle");
    if (!alexander_is_connected(*q.alexander))
        throw InputError("clauwens_model: quandle is not connected ((1-T)X != X)");
    return clauwensresult_impl(*q.alexander);
}

// ---- finite abelian invariants ---------------------------------------------

std::vector<std::int64_t> abelian_invariants(int size, const std::function<int(int, int)>& mul) {
    // Peel cyclic summands of maximal order; element 0 is the identity.
    std::vector<int> elems(size);
    std::iota(elems.begin(), elems.end(), 0);
    // current group: elements as representative ids with induced product
    std::vector<std::int64_t> factors;
    std::vector<int> cur = elems;
    std::function<int(int, int)> curmul = mul;
    while (cur.size() > 1) {
        // orders
        std::map<int, long> order;
        auto ord_of = [&](int g) {
            long o = 1;
            int c = g;
            while (c != cur[0]) {
                c = curmul(c, g);
                ++o;
            }
            return o;
        };
        long best = 1;
        int gen = cur[0];
        for (int g : cur) {
            long o = ord_of(g);
            order[g] = o;
            if (o > best) {
                best = o;
                gen = g;
            }
        }
        factors.push_back(best);
        // quotient by <gen>: merge cosets, keep min ids as reps
        std::map<int, int> rep;
        for (int g : cur) rep[g] = g;
        for (int g : cur) {
            int c = g;
            int m = g;
            std::vector<int> coset{g};
            for (long i = 1; i < best; ++i) {
                c = curmul(c, gen);
                coset.push_back(c);
                m = std::min(m, c);
            }
            for (int e : coset) rep[e] = std::min(rep[e], m);
        }
        // stabilize representative map
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [k, v] : rep)
                if (rep[v] != v) {
                    rep[k] = rep[v];
                    changed = true;
                }
        }
        std::vector<int> next;
        for (auto& [k, v] : rep)
            if (k == v) next.push_back(k);
        std::sort(next.begin(), next.end());
        auto prev_mul = curmul;
        auto rep_copy = rep;
        curmul = [prev_mul, rep_copy](int x, int y) {
            return rep_copy.at(prev_mul(x, y));
        };
        // identity stays minimal (0-coset contains old identity)
        cur = next;
        if (factors.size() > 64) throw ConsistencyError("abelian_invariants runaway");
    }
    std::erase(factors, 1);
    return invariant_factors(factors);
}

KernelPstar kernel_pstar(const AssocGroup& gx, const AssocGroup& gxt,
                         const std::vector<int>& covering) {
    KernelPstar out;
    for (int c = 0; c < gxt.kernel_size(); ++c) {
        Word wt = gxt.element_word(c);
        Word wx;
        for (int s : wt) {
            int xt = std::abs(s) - 1;
            int x = covering.at(xt);
            wx.push_back(s > 0 ? x + 1 : -(x + 1));
        }
        auto e = gx.eval(wx);
        if (e == gx.identity_element()) out.elements.push_back(c);
    }
    std::map<int, int> idx;
    for (size_t i = 0; i < out.elements.size(); ++i) idx[out.elements[i]] = int(i);
    auto mul = [&](int a, int b) {
        return idx.at(gxt.mul(out.elements[a], out.elements[b]));
    };
    out.group = AbGroup(0, abelian_invariants(int(out.elements.size()), mul));
    return out;
}

} // namespace ql
