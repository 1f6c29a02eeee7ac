#include "quandlelab/cover.hpp"

#include <algorithm>
#include <set>

#include "quandlelab/errors.hpp"

namespace ql {

CoverPresentation branched_cover_presentation(const LinkDiagram& d, int t, bool branched) {
    if (t < 1) throw InputError("branched cover: fold count must be >= 1");
    CoverPresentation cp;
    cp.fold = t;
    cp.num_arcs = d.num_arcs;
    cp.base_arc = d.base_arc[0];
    cp.branched = branched;
    cp.pres.num_generators = d.num_arcs * t;
    auto mod = [t](int s) { return ((s % t) + t) % t; };
    for (auto& cr : d.crossings) {
        int i = cr.under_in_arc, j = cr.over_arc, k = cr.under_out_arc;
        for (int s = 0; s < t; ++s) {
            if (cr.sign > 0) {
                // gamma_{k,s} = gamma_{j,s-1}^-1 gamma_{i,s-1} gamma_{j,s}
                cp.pres.add_relator({-cp.gen_of(k, s), -cp.gen_of(j, mod(s - 1)),
                                     cp.gen_of(i, mod(s - 1)), cp.gen_of(j, s)});
            } else {
                // gamma_{k,s} = gamma_{j,s} gamma_{i,s+1} gamma_{j,s+1}^-1
                cp.pres.add_relator({-cp.gen_of(k, s), cp.gen_of(j, s),
                                     cp.gen_of(i, mod(s + 1)), -cp.gen_of(j, mod(s + 1))});
            }
        }
    }
    int upto = branched ? t - 1 : t - 2;
    for (int s = 0; s <= upto; ++s) cp.pres.add_relator({cp.gen_of(cp.base_arc, s)});
    return cp;
}

AbGroup cover_h1(const CoverPresentation& cp) { return abelianize_presentation(cp.pres); }

ThetaResult theta(const LinkDiagram& d, const Coloring& c, const AssocGroup& g) {
    if (d.num_components != 1)
        throw InputError("theta: only knots (one component) are accepted");
    const QuandleTable& q = g.quandle();
    if (!coloring_is_valid(d, q, c)) throw InputError("theta: invalid coloring");
    long t = type_of(q);
    if (t > 64) throw CapError("theta: quandle type too large");
    CoverPresentation cp = branched_cover_presentation(d, int(t), true);

    int x0 = c[d.base_arc[0]];
    auto elem_of = [&](int arc, int sheet) {
        Word w;
        for (int i = 0; i < sheet - 1; ++i) w.push_back(x0 + 1);
        for (int i = 0; i < 1 - sheet; ++i) w.push_back(-(x0 + 1)); // e^{s-1} for s = 0
        w.push_back(c[arc] + 1);
        for (int i = 0; i < sheet; ++i) w.push_back(-(x0 + 1));
        return g.eval(w);
    };

    ThetaResult out;
    std::vector<std::vector<AssocGroup::Element>> val(d.num_arcs);
    out.image.assign(d.num_arcs, std::vector<int>(t));
    for (int a = 0; a < d.num_arcs; ++a)
        for (int s = 0; s < t; ++s) {
            auto e = elem_of(a, s);
            if (e.eps != 0)
                throw ConsistencyError("theta: image element has nonzero eps");
            val[a].push_back(e);
            out.image[a][s] = g.coset_of(e);
        }
    // relator verification
    out.well_defined = true;
    auto eval_gen = [&](int signed_gen) {
        int idx = std::abs(signed_gen) - 1;
        int arc = idx / int(t), sheet = idx % int(t);
        return signed_gen > 0 ? val[arc][sheet] : g.inv(val[arc][sheet]);
    };
    for (auto& r : cp.pres.relators) {
        auto e = g.identity_element();
        for (int s : r) e = g.mul(e, eval_gen(s));
        if (!(e == g.identity_element())) {
            out.well_defined = false;
            break;
        }
    }
    // Z-equivariance: value at sheet s+1 = e_{x0} * value(s) * e_{x0}^-1,
    // indices mod t (the wraparound exercises centrality of e_{x0}^t).
    out.equivariant = true;
    auto e0 = g.gen_element(x0);
    for (int a = 0; a < d.num_arcs && out.equivariant; ++a)
        for (int s = 0; s < t; ++s) {
            auto lhs = val[a][(s + 1) % t];
            auto rhs = g.mul(g.mul(e0, val[a][s]), g.inv(e0));
            if (!(lhs == rhs)) {
                out.equivariant = false;
                break;
            }
        }
    // image subgroup closure inside Ker(eps)
    std::set<int> sub{0};
    std::vector<int> queue{0};
    std::vector<int> gens;
    for (int a = 0; a < d.num_arcs; ++a)
        for (int s = 0; s < t; ++s) gens.push_back(out.image[a][s]);
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int h : gens) {
            int p = g.mul(queue[qi], h);
            if (sub.insert(p).second) queue.push_back(p);
        }
    out.image_subgroup.assign(sub.begin(), sub.end());
    out.image_order = long(sub.size());
    // canonical representative of the conjugacy class of the image
    out.image_conj_canonical = out.image_subgroup;
    for (int h = 0; h < g.kernel_size(); ++h) {
        int hinv = g.inverse(h);
        std::vector<int> conj;
        conj.reserve(out.image_subgroup.size());
        for (int s : out.image_subgroup) conj.push_back(g.mul(g.mul(hinv, s), h));
        std::sort(conj.begin(), conj.end());
        if (conj < out.image_conj_canonical) out.image_conj_canonical = std::move(conj);
    }
    return out;
}

} // namespace ql
