#include "quandlelab/linkdiagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include "quandlelab/errors.hpp"

namespace ql {

namespace {

struct EdgeEnd {
    int crossing;
    int slot;
};

} // namespace

LinkDiagram parse_pd(const std::vector<std::array<long, 4>>& pd) {
    if (pd.empty()) throw InputError("parse_pd: empty PD code");
    LinkDiagram d;
    // collect labels, assign edge ids by ascending label
    std::map<long, int> label_count;
    for (auto& t : pd)
        for (long e : t) ++label_count[e];
    for (auto& [label, count] : label_count) {
        if (count != 2)
            throw InputError("parse_pd: edge label " + std::to_string(label) +
                             " appears " + std::to_string(count) + " times (need exactly 2)");
        d.edge_labels.push_back(label);
    }
    d.num_edges = int(d.edge_labels.size());
    auto edge_id = [&](long label) {
        return int(std::lower_bound(d.edge_labels.begin(), d.edge_labels.end(), label) -
                   d.edge_labels.begin());
    };
    d.crossings.resize(pd.size());
    std::vector<std::vector<EdgeEnd>> ends(d.num_edges);
    for (size_t c = 0; c < pd.size(); ++c) {
        for (int s = 0; s < 4; ++s) {
            int e = edge_id(pd[c][s]);
            d.crossings[c].edges[s] = e;
            ends[e].push_back({int(c), s});
        }
    }

    // Orientation:每 edge has exactly one head end (pointing into its
    // crossing) and one tail end. Under slots are forced; over slots are
    // resolved by propagation.
    // head[e] in {-1 unknown, 0, 1} indexing ends[e]
    std::vector<int> head(d.num_edges, -1);
    auto set_head = [&](int e, int end_idx) {
        if (head[e] == -1) {
            head[e] = end_idx;
            return true;
        }
        if (head[e] != end_idx) throw InputError("parse_pd: inconsistent orientation");
        return false;
    };
    auto end_index = [&](int e, int crossing, int slot) {
        for (int i = 0; i < 2; ++i)
            if (ends[e][i].crossing == crossing && ends[e][i].slot == slot) return i;
        throw ConsistencyError("edge end lookup failed");
    };
    // seed with under-strand directions
    for (size_t c = 0; c < pd.size(); ++c) {
        int e_in = d.crossings[c].edges[0];
        int e_out = d.crossings[c].edges[2];
        set_head(e_in, end_index(e_in, int(c), 0));
        // tail at slot 2: head is the other end
        int out_end = end_index(e_out, int(c), 2);
        set_head(e_out, 1 - out_end);
    }
    // propagate over-strand orientations: at each crossing exactly one of
    // slots 1, 3 is a head end
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t c = 0; c < pd.size(); ++c) {
            int e1 = d.crossings[c].edges[1], e3 = d.crossings[c].edges[3];
            int i1 = end_index(e1, int(c), 1), i3 = end_index(e3, int(c), 3);
            // known status of "is head here"
            auto known = [&](int e, int i) { return head[e] != -1; };
            auto is_head_here = [&](int e, int i) { return head[e] == i; };
            if (known(e1, i1) && !known(e3, i3)) {
                // e3's end here is the opposite role
                progress |= set_head(e3, is_head_here(e1, i1) ? 1 - i3 : i3);
            } else if (!known(e1, i1) && known(e3, i3)) {
                progress |= set_head(e1, is_head_here(e3, i3) ? 1 - i1 : i1);
            } else if (known(e1, i1) && known(e3, i3)) {
                if (is_head_here(e1, i1) == is_head_here(e3, i3))
                    throw InputError("parse_pd: over-strand orientation conflict");
            }
        }
    }
    for (int e = 0; e < d.num_edges; ++e)
        if (head[e] == -1)
            throw InputError("parse_pd: cannot orient diagram (a component never passes under)");

    // signs: over-strand entering at slot 3 -> positive
    for (size_t c = 0; c < pd.size(); ++c) {
        int e3 = d.crossings[c].edges[3];
        int i3 = end_index(e3, int(c), 3);
        d.crossings[c].sign = (head[e3] == i3) ? +1 : -1;
    }

    // successor along the strand: from edge e's head end, continue
    std::vector<int> succ(d.num_edges, -1);
    for (int e = 0; e < d.num_edges; ++e) {
        auto [c, slot] = ends[e][head[e]];
        int next_edge;
        if (slot == 0) next_edge = d.crossings[c].edges[2];
        else if (slot == 1) next_edge = d.crossings[c].edges[3];
        else if (slot == 3) next_edge = d.crossings[c].edges[1];
        else throw InputError("parse_pd: under-out edge oriented into the crossing");
        succ[e] = next_edge;
    }
    // components = cycles of succ
    d.component_of_edge.assign(d.num_edges, -1);
    for (int e = 0; e < d.num_edges; ++e) {
        if (d.component_of_edge[e] != -1) continue;
        int comp = d.num_components++;
        std::vector<int> cycle;
        int cur = e;
        while (d.component_of_edge[cur] == -1) {
            d.component_of_edge[cur] = comp;
            cycle.push_back(cur);
            cur = succ[cur];
        }
        if (cur != e) throw InputError("parse_pd: edge successor is not a permutation");
        d.component_cycle.push_back(std::move(cycle));
    }

    // arcs: edges glued across over-passages
    std::vector<int> arc_parent(d.num_edges);
    std::iota(arc_parent.begin(), arc_parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (arc_parent[x] != x) x = arc_parent[x] = arc_parent[arc_parent[x]];
        return x;
    };
    for (auto& cr : d.crossings) {
        int a = find(cr.edges[1]), b = find(cr.edges[3]);
        if (a != b) arc_parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, int> arc_ids; // root -> arc id, by smallest edge
    for (int e = 0; e < d.num_edges; ++e) {
        int r = find(e);
        if (!arc_ids.count(r)) arc_ids[r] = int(arc_ids.size());
    }
    d.num_arcs = int(arc_ids.size());
    d.arc_of_edge.resize(d.num_edges);
    for (int e = 0; e < d.num_edges; ++e) d.arc_of_edge[e] = arc_ids.at(find(e));
    d.component_of_arc.assign(d.num_arcs, -1);
    for (int e = 0; e < d.num_edges; ++e)
        d.component_of_arc[d.arc_of_edge[e]] = d.component_of_edge[e];

    for (auto& cr : d.crossings) {
        cr.under_in_arc = d.arc_of_edge[cr.edges[0]];
        cr.under_out_arc = d.arc_of_edge[cr.edges[2]];
        cr.over_arc = d.arc_of_edge[cr.edges[1]];
        if (d.arc_of_edge[cr.edges[3]] != cr.over_arc)
            throw ConsistencyError("over edges of one crossing in different arcs");
    }

    // base arc per component: arc containing the smallest edge label
    d.base_arc.assign(d.num_components, -1);
    for (int e = 0; e < d.num_edges; ++e) {
        int comp = d.component_of_edge[e];
        if (d.base_arc[comp] == -1) d.base_arc[comp] = d.arc_of_edge[e];
    }
    // writhes
    d.self_writhe.assign(d.num_components, 0);
    for (auto& cr : d.crossings) {
        d.writhe += cr.sign;
        int cu = d.component_of_arc[cr.under_in_arc];
        int co = d.component_of_arc[cr.over_arc];
        if (cu == co) d.self_writhe[cu] += cr.sign;
    }
    return d;
}

LinkDiagram parse_pd_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::array<long, 4>> pd;
    for (auto& t : j.at("pd")) {
        if (t.size() != 4) throw InputError("PD tuple must have 4 entries");
        pd.push_back({t.at(0).get<long>(), t.at(1).get<long>(), t.at(2).get<long>(),
                      t.at(3).get<long>()});
    }
    return parse_pd(pd);
}

std::string pd_to_json(const LinkDiagram& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& cr : d.crossings)
        arr.push_back({d.edge_labels[cr.edges[0]], d.edge_labels[cr.edges[1]],
                       d.edge_labels[cr.edges[2]], d.edge_labels[cr.edges[3]]});
    nlohmann::json j;
    j["pd"] = std::move(arr);
    return j.dump();
}

std::vector<std::array<long, 4>> mirror_pd(const LinkDiagram& d) {
    // Switch every crossing: the over strand becomes the under strand.
    // Rotate each tuple so that slot 0 is the incoming over-edge.
    std::vector<std::array<long, 4>> out;
    for (auto& cr : d.crossings) {
        auto lab = [&](int s) { return d.edge_labels[cr.edges[s]]; };
        if (cr.sign > 0) out.push_back({lab(3), lab(0), lab(1), lab(2)});
        else out.push_back({lab(1), lab(2), lab(3), lab(0)});
    }
    return out;
}

WirtingerData wirtinger(const LinkDiagram& d) {
    WirtingerData w;
    w.pres.num_generators = d.num_arcs;
    for (auto& cr : d.crossings) {
        int i = cr.under_in_arc + 1, j = cr.over_arc + 1, k = cr.under_out_arc + 1;
        if (cr.sign > 0) w.pres.add_relator({-k, -j, i, j});
        else w.pres.add_relator({-k, j, i, -j});
    }
    for (int comp = 0; comp < d.num_components; ++comp) {
        int base = d.base_arc[comp];
        w.meridians.push_back({base + 1});
        // rotate the component cycle to start at the base arc's smallest edge
        const auto& cyc = d.component_cycle[comp];
        size_t start = 0;
        for (size_t i = 0; i < cyc.size(); ++i)
            if (d.arc_of_edge[cyc[i]] == base) {
                start = i;
                break;
            }
        Word l;
        // at each under-passage append the over arc generator with the sign
        std::map<std::pair<int, int>, const Crossing*> under_in_at; // (edge)->crossing
        for (auto& cr : d.crossings) under_in_at[{cr.edges[0], 0}] = &cr;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int e = cyc[(start + i) % cyc.size()];
            auto it = under_in_at.find({e, 0});
            if (it != under_in_at.end()) {
                const Crossing* cr = it->second;
                l.push_back(cr->sign > 0 ? cr->over_arc + 1 : -(cr->over_arc + 1));
            }
        }
        for (int i = 0; i < std::abs(d.self_writhe[comp]); ++i)
            l.push_back(d.self_writhe[comp] > 0 ? -(base + 1) : base + 1);
        w.longitudes.push_back(free_reduce(l));
    }
    return w;
}

} // namespace ql
