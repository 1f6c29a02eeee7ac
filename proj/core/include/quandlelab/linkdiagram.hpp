#pragma once

#include <array>
#include <string>
#include <vector>

#include "quandlelab/presentation.hpp"

namespace ql {

// A crossing from a PD 4-tuple (a,b,c,d): edges listed counterclockwise
// starting from the incoming under-edge, so slot 0 = under-in and
// slot 2 = under-out; slots 1 and 3 carry the over-strand. The sign is
// +1 when the over-strand enters at slot 3, -1 when it enters at slot 1.
struct Crossing {
    std::array<int, 4> edges{}; // internal edge ids
    int sign = 0;
    int under_in_arc = -1, under_out_arc = -1, over_arc = -1;
};

struct LinkDiagram {
    int num_edges = 0;
    std::vector<long> edge_labels; // original PD labels, ascending by id
    std::vector<Crossing> crossings;

    int num_arcs = 0;
    std::vector<int> arc_of_edge;
    int num_components = 0;
    std::vector<int> component_of_edge;
    std::vector<int> component_of_arc;
    std::vector<std::vector<int>> component_cycle; // edges in orientation order
    std::vector<int> base_arc;                     // per component
    std::vector<int> self_writhe;                  // per component
    int writhe = 0;
};

// Parses and orients a PD code. Throws InputError on malformed input
// (an edge label not appearing exactly twice, an unorientable diagram).
LinkDiagram parse_pd(const std::vector<std::array<long, 4>>& pd);
// {"pd": [[a,b,c,d], ...]}
LinkDiagram parse_pd_json(const std::string& text);
std::string pd_to_json(const LinkDiagram& d);

// The same diagram with every crossing switched (mirror image).
std::vector<std::array<long, 4>> mirror_pd(const LinkDiagram& d);

struct WirtingerData {
    Presentation pres;            // one generator per arc, 1-based
    std::vector<Word> meridians;  // per component: the base arc generator
    std::vector<Word> longitudes; // preferred (0-framed) longitudes
};

WirtingerData wirtinger(const LinkDiagram& d);

} // namespace ql
