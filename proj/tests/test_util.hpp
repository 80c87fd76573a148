#ifndef FORESTCOL_TEST_UTIL_HPP
#define FORESTCOL_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "forestcol/graph.hpp"

namespace forestcol::testutil {

/// Random weighted multigraph: n vertices, up to max_edge_slots sampled
/// pairs with multiplicity in {1,2}, weights within capacity bounds.
inline WeightedMultigraph random_graph(Params params, int n, int max_edge_slots,
                                       std::mt19937_64& rng) {
    std::vector<VertexSpec> verts;
    std::uniform_int_distribution<int> w1_dist(0, params.d1() + 1);
    std::uniform_int_distribution<int> w2_dist(0, params.d2() + 1);
    for (int i = 0; i < n; ++i) verts.push_back({i, w1_dist(rng), w2_dist(rng)});

    std::vector<EdgeRec> edges;
    if (n >= 2 && max_edge_slots > 0) {
        std::uniform_int_distribution<int> v_dist(0, n - 1);
        std::uniform_int_distribution<int> m_dist(1, 2);
        std::uniform_int_distribution<int> count_dist(0, max_edge_slots);
        int count = count_dist(rng);
        for (int k = 0; k < count; ++k) {
            int a = v_dist(rng), b = v_dist(rng);
            if (a == b) continue;
            edges.push_back({std::min(a, b), std::max(a, b), m_dist(rng)});
        }
    }
    return WeightedMultigraph(params, std::move(verts), std::move(edges));
}

inline std::vector<VertexId> random_subset(const std::vector<VertexId>& ids,
                                           std::mt19937_64& rng) {
    std::vector<VertexId> out;
    for (VertexId id : ids)
        if (rng() & 1) out.push_back(id);
    return out;
}

}  // namespace forestcol::testutil

#endif
