#ifndef FORESTCOL_CONSTRUCTIONS_HPP
#define FORESTCOL_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "forestcol/graph.hpp"

namespace forestcol {

/// One vertex with zero capacity in both colors; the smallest critical
/// graph and the seed of every sharp family.
WeightedMultigraph zero_capacity_seed(Params params);

/// Decrements W1(v) and appends a leaf v' with W1(v') = 0, c2(v') = 0.
/// Requires W1(v) > 0. Preserves the potential exactly.
WeightedMultigraph attach_pendant_host(const WeightedMultigraph& g, VertexId v);

struct FlagPart {
    WeightedMultigraph graph;
    VertexId host;  // must satisfy W2(host) > 0
};

/// Disjoint union of the parts plus a fresh unweighted star K_{1,d1+1}
/// (vertices u_1..u_{d1+2}, the last one being the center), an edge from
/// each u_j to the host picked by assignment[j-1] (a part index), and one
/// W2 decrement per part. Every part must be picked at least once and
/// there are at most d1+2 parts.
WeightedMultigraph attach_flag(const std::vector<FlagPart>& parts,
                               const std::vector<int>& assignment);

/// Requires c_i(u) = 0: resets W_i(u) to zero and appends a leaf u' with
/// c_i(u') = 1, c_{3-i}(u') = 0.
WeightedMultigraph attach_null_leaf(const WeightedMultigraph& g, VertexId u, int color);

/// Adds the 2(d2+1)-vertex double-pennon at u: x*, x_1..x_{d2} with edges
/// x*x_i, ux_i, x*u, then y*, y_1..y_{d2} with edges y*y_i, x*y_i, y*x*.
/// Requires d2 > d1.
WeightedMultigraph attach_double_pennon(const WeightedMultigraph& g, VertexId u);

/// The x-layer ids (x*, x_1..x_{d2}) the most recent attach_double_pennon
/// created for a graph whose fresh_id() was `first_new` at the time.
std::vector<VertexId> pennon_x_layer(const Params& params, VertexId first_new);

// Weightless corpus generators.
WeightedMultigraph cycle(Params params, int n);
WeightedMultigraph path(Params params, int n);
WeightedMultigraph star(Params params, int leaves);
WeightedMultigraph dodecahedron(Params params);
/// rows x cols grid with every edge subdivided `sub` times; girth of the
/// grid cells becomes 4 * (sub + 1).
WeightedMultigraph grid_subdivided(Params params, int rows, int cols, int sub);
/// Rejection-samples a weightless graph that passes
/// check_strict_sparsity(a, b). Throws after the attempt budget.
WeightedMultigraph random_sparse(Params params, int n, std::uint64_t seed, const Rational& a,
                                 const Rational& b);

}  // namespace forestcol

#endif
