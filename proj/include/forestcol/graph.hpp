#ifndef FORESTCOL_GRAPH_HPP
#define FORESTCOL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forestcol/params.hpp"

namespace forestcol {

using VertexId = std::int32_t;

/// Canonical edge record: u < v, multiplicity in {1, 2}.
struct EdgeRec {
    VertexId u{0};
    VertexId v{0};
    int multiplicity{1};

    friend bool operator==(const EdgeRec&, const EdgeRec&) = default;
};

struct VertexSpec {
    VertexId id{0};
    int w1{0};
    int w2{0};
};

/// What ingest normalization changed (clamped weights, clamped or merged
/// multiplicities). Empty notes means the input was already canonical.
struct NormalizationReport {
    int weights_clamped{0};
    int multiplicities_clamped{0};
    std::vector<std::string> notes;

    bool changed() const { return weights_clamped > 0 || multiplicities_clamped > 0; }
};

/// Loopless multigraph with per-vertex weights W1, W2 and fixed Params.
///
/// Immutable after construction; every mutation helper returns a new value
/// and leaves the original intact, so recursive surgeries can keep both.
/// Vertex ids are stable across surgeries, which is what lets a coloring of
/// a recursively-produced graph be pulled back to its parent.
///
/// Invariants held at all times: no loops, multiplicity <= 2, capacities
/// c_j(u) = d_j + 1 - W_j(u) >= 0. Raw input is clamped into shape by the
/// constructor (multiplicity >= 3 becomes 2, oversize weights become
/// d_j + 1); pass a report to observe what changed.
class WeightedMultigraph {
public:
    WeightedMultigraph(Params params, std::vector<VertexSpec> vertices,
                       std::vector<EdgeRec> edges, NormalizationReport* report = nullptr);

    const Params& params() const { return params_; }

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<VertexId>& vertices() const { return ids_; }
    bool has_vertex(VertexId id) const;

    /// e(G): edge count with multiplicity.
    std::int64_t edge_count() const { return edge_units_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }

    int weight(VertexId id, int color) const;
    int capacity(VertexId id, int color) const;

    /// d(u) = |N^m(u)|, multiplicity-counted.
    int degree(VertexId id) const;

    /// Distinct neighbors with multiplicities, sorted by id.
    std::span<const std::pair<VertexId, int>> neighbors(VertexId id) const;
    int multiplicity(VertexId a, VertexId b) const;

    bool connected() const;
    std::vector<std::vector<VertexId>> components() const;

    // Surgeries. All return a new graph; ids are preserved.
    WeightedMultigraph delete_vertex(VertexId id) const;
    WeightedMultigraph induced(std::span<const VertexId> keep) const;
    WeightedMultigraph add_vertex(VertexId id, int w1, int w2) const;
    /// Adds one unit of multiplicity (saturating at 2).
    WeightedMultigraph add_edge(VertexId a, VertexId b) const;
    /// delta in {+1, -1}; throws if the result would leave [0, d_j + 1].
    WeightedMultigraph bump_weight(VertexId id, int color, int delta = 1) const;
    /// Sets W_i := d_i + 1, i.e. forbids color i at u outright.
    WeightedMultigraph set_capacity_zero(VertexId id, int color) const;

    VertexId fresh_id() const { return ids_.empty() ? 0 : ids_.back() + 1; }

    bool operator==(const WeightedMultigraph& other) const {
        return params_ == other.params_ && ids_ == other.ids_ && w1_ == other.w1_ &&
               w2_ == other.w2_ && edges_ == other.edges_;
    }

    int slot_of(VertexId id) const;  // index into vertices(), -1 if absent

private:
    Params params_;
    std::vector<VertexId> ids_;  // sorted ascending
    std::vector<int> w1_;
    std::vector<int> w2_;
    std::vector<EdgeRec> edges_;  // canonical, sorted by (u, v)
    std::int64_t edge_units_{0};
    std::vector<std::vector<std::pair<VertexId, int>>> adj_;  // per slot

    void build_adjacency();
    int require_slot(VertexId id) const;
};

/// alpha*c1(u) + beta*(c2(u) - 1), scaled by D.
ScaledPotential vertex_potential(const WeightedMultigraph& g, VertexId u);

/// rho of the induced subgraph on s: sum of vertex potentials minus
/// D * e(G[s]) (multiplicity-counted).
ScaledPotential subset_potential(const WeightedMultigraph& g, std::span<const VertexId> s);

/// Capacity-versus-degree classification of one vertex: i-null / i-slack /
/// i-constrained per color, doubly- and somehow-constrained, three-two-two,
/// triple-three.
struct VertexProfile {
    int degree{0};
    int c1{0};
    int c2{0};
    bool null1{false}, slack1{false}, constrained1{false};
    bool null2{false}, slack2{false}, constrained2{false};
    bool doubly_constrained{false};
    bool somehow_constrained{false};
    bool three_two_two{false};
    bool triple_three{false};

    bool is_null(int color) const { return color == 1 ? null1 : null2; }
    bool is_slack(int color) const { return color == 1 ? slack1 : slack2; }
    bool is_constrained(int color) const { return color == 1 ? constrained1 : constrained2; }
};

VertexProfile profile(const WeightedMultigraph& g, VertexId u);

/// Length of a shortest cycle; nullopt for forests. A multiplicity-2 edge
/// is a cycle of length 2.
std::optional<int> girth(const WeightedMultigraph& g);

}  // namespace forestcol

#endif
