#ifndef FORESTCOL_SOLVER_HPP
#define FORESTCOL_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "forestcol/graph.hpp"

namespace forestcol {

/// Thrown by the brute-force oracles when the instance exceeds their
/// exponential-workload guard.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Which family of vertex subsets to minimize over.
struct Constraint {
    enum class Kind { any, nonempty, nonempty_nonspanning, forced };

    Kind kind{Kind::any};
    std::vector<VertexId> forced_in;   // only for Kind::forced
    std::vector<VertexId> forced_out;  // only for Kind::forced

    static Constraint any() { return {Kind::any, {}, {}}; }
    static Constraint nonempty() { return {Kind::nonempty, {}, {}}; }
    static Constraint nonempty_nonspanning() { return {Kind::nonempty_nonspanning, {}, {}}; }
    static Constraint forced(std::vector<VertexId> in, std::vector<VertexId> out) {
        return {Kind::forced, std::move(in), std::move(out)};
    }
};

struct SubsetResult {
    std::vector<VertexId> subset;  // sorted
    ScaledPotential potential;
};

/// Project-selection instance over the items 0..n-1: minimize
/// sum of item costs over S minus sum of project profits with both
/// endpoints in S. Solved exactly by a min s-t cut (Dinic) on integer
/// capacities; negative costs go on the source side as profits.
///
/// The network is built once; repeated minimize() calls with different
/// forced sets reuse it by resetting capacities on pre-wired forcing arcs.
class FlowNetwork {
public:
    explicit FlowNetwork(int item_count);

    void set_item_cost(int item, std::int64_t cost);
    void add_project(int a, int b, std::int64_t profit);

    struct Result {
        std::int64_t value{0};          // min of the objective
        std::vector<char> selected;     // per item, the minimizing S
    };

    /// Exact minimum over all S with forced_in subset of S and S disjoint
    /// from forced_out (the empty set is in the family when forced_in is).
    Result minimize(const std::vector<int>& forced_in, const std::vector<int>& forced_out) const;

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };
    struct Workspace {
        bool built{false};
        int nodes{0};
        std::int64_t positive_total{0};
        std::vector<int> head;
        std::vector<Arc> arcs;
        std::vector<std::int64_t> base_cap;
        std::vector<int> force_in_arc;   // per item: arc index of the s->i slot
        std::vector<int> force_out_arc;  // per item: arc index of the i->t slot
        std::vector<int> level, iter, queue;
    };

    void build() const;
    std::int64_t max_flow() const;

    int items_;
    std::vector<std::int64_t> cost_;
    struct Project {
        int a, b;
        std::int64_t profit;
    };
    std::vector<Project> projects_;
    mutable Workspace ws_;
};

/// Exact minimizer of subset_potential within the constraint family.
/// nonempty is realized by forcing each vertex in turn; nonempty_nonspanning
/// falls back to forcing one vertex out at a time when the nonempty scan
/// returns the spanning set. Ties go to the lexicographically smallest
/// subset among the candidates examined, in deterministic order.
SubsetResult min_potential(const WeightedMultigraph& g, const Constraint& c);

/// Exhaustive counterpart, |V| <= 22.
SubsetResult min_potential_bruteforce(const WeightedMultigraph& g, const Constraint& c);

struct SparsityResult {
    bool ok{true};
    std::vector<VertexId> witness;  // a subset violating e(S) < a|S| - b
};

/// (a,b)-strict sparsity: every nonempty induced subset S satisfies
/// e(G[S]) < a|S| - b. Same flow reduction with uniform vertex weight a.
SparsityResult check_strict_sparsity(const WeightedMultigraph& g, const Rational& a,
                                     const Rational& b);

struct HypothesisResult {
    bool ok{true};
    std::optional<SubsetResult> witness;  // a nonempty subset with rho <= -beta
};

/// Entry gate of the coloring engine: min over all nonempty subsets of the
/// scaled potential must exceed -beta * D = -(d1 + 2).
HypothesisResult check_hypothesis(const WeightedMultigraph& g);

}  // namespace forestcol

#endif
