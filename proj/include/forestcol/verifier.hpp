#ifndef FORESTCOL_VERIFIER_HPP
#define FORESTCOL_VERIFIER_HPP

#include <optional>
#include <vector>

#include "forestcol/coloring.hpp"
#include "forestcol/graph.hpp"

namespace forestcol {

struct Violation {
    enum class Kind { degree_budget, cycle };
    Kind kind;
    int color_class;  // 1 or 2
    std::vector<VertexId> vertices;
};

struct Verdict {
    bool ok{true};
    std::vector<Violation> violations;
};

/// Ground truth for a desired coloring: each class induces a forest (a
/// multiplicity-2 edge inside a class is a 2-cycle) and every vertex's
/// same-class multiplicity-counted degree plus its weight stays within d_j.
/// Reports all violations. Throws if some vertex is unassigned.
Verdict verify_coloring(const WeightedMultigraph& g, const Coloring& c);

/// Tries all 2^n assignments in a fixed order (lower ids prefer class 1);
/// returns the first coloring passing verify_coloring, if any. |V| <= 22.
std::optional<Coloring> brute_force_color(const WeightedMultigraph& g);

/// True iff g has no desired coloring but every single-step weakening does
/// (drop one unit of edge multiplicity, drop one isolated vertex, or
/// decrement one weight). Single steps suffice because colorability is
/// monotone under weakening. |V| <= 16.
bool is_critical(const WeightedMultigraph& g);

}  // namespace forestcol

#endif
