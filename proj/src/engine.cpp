#include "forestcol/engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "forestcol/verifier.hpp"

namespace forestcol {

namespace {

WeightedMultigraph bump_sat(const WeightedMultigraph& g, VertexId u, int color) {
    // A vertex at capacity 0 already excludes that color; the bump has
    // nothing left to reserve.
    if (g.capacity(u, color) <= 0) return g;
    return g.bump_weight(u, color, 1);
}

int majority_class(const Coloring& col, VertexId a, VertexId b, VertexId c) {
    int ones = (col.class_of(a) == 1) + (col.class_of(b) == 1) + (col.class_of(c) == 1);
    return ones >= 2 ? 1 : 2;
}

// No usable lower bound on the nonempty-nonspanning minimum.
constexpr std::int64_t kNoFloor = std::numeric_limits<std::int64_t>::min() / 4;

class Engine {
public:
    explicit Engine(const EngineOptions& opts) : opts_(opts) {}

    CaseTrace trace;

    // floor_hint, when above kNoFloor, is a proven lower bound on the
    // nonempty-nonspanning minimum of g: surgeries lower any subset's
    // potential by at most their total weight/edge perturbation, so the
    // parent's exact minimum minus that perturbation survives recursion.
    // While the bound clears alpha-beta, case 2 cannot fire and the
    // per-level cut scan is skipped.
    Coloring run(const WeightedMultigraph& g, int depth, std::int64_t floor_hint) {
        if (g.vertex_count() <= 3) return case1_base(g, depth);
        auto comps = g.components();
        if (comps.size() > 1) return case1_split(g, comps, depth, floor_hint);

        std::int64_t gap = g.params().alpha_scaled() - g.params().beta_scaled();
        std::int64_t floor = floor_hint;
        if (opts_.paranoid || floor_hint <= gap) {
            SubsetResult mn = min_potential(g, Constraint::nonempty_nonspanning());
            if (opts_.paranoid && floor_hint > kNoFloor && mn.potential.value < floor_hint)
                throw EngineInvariantError("inherited scan floor was unsound");
            floor = mn.potential.value;
            if (mn.potential.value <= gap) return case2_gap(g, mn, depth);
        }

        const auto& ids = g.vertices();

        for (VertexId u : ids)
            if (g.neighbors(u).size() == 1) return case3_leaf(g, u, depth, floor);

        for (VertexId u : ids) {
            VertexProfile pr = profile(g, u);
            if (pr.degree == 2 && std::min(pr.c1, pr.c2) >= 1 && std::max(pr.c1, pr.c2) >= 2)
                return case4_degree2(g, u, depth, floor);
        }

        for (VertexId u : ids) {
            VertexProfile pr = profile(g, u);
            if (!pr.three_two_two) continue;
            for (const auto& [nb, mult] : g.neighbors(u))
                if (mult >= 2) return case5_parallel(g, u, depth, floor);
        }

        for (VertexId u : ids) {
            if (!profile(g, u).three_two_two) continue;
            bool has_doubly = false;
            for (const auto& [nb, mult] : g.neighbors(u))
                if (profile(g, nb).doubly_constrained) has_doubly = true;
            if (!has_doubly) return case6_three_two_two(g, u, depth, floor);
        }

        for (VertexId u : ids) {
            if (!profile(g, u).triple_three) continue;
            int unconstrained = 0;
            for (const auto& [nb, mult] : g.neighbors(u))
                if (!profile(g, nb).somehow_constrained) ++unconstrained;
            if (unconstrained >= 2) return case7_triple_three(g, u, depth, floor);
        }

        throw EngineInvariantError("no case applies; hypothesis was violated upstream");
    }

private:
    EngineOptions opts_;

    static std::int64_t lower(std::int64_t floor, std::int64_t delta) {
        return floor == kNoFloor ? kNoFloor : floor - delta;
    }

    size_t record(int case_id, const WeightedMultigraph& g, int depth, std::string detail) {
        trace.records.push_back(
            {case_id, depth, g.vertex_count() + g.edge_count(), 0, std::move(detail)});
        return trace.records.size() - 1;
    }

    Coloring recurse(const WeightedMultigraph& child, int depth, std::int64_t floor_hint) {
        if (opts_.paranoid) {
            if (!check_hypothesis(child).ok)
                throw EngineInvariantError("surgery produced a hypothesis-violating graph");
        }
        Coloring col = run(child, depth, floor_hint);
        if (opts_.paranoid) {
            if (!verify_coloring(child, col).ok)
                throw EngineInvariantError("child coloring failed verification");
        }
        return col;
    }

    Coloring case1_base(const WeightedMultigraph& g, int depth) {
        record(1, g, depth, "exhaustive n=" + std::to_string(g.vertex_count()));
        auto col = brute_force_color(g);
        if (!col) throw EngineInvariantError("base case found no coloring");
        return *col;
    }

    Coloring case1_split(const WeightedMultigraph& g,
                         const std::vector<std::vector<VertexId>>& comps, int depth,
                         std::int64_t floor_hint) {
        record(1, g, depth, "components=" + std::to_string(comps.size()));
        Coloring merged;
        for (const auto& comp : comps)
            merged.merge(recurse(g.induced(comp), depth + 1, floor_hint));
        return merged;
    }

    Coloring case2_gap(const WeightedMultigraph& g, const SubsetResult& mn, int depth) {
        const auto& subset = mn.subset;
        std::set<VertexId> in_h(subset.begin(), subset.end());

        WeightedMultigraph hgraph = g.induced(subset);
        bool bumped = false;
        VertexId z = -1, x = -1;
        if (mn.potential.value > 0) {
            // rho(H) > 0: reserve room on a boundary vertex before recursing.
            for (VertexId cand : subset) {
                for (const auto& [nb, mult] : g.neighbors(cand)) {
                    if (!in_h.count(nb)) {
                        z = cand;
                        x = nb;
                        break;
                    }
                }
                if (z >= 0) break;
            }
            if (z < 0) throw EngineInvariantError("connected graph has no boundary edge");
            hgraph = bump_sat(hgraph, z, 2);
            bumped = true;
        }

        std::ostringstream detail;
        detail << "|H|=" << subset.size() << " rho=" << mn.potential.value;
        if (bumped) detail << " z=" << z << " x=" << x;
        record(2, g, depth, detail.str());

        std::int64_t h_floor =
            mn.potential.value - (bumped ? g.params().beta_scaled() : 0);
        Coloring col_h = recurse(hgraph, depth + 1, h_floor);

        std::vector<VertexId> rest;
        for (VertexId id : g.vertices())
            if (!in_h.count(id)) rest.push_back(id);
        WeightedMultigraph gstar = g.induced(rest);
        for (VertexId u : rest) {
            bool seen1 = false, seen2 = false;
            int boundary_units = 0;
            for (const auto& [nb, mult] : g.neighbors(u)) {
                if (!in_h.count(nb)) continue;
                boundary_units += mult;
                (col_h.class_of(nb) == 1 ? seen1 : seen2) = true;
            }
            if (opts_.paranoid && boundary_units > 1)
                throw EngineInvariantError("vertex outside H has two edges into H");
            if (seen1) gstar = gstar.set_capacity_zero(u, 1);
            if (seen2) {
                if (bumped && u == x && col_h.class_of(z) == 2)
                    gstar = bump_sat(gstar, x, 2);
                else
                    gstar = gstar.set_capacity_zero(u, 2);
            }
        }

        Coloring col_rest = recurse(gstar, depth + 1, kNoFloor);
        col_h.merge(col_rest);

        if (opts_.paranoid) {
            // Bridge property: at most the designated zx edge may be
            // monochromatic across the (H, G*) boundary.
            for (const EdgeRec& e : g.edges()) {
                bool ue = in_h.count(e.u) > 0, ve = in_h.count(e.v) > 0;
                if (ue == ve) continue;
                if (col_h.class_of(e.u) != col_h.class_of(e.v)) continue;
                bool designated = bumped && ((e.u == z && e.v == x) || (e.u == x && e.v == z));
                if (!designated)
                    throw EngineInvariantError("monochromatic bridge edge outside zx");
            }
        }
        return col_h;
    }

    Coloring case3_leaf(const WeightedMultigraph& g, VertexId u, int depth,
                        std::int64_t floor) {
        auto [x, mult] = g.neighbors(u)[0];
        int c1 = g.capacity(u, 1), c2 = g.capacity(u, 2);
        if (c1 == 0 && c2 == 0)
            throw EngineInvariantError("vertex with both capacities zero under hypothesis");

        std::ostringstream detail;
        detail << "u=" << u << " x=" << x << " mult=" << mult;
        WeightedMultigraph child = g.delete_vertex(u);
        std::int64_t child_floor = floor;
        int forced = 0;
        if (c1 == 0 || c2 == 0) {
            int i = (c1 == 0) ? 1 : 2;
            forced = 3 - i;
            if (mult == 1) {
                child = bump_sat(child, x, 3 - i);
                child_floor = lower(floor, g.params().coef_scaled(3 - i));
            } else {
                child = child.set_capacity_zero(x, 3 - i);
                child_floor = kNoFloor;
            }
            detail << " null=" << i;
        }
        record(3, g, depth, detail.str());

        Coloring col = recurse(child, depth + 1, child_floor);
        col.set(u, forced != 0 ? forced : 3 - col.class_of(x));
        return col;
    }

    Coloring case4_degree2(const WeightedMultigraph& g, VertexId u, int depth,
                           std::int64_t floor) {
        auto nbrs = g.neighbors(u);
        if (nbrs.size() != 2) throw EngineInvariantError("degree-2 vertex with one neighbor");
        VertexId x = nbrs[0].first, y = nbrs[1].first;
        int c1 = g.capacity(u, 1), c2 = g.capacity(u, 2);

        // Prefer the W2 branch; the swapped branch handles c1 >= 2, c2 = 1.
        int heavy = (c2 >= 2 && c1 >= 1) ? 2 : 1;
        std::ostringstream detail;
        detail << "u=" << u << " x=" << x << " y=" << y << " heavy=" << heavy;
        record(4, g, depth, detail.str());

        WeightedMultigraph child =
            bump_sat(bump_sat(g.delete_vertex(u), x, heavy), y, heavy);
        Coloring col =
            recurse(child, depth + 1, lower(floor, 2 * g.params().coef_scaled(heavy)));
        bool both_heavy = col.class_of(x) == heavy && col.class_of(y) == heavy;
        col.set(u, both_heavy ? 3 - heavy : heavy);
        return col;
    }

    Coloring case5_parallel(const WeightedMultigraph& g, VertexId u, int depth,
                            std::int64_t floor) {
        // N^m(u) = {v, x, x}.
        VertexId v = -1, x = -1;
        for (const auto& [nb, mult] : g.neighbors(u))
            (mult >= 2 ? x : v) = nb;
        if (v < 0 || x < 0)
            throw EngineInvariantError("three-two-two parallel vertex without {v, x, x}");

        WeightedMultigraph base = g.delete_vertex(u);
        WeightedMultigraph cand_v = bump_sat(bump_sat(base, v, 1), v, 2);
        std::ostringstream detail;
        detail << "u=" << u << " v=" << v << " x=" << x;

        if (check_hypothesis(cand_v).ok) {
            detail << " pick=v";
            record(5, g, depth, detail.str());
            std::int64_t delta = g.params().alpha_scaled() + g.params().beta_scaled();
            Coloring col = recurse(cand_v, depth + 1, lower(floor, delta));
            col.set(u, 3 - col.class_of(x));
            return col;
        }
        WeightedMultigraph cand_x = bump_sat(base.set_capacity_zero(x, 1), v, 1);
        if (!check_hypothesis(cand_x).ok)
            throw EngineInvariantError("neither case-5 candidate satisfies the hypothesis");
        detail << " pick=x";
        record(5, g, depth, detail.str());
        Coloring col = recurse(cand_x, depth + 1, kNoFloor);
        col.set(u, 1);
        return col;
    }

    // Shared by cases 6 and 7 (first surgery): move one misplaced neighbor
    // into the majority class when it is isolated there and has capacity.
    int flip_repair(const WeightedMultigraph& g, Coloring& col, VertexId u,
                    const std::vector<VertexId>& nbrs, int j) {
        for (VertexId xi : nbrs) {
            if (col.class_of(xi) == j) continue;
            if (g.capacity(xi, j) <= 0) continue;
            bool has_j_neighbor = false;
            for (const auto& [nb, mult] : g.neighbors(xi)) {
                if (nb == u) continue;
                if (col.class_of(nb) == j) {
                    has_j_neighbor = true;
                    break;
                }
            }
            if (has_j_neighbor) continue;
            col.set(xi, j);
            return 1;
        }
        return 0;
    }

    Coloring case6_three_two_two(const WeightedMultigraph& g, VertexId u, int depth,
                                 std::int64_t floor) {
        std::vector<VertexId> nbrs;
        for (const auto& [nb, mult] : g.neighbors(u)) nbrs.push_back(nb);
        if (nbrs.size() != 3)
            throw EngineInvariantError("three-two-two with parallel edge reached case 6");

        WeightedMultigraph child = g.delete_vertex(u);
        std::int64_t delta = 0;
        for (VertexId xi : nbrs) {
            VertexProfile pr = profile(g, xi);
            int ji = 0;
            for (int j = 1; j <= 2 && ji == 0; ++j)
                if (pr.is_null(j) || pr.is_slack(j)) ji = j;
            if (ji == 0)
                throw EngineInvariantError("case-6 neighbor is doubly-constrained");
            child = bump_sat(child, xi, 3 - ji);
            delta += g.params().coef_scaled(3 - ji);
        }

        std::ostringstream detail;
        detail << "u=" << u << " nbrs=" << nbrs[0] << "," << nbrs[1] << "," << nbrs[2];
        size_t rec = record(6, g, depth, detail.str());

        Coloring col = recurse(child, depth + 1, lower(floor, delta));
        int j = majority_class(col, nbrs[0], nbrs[1], nbrs[2]);
        trace.records[rec].flips = flip_repair(g, col, u, nbrs, j);
        col.set(u, 3 - j);
        return col;
    }

    Coloring case7_triple_three(const WeightedMultigraph& g, VertexId u, int depth,
                                std::int64_t floor) {
        std::vector<VertexId> nbrs;
        for (const auto& [nb, mult] : g.neighbors(u)) nbrs.push_back(nb);
        if (nbrs.size() != 3)
            throw EngineInvariantError("triple-three with parallel edge reached case 7");

        VertexId x1 = -1;
        std::vector<VertexId> loose;
        for (VertexId xi : nbrs) {
            if (profile(g, xi).somehow_constrained)
                x1 = xi;
            else
                loose.push_back(xi);
        }
        if (x1 < 0 || loose.size() != 2)
            throw EngineInvariantError("case 7 expects one constrained and two loose neighbors");
        if (opts_.paranoid && !profile(g, x1).doubly_constrained)
            throw EngineInvariantError("case-7 x1 is not doubly-constrained");
        VertexId x2 = loose[0], x3 = loose[1];

        WeightedMultigraph base = g.delete_vertex(u);
        WeightedMultigraph g1 = bump_sat(bump_sat(base, x1, 1), x1, 2);
        std::ostringstream detail;
        detail << "u=" << u << " x1=" << x1 << " x2=" << x2 << " x3=" << x3;

        if (check_hypothesis(g1).ok) {
            detail << " pick=G1";
            size_t rec = record(7, g, depth, detail.str());
            std::int64_t delta = g.params().alpha_scaled() + g.params().beta_scaled();
            Coloring col = recurse(g1, depth + 1, lower(floor, delta));
            int j = majority_class(col, nbrs[0], nbrs[1], nbrs[2]);
            trace.records[rec].flips = flip_repair(g, col, u, nbrs, j);
            col.set(u, 3 - j);
            return col;
        }

        WeightedMultigraph g23 = base.add_edge(x2, x3);
        if (!check_hypothesis(g23).ok)
            throw EngineInvariantError("neither case-7 candidate satisfies the hypothesis");
        detail << " pick=G23";
        size_t rec = record(7, g, depth, detail.str());
        Coloring col = recurse(g23, depth + 1, lower(floor, g.params().scale()));

        // u takes the color opposite x1. The only possible obstruction is a
        // loose neighbor sharing that class whose budget the new edge to u
        // overflows; it then has all its other neighbors in that class and
        // moves to the other side.
        int ju = 3 - col.class_of(x1);
        std::vector<VertexId> overflowing;
        for (VertexId xi : {std::min(x2, x3), std::max(x2, x3)}) {
            if (col.class_of(xi) != ju) continue;
            int load = g.weight(xi, ju) + g.multiplicity(xi, u);
            for (const auto& [nb, mult] : g.neighbors(xi))
                if (nb != u && col.class_of(nb) == ju) load += mult;
            if (load > g.params().d(ju)) overflowing.push_back(xi);
        }
        if (overflowing.size() > 1)
            throw EngineInvariantError("case-7 G23 extension has two obstructions");
        if (!overflowing.empty()) {
            col.set(overflowing[0], 3 - ju);
            trace.records[rec].flips = 1;
        }
        col.set(u, ju);
        return col;
    }
};

}  // namespace

ColorResult color(const WeightedMultigraph& g, const EngineOptions& opts) {
    ColorResult res;
    if (!g.params().regime_ok()) {
        res.status = ColorStatus::regime_violation;
        return res;
    }
    HypothesisResult hyp = check_hypothesis(g);
    if (!hyp.ok) {
        res.status = ColorStatus::hypothesis_violation;
        res.witness = hyp.witness;
        return res;
    }
    Engine engine(opts);
    res.coloring = engine.run(g, 0, kNoFloor);
    res.trace = std::move(engine.trace);
    if (!verify_coloring(g, res.coloring).ok)
        throw EngineInvariantError("engine output failed verification");
    return res;
}

}  // namespace forestcol
