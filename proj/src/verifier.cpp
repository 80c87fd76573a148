#include "forestcol/verifier.hpp"

#include <algorithm>
#include <numeric>

#include "forestcol/solver.hpp"

namespace forestcol {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Fast path shared by the exhaustive searches: classes indexed by slot.
bool assignment_ok(const WeightedMultigraph& g, const std::vector<int>& cls) {
    const auto& ids = g.vertices();
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i) {
        int j = cls[i];
        int same = 0;
        for (const auto& [nb, mult] : g.neighbors(ids[i]))
            if (cls[g.slot_of(nb)] == j) same += mult;
        if (same + g.weight(ids[i], j) > g.params().d(j)) return false;
    }
    Dsu dsu(n);
    for (const EdgeRec& e : g.edges()) {
        int a = g.slot_of(e.u), b = g.slot_of(e.v);
        if (cls[a] != cls[b]) continue;
        if (e.multiplicity >= 2) return false;
        if (!dsu.unite(a, b)) return false;
    }
    return true;
}

}  // namespace

Verdict verify_coloring(const WeightedMultigraph& g, const Coloring& c) {
    for (VertexId id : g.vertices()) (void)c.class_of(id);  // throws if missing

    Verdict verdict;
    int n = g.vertex_count();
    const auto& ids = g.vertices();

    for (int i = 0; i < n; ++i) {
        int j = c.class_of(ids[i]);
        int same = 0;
        for (const auto& [nb, mult] : g.neighbors(ids[i]))
            if (c.class_of(nb) == j) same += mult;
        if (same + g.weight(ids[i], j) > g.params().d(j))
            verdict.violations.push_back({Violation::Kind::degree_budget, j, {ids[i]}});
    }

    for (int j = 1; j <= 2; ++j) {
        Dsu dsu(n);
        for (const EdgeRec& e : g.edges()) {
            if (c.class_of(e.u) != j || c.class_of(e.v) != j) continue;
            if (e.multiplicity >= 2) {
                verdict.violations.push_back({Violation::Kind::cycle, j, {e.u, e.v}});
                continue;
            }
            if (!dsu.unite(g.slot_of(e.u), g.slot_of(e.v)))
                verdict.violations.push_back({Violation::Kind::cycle, j, {e.u, e.v}});
        }
    }

    verdict.ok = verdict.violations.empty();
    return verdict;
}

std::optional<Coloring> brute_force_color(const WeightedMultigraph& g) {
    int n = g.vertex_count();
    if (n > 22) throw SizeGuardError("brute-force coloring limited to 22 vertices");
    const auto& ids = g.vertices();
    std::vector<int> cls(n, 1);
    const std::uint32_t total = 1u << n;
    // Bit n-1-k drives vertex k, so masks in increasing order prefer
    // placing lower ids in class 1.
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        for (int k = 0; k < n; ++k) cls[k] = (mask >> (n - 1 - k)) & 1 ? 2 : 1;
        if (assignment_ok(g, cls)) {
            Coloring c;
            for (int k = 0; k < n; ++k) c.set(ids[k], cls[k]);
            return c;
        }
    }
    return std::nullopt;
}

bool is_critical(const WeightedMultigraph& g) {
    if (g.vertex_count() > 16) throw SizeGuardError("criticality testing limited to 16 vertices");
    if (brute_force_color(g).has_value()) return false;

    // Maximal proper weakenings: one multiplicity unit, one weight unit,
    // or one isolated vertex.
    for (const EdgeRec& e : g.edges()) {
        std::vector<VertexSpec> verts;
        for (VertexId id : g.vertices()) verts.push_back({id, g.weight(id, 1), g.weight(id, 2)});
        std::vector<EdgeRec> edges;
        for (const EdgeRec& f : g.edges()) {
            if (f.u == e.u && f.v == e.v) {
                if (f.multiplicity > 1) edges.push_back({f.u, f.v, f.multiplicity - 1});
            } else {
                edges.push_back(f);
            }
        }
        WeightedMultigraph weakened(g.params(), std::move(verts), std::move(edges));
        if (!brute_force_color(weakened).has_value()) return false;
    }
    for (VertexId id : g.vertices()) {
        for (int j = 1; j <= 2; ++j) {
            if (g.weight(id, j) == 0) continue;
            if (!brute_force_color(g.bump_weight(id, j, -1)).has_value()) return false;
        }
        if (g.degree(id) == 0) {
            if (!brute_force_color(g.delete_vertex(id)).has_value()) return false;
        }
    }
    return true;
}

}  // namespace forestcol
