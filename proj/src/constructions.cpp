#include "forestcol/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "forestcol/solver.hpp"

namespace forestcol {

WeightedMultigraph zero_capacity_seed(Params params) {
    return WeightedMultigraph(params, {{0, params.d1() + 1, params.d2() + 1}}, {});
}

WeightedMultigraph attach_pendant_host(const WeightedMultigraph& g, VertexId v) {
    if (g.weight(v, 1) <= 0) throw std::invalid_argument("pendant host requires W1(v) > 0");
    VertexId leaf = g.fresh_id();
    return g.bump_weight(v, 1, -1)
        .add_vertex(leaf, 0, g.params().d2() + 1)
        .add_edge(v, leaf);
}

WeightedMultigraph attach_flag(const std::vector<FlagPart>& parts,
                               const std::vector<int>& assignment) {
    if (parts.empty()) throw std::invalid_argument("flag needs at least one part");
    const Params params = parts[0].graph.params();
    int ell = static_cast<int>(parts.size());
    if (ell > params.d1() + 2) throw std::invalid_argument("flag takes at most d1+2 parts");
    if (static_cast<int>(assignment.size()) != params.d1() + 2)
        throw std::invalid_argument("flag assignment must have length d1+2");
    std::set<int> used(assignment.begin(), assignment.end());
    for (int i = 0; i < ell; ++i)
        if (!used.count(i)) throw std::invalid_argument("every flag part must be assigned");
    for (int idx : assignment)
        if (idx < 0 || idx >= ell) throw std::invalid_argument("flag assignment index out of range");
    for (const FlagPart& part : parts) {
        if (!(part.graph.params() == params))
            throw std::invalid_argument("flag parts must share params");
        if (part.graph.weight(part.host, 2) <= 0)
            throw std::invalid_argument("flag hosts require W2 > 0");
    }

    // Disjoint union; later parts are shifted above everything before them.
    std::vector<VertexSpec> verts;
    std::vector<EdgeRec> edges;
    std::vector<VertexId> hosts(ell);
    VertexId offset = 0;
    for (int i = 0; i < ell; ++i) {
        const WeightedMultigraph& part = parts[i].graph;
        VertexId low = part.vertices().empty() ? 0 : part.vertices().front();
        VertexId shift = (i == 0) ? 0 : offset - low;
        for (VertexId id : part.vertices()) {
            int w2 = part.weight(id, 2) - (id == parts[i].host ? 1 : 0);
            verts.push_back({id + shift, part.weight(id, 1), w2});
        }
        for (const EdgeRec& e : part.edges())
            edges.push_back({e.u + shift, e.v + shift, e.multiplicity});
        hosts[i] = parts[i].host + shift;
        offset = std::max(offset, part.vertices().back() + shift + 1);
    }

    // Star K_{1,d1+1}: u_1..u_{d1+2}, center u_{d1+2}.
    int star_size = params.d1() + 2;
    std::vector<VertexId> star_ids(star_size);
    for (int j = 0; j < star_size; ++j) {
        star_ids[j] = offset + j;
        verts.push_back({star_ids[j], 0, 0});
    }
    VertexId center = star_ids[star_size - 1];
    for (int j = 0; j + 1 < star_size; ++j) edges.push_back({star_ids[j], center, 1});
    for (int j = 0; j < star_size; ++j) {
        VertexId y = hosts[assignment[j]];
        edges.push_back({std::min(y, star_ids[j]), std::max(y, star_ids[j]), 1});
    }
    return WeightedMultigraph(params, std::move(verts), std::move(edges));
}

WeightedMultigraph attach_null_leaf(const WeightedMultigraph& g, VertexId u, int color) {
    if (color != 1 && color != 2) throw std::invalid_argument("color must be 1 or 2");
    if (g.capacity(u, color) != 0)
        throw std::invalid_argument("null leaf requires c_i(u) = 0");
    const Params& p = g.params();
    VertexId leaf = g.fresh_id();
    int w_same = p.d(color);               // c_i(u') = 1
    int w_other = p.d(3 - color) + 1;      // c_{3-i}(u') = 0
    int w1 = color == 1 ? w_same : w_other;
    int w2 = color == 2 ? w_same : w_other;

    std::vector<VertexSpec> verts;
    for (VertexId id : g.vertices()) {
        int vw1 = g.weight(id, 1), vw2 = g.weight(id, 2);
        if (id == u) (color == 1 ? vw1 : vw2) = 0;
        verts.push_back({id, vw1, vw2});
    }
    verts.push_back({leaf, w1, w2});
    std::vector<EdgeRec> edges = g.edges();
    edges.push_back({std::min(u, leaf), std::max(u, leaf), 1});
    return WeightedMultigraph(p, std::move(verts), std::move(edges));
}

WeightedMultigraph attach_double_pennon(const WeightedMultigraph& g, VertexId u) {
    const Params& p = g.params();
    if (p.d2() <= p.d1()) throw std::invalid_argument("double pennon requires d2 > d1");
    if (!g.has_vertex(u)) throw std::invalid_argument("unknown vertex for double pennon");
    int d2 = p.d2();
    VertexId base = g.fresh_id();
    VertexId x_star = base;
    auto x_i = [&](int i) { return base + i; };  // i in 1..d2
    VertexId y_star = base + d2 + 1;
    auto y_i = [&](int i) { return base + d2 + 1 + i; };

    std::vector<VertexSpec> verts;
    for (VertexId id : g.vertices()) verts.push_back({id, g.weight(id, 1), g.weight(id, 2)});
    verts.push_back({x_star, 0, 0});
    for (int i = 1; i <= d2; ++i) verts.push_back({x_i(i), 0, 0});
    verts.push_back({y_star, 0, 0});
    for (int i = 1; i <= d2; ++i) verts.push_back({y_i(i), 0, 0});

    std::vector<EdgeRec> edges = g.edges();
    auto push = [&](VertexId a, VertexId b) {
        edges.push_back({std::min(a, b), std::max(a, b), 1});
    };
    for (int i = 1; i <= d2; ++i) {
        push(x_star, x_i(i));
        push(u, x_i(i));
    }
    push(x_star, u);
    for (int i = 1; i <= d2; ++i) {
        push(y_star, y_i(i));
        push(x_star, y_i(i));
    }
    push(y_star, x_star);
    return WeightedMultigraph(p, std::move(verts), std::move(edges));
}

std::vector<VertexId> pennon_x_layer(const Params& params, VertexId first_new) {
    std::vector<VertexId> out;
    for (int i = 0; i <= params.d2(); ++i) out.push_back(first_new + i);
    return out;
}

namespace {

WeightedMultigraph from_simple_edges(Params params, int n,
                                     const std::vector<std::pair<int, int>>& pairs) {
    std::vector<VertexSpec> verts;
    for (int i = 0; i < n; ++i) verts.push_back({i, 0, 0});
    std::vector<EdgeRec> edges;
    for (auto [a, b] : pairs)
        edges.push_back({std::min(a, b), std::max(a, b), 1});
    return WeightedMultigraph(params, std::move(verts), std::move(edges));
}

}  // namespace

WeightedMultigraph cycle(Params params, int n) {
    if (n < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
    if (n == 2) {
        // A 2-cycle is a doubled edge.
        return WeightedMultigraph(params, {{0, 0, 0}, {1, 0, 0}}, {{0, 1, 2}});
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return from_simple_edges(params, n, pairs);
}

WeightedMultigraph path(Params params, int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return from_simple_edges(params, n, pairs);
}

WeightedMultigraph star(Params params, int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
    return from_simple_edges(params, leaves + 1, pairs);
}

WeightedMultigraph dodecahedron(Params params) {
    // Generalized Petersen graph GP(10, 2): outer 10-cycle 0..9, inner
    // vertices 10..19 joined as i -> i+2 (mod 10). Girth 5, 30 edges.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 10; ++i) {
        pairs.emplace_back(i, (i + 1) % 10);
        pairs.emplace_back(i, 10 + i);
        pairs.emplace_back(10 + i, 10 + (i + 2) % 10);
    }
    return from_simple_edges(params, 20, pairs);
}

WeightedMultigraph grid_subdivided(Params params, int rows, int cols, int sub) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
    if (sub < 0) throw std::invalid_argument("subdivision count must be >= 0");
    int next = rows * cols;
    auto corner = [&](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> pairs;
    auto connect = [&](int a, int b) {
        int prev = a;
        for (int k = 0; k < sub; ++k) {
            pairs.emplace_back(prev, next);
            prev = next++;
        }
        pairs.emplace_back(prev, b);
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) connect(corner(r, c), corner(r, c + 1));
            if (r + 1 < rows) connect(corner(r, c), corner(r + 1, c));
        }
    return from_simple_edges(params, next, pairs);
}

WeightedMultigraph random_sparse(Params params, int n, std::uint64_t seed, const Rational& a,
                                 const Rational& b) {
    if (n < 1) throw std::invalid_argument("random_sparse needs at least 1 vertex");
    Rational ra = a.reduced(), rb = b.reduced();
    std::int64_t q = std::lcm(ra.den, rb.den);
    std::int64_t pa = ra.num * (q / ra.den);
    std::int64_t pb = rb.num * (q / rb.den);
    // Largest m with m < a*n - b, i.e. m*q < pa*n - pb.
    std::int64_t bound = pa * n - pb;
    std::int64_t target = bound > 0 ? (bound - 1) / q : 0;
    std::int64_t max_simple = std::int64_t(n) * (n - 1) / 2;
    target = std::min(target, max_simple);

    constexpr int kAttempts = 400;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        // Start below the exact budget; samples at the full budget almost
        // always carry some subset over the line. Back off further when a
        // sample still fails.
        std::int64_t want =
            std::max<std::int64_t>(0, target * std::max(20, 90 - 2 * attempt) / 100);
        std::mt19937_64 rng(seed * 1000003ull + attempt);

        // A shuffled cycle (or path, when the budget is short) spreads the
        // first n edges evenly; near-tight targets cannot afford the
        // low-degree vertices uniform sampling produces. Chords fill the rest.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::set<std::pair<int, int>> chosen;
        auto put = [&](int u, int v) { chosen.insert({std::min(u, v), std::max(u, v)}); };
        if (want >= n && n >= 3) {
            for (int i = 0; i < n; ++i) put(order[i], order[(i + 1) % n]);
        } else {
            for (int i = 0; i + 1 <= std::min<std::int64_t>(want, n - 1); ++i)
                put(order[i], order[i + 1]);
        }
        std::uniform_int_distribution<int> pick(0, n - 1);
        int guard = 0;
        while (static_cast<std::int64_t>(chosen.size()) < want && guard < 50 * n + 1000) {
            int u = pick(rng), v = pick(rng);
            ++guard;
            if (u != v) put(u, v);
        }
        std::vector<std::pair<int, int>> pairs(chosen.begin(), chosen.end());
        WeightedMultigraph g = from_simple_edges(params, n, pairs);
        if (check_strict_sparsity(g, a, b).ok) return g;
    }
    throw std::runtime_error("random_sparse: rejection budget exhausted");
}

}  // namespace forestcol
