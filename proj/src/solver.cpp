#include "forestcol/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace forestcol {

namespace {

constexpr std::int64_t kInf = std::int64_t(1) << 60;

bool lex_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

FlowNetwork::FlowNetwork(int item_count) : items_(item_count), cost_(item_count, 0) {}

void FlowNetwork::set_item_cost(int item, std::int64_t cost) {
    cost_[item] = cost;
    ws_.built = false;
}

void FlowNetwork::add_project(int a, int b, std::int64_t profit) {
    projects_.push_back({a, b, profit});
    ws_.built = false;
}

// Nodes: source 0, sink 1, one per item, one per project. An item is
// "selected" when it ends on the source side of the min cut. Positive cost
// becomes an item->sink arc, negative cost a source->item arc, each project
// hangs off the source with infinite arcs to its items, and every item gets
// two zero-capacity forcing slots (s->i, i->t) raised to infinity on demand.
void FlowNetwork::build() const {
    ws_.nodes = 2 + items_ + static_cast<int>(projects_.size());
    ws_.head.assign(ws_.nodes, -1);
    ws_.arcs.clear();
    ws_.positive_total = 0;
    ws_.force_in_arc.assign(items_, -1);
    ws_.force_out_arc.assign(items_, -1);

    auto item_node = [&](int i) { return 2 + i; };
    auto project_node = [&](int p) { return 2 + items_ + p; };
    auto add_arc = [&](int from, int to, std::int64_t cap) {
        ws_.arcs.push_back({to, ws_.head[from], cap});
        ws_.head[from] = static_cast<int>(ws_.arcs.size()) - 1;
        ws_.arcs.push_back({from, ws_.head[to], 0});
        ws_.head[to] = static_cast<int>(ws_.arcs.size()) - 1;
        return static_cast<int>(ws_.arcs.size()) - 2;
    };

    for (int i = 0; i < items_; ++i) {
        if (cost_[i] > 0) {
            add_arc(item_node(i), 1, cost_[i]);
        } else if (cost_[i] < 0) {
            add_arc(0, item_node(i), -cost_[i]);
            ws_.positive_total += -cost_[i];
        }
        ws_.force_in_arc[i] = add_arc(0, item_node(i), 0);
        ws_.force_out_arc[i] = add_arc(item_node(i), 1, 0);
    }
    for (size_t p = 0; p < projects_.size(); ++p) {
        add_arc(0, project_node(static_cast<int>(p)), projects_[p].profit);
        add_arc(project_node(static_cast<int>(p)), item_node(projects_[p].a), kInf);
        add_arc(project_node(static_cast<int>(p)), item_node(projects_[p].b), kInf);
        ws_.positive_total += projects_[p].profit;
    }

    ws_.base_cap.resize(ws_.arcs.size());
    for (size_t i = 0; i < ws_.arcs.size(); ++i) ws_.base_cap[i] = ws_.arcs[i].cap;
    ws_.level.assign(ws_.nodes, -1);
    ws_.iter.assign(ws_.nodes, -1);
    ws_.queue.reserve(ws_.nodes);
    ws_.built = true;
}

std::int64_t FlowNetwork::max_flow() const {
    Workspace& w = ws_;
    const int s = 0, t = 1;
    std::int64_t flow = 0;

    auto bfs = [&]() {
        std::fill(w.level.begin(), w.level.end(), -1);
        w.queue.clear();
        w.queue.push_back(s);
        w.level[s] = 0;
        for (size_t qi = 0; qi < w.queue.size(); ++qi) {
            int v = w.queue[qi];
            for (int e = w.head[v]; e >= 0; e = w.arcs[e].next) {
                if (w.arcs[e].cap > 0 && w.level[w.arcs[e].to] < 0) {
                    w.level[w.arcs[e].to] = w.level[v] + 1;
                    w.queue.push_back(w.arcs[e].to);
                }
            }
        }
        return w.level[t] >= 0;
    };

    auto dfs = [&](auto&& self, int v, std::int64_t limit) -> std::int64_t {
        if (v == t) return limit;
        for (int& e = w.iter[v]; e >= 0; e = w.arcs[e].next) {
            Arc& a = w.arcs[e];
            if (a.cap > 0 && w.level[a.to] == w.level[v] + 1) {
                std::int64_t got = self(self, a.to, std::min(limit, a.cap));
                if (got > 0) {
                    a.cap -= got;
                    w.arcs[e ^ 1].cap += got;
                    return got;
                }
            }
        }
        return 0;
    };

    while (bfs()) {
        w.iter = w.head;
        std::int64_t f;
        while ((f = dfs(dfs, s, kInf)) > 0) flow += f;
    }
    return flow;
}

FlowNetwork::Result FlowNetwork::minimize(const std::vector<int>& forced_in,
                                          const std::vector<int>& forced_out) const {
    if (!ws_.built) build();
    Workspace& w = ws_;
    for (size_t i = 0; i < w.arcs.size(); ++i) w.arcs[i].cap = w.base_cap[i];
    for (int i : forced_in) w.arcs[w.force_in_arc[i]].cap = kInf;
    for (int i : forced_out) w.arcs[w.force_out_arc[i]].cap = kInf;

    std::int64_t cut = max_flow();

    // Source-reachable residual nodes form the minimal optimal closure.
    std::vector<char> seen(w.nodes, 0);
    w.queue.clear();
    w.queue.push_back(0);
    seen[0] = 1;
    for (size_t qi = 0; qi < w.queue.size(); ++qi) {
        int v = w.queue[qi];
        for (int e = w.head[v]; e >= 0; e = w.arcs[e].next) {
            if (w.arcs[e].cap > 0 && !seen[w.arcs[e].to]) {
                seen[w.arcs[e].to] = 1;
                w.queue.push_back(w.arcs[e].to);
            }
        }
    }

    Result res;
    res.value = cut - w.positive_total;
    res.selected.assign(items_, 0);
    for (int i = 0; i < items_; ++i) res.selected[i] = seen[2 + i];
    return res;
}

namespace {

// Shared harness: instance = scaled vertex potentials + edge profits.
struct Instance {
    const WeightedMultigraph* g;
    std::vector<std::int64_t> weight;  // per slot
    FlowNetwork net;

    explicit Instance(const WeightedMultigraph& graph, bool uniform, std::int64_t uniform_weight,
                      std::int64_t edge_unit)
        : g(&graph), weight(graph.vertex_count()), net(graph.vertex_count()) {
        const auto& ids = graph.vertices();
        for (int i = 0; i < graph.vertex_count(); ++i) {
            weight[i] = uniform ? uniform_weight : vertex_potential(graph, ids[i]).value;
            net.set_item_cost(i, weight[i]);
        }
        for (const EdgeRec& e : graph.edges())
            net.add_project(graph.slot_of(e.u), graph.slot_of(e.v), e.multiplicity * edge_unit);
    }

    std::int64_t exact_value(const std::vector<char>& sel, std::int64_t edge_unit) const {
        std::int64_t total = 0;
        for (int i = 0; i < g->vertex_count(); ++i)
            if (sel[i]) total += weight[i];
        for (const EdgeRec& e : g->edges())
            if (sel[g->slot_of(e.u)] && sel[g->slot_of(e.v)])
                total -= e.multiplicity * edge_unit;
        return total;
    }

    std::vector<VertexId> to_ids(const std::vector<char>& sel) const {
        std::vector<VertexId> out;
        for (int i = 0; i < g->vertex_count(); ++i)
            if (sel[i]) out.push_back(g->vertices()[i]);
        return out;
    }
};

struct Best {
    bool has{false};
    std::int64_t value{0};
    std::vector<VertexId> subset;

    void offer(std::int64_t v, std::vector<VertexId> s) {
        if (!has || v < value || (v == value && lex_less(s, subset))) {
            has = true;
            value = v;
            subset = std::move(s);
        }
    }
};

Best scan_nonempty(const Instance& inst, std::int64_t edge_unit) {
    Best best;
    int n = inst.g->vertex_count();
    for (int i = 0; i < n; ++i) {
        auto res = inst.net.minimize({i}, {});
        assert(res.value == inst.exact_value(res.selected, edge_unit));
        best.offer(res.value, inst.to_ids(res.selected));
    }
    return best;
}

}  // namespace

SubsetResult min_potential(const WeightedMultigraph& g, const Constraint& c) {
    const std::int64_t D = g.params().scale();
    int n = g.vertex_count();
    Instance inst(g, false, 0, D);

    Best best;
    switch (c.kind) {
        case Constraint::Kind::any: {
            auto res = inst.net.minimize({}, {});
            best.offer(res.value, inst.to_ids(res.selected));
            break;
        }
        case Constraint::Kind::nonempty: {
            if (n == 0) throw std::invalid_argument("nonempty constraint on empty graph");
            best = scan_nonempty(inst, D);
            break;
        }
        case Constraint::Kind::nonempty_nonspanning: {
            if (n < 2)
                throw std::invalid_argument("nonempty_nonspanning needs at least 2 vertices");
            // Pivot on vertex 0: every nonempty non-spanning subset either
            // avoids the pivot (forced-in u, pivot out) or contains it and
            // misses some v (pivot in, forced-out v). 2(n-1) cuts total.
            for (int u = 1; u < n; ++u) {
                auto res = inst.net.minimize({u}, {0});
                best.offer(res.value, inst.to_ids(res.selected));
            }
            for (int v = 1; v < n; ++v) {
                auto res = inst.net.minimize({0}, {v});
                best.offer(res.value, inst.to_ids(res.selected));
            }
            break;
        }
        case Constraint::Kind::forced: {
            std::vector<int> fin, fout;
            for (VertexId id : c.forced_in) {
                int s = g.slot_of(id);
                if (s < 0) throw std::invalid_argument("forced-in vertex not in graph");
                fin.push_back(s);
            }
            for (VertexId id : c.forced_out) {
                int s = g.slot_of(id);
                if (s < 0) throw std::invalid_argument("forced-out vertex not in graph");
                fout.push_back(s);
            }
            std::sort(fin.begin(), fin.end());
            std::sort(fout.begin(), fout.end());
            std::vector<int> both;
            std::set_intersection(fin.begin(), fin.end(), fout.begin(), fout.end(),
                                  std::back_inserter(both));
            if (!both.empty())
                throw std::invalid_argument("forced-in and forced-out sets intersect");
            auto res = inst.net.minimize(fin, fout);
            best.offer(res.value, inst.to_ids(res.selected));
            break;
        }
    }

    SubsetResult out{best.subset, {best.value}};
    assert(subset_potential(g, out.subset).value == out.potential.value);
    return out;
}

SubsetResult min_potential_bruteforce(const WeightedMultigraph& g, const Constraint& c) {
    int n = g.vertex_count();
    if (n > 22) throw SizeGuardError("brute-force minimization limited to 22 vertices");
    const auto& ids = g.vertices();
    const std::int64_t D = g.params().scale();

    std::vector<std::int64_t> w(n);
    for (int i = 0; i < n; ++i) w[i] = vertex_potential(g, ids[i]).value;
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (const EdgeRec& e : g.edges())
        edges.emplace_back(g.slot_of(e.u), g.slot_of(e.v), e.multiplicity * D);

    std::uint32_t forced_in_mask = 0, forced_out_mask = 0;
    if (c.kind == Constraint::Kind::forced) {
        for (VertexId id : c.forced_in) {
            int s = g.slot_of(id);
            if (s < 0) throw std::invalid_argument("forced-in vertex not in graph");
            forced_in_mask |= 1u << s;
        }
        for (VertexId id : c.forced_out) {
            int s = g.slot_of(id);
            if (s < 0) throw std::invalid_argument("forced-out vertex not in graph");
            forced_out_mask |= 1u << s;
        }
        if (forced_in_mask & forced_out_mask)
            throw std::invalid_argument("forced-in and forced-out sets intersect");
    }
    if (c.kind == Constraint::Kind::nonempty && n == 0)
        throw std::invalid_argument("nonempty constraint on empty graph");
    if (c.kind == Constraint::Kind::nonempty_nonspanning && n < 2)
        throw std::invalid_argument("nonempty_nonspanning needs at least 2 vertices");

    const std::uint32_t full = (1u << n) - 1;
    Best best;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        switch (c.kind) {
            case Constraint::Kind::any:
                break;
            case Constraint::Kind::nonempty:
                if (mask == 0) continue;
                break;
            case Constraint::Kind::nonempty_nonspanning:
                if (mask == 0 || mask == full) continue;
                break;
            case Constraint::Kind::forced:
                if ((mask & forced_in_mask) != forced_in_mask) continue;
                if (mask & forced_out_mask) continue;
                break;
        }
        std::int64_t value = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) value += w[i];
        for (const auto& [a, b, profit] : edges)
            if ((mask & (1u << a)) && (mask & (1u << b))) value -= profit;
        if (best.has && value > best.value) continue;
        std::vector<VertexId> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(ids[i]);
        best.offer(value, std::move(subset));
    }
    return {best.subset, {best.value}};
}

SparsityResult check_strict_sparsity(const WeightedMultigraph& g, const Rational& a,
                                     const Rational& b) {
    if (g.vertex_count() == 0) return {true, {}};
    Rational ra = a.reduced(), rb = b.reduced();
    std::int64_t q = std::lcm(ra.den, rb.den);
    std::int64_t pa = ra.num * (q / ra.den);
    std::int64_t pb = rb.num * (q / rb.den);

    // e(S) < a|S| - b for all nonempty S  <=>  min over nonempty S of
    // pa*|S| - q*e(S) is > pb.
    Instance inst(g, true, pa, q);
    Best best = scan_nonempty(inst, q);
    if (best.value > pb) return {true, {}};
    return {false, best.subset};
}

HypothesisResult check_hypothesis(const WeightedMultigraph& g) {
    if (g.vertex_count() == 0) return {true, std::nullopt};
    SubsetResult min = min_potential(g, Constraint::nonempty());
    if (min.potential.value > -g.params().beta_scaled()) return {true, std::nullopt};
    return {false, min};
}

}  // namespace forestcol
