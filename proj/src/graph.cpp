#include "forestcol/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace forestcol {

namespace {

std::string vid(VertexId id) { return std::to_string(id); }

}  // namespace

WeightedMultigraph::WeightedMultigraph(Params params, std::vector<VertexSpec> vertices,
                                       std::vector<EdgeRec> edges, NormalizationReport* report)
    : params_(params) {
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
    ids_.reserve(vertices.size());
    w1_.reserve(vertices.size());
    w2_.reserve(vertices.size());
    for (const VertexSpec& v : vertices) {
        if (!ids_.empty() && ids_.back() == v.id)
            throw std::invalid_argument("duplicate vertex id " + vid(v.id));
        if (v.w1 < 0 || v.w2 < 0)
            throw std::invalid_argument("negative weight on vertex " + vid(v.id));
        int w1 = v.w1, w2 = v.w2;
        if (w1 > params_.d1() + 1) {
            w1 = params_.d1() + 1;
            if (report) {
                report->weights_clamped++;
                report->notes.push_back("w1 clamped to " + std::to_string(w1) +
                                        " on vertex " + vid(v.id));
            }
        }
        if (w2 > params_.d2() + 1) {
            w2 = params_.d2() + 1;
            if (report) {
                report->weights_clamped++;
                report->notes.push_back("w2 clamped to " + std::to_string(w2) +
                                        " on vertex " + vid(v.id));
            }
        }
        ids_.push_back(v.id);
        w1_.push_back(w1);
        w2_.push_back(w2);
    }

    std::map<std::pair<VertexId, VertexId>, int> merged;
    for (const EdgeRec& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("loop at vertex " + vid(e.u));
        if (e.multiplicity < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
        VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        if (slot_of(a) < 0) throw std::invalid_argument("edge endpoint " + vid(a) + " unknown");
        if (slot_of(b) < 0) throw std::invalid_argument("edge endpoint " + vid(b) + " unknown");
        merged[{a, b}] += e.multiplicity;
    }
    edges_.reserve(merged.size());
    for (const auto& [key, mult] : merged) {
        int m = mult;
        if (m > 2) {
            m = 2;
            if (report) {
                report->multiplicities_clamped++;
                report->notes.push_back("multiplicity clamped to 2 on edge " + vid(key.first) +
                                        "-" + vid(key.second));
            }
        }
        edges_.push_back({key.first, key.second, m});
        edge_units_ += m;
    }
    build_adjacency();
}

void WeightedMultigraph::build_adjacency() {
    adj_.assign(ids_.size(), {});
    for (const EdgeRec& e : edges_) {
        int su = slot_of(e.u), sv = slot_of(e.v);
        adj_[su].emplace_back(e.v, e.multiplicity);
        adj_[sv].emplace_back(e.u, e.multiplicity);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int WeightedMultigraph::slot_of(VertexId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int WeightedMultigraph::require_slot(VertexId id) const {
    int s = slot_of(id);
    if (s < 0) throw std::invalid_argument("unknown vertex id " + vid(id));
    return s;
}

bool WeightedMultigraph::has_vertex(VertexId id) const { return slot_of(id) >= 0; }

int WeightedMultigraph::weight(VertexId id, int color) const {
    int s = require_slot(id);
    return color == 1 ? w1_[s] : w2_[s];
}

int WeightedMultigraph::capacity(VertexId id, int color) const {
    return params_.d(color) + 1 - weight(id, color);
}

int WeightedMultigraph::degree(VertexId id) const {
    int s = require_slot(id);
    int d = 0;
    for (const auto& [nb, mult] : adj_[s]) d += mult;
    return d;
}

std::span<const std::pair<VertexId, int>> WeightedMultigraph::neighbors(VertexId id) const {
    int s = require_slot(id);
    return adj_[s];
}

int WeightedMultigraph::multiplicity(VertexId a, VertexId b) const {
    int s = require_slot(a);
    require_slot(b);
    for (const auto& [nb, mult] : adj_[s])
        if (nb == b) return mult;
    return 0;
}

std::vector<std::vector<VertexId>> WeightedMultigraph::components() const {
    int n = vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int label = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(start);
        comp[start] = label;
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            out[label].push_back(ids_[s]);
            for (const auto& [nb, mult] : adj_[s]) {
                int t = slot_of(nb);
                if (comp[t] < 0) {
                    comp[t] = label;
                    q.push(t);
                }
            }
        }
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

bool WeightedMultigraph::connected() const {
    return vertex_count() <= 1 || components().size() == 1;
}

WeightedMultigraph WeightedMultigraph::delete_vertex(VertexId id) const {
    require_slot(id);
    std::vector<VertexSpec> verts;
    verts.reserve(ids_.size() - 1);
    for (size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] != id) verts.push_back({ids_[i], w1_[i], w2_[i]});
    std::vector<EdgeRec> edges;
    edges.reserve(edges_.size());
    for (const EdgeRec& e : edges_)
        if (e.u != id && e.v != id) edges.push_back(e);
    return WeightedMultigraph(params_, std::move(verts), std::move(edges));
}

WeightedMultigraph WeightedMultigraph::induced(std::span<const VertexId> keep) const {
    std::vector<VertexId> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<VertexSpec> verts;
    verts.reserve(sorted.size());
    for (VertexId id : sorted) {
        int s = require_slot(id);
        verts.push_back({id, w1_[s], w2_[s]});
    }
    auto kept = [&](VertexId id) {
        return std::binary_search(sorted.begin(), sorted.end(), id);
    };
    std::vector<EdgeRec> edges;
    for (const EdgeRec& e : edges_)
        if (kept(e.u) && kept(e.v)) edges.push_back(e);
    return WeightedMultigraph(params_, std::move(verts), std::move(edges));
}

WeightedMultigraph WeightedMultigraph::add_vertex(VertexId id, int w1, int w2) const {
    if (has_vertex(id)) throw std::invalid_argument("vertex id " + vid(id) + " already present");
    if (w1 < 0 || w1 > params_.d1() + 1 || w2 < 0 || w2 > params_.d2() + 1)
        throw std::invalid_argument("weight out of range for new vertex " + vid(id));
    std::vector<VertexSpec> verts;
    verts.reserve(ids_.size() + 1);
    for (size_t i = 0; i < ids_.size(); ++i) verts.push_back({ids_[i], w1_[i], w2_[i]});
    verts.push_back({id, w1, w2});
    return WeightedMultigraph(params_, std::move(verts), edges_);
}

WeightedMultigraph WeightedMultigraph::add_edge(VertexId a, VertexId b) const {
    require_slot(a);
    require_slot(b);
    if (a == b) throw std::invalid_argument("loop at vertex " + vid(a));
    std::vector<VertexSpec> verts;
    verts.reserve(ids_.size());
    for (size_t i = 0; i < ids_.size(); ++i) verts.push_back({ids_[i], w1_[i], w2_[i]});
    std::vector<EdgeRec> edges = edges_;
    VertexId u = std::min(a, b), v = std::max(a, b);
    bool found = false;
    for (EdgeRec& e : edges) {
        if (e.u == u && e.v == v) {
            e.multiplicity = std::min(2, e.multiplicity + 1);
            found = true;
            break;
        }
    }
    if (!found) edges.push_back({u, v, 1});
    return WeightedMultigraph(params_, std::move(verts), std::move(edges));
}

WeightedMultigraph WeightedMultigraph::bump_weight(VertexId id, int color, int delta) const {
    if (color != 1 && color != 2) throw std::invalid_argument("color must be 1 or 2");
    if (delta != 1 && delta != -1) throw std::invalid_argument("delta must be +1 or -1");
    int s = require_slot(id);
    int w = (color == 1 ? w1_[s] : w2_[s]) + delta;
    if (w < 0) throw std::invalid_argument("weight underflow on vertex " + vid(id));
    if (w > params_.d(color) + 1)
        throw std::invalid_argument("capacity underflow on vertex " + vid(id));
    std::vector<VertexSpec> verts;
    verts.reserve(ids_.size());
    for (size_t i = 0; i < ids_.size(); ++i) verts.push_back({ids_[i], w1_[i], w2_[i]});
    if (color == 1)
        verts[s].w1 = w;
    else
        verts[s].w2 = w;
    return WeightedMultigraph(params_, std::move(verts), edges_);
}

WeightedMultigraph WeightedMultigraph::set_capacity_zero(VertexId id, int color) const {
    if (color != 1 && color != 2) throw std::invalid_argument("color must be 1 or 2");
    int s = require_slot(id);
    std::vector<VertexSpec> verts;
    verts.reserve(ids_.size());
    for (size_t i = 0; i < ids_.size(); ++i) verts.push_back({ids_[i], w1_[i], w2_[i]});
    if (color == 1)
        verts[s].w1 = params_.d1() + 1;
    else
        verts[s].w2 = params_.d2() + 1;
    return WeightedMultigraph(params_, std::move(verts), edges_);
}

ScaledPotential vertex_potential(const WeightedMultigraph& g, VertexId u) {
    const Params& p = g.params();
    std::int64_t c1 = g.capacity(u, 1);
    std::int64_t c2 = g.capacity(u, 2);
    return {p.alpha_scaled() * c1 + p.beta_scaled() * (c2 - 1)};
}

ScaledPotential subset_potential(const WeightedMultigraph& g, std::span<const VertexId> s) {
    std::int64_t total = 0;
    std::vector<VertexId> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId u : sorted) total += vertex_potential(g, u).value;
    auto inside = [&](VertexId id) {
        return std::binary_search(sorted.begin(), sorted.end(), id);
    };
    std::int64_t inner_units = 0;
    for (const EdgeRec& e : g.edges())
        if (inside(e.u) && inside(e.v)) inner_units += e.multiplicity;
    total -= g.params().scale() * inner_units;
    return {total};
}

VertexProfile profile(const WeightedMultigraph& g, VertexId u) {
    VertexProfile pr;
    pr.degree = g.degree(u);
    pr.c1 = g.capacity(u, 1);
    pr.c2 = g.capacity(u, 2);
    auto classify = [&](int ci, int cother, bool& null_f, bool& slack_f, bool& constr_f) {
        null_f = (ci == 0);
        slack_f = !null_f && (ci >= pr.degree + 1 || (ci == pr.degree && cother >= 1));
        constr_f = !null_f && !slack_f;
    };
    classify(pr.c1, pr.c2, pr.null1, pr.slack1, pr.constrained1);
    classify(pr.c2, pr.c1, pr.null2, pr.slack2, pr.constrained2);
    pr.doubly_constrained = pr.constrained1 && pr.constrained2;
    pr.somehow_constrained = pr.constrained1 || pr.constrained2;
    pr.three_two_two = pr.degree == 3 && pr.c1 >= 2 && pr.c2 >= 2;
    pr.triple_three = pr.degree == 3 && pr.c1 >= 3 && pr.c2 >= 3;
    return pr;
}

std::optional<int> girth(const WeightedMultigraph& g) {
    for (const EdgeRec& e : g.edges())
        if (e.multiplicity >= 2) return 2;

    // Simple graph now; BFS from every vertex, closing edges give cycles.
    int n = g.vertex_count();
    const auto& ids = g.vertices();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        q.push(root);
        dist[root] = 0;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            if (2 * dist[a] >= best) continue;
            for (const auto& [nb, mult] : g.neighbors(ids[a])) {
                int b = g.slot_of(nb);
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    parent[b] = a;
                    q.push(b);
                } else if (b != parent[a] && a != parent[b]) {
                    best = std::min(best, dist[a] + dist[b] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

}  // namespace forestcol
