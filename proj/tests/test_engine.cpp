#include <doctest.h>

#include <random>

#include "forestcol/constructions.hpp"
#include "forestcol/engine.hpp"
#include "forestcol/verifier.hpp"
#include "test_util.hpp"

using namespace forestcol;

namespace {

const EngineOptions kParanoid{true};

WeightedMultigraph weightless(Params p, int n, std::vector<EdgeRec> edges) {
    std::vector<VertexSpec> verts;
    for (int i = 0; i < n; ++i) verts.push_back({i, 0, 0});
    return WeightedMultigraph(p, std::move(verts), std::move(edges));
}

ColorResult color_checked(const WeightedMultigraph& g) {
    ColorResult res = color(g, kParanoid);
    REQUIRE(res.ok());
    CHECK(verify_coloring(g, res.coloring).ok);
    for (const CaseRecord& r : res.trace.records) CHECK(r.flips <= 1);
    return res;
}

// Preorder trace: each record's parent is the nearest earlier record one
// depth up; recursion size must shrink strictly along every chain.
void check_sizes_decrease(const CaseTrace& trace) {
    for (size_t i = 0; i < trace.records.size(); ++i) {
        const CaseRecord& rec = trace.records[i];
        if (rec.depth == 0) continue;
        for (size_t k = i; k-- > 0;) {
            if (trace.records[k].depth == rec.depth - 1) {
                CHECK(rec.recursion_size < trace.records[k].recursion_size);
                break;
            }
        }
    }
}

}  // namespace

TEST_CASE("engine gates: regime and hypothesis") {
    SUBCASE("d2 < 2*d1+2 is refused") {
        WeightedMultigraph g = weightless(Params(1, 2), 2, {{0, 1, 1}});
        ColorResult res = color(g);
        CHECK(res.status == ColorStatus::regime_violation);
    }
    SUBCASE("zero-capacity singleton is a hypothesis witness") {
        auto g = zero_capacity_seed(Params(0, 2));
        ColorResult res = color(g);
        CHECK(res.status == ColorStatus::hypothesis_violation);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->subset == std::vector<VertexId>{0});
        CHECK(res.witness->potential.value == -2);
    }
}

TEST_CASE("case 1: base cases and component split") {
    Params p(0, 2);

    SUBCASE("single weightless vertex lands in class 1 by tie-break") {
        WeightedMultigraph g(p, {{5, 0, 0}}, {});
        ColorResult res = color_checked(g);
        CHECK(res.coloring.class_of(5) == 1);
        CHECK(res.trace.contains_case(1));
    }

    SUBCASE("empty graph") {
        WeightedMultigraph g(p, {}, {});
        ColorResult res = color(g, kParanoid);
        CHECK(res.ok());
        CHECK(res.coloring.assignment.empty());
    }

    SUBCASE("two disjoint edges recurse per component") {
        WeightedMultigraph g = weightless(p, 4, {{0, 1, 1}, {2, 3, 1}});
        ColorResult res = color_checked(g);
        int case1_records = 0;
        for (const CaseRecord& r : res.trace.records)
            if (r.case_id == 1) ++case1_records;
        CHECK(case1_records == 3);  // split + two bases
        check_sizes_decrease(res.trace);
    }

    SUBCASE("weightless P3 solved by enumeration") {
        WeightedMultigraph g = weightless(p, 3, {{0, 1, 1}, {1, 2, 1}});
        ColorResult res = color_checked(g);
        CHECK(res.trace.records.size() == 1);
        CHECK(res.trace.records[0].case_id == 1);
    }
}

TEST_CASE("case 2: low-potential proper piece splits the graph") {
    Params p(0, 2);
    // Path on five vertices whose first vertex carries weights (c1=0, c2=1),
    // a weakened sharp seed: rho({0}) = 0 <= alpha - beta.
    auto g = path(p, 5).set_capacity_zero(0, 1).bump_weight(0, 2).bump_weight(0, 2);
    REQUIRE(check_hypothesis(g).ok);
    ColorResult res = color_checked(g);
    CHECK(res.trace.contains_case(2));
    CHECK(res.coloring.class_of(0) == 2);  // forced by c1 = 0
    check_sizes_decrease(res.trace);

    SUBCASE("flag graph with one weight unit removed also triggers it") {
        auto flagged = attach_flag({{zero_capacity_seed(p), 0}}, {0, 0});
        auto weakened = flagged.bump_weight(0, 2, -1);
        // weakened flag alone is n = 3; extend by a path so case 2 can fire
        auto grown = weakened.add_vertex(3, 0, 0).add_vertex(4, 0, 0).add_edge(2, 3).add_edge(
            3, 4);
        REQUIRE(check_hypothesis(grown).ok);
        ColorResult r2 = color_checked(grown);
        CHECK(r2.trace.contains_case(2));
    }
}

TEST_CASE("case 2 with a positive-potential piece takes the bump branch") {
    // H = {0, 1} has rho = alpha - beta > 0; vertex 0 carries the boundary
    // edge and its c1 = 0 forces it into class 2 after the W2 bump, which
    // is exactly the branch where the boundary edge may stay monochromatic.
    Params p(2, 6);
    WeightedMultigraph g(p,
                         {{0, 3, 4}, {1, 1, 4}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}},
                         {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
    REQUIRE(check_hypothesis(g).ok);
    ColorResult res = color_checked(g);
    REQUIRE(res.trace.contains_case(2));
    bool saw_bump = false;
    for (const CaseRecord& r : res.trace.records)
        if (r.case_id == 2 && r.detail.find("z=0 x=2") != std::string::npos) saw_bump = true;
    CHECK(saw_bump);
    CHECK(res.coloring.class_of(0) == 2);
}

TEST_CASE("case 2 bump branch with the bumped vertex landing in class 1") {
    // H = {0, 1} sits at exactly alpha - beta > 0; the W2 bump zeroes c2(0)
    // so vertex 0 must take class 1 and the boundary edge gets the plain
    // capacity-zero treatment on its far side.
    Params p(2, 6);
    WeightedMultigraph g(p,
                         {{0, 2, 6}, {1, 1, 4}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}},
                         {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
    REQUIRE(check_hypothesis(g).ok);
    std::vector<VertexId> h{0, 1};
    REQUIRE(subset_potential(g, h).value == p.alpha_scaled() - p.beta_scaled());
    ColorResult res = color_checked(g);
    bool saw = false;
    for (const CaseRecord& r : res.trace.records)
        if (r.case_id == 2 && r.detail.find("z=0 x=2") != std::string::npos) saw = true;
    CHECK(saw);
    CHECK(res.coloring.class_of(0) == 1);
}

TEST_CASE("case 2 no-match when the minimum sits above the gap") {
    Params p(0, 2);
    // Weightless singletons sit at 2 - alpha > alpha - beta.
    auto g = cycle(p, 5);
    ColorResult res = color_checked(g);
    CHECK_FALSE(res.trace.contains_case(2));
}

TEST_CASE("case 3: pendant vertices") {
    SUBCASE("weightless pendant takes the color opposite its support") {
        Params p(0, 2);
        auto g = path(p, 4);
        ColorResult res = color_checked(g);
        CHECK(res.trace.contains_case(3));
        CHECK(res.coloring.class_of(0) != res.coloring.class_of(1));
    }

    SUBCASE("1-null pendant with a simple edge joins class 2") {
        Params p(0, 2);
        auto g = path(p, 4).set_capacity_zero(0, 1);
        REQUIRE(check_hypothesis(g).ok);
        ColorResult res = color_checked(g);
        CHECK(res.trace.contains_case(3));
        CHECK(res.coloring.class_of(0) == 2);
    }

    SUBCASE("2-null pendant with a simple edge joins class 1") {
        Params p(2, 6);
        // c2(0) = 0, c1(0) = 3; high capacities keep case 2 quiet
        auto g = path(p, 4).set_capacity_zero(0, 2);
        REQUIRE(check_hypothesis(g).ok);
        ColorResult res = color_checked(g);
        CHECK(res.trace.contains_case(3));
        CHECK(res.coloring.class_of(0) == 1);
    }

    SUBCASE("2-null pendant on a doubled edge zeroes the support's c1") {
        Params p(2, 6);
        WeightedMultigraph g(p,
                             {{0, 0, 7}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}},
                             {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
        REQUIRE(check_hypothesis(g).ok);
        ColorResult res = color_checked(g);
        CHECK(res.trace.contains_case(3));
        CHECK(res.coloring.class_of(0) == 1);
        CHECK(res.coloring.class_of(1) == 2);  // doubled edge forces the split
    }

    SUBCASE("weightless doubled-edge pendant still colors") {
        Params p(0, 2);
        WeightedMultigraph g = weightless(p, 4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}});
        ColorResult res = color_checked(g);
        CHECK(res.coloring.class_of(0) != res.coloring.class_of(1));
    }
}

TEST_CASE("case 4: degree-2 vertices with slack") {
    SUBCASE("weightless C4 at (0,2)") {
        Params p(0, 2);
        auto g = cycle(p, 4);
        // exhaustively: at least two valid partitions exist
        int valid = 0;
        for (std::uint32_t mask = 0; mask < 16; ++mask) {
            Coloring c;
            for (int k = 0; k < 4; ++k) c.set(k, (mask >> k) & 1 ? 2 : 1);
            if (verify_coloring(g, c).ok) ++valid;
        }
        CHECK(valid >= 2);
        ColorResult res = color_checked(g);
        CHECK(res.trace.contains_case(4));
        check_sizes_decrease(res.trace);
    }

    SUBCASE("swapped branch with c1 >= 2 and c2 = 1") {
        Params p(1, 4);
        auto g = cycle(p, 5);
        for (int k = 0; k < p.d2(); ++k) g = g.bump_weight(0, 2);
        REQUIRE(g.capacity(0, 2) == 1);
        REQUIRE(check_hypothesis(g).ok);
        ColorResult res = color_checked(g);
        CHECK(res.trace.contains_case(4));
    }
}

TEST_CASE("case 5: three-two-two on a parallel edge") {
    Params p(1, 4);
    // 0 has N^m = {2, 1, 1}: doubled edge to 1, simple edge to 2; everything
    // else is degree >= 3 so no earlier case fires.
    WeightedMultigraph g = weightless(
        p, 5, {{0, 1, 2}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
    REQUIRE(check_hypothesis(g).ok);
    REQUIRE(profile(g, 0).three_two_two);
    ColorResult res = color_checked(g);
    CHECK(res.trace.contains_case(5));
    CHECK(res.coloring.class_of(0) != res.coloring.class_of(1));
    check_sizes_decrease(res.trace);
}

TEST_CASE("case 5 second surgery: bumping v alone breaks the hypothesis") {
    // v has capacities (1,1), so reserving both colors at v drives {v} to
    // -beta; the engine must fall back to zeroing c1(x) and color u with 1.
    Params p(1, 4);
    std::vector<VertexSpec> verts{{0, 0, 0}, {1, 0, 0}, {2, 1, 4}};
    for (int i = 3; i <= 16; ++i) verts.push_back({i, 0, 0});
    std::vector<EdgeRec> edges{{0, 1, 2}, {0, 2, 1}, {2, 3, 1}, {1, 10, 1}};
    for (int i = 3; i <= 16; ++i) {
        int j = (i == 16) ? 3 : i + 1;
        edges.push_back({std::min(i, j), std::max(i, j), 1});
    }
    for (auto [a, b] : {std::pair{4, 7}, {5, 8}, {6, 9}, {11, 14}, {12, 15}, {13, 16}})
        edges.push_back({a, b, 1});
    WeightedMultigraph g(p, verts, edges);

    REQUIRE(check_hypothesis(g).ok);
    WeightedMultigraph cand_v =
        g.delete_vertex(0).bump_weight(2, 1).bump_weight(2, 2);
    REQUIRE_FALSE(check_hypothesis(cand_v).ok);

    ColorResult res = color_checked(g);
    bool pick_x = false;
    for (const CaseRecord& r : res.trace.records)
        if (r.case_id == 5 && r.detail.find("pick=x") != std::string::npos) pick_x = true;
    CHECK(pick_x);
    CHECK(res.coloring.class_of(0) == 1);
}

TEST_CASE("case 6: three-two-two with no doubly-constrained neighbor") {
    Params p(1, 4);
    // Weightless K4: every vertex is a three-two-two, nobody is
    // doubly-constrained.
    WeightedMultigraph g = weightless(
        p, 4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    REQUIRE(check_hypothesis(g).ok);
    ColorResult res = color_checked(g);
    CHECK(res.trace.contains_case(6));
    check_sizes_decrease(res.trace);
}

TEST_CASE("case 7: triple-three with two unconstrained neighbors") {
    Params p(2, 6);
    // 0 is a weightless triple-three; 1 is doubly-constrained (degree 4,
    // c1 = c2 = 3); 2, 3, 4 are weightless degree-3 vertices adjacent to 1,
    // so case 6 never fires.
    WeightedMultigraph g(p, {{0, 0, 0}, {1, 0, 4}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}},
                         {{0, 1, 1},
                          {0, 2, 1},
                          {0, 3, 1},
                          {1, 2, 1},
                          {1, 3, 1},
                          {1, 4, 1},
                          {2, 4, 1},
                          {3, 4, 1}});
    REQUIRE(check_hypothesis(g).ok);
    REQUIRE(profile(g, 0).triple_three);
    REQUIRE(profile(g, 1).doubly_constrained);
    ColorResult res = color_checked(g);
    CHECK(res.trace.contains_case(7));
    check_sizes_decrease(res.trace);
}

TEST_CASE("case 7 second surgery: the x1 bump breaks the hypothesis") {
    // The K4 through x1 (capacities (3,3)) sits at exactly alpha; bumping
    // both weights of x1 drops it by alpha + beta, landing on -beta, so the
    // engine must take the added-edge surgery instead.
    Params p(2, 6);
    std::vector<VertexSpec> verts{
        {0, 0, 0}, {1, 0, 4}, {2, 0, 0}, {3, 0, 0}, {4, 0, 4},
        {5, 0, 0}, {6, 0, 0}, {7, 0, 0}, {8, 0, 0}, {9, 0, 0}};
    std::vector<EdgeRec> edges{
        {0, 1, 1}, {0, 2, 1}, {0, 3, 1},
        {1, 5, 1}, {1, 6, 1}, {1, 7, 1}, {5, 6, 1}, {5, 7, 1}, {6, 7, 1},
        {2, 4, 1}, {3, 4, 1}, {4, 8, 1}, {4, 9, 1},
        {2, 8, 1}, {3, 9, 1}, {8, 9, 1}};
    WeightedMultigraph g(p, verts, edges);

    REQUIRE(check_hypothesis(g).ok);
    std::vector<VertexId> k4{1, 5, 6, 7};
    REQUIRE(subset_potential(g, k4).value == p.alpha_scaled());
    WeightedMultigraph g1 = g.delete_vertex(0).bump_weight(1, 1).bump_weight(1, 2);
    REQUIRE_FALSE(check_hypothesis(g1).ok);

    ColorResult res = color_checked(g);
    bool pick_g23 = false;
    for (const CaseRecord& r : res.trace.records)
        if (r.case_id == 7 && r.detail.find("pick=G23") != std::string::npos) pick_g23 = true;
    CHECK(pick_g23);
}

TEST_CASE("d1 = 0 never reaches cases 6 or 7") {
    Params p(0, 3);
    std::mt19937_64 rng(31);
    Rational a(2 * p.scale() - p.alpha_scaled(), p.scale());
    Rational b(-p.beta_scaled(), p.scale());
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto g = random_sparse(p, 14, seed, a, b);
        ColorResult res = color_checked(g);
        CHECK_FALSE(res.trace.contains_case(6));
        CHECK_FALSE(res.trace.contains_case(7));
    }
}

TEST_CASE("dodecahedron at (2,6) gets a clean coloring") {
    Params p(2, 6);
    auto g = dodecahedron(p);
    REQUIRE(check_hypothesis(g).ok);
    ColorResult res = color_checked(g);
    CHECK(res.ok());
    check_sizes_decrease(res.trace);
}

TEST_CASE("random hypothesis-passing corpus is always colored soundly") {
    const std::vector<std::pair<int, int>> param_pairs{{0, 2}, {0, 3}, {1, 4}, {2, 6}};
    for (auto [d1, d2] : param_pairs) {
        Params p(d1, d2);
        Rational a(2 * p.scale() - p.alpha_scaled(), p.scale());
        Rational b(-p.beta_scaled(), p.scale());
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto g = random_sparse(p, 8 + int(seed) * 4, seed * 77 + d2, a, b);
            REQUIRE(check_hypothesis(g).ok);
            ColorResult res = color_checked(g);
            check_sizes_decrease(res.trace);
        }
    }
}

TEST_CASE("weighted random graphs: engine agrees with the brute-force oracle's reach") {
    // Any graph passing the gate must be colored; the oracle double-checks
    // colorability on the same instances.
    std::mt19937_64 rng(1234);
    int colored = 0;
    for (int iter = 0; iter < 120; ++iter) {
        Params p(iter % 2, 2 + 2 * (iter % 2) + (iter % 3));
        if (!p.regime_ok()) continue;
        WeightedMultigraph g = testutil::random_graph(p, 2 + iter % 8, 10, rng);
        if (!check_hypothesis(g).ok) continue;
        ColorResult res = color(g, kParanoid);
        REQUIRE(res.ok());
        CHECK(verify_coloring(g, res.coloring).ok);
        CHECK(brute_force_color(g).has_value());
        ++colored;
    }
    CHECK(colored > 10);
}

TEST_CASE("deeper weighted fuzz at the larger parameter pairs") {
    // d1 >= 2 opens the triple-three cases; bigger instances drive longer
    // recursions through the full dispatch.
    std::mt19937_64 rng(777);
    const std::vector<std::pair<int, int>> pairs{{2, 6}, {2, 7}, {3, 8}};
    int colored = 0;
    for (int iter = 0; iter < 150; ++iter) {
        auto [d1, d2] = pairs[iter % pairs.size()];
        Params p(d1, d2);
        WeightedMultigraph g = testutil::random_graph(p, 6 + iter % 9, 10, rng);
        if (!check_hypothesis(g).ok) continue;
        ColorResult res = color(g, kParanoid);
        REQUIRE(res.ok());
        CHECK(verify_coloring(g, res.coloring).ok);
        ++colored;
    }
    CHECK(colored > 20);
}
