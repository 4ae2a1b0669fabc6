#include <catch2/catch_amalgamated.hpp>

#include "meg/dynamic.hpp"
#include "meg/reporting.hpp"

using namespace meg;

TEST_CASE("tree deletion case table") {
    Graph p5 = gen_path(5).graph;
    Prediction mid = predict_tree_deletion(p5, EdgeId(1, 2));
    CHECK(mid.kind == PredictionKind::exact);
    CHECK(mid.value == 4);
    CHECK(meg_number(delete_edge(p5, EdgeId(1, 2))) == 4);

    Graph star = gen_star(4).graph;  // center degree 3
    Prediction leaf = predict_tree_deletion(star, EdgeId(0, 1));
    CHECK(leaf.value == 2);

    std::vector<EdgeId> ds{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
    Graph double_star(6, ds);
    Prediction center = predict_tree_deletion(double_star, EdgeId(0, 1));
    CHECK(center.value == 4);
    CHECK(meg_number(delete_edge(double_star, EdgeId(0, 1))) == 4);

    CHECK(predict_tree_deletion(gen_path(2).graph, EdgeId(0, 1)).value == 0);

    SECTION("the degree dispatch is total") {
        Rng seeds(101);
        for (int trial = 0; trial < 25; ++trial) {
            Graph t = gen_random_tree(2 + static_cast<int>(seeds.below(14)), seeds.raw()).graph;
            for (const EdgeId& e : t.edges()) {
                Prediction p = predict_tree_deletion(t, e);
                REQUIRE(p.kind == PredictionKind::exact);
                REQUIRE_FALSE(p.case_label.empty());
            }
        }
    }
    CHECK_THROWS_AS(predict_tree_deletion(gen_cycle(4).graph, EdgeId(0, 1)), PreconditionError);
}

TEST_CASE("path deletion by position") {
    CHECK(predict_path_deletion(2, 0).value == 0);
    CHECK(predict_path_deletion(4, 0).value == 2);
    CHECK(predict_path_deletion(5, 2).value == 4);
    CHECK_THROWS_AS(predict_path_deletion(5, 4), PreconditionError);
    CHECK_THROWS_AS(predict_path_deletion(1, 0), PreconditionError);

    SECTION("matches the tree table on canonical paths") {
        for (int n = 2; n <= 9; ++n) {
            Graph p = gen_path(n).graph;
            for (int pos = 0; pos + 1 < n; ++pos)
                REQUIRE(predict_path_deletion(n, pos).value ==
                        predict_tree_deletion(p, EdgeId(pos, pos + 1)).value);
        }
    }
}

TEST_CASE("cycle deletion always lands at two") {
    for (int n : {3, 4, 10}) {
        CHECK(predict_cycle_deletion(n).value == 2);
        Graph c = gen_cycle(n).graph;
        CHECK(meg_number(delete_edge(c, EdgeId(0, 1))) == 2);
        CHECK(meg_path(n) == 2);  // the remnant is a path
    }
    CHECK_THROWS_AS(predict_cycle_deletion(2), PreconditionError);
}

TEST_CASE("unicyclic deletion") {
    // 5-cycle with a pendant at vertex 0
    Graph g(6, std::vector<EdgeId>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});

    Prediction unbranched = predict_unicyclic_deletion(g, EdgeId(2, 3));
    CHECK(unbranched.value == 3);  // l + 2
    CHECK(meg_number(delete_edge(g, EdgeId(2, 3))) == 3);

    Prediction one_branch = predict_unicyclic_deletion(g, EdgeId(0, 1));
    CHECK(one_branch.value == 2);  // l + 1
    CHECK(meg_number(delete_edge(g, EdgeId(0, 1))) == 2);

    SECTION("both endpoints branched") {
        Graph two(8, std::vector<EdgeId>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {6, 7}});
        Prediction p = predict_unicyclic_deletion(two, EdgeId(0, 1));
        CHECK(p.value == 2);  // l
        CHECK(meg_number(delete_edge(two, EdgeId(0, 1))) == 2);
    }
    SECTION("non-cycle edge splits into unicyclic + tree components") {
        Graph tail(7, std::vector<EdgeId>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
        Prediction p = predict_unicyclic_deletion(tail, EdgeId(5, 6));
        CHECK(p.value == 3);  // unicyclic part 3, isolated vertex 0
        CHECK(meg_number(delete_edge(tail, EdgeId(5, 6))) == 3);

        Prediction inner = predict_unicyclic_deletion(tail, EdgeId(0, 5));
        CHECK(inner.value == 3 + 2);  // bare 5-cycle + a single edge
        CHECK(meg_number(delete_edge(tail, EdgeId(0, 5))) == 5);
    }
    CHECK_THROWS_AS(predict_unicyclic_deletion(gen_path(4).graph, EdgeId(0, 1)), PreconditionError);
}

TEST_CASE("grid edge context") {
    GridEdgeContext a = grid_edge_context(3, 3, {2, 1}, {2, 2});
    CHECK(a.d1 == 3);
    CHECK(a.d2 == 4);
    CHECK(a.c == 2);

    GridEdgeContext b = grid_edge_context(4, 4, {2, 2}, {2, 3});
    CHECK(b.s_e == std::vector<EdgeId>{{grid_index(4, 4, 1, 2), grid_index(4, 4, 1, 3)}});
    CHECK(b.s_1.size() == 2);

    GridEdgeContext c = grid_edge_context(5, 5, {3, 2}, {3, 3});
    CHECK(c.s_e.empty());
    CHECK(c.s_1.empty());

    CHECK_THROWS_AS(grid_edge_context(3, 3, {2, 1}, {3, 2}), PreconditionError);  // not adjacent
    CHECK_THROWS_AS(grid_edge_context(3, 3, {0, 1}, {1, 1}), PreconditionError);  // off the grid

    SECTION("qualifying parallel-edge endpoints come in pairs") {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {4, 4}, {2, 4}}) {
            Graph g = gen_grid(m, n).graph;
            for (const EdgeId& e : g.edges()) {
                auto [ra, ca] = grid_coord(m, n, e.a);
                auto [rb, cb] = grid_coord(m, n, e.b);
                GridEdgeContext ctx = grid_edge_context(m, n, {ra, ca}, {rb, cb});
                std::size_t s = ctx.s_1.size();
                REQUIRE((s == 0 || s == 2 || s == 4));
            }
        }
    }
}

TEST_CASE("grid deletion predictions") {
    CHECK(predict_grid_deletion(grid_edge_context(3, 3, {2, 1}, {2, 2})).value == 6);
    CHECK(predict_grid_deletion(grid_edge_context(4, 4, {2, 2}, {2, 3})).value == 12);
    CHECK(predict_grid_deletion(grid_edge_context(5, 5, {3, 2}, {3, 3})).value == 18);

    SECTION("covered cases match the exact solver on whole grids") {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 5}, {3, 3}, {3, 4}, {4, 4}}) {
            auto gen = gen_grid(m, n);
            for (const EdgeId& e : gen.graph.edges()) {
                DeletionReport r = analyze_deletion(gen.graph, e, "grid", {}, &gen.tag);
                REQUIRE(r.verdict != Verdict::violation);
            }
        }
    }
    SECTION("thin-grid conditions fall outside the covered cases") {
        GridEdgeContext rung = grid_edge_context(2, 5, {1, 3}, {2, 3});
        CHECK(predict_grid_deletion(rung).kind == PredictionKind::not_covered);
        GridEdgeContext along = grid_edge_context(2, 5, {1, 1}, {1, 2});
        CHECK(predict_grid_deletion(along).kind == PredictionKind::not_covered);
    }
}

TEST_CASE("tree k-edge deletion bounds") {
    Graph p7 = gen_path(7).graph;
    Prediction none = tree_k_deletion_bounds(p7, 0);
    CHECK(none.lower == 2);
    CHECK(none.upper == 2);

    Prediction two = tree_k_deletion_bounds(p7, 2);
    CHECK(two.lower == 0);
    CHECK(two.upper == 6);

    Prediction four = tree_k_deletion_bounds(p7, 4);  // past ceil(6/2)-1
    CHECK(four.upper == 9);

    CHECK_THROWS_AS(tree_k_deletion_bounds(p7, 7), PreconditionError);
    CHECK_THROWS_AS(tree_k_deletion_bounds(gen_cycle(5).graph, 1), PreconditionError);
}

TEST_CASE("pendant removal bounds and tightness") {
    Graph star = gen_star(7).graph;
    Prediction sp = check_pendant_removal(star, star.edges());
    CHECK(sp.lower == 0);
    CHECK(sp.upper == 6);
    CHECK(meg_number(delete_edges(star, star.edges())) == 0);

    Graph p6 = gen_path(6).graph;
    std::vector<EdgeId> ends{EdgeId(0, 1), EdgeId(4, 5)};
    Prediction pp = check_pendant_removal(p6, ends);
    CHECK(pp.upper == 2);
    CHECK(meg_number(delete_edges(p6, ends)) == 2);

    Graph pbt = gen_perfect_binary_tree(3).graph;
    std::vector<EdgeId> pend;
    for (const EdgeId& e : pbt.edges())
        if (pbt.degree(e.a) == 1 || pbt.degree(e.b) == 1) pend.push_back(e);
    REQUIRE(pend.size() == 8);
    Prediction bp = check_pendant_removal(pbt, pend);
    int exact = meg_number(delete_edges(pbt, pend));
    CHECK(exact == 4);
    CHECK(bp.lower < exact);
    CHECK(exact < bp.upper);

    CHECK_THROWS_AS(check_pendant_removal(p6, std::vector<EdgeId>{EdgeId(2, 3)}), PreconditionError);
}

TEST_CASE("cut edge removal bounds and tightness") {
    Graph h1 = gen_path(8).graph;
    Prediction b1 = check_cut_edge_removal(h1, EdgeId(3, 4));
    CHECK(meg_number(delete_edge(h1, EdgeId(3, 4))) == b1.upper);

    std::vector<EdgeId> ds{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}};
    Graph h2(8, ds);
    Prediction b2 = check_cut_edge_removal(h2, EdgeId(0, 1));
    CHECK(meg_number(delete_edge(h2, EdgeId(0, 1))) == b2.lower);

    std::vector<EdgeId> br{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}};
    Graph h3(7, br);
    int after = meg_number(delete_edge(h3, EdgeId(0, 3)));
    Prediction b3 = check_cut_edge_removal(h3, EdgeId(0, 3));
    CHECK(after == meg_number(h3) + 1);
    CHECK(b3.lower < after);
    CHECK(after < b3.upper);

    CHECK_THROWS_AS(check_cut_edge_removal(gen_cycle(5).graph, EdgeId(0, 1)), PreconditionError);
    CHECK_THROWS_AS(check_cut_edge_removal(gen_path(3).graph, EdgeId(0, 1)), PreconditionError);
}

TEST_CASE("cut vertex incident removal bound") {
    Graph p6 = gen_path(6).graph;
    Prediction b = check_cut_vertex_incident_removal(p6, EdgeId(2, 3), 2);
    CHECK(b.lower == 0);
    CHECK(b.upper == 4);
    CHECK(meg_number(delete_edge(p6, EdgeId(2, 3))) == 4);

    Graph penta(6, std::vector<EdgeId>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
    Prediction pb = check_cut_vertex_incident_removal(penta, EdgeId(0, 5), 0);
    int after = meg_number(delete_edge(penta, EdgeId(0, 5)));
    CHECK(after == 3);
    CHECK(after <= pb.upper);

    Graph bowtie(5, std::vector<EdgeId>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    Prediction bb = check_cut_vertex_incident_removal(bowtie, EdgeId(0, 1), 0);
    CHECK(meg_number(delete_edge(bowtie, EdgeId(0, 1))) <= bb.upper);

    CHECK_THROWS_AS(check_cut_vertex_incident_removal(p6, EdgeId(2, 3), 5), PreconditionError);
    CHECK_THROWS_AS(check_cut_vertex_incident_removal(gen_cycle(5).graph, EdgeId(0, 1), 0),
                    PreconditionError);
}

TEST_CASE("simplicial incident removal bound") {
    Graph k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
    Prediction kb = check_simplicial_incident_removal(k4, EdgeId(0, 1), 0);
    CHECK(kb.lower == 1);
    CHECK(kb.upper == 5);
    CHECK(meg_number(delete_edge(k4, EdgeId(0, 1))) == 4);

    Graph c3 = gen_cycle(3).graph;
    Prediction cb = check_simplicial_incident_removal(c3, EdgeId(0, 1), 0);
    CHECK(cb.lower == 1);
    CHECK(cb.upper == 4);
    CHECK(meg_number(delete_edge(c3, EdgeId(0, 1))) == 2);

    Graph tail(5, std::vector<EdgeId>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    Prediction tb = check_simplicial_incident_removal(tail, EdgeId(0, 1), 0);
    int after = meg_number(delete_edge(tail, EdgeId(0, 1)));
    CHECK(tb.lower <= after);
    CHECK(after <= tb.upper);

    CHECK_THROWS_AS(check_simplicial_incident_removal(gen_path(4).graph, EdgeId(1, 2), 1),
                    PreconditionError);  // degree 2 but not simplicial
    CHECK_THROWS_AS(check_simplicial_incident_removal(gen_path(4).graph, EdgeId(0, 1), 0),
                    PreconditionError);  // degree 1
}

TEST_CASE("extremal flag") {
    CHECK(is_meg_extremal(gen_cycle(4).graph));
    CHECK_FALSE(is_meg_extremal(gen_path(3).graph));
    Graph fig = gen_split_counterexample(8).graph;
    CHECK(is_meg_extremal(fig));
    CHECK_FALSE(is_meg_extremal(delete_edge(fig, EdgeId(0, 6))));
}

TEST_CASE("analyze_deletion produces stable reports") {
    Graph p5 = gen_path(5).graph;
    DeletionReport r = analyze_deletion(p5, EdgeId(1, 2), "p5");
    CHECK(r.meg_before == 2);
    REQUIRE(r.meg_after);
    CHECK(*r.meg_after == 4);
    CHECK(r.verdict == Verdict::match);

    Json j = to_json(r);
    CHECK(j["graph"] == "p5");
    CHECK(j["edge"] == Json::array({1, 2}));
    CHECK(j["meg_before"] == 2);
    CHECK(j["meg_after"] == 4);
    CHECK(j["prediction"]["kind"] == "exact");
    CHECK(j["prediction"]["value"] == 4);
    CHECK(j["verdict"] == "match");
    CHECK(to_json(analyze_deletion(p5, EdgeId(1, 2), "p5")).dump() == j.dump());

    SECTION("budget-skipped exact recomputation is marked, not guessed") {
        auto gen = gen_grid(5, 5);
        EdgeId e(grid_index(5, 5, 3, 2), grid_index(5, 5, 3, 3));
        DeletionReport big = analyze_deletion(gen.graph, e, "g55", SolverOptions{24, true}, &gen.tag);
        CHECK(big.meg_before == 16);  // class formula past the budget
        CHECK_FALSE(big.meg_after.has_value());
        CHECK(big.verdict == Verdict::skipped_exact);
        CHECK(big.prediction.value == 18);
        CHECK(to_json(big)["meg_after"].is_null());
    }
}
