#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace gpkit;
using namespace fixtures;

TEST_CASE("link and star") {
    Presentation P4 = p4(), C5 = c5(), FP = fp();
    CHECK(link_star(P4.graph, 1, LinkMode::Link) ==
          (set_single(0) | set_single(2)));  // link(b) = {a, c}
    CHECK(link_star(FP.graph, 0, LinkMode::Link) == 0);
    CHECK(link_star(C5.graph, 0, LinkMode::Star) ==
          (set_single(4) | set_single(0) | set_single(1)));  // star(v1) = {v5,v1,v2}
    CHECK_THROWS(P4.graph.vertex("zz"));
}

TEST_CASE("opposite graph") {
    Presentation P3 = p3();
    SimplicialGraph o = opposite_graph(P3.graph);
    CHECK(o.adjacent(0, 2));
    CHECK_FALSE(o.adjacent(0, 1));
    SimplicialGraph k3({"x", "y", "z"});
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    SimplicialGraph k3o = opposite_graph(k3);
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = a + 1; b < 3; ++b) CHECK_FALSE(k3o.adjacent(a, b));
    // pentagon complement is the pentagram: neighbors at distance two
    SimplicialGraph c5o = opposite_graph(c5().graph);
    CHECK(c5o.adjacent(0, 2));
    CHECK(c5o.adjacent(0, 3));
    CHECK_FALSE(c5o.adjacent(0, 1));
}

TEST_CASE("join decomposition") {
    JoinDecomposition d3 = join_decomposition(p3().graph);
    CHECK(d3.clique_part == set_single(1));
    REQUIRE(d3.factors.size() == 1);
    CHECK(d3.factors[0] == (set_single(0) | set_single(2)));

    JoinDecomposition d4 = join_decomposition(p4().graph);
    CHECK(d4.clique_part == 0);
    REQUIRE(d4.factors.size() == 1);
    CHECK(d4.factors[0] == p4().graph.all_vertices());

    SimplicialGraph k3({"x", "y", "z"});
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    JoinDecomposition dk = join_decomposition(k3);
    CHECK(dk.clique_part == k3.all_vertices());
    CHECK(dk.factors.empty());
}

TEST_CASE("join detection equals opposite-graph disconnection, exhaustively") {
    // all graphs on up to 6 vertices would be 2^15; up to 5 suffices and is quick
    for (int n = 2; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<std::string> names;
            for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
            SimplicialGraph g(names);
            int bit = 0;
            for (VertexId a = 0; a < unsigned(n); ++a)
                for (VertexId b = a + 1; b < unsigned(n); ++b, ++bit)
                    if ((mask >> bit) & 1) g.add_edge(a, b);
            bool direct = false;  // is there a genuine bipartition with all cross edges?
            for (VertexSet s = 1; s < g.all_vertices(); ++s) {
                VertexSet t = g.all_vertices() & ~s;
                bool all = t != 0;
                for (VertexId a = 0; a < unsigned(n) && all; ++a)
                    for (VertexId b = 0; b < unsigned(n) && all; ++b)
                        if (set_contains(s, a) && set_contains(t, b) && !g.adjacent(a, b))
                            all = false;
                if (all) direct = true;
            }
            CHECK(is_join(g) == direct);
        }
    }
}

TEST_CASE("prec structure") {
    Presentation P4 = p4();
    PrecStructure pr = prec_structure(P4.graph);
    CHECK(set_contains(pr.prec[0], 2));  // link(a)={b} subset star(c)

    PrecStructure pc = prec_structure(c5().graph);
    for (VertexId u = 0; u < 5; ++u) {
        CHECK(set_contains(pc.prec_maximal, u));
        for (VertexId v = 0; v < 5; ++v)
            if (u != v) CHECK_FALSE(set_contains(pc.prec[u], v));
    }

    SimplicialGraph k3({"x", "y", "z"});
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    PrecStructure pk = prec_structure(k3);
    REQUIRE(pk.classes.size() == 1);
    CHECK(pk.classes[0] == k3.all_vertices());
}

TEST_CASE("simplify same star and link") {
    SimplicialGraph k3({"x", "y", "z"});
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    VertexGrouping gk = simplify_same_star_link(k3);
    REQUIRE(gk.graph.size() == 1);
    CHECK(gk.members[0] == k3.all_vertices());
    CHECK(gk.kinds[0] == MergeKind::DirectSum);

    VertexGrouping gd = simplify_same_star_link(dinf().graph);
    REQUIRE(gd.graph.size() == 1);
    CHECK(gd.kinds[0] == MergeKind::FreeProduct);

    VertexGrouping gc = simplify_same_star_link(c5().graph);
    CHECK(gc.graph.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(set_size(gc.members[i]) == 1);

    // idempotence
    VertexGrouping again = simplify_same_star_link(gc.graph);
    CHECK(again.graph.size() == gc.graph.size());
    // no two vertices of the output share a star or link
    const SimplicialGraph& out = gc.graph;
    for (VertexId a = 0; a < out.size(); ++a)
        for (VertexId b = a + 1; b < out.size(); ++b) {
            CHECK(out.star(a) != out.star(b));
            CHECK(out.link(a) != out.link(b));
        }
}

TEST_CASE("maximal joins") {
    // C5: the five stars {v_{i-1}, v_i, v_{i+1}} are the maximal joins
    std::vector<VertexSet> mj = maximal_joins(c5().graph);
    REQUIRE(mj.size() == 5);
    for (VertexSet s : mj) CHECK(set_size(s) == 3);
    for (VertexId i = 0; i < 5; ++i) {
        VertexSet star = c5().graph.star(i);
        CHECK(std::count(mj.begin(), mj.end(), star) == 1);
    }

    // P4: the two interior stars {a,b,c}, {b,c,d}
    std::vector<VertexSet> mp = maximal_joins(p4().graph);
    REQUIRE(mp.size() == 2);
    CHECK(std::count(mp.begin(), mp.end(), VertexSet(0b0111)) == 1);
    CHECK(std::count(mp.begin(), mp.end(), VertexSet(0b1110)) == 1);

    SimplicialGraph k3({"x", "y", "z"});
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    std::vector<VertexSet> mk = maximal_joins(k3);
    REQUIRE(mk.size() == 1);
    CHECK(mk[0] == k3.all_vertices());

    // invariants: members are joins, pairwise incomparable, every edge covered
    for (const Presentation& P : {p4(), c5(), p3()}) {
        std::vector<VertexSet> ms = maximal_joins(P.graph);
        for (VertexSet s : ms) CHECK(is_join(P.graph, s));
        for (VertexSet s : ms)
            for (VertexSet t : ms)
                if (s != t) CHECK((s & ~t) != 0);
        for (VertexId a = 0; a < P.graph.size(); ++a)
            for (VertexId b = a + 1; b < P.graph.size(); ++b) {
                if (!P.graph.adjacent(a, b)) continue;
                bool covered = false;
                for (VertexSet s : ms)
                    if (set_contains(s, a) && set_contains(s, b)) covered = true;
                CHECK(covered);
            }
    }
}

TEST_CASE("opposite diameter") {
    Presentation C5 = c5(), FP = fp();
    CHECK(opp_diameter(C5.graph, set_single(0) | set_single(2)) == 1);
    CHECK(opp_diameter(C5.graph, C5.graph.all_vertices()) == 2);
    CHECK(opp_diameter(FP.graph, FP.graph.all_vertices()) == 1);
    // adjacent pair: disconnected in the opposite graph
    CHECK_THROWS(opp_diameter(C5.graph, set_single(0) | set_single(1)));
}

TEST_CASE("contained in join") {
    Presentation C5 = c5();
    // {v1, v3} lies in the join star(v2)
    CHECK(contained_in_join(C5.graph, set_single(0) | set_single(2)));
    // the whole pentagon does not lie in any join
    CHECK_FALSE(contained_in_join(C5.graph, C5.graph.all_vertices()));
    Presentation FP = fp();
    CHECK_FALSE(contained_in_join(FP.graph, FP.graph.all_vertices()));
}
