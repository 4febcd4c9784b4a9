#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace gpkit;
using namespace fixtures;

TEST_CASE("separating hyperplanes: pinned examples") {
    Presentation C5 = c5(), FP = fp();
    Word v131 = reduce(C5, {{0, 1}, {2, 1}, {0, 1}});
    auto seps = separating_hyperplanes(C5, {}, v131);
    REQUIRE(seps.size() == 3);
    CHECK(seps[0].label == 0);
    CHECK(seps[1].label == 2);
    CHECK(seps[2].label == 0);
    CHECK(!(seps[0] == seps[2]));  // same label, different carriers
    CHECK(separating_hyperplanes(C5, v131, v131).empty());
    auto seps2 = separating_hyperplanes(FP, {}, w(FP, "u v"));
    REQUIRE(seps2.size() == 2);
    CHECK(seps2[0].label == 0);
    CHECK(seps2[0].carrier.rep.empty());
    CHECK(seps2[1].label == 1);
    CHECK(seps2[1].carrier.rep == w(FP, "u"));
}

TEST_CASE("distance equals the number of separating hyperplanes, pairwise distinct") {
    std::mt19937 rng(41);
    for (const Presentation& P : {c5(), fp(), p4()}) {
        for (int trial = 0; trial < 80; ++trial) {
            std::vector<Syllable> raw1, raw2;
            for (int i = 0; i < 3; ++i) {
                auto elts1 = P.group(rng() % P.graph.size()).nontrivial_elements();
                VertexId u1 = VertexId(rng() % P.graph.size());
                raw1.push_back({u1, P.group(u1).nontrivial_elements()[0]});
                VertexId u2 = VertexId(rng() % P.graph.size());
                raw2.push_back({u2, P.group(u2).nontrivial_elements()[0]});
            }
            Word x = reduce(P, raw1), y = reduce(P, raw2);
            auto seps = separating_hyperplanes(P, x, y);
            CHECK(seps.size() == distance(P, x, y));
            for (std::size_t i = 0; i < seps.size(); ++i)
                for (std::size_t j = i + 1; j < seps.size(); ++j) CHECK(!(seps[i] == seps[j]));
        }
    }
}

TEST_CASE("sector keys and separation") {
    Presentation FP = fp(), C5 = c5();
    Hyperplane Ju = wall_at(FP, {}, 0);
    CHECK(sector_key(FP, Ju, w(FP, "u^2")) == w(FP, "u^2"));
    CHECK(sector_key(FP, Ju, w(FP, "v")).empty());
    CHECK(separates(FP, Ju, w(FP, "u^2"), w(FP, "v")));
    CHECK(delta_J(FP, Ju, w(FP, "u^2"), w(FP, "v")) == 2);
    CHECK_FALSE(separates(FP, Ju, w(FP, "v"), w(FP, "v")));
    Word v131 = reduce(C5, {{0, 1}, {2, 1}, {0, 1}});
    auto seps = separating_hyperplanes(C5, {}, v131);
    CHECK(separates(C5, seps[0], {}, w(C5, "v1")));
}

TEST_CASE("separates agrees with listing on ball pairs") {
    for (const Presentation& P : {c5(), fp()}) {
        std::vector<Word> ball{Word{}};
        std::set<Word> seen{Word{}};
        for (std::size_t i = 0; i < ball.size(); ++i) {
            if (ball[i].size() >= 2) continue;
            for (VertexId u = 0; u < P.graph.size(); ++u)
                for (Elt e : P.group(u).nontrivial_elements()) {
                    Word nxt = compose(P, ball[i], Word{Syllable{u, e}});
                    if (seen.insert(nxt).second) ball.push_back(nxt);
                }
        }
        for (const Word& x : ball)
            for (const Word& y : ball) {
                auto seps = separating_hyperplanes(P, x, y);
                // every listed wall separates; and the wall dual to an
                // unrelated clique does not
                for (const Hyperplane& j : seps) CHECK(separates(P, j, x, y));
                Hyperplane far = wall_at(P, compose(P, x, y), 0);
                bool listed = false;
                for (const Hyperplane& j : seps)
                    if (j == far) listed = true;
                CHECK(separates(P, far, x, y) == listed);
            }
    }
}

TEST_CASE("delta_J is clique independent") {
    Presentation C5 = c5();
    // J_v1 at 1 has cliques l . G_v1 for l in <link(v1)> = <v5, v2>
    Hyperplane J = wall_at(C5, {}, 0);
    Word x = reduce(C5, {{1, 1}, {0, 1}, {2, 1}});
    Word y = reduce(C5, {{4, 1}, {0, 1}});
    for (const char* shift : {"v2", "v5", "v2 v5"}) {
        Coset clique{compose(C5, J.carrier.rep, w(C5, shift)), set_single(0)};
        Word kx = project(C5, x, clique), ky = project(C5, y, clique);
        Word diff = compose(C5, invert(C5, kx), ky);
        unsigned d = diff.empty() ? 0 : unsigned(C5.group(0).length(diff[0].elt));
        CHECK(d == delta_J(C5, J, x, y));
    }
}

TEST_CASE("hyperplane relations: pinned examples") {
    Presentation C5 = c5(), FP = fp();
    Hyperplane J1 = wall_at(C5, {}, 0), J2 = wall_at(C5, {}, 1), J3 = wall_at(C5, {}, 2);
    CHECK(hyperplane_relation(C5, J1, J2).relation == WallRelation::Transverse);
    CHECK(hyperplane_relation(C5, J1, J3).relation == WallRelation::Tangent);
    CHECK(hyperplane_relation(C5, J1, J1).relation == WallRelation::Equal);
    Hyperplane Ju = wall_at(FP, {}, 0);
    Hyperplane Jughu = translate(FP, w(FP, "u v"), Ju);
    auto rel = hyperplane_relation(FP, Ju, Jughu);
    CHECK(rel.relation == WallRelation::Separated);
    CHECK(rel.separator_count == 1);
    CHECK(rel.separators[0].label == 1);
}

TEST_CASE("transversality rule matches the square-search oracle") {
    for (const Presentation& P : {c5(), fp()}) {
        oracle::Ball ball = oracle::qm_ball(P, 3);
        oracle::WallClasses wc = oracle::wall_classes(P, ball);
        // map oracle classes to canonical walls via a representative edge
        std::map<int, Hyperplane> wall_of_class;
        for (std::size_t e = 0; e < ball.edges.size(); ++e) {
            int cls = wc.edge_class[e];
            if (wall_of_class.count(cls)) continue;
            Word from = reduce(P, ball.verts[ball.edges[e].from]);
            wall_of_class.emplace(cls, wall_at(P, from, ball.edges[e].label));
        }
        // oracle classes deep inside the ball map injectively onto walls
        // (boundary classes may split; skip classes with no interior edge)
        auto interior = [&](int cls) {
            for (std::size_t e = 0; e < ball.edges.size(); ++e)
                if (wc.edge_class[e] == cls && ball.dist[ball.edges[e].from] <= 1) return true;
            return false;
        };
        for (auto& [c1, w1] : wall_of_class)
            for (auto& [c2, w2] : wall_of_class) {
                if (c1 >= c2 || !interior(c1) || !interior(c2)) continue;
                bool oracle_trans = wc.transversal.count({std::min(c1, c2), std::max(c1, c2)}) > 0;
                if (oracle_trans) CHECK(transverse(P, w1, w2));
            }
        // and conversely on the pinned pairs: transverse walls cross a square
        if (P.graph.size() == 5) {
            // labels must be adjacent for transverse pairs over every window pair
            for (auto& [c1, w1] : wall_of_class)
                for (auto& [c2, w2] : wall_of_class)
                    if (transverse(P, w1, w2)) CHECK(P.graph.adjacent(w1.label, w2.label));
        }
    }
}

TEST_CASE("strong separation: exact rules") {
    Presentation FP = fp(), C5 = c5();
    Hyperplane Ju = wall_at(FP, {}, 0);
    Hyperplane Jv = wall_at(FP, {}, 1);
    auto v1 = strongly_separated(FP, Ju, Jv);
    CHECK(v1.status == VerdictStatus::Certified);
    CHECK(v1.rule == "empty-common-link");

    // tangent walls with a common link vertex are refuted by the wall through
    // the shared carrier point
    Hyperplane J1 = wall_at(C5, {}, 0);
    Hyperplane J3 = translate(C5, w(C5, "v1"), wall_at(C5, {}, 2));
    auto v2 = strongly_separated(C5, J1, J3);
    CHECK(v2.status == VerdictStatus::Refuted);
    REQUIRE(v2.witness);
    CHECK(v2.witness->label == 1);
    CHECK(transverse(C5, *v2.witness, J1));
    CHECK(transverse(C5, *v2.witness, J3));

    // the v1v3-axis translates share the transversal J_v2: honestly refuted
    Word g13 = w(C5, "v1 v3");
    Hyperplane B = translate(C5, word_pow(C5, g13, 2), J1);
    auto v3 = strongly_separated(C5, J1, B);
    CHECK(v3.status == VerdictStatus::Refuted);
    REQUIRE(v3.witness);
    CHECK(v3.witness->label == 1);

    // full-support axis translates are certified
    Word w0 = w(C5, "v1 v3 v5 v2 v4");
    Hyperplane A0 = wall_at(C5, {}, 0);
    Hyperplane A1 = translate(C5, word_pow(C5, w0, 4), A0);
    auto v4 = strongly_separated(C5, A0, A1);
    CHECK(v4.status == VerdictStatus::Certified);
}

TEST_CASE("strong separation matches brute-force window search") {
    // the exact verdict agrees with an exhaustive search for common
    // transversals among all walls of a ball window
    for (const Presentation& P : {c5(), fp()}) {
        std::vector<Word> ball{Word{}};
        std::set<Word> seen{Word{}};
        for (std::size_t i = 0; i < ball.size(); ++i) {
            if (ball[i].size() >= 3) continue;
            for (VertexId u = 0; u < P.graph.size(); ++u)
                for (Elt e : P.group(u).nontrivial_elements()) {
                    Word nxt = compose(P, ball[i], Word{Syllable{u, e}});
                    if (seen.insert(nxt).second) ball.push_back(nxt);
                }
        }
        std::vector<Hyperplane> walls;
        std::set<std::pair<VertexId, Word>> keys;
        for (const Word& x : ball)
            for (VertexId u = 0; u < P.graph.size(); ++u) {
                Hyperplane j = wall_at(P, x, u);
                if (keys.insert({j.label, j.carrier.rep}).second) walls.push_back(j);
            }
        std::mt19937 rng(77);
        int tested = 0;
        for (int trial = 0; trial < 200 && tested < 40; ++trial) {
            const Hyperplane& a = walls[rng() % walls.size()];
            const Hyperplane& b = walls[rng() % walls.size()];
            if (a == b || transverse(P, a, b)) continue;
            ++tested;
            auto verdict = strongly_separated(P, a, b);
            bool found = false;
            for (const Hyperplane& h : walls)
                if (transverse(P, h, a) && transverse(P, h, b)) found = true;
            if (verdict.status == VerdictStatus::Certified) {
                CHECK_FALSE(found);
            } else {
                REQUIRE(verdict.witness);
                CHECK(transverse(P, *verdict.witness, a));
                CHECK(transverse(P, *verdict.witness, b));
            }
        }
        CHECK(tested >= 20);
    }
}

TEST_CASE("delta chains") {
    Presentation C5 = c5(), FP = fp();
    // tangent pair: no separators
    CHECK(delta_chain(C5, wall_at(C5, {}, 0), wall_at(C5, {}, 2)).delta == 0);
    // FP: all separators pairwise strongly separated
    Hyperplane Ju = wall_at(FP, {}, 0);
    Hyperplane far = translate(FP, word_pow(FP, w(FP, "u v"), 2), Ju);
    DeltaChainResult dc = delta_chain(FP, Ju, far);
    CHECK(dc.separators.size() == 3);
    CHECK(dc.delta == 3);
    // the returned chain is genuinely pairwise strongly separated
    for (std::size_t i = 0; i < dc.chain.size(); ++i)
        for (std::size_t j = i + 1; j < dc.chain.size(); ++j)
            CHECK(strongly_separated(FP, dc.chain[i], dc.chain[j]).status ==
                  VerdictStatus::Certified);
    // C5 v1v3 axis: every separator pair shares the transversal J_v2, chain length 1
    Word g13 = w(C5, "v1 v3");
    Hyperplane A = wall_at(C5, {}, 0);
    Hyperplane B = translate(C5, word_pow(C5, g13, 4), A);
    DeltaChainResult dc2 = delta_chain(C5, A, B);
    CHECK(dc2.separators.size() == 7);
    CHECK(dc2.delta == 1);
    // C5 full-support axis: long strongly separated chains exist
    Word w0 = w(C5, "v1 v3 v5 v2 v4");
    Hyperplane B2 = translate(C5, word_pow(C5, w0, 2), A);
    DeltaChainResult dc3 = delta_chain(C5, A, B2);
    CHECK(dc3.delta >= 2);
}

TEST_CASE("bridge") {
    Presentation C5 = c5(), P4 = p4();
    // intersecting cosets: equal gates, no separators
    Coset c1 = make_coset(C5, {}, set_single(0));
    Coset c2 = make_coset(C5, w(C5, "v1 v3"), set_single(2));  // contains v1
    BridgeResult b0 = bridge(C5, c1, c2);
    CHECK(b0.from == b0.to);
    CHECK(b0.separators.empty());
    // disjoint parallel v1-cliques across v3
    Coset d1 = make_coset(C5, {}, set_single(0));
    Coset d2 = make_coset(C5, w(C5, "v3"), set_single(0));
    BridgeResult b1 = bridge(C5, d1, d2);
    CHECK(b1.from.empty());
    CHECK(b1.to == w(C5, "v3"));
    REQUIRE(b1.separators.size() == 1);
    CHECK(b1.separators[0].label == 2);
    // P4: two a-cliques across t_c; c not adjacent to a, no common crossing wall
    Coset e1 = make_coset(P4, {}, set_single(0));
    Coset e2 = make_coset(P4, w(P4, "c"), set_single(0));
    BridgeResult b2 = bridge(P4, e1, e2);
    REQUIRE(b2.separators.size() == 1);
    CHECK(b2.separators[0].label == 2);
    CHECK_FALSE(b2.enclosing_join.has_value());
    // P4: two b-cliques across t_d; walls labelled a cross both? a-c nonadjacent: no.
    // use cosets {a,b} apart by t_d: a,b both adjacent-to... build a case with a join
    Coset f1 = make_coset(P4, {}, set_single(1));            // <b>
    Coset f2 = make_coset(P4, w(P4, "d"), set_single(1));    // d <b>: d noncommuting with b? d-b not adjacent
    BridgeResult b3 = bridge(P4, f1, f2);
    CHECK(b3.separators.size() == 1);

    // min pair realizes the coset distance: check against small enumeration
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Coset x = make_coset(C5, reduce(C5, {{VertexId(rng() % 5), 1}, {VertexId(rng() % 5), 1}}),
                             set_single(rng() % 5));
        Coset y = make_coset(C5, reduce(C5, {{VertexId(rng() % 5), 1}}),
                             set_single(rng() % 5) | set_single(rng() % 5));
        auto [g1, g2] = min_pair(C5, x, y);
        CHECK(coset_contains(C5, g1, x));
        CHECK(coset_contains(C5, g2, y));
        unsigned d = distance(C5, g1, g2);
        // enumerate members of both cosets near their reps
        auto members = [&](const Coset& c) {
            std::vector<Word> out{c.rep};
            std::set<Word> seen{c.rep};
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (distance(C5, c.rep, out[i]) >= 3) continue;
                for (VertexId u = 0; u < 5; ++u) {
                    if (!set_contains(c.lambda, u)) continue;
                    Word nxt = compose(C5, out[i], Word{Syllable{u, 1}});
                    if (seen.insert(nxt).second) out.push_back(nxt);
                }
            }
            return out;
        };
        for (const Word& mx : members(x))
            for (const Word& my : members(y)) CHECK(distance(C5, mx, my) >= d);
    }
}
