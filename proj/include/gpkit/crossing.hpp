#ifndef GPKIT_CROSSING_HPP
#define GPKIT_CROSSING_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gpkit/hyperplane.hpp"

namespace gpkit {

// Enumerate the ball of the quasi-median graph around a basepoint. For
// infinite cyclic vertex groups the branching is capped at exponent_cap.
inline std::vector<Word> qm_ball(const Presentation& p, const Word& basepoint, unsigned radius,
                                 std::int64_t exponent_cap = 2) {
    std::vector<Word> ball{basepoint};
    std::set<Word> seen{basepoint};
    std::size_t layer_start = 0;
    for (unsigned r = 0; r < radius; ++r) {
        std::size_t layer_end = ball.size();
        for (std::size_t i = layer_start; i < layer_end; ++i) {
            for (VertexId u = 0; u < p.graph.size(); ++u)
                for (Elt e : p.group(u).nontrivial_elements(exponent_cap)) {
                    Word nxt = compose(p, ball[i], Word{Syllable{u, e}});
                    if (seen.insert(nxt).second) ball.push_back(nxt);
                }
        }
        layer_start = layer_end;
    }
    return ball;
}

// A finite set of walls dual to edges of a ball, with its transversality
// matrix. The crossing graph itself is infinite; every audit is window-based.
struct HyperplaneWindow {
    Word basepoint;
    unsigned radius = 0;
    bool small = false;                      // restricted to prec-maximal labels
    std::vector<Hyperplane> walls;           // sorted canonically
    std::vector<std::vector<bool>> adjacent; // transversality
    VertexSet small_labels = 0;              // prec-maximal vertices

    std::optional<std::size_t> index_of(const Hyperplane& j) const {
        for (std::size_t i = 0; i < walls.size(); ++i)
            if (walls[i] == j) return i;
        return std::nullopt;
    }
};

inline HyperplaneWindow build_window(const Presentation& p, const Word& basepoint,
                                     unsigned radius, bool small = false,
                                     std::int64_t exponent_cap = 2) {
    if (radius < 1) throw std::invalid_argument("window radius must be >= 1");
    HyperplaneWindow win;
    win.basepoint = basepoint;
    win.radius = radius;
    win.small = small;
    win.small_labels = prec_structure(p.graph).prec_maximal;

    std::vector<Word> ball = qm_ball(p, basepoint, radius, exponent_cap);
    std::set<Word> in_ball(ball.begin(), ball.end());
    std::set<std::pair<VertexId, Word>> keys;
    for (const Word& x : ball)
        for (VertexId u = 0; u < p.graph.size(); ++u) {
            if (small && !set_contains(win.small_labels, u)) continue;
            // the u-wall at x is dual to a ball edge iff some u-neighbor is in the ball
            bool has_edge = false;
            for (Elt e : p.group(u).nontrivial_elements(exponent_cap)) {
                Word nbr = compose(p, x, Word{Syllable{u, e}});
                if (in_ball.count(nbr)) {
                    has_edge = true;
                    break;
                }
            }
            if (!has_edge) continue;
            Hyperplane j = wall_at(p, x, u);
            keys.insert({j.label, j.carrier.rep});
        }
    for (const auto& [label, rep] : keys)
        win.walls.push_back(Hyperplane{label, Coset{rep, p.graph.star(label)}});
    win.adjacent.assign(win.walls.size(), std::vector<bool>(win.walls.size(), false));
    for (std::size_t i = 0; i < win.walls.size(); ++i)
        for (std::size_t j = i + 1; j < win.walls.size(); ++j)
            if (transverse(p, win.walls[i], win.walls[j]))
                win.adjacent[i][j] = win.adjacent[j][i] = true;
    return win;
}

inline std::vector<int> window_bfs(const HyperplaneWindow& win, std::size_t from) {
    std::vector<int> dist(win.walls.size(), -1);
    std::vector<std::size_t> queue{from};
    dist[from] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < win.walls.size(); ++j)
            if (win.adjacent[queue[i]][j] && dist[j] < 0) {
                dist[j] = dist[queue[i]] + 1;
                queue.push_back(j);
            }
    return dist;
}

struct CrossingDistanceAudit {
    int d_window = -1;           // -1: disconnected inside the window
    unsigned delta = 0;          // Delta(A,B), exact
    unsigned d_qm_carriers = 0;  // d_QM(N(A), N(B))
    bool lower_ok = false;       // Delta <= d_T
    bool upper_ok = false;       // d_T <= (4 + diam) (Delta + 1)
    bool qm_bound_ok = false;    // d_T <= diam (d_QM + 2)
};

// Window-restricted crossing distance with the quasi-tree estimates audited.
// Window truncation can only increase the distance, so a violated upper bound
// on a certified pair is a genuine failure.
inline CrossingDistanceAudit crossing_distance(const Presentation& p, const HyperplaneWindow& win,
                                               const Hyperplane& a, const Hyperplane& b) {
    CrossingDistanceAudit audit;
    auto ia = win.index_of(a), ib = win.index_of(b);
    if (!ia || !ib) throw std::invalid_argument("hyperplane not in window");
    audit.d_window = window_bfs(win, *ia)[*ib];
    DeltaChainResult dc = delta_chain(p, a, b);
    audit.delta = dc.delta;
    auto [x, y] = min_pair(p, a.carrier, b.carrier);
    audit.d_qm_carriers = distance(p, x, y);
    if (audit.d_window >= 0) {
        // the disconnected case only ever reaches degenerate reports
        unsigned diam = is_connected(p.graph) ? graph_diameter(p.graph) : unsigned(p.graph.size());
        audit.lower_ok = audit.delta <= unsigned(audit.d_window);
        audit.upper_ok = unsigned(audit.d_window) <= (4 + diam) * (audit.delta + 1);
        audit.qm_bound_ok = unsigned(audit.d_window) <= diam * (audit.d_qm_carriers + 2);
    }
    return audit;
}

// A pair is certified when its window distance is stable under shrinking the
// radius by one: the geodesic then lies strictly inside the window.
inline bool window_pair_certified(const Presentation& p, const HyperplaneWindow& win,
                                  const HyperplaneWindow& smaller, const Hyperplane& a,
                                  const Hyperplane& b) {
    auto ia = win.index_of(a), ib = win.index_of(b);
    auto ja = smaller.index_of(a), jb = smaller.index_of(b);
    if (!ia || !ib || !ja || !jb) return false;
    int d1 = window_bfs(win, *ia)[*ib];
    int d2 = window_bfs(smaller, *ja)[*jb];
    return d1 >= 0 && d1 == d2;
}

struct BottleneckReport {
    struct Entry {
        std::size_t a = 0, b = 0;
        int d = -1;
        unsigned worst_detour = 0;  // max over paths of min distance to the midpoint
        bool pass = true;
        bool degenerate = false;    // no geodesic in window
    };
    unsigned delta_bound = 0;       // the quasi-tree constant 1 + 3 (5 + diam)
    std::vector<Entry> entries;
};

// Bowditch-style bottleneck audit: every sampled in-window path between the
// pair passes within delta_bound of a geodesic midpoint.
inline BottleneckReport bottleneck_audit(const Presentation& p, const HyperplaneWindow& win,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                         std::size_t max_paths = 20000) {
    BottleneckReport rep;
    unsigned diam = is_connected(p.graph) ? graph_diameter(p.graph) : unsigned(p.graph.size());
    rep.delta_bound = 1 + 3 * (5 + diam);
    for (auto [ia, ib] : pairs) {
        BottleneckReport::Entry e;
        e.a = ia;
        e.b = ib;
        std::vector<int> dist_a = window_bfs(win, ia);
        e.d = dist_a[ib];
        if (e.d < 0) {
            e.degenerate = true;
            rep.entries.push_back(e);
            continue;
        }
        if (e.d <= 1) {
            rep.entries.push_back(e);
            continue;
        }
        // midpoint along one BFS geodesic
        std::vector<int> dist_b = window_bfs(win, ib);
        std::size_t mid = ia;
        for (std::size_t v = 0; v < win.walls.size(); ++v)
            if (dist_a[v] == e.d / 2 && dist_b[v] == e.d - e.d / 2) {
                mid = v;
                break;
            }
        std::vector<int> dist_m = window_bfs(win, mid);
        // enumerate simple paths of length <= d+2, depth-first, bounded count
        std::size_t count = 0;
        std::vector<std::size_t> path{ia};
        std::vector<bool> onpath(win.walls.size(), false);
        onpath[ia] = true;
        auto rec = [&](auto&& self, std::size_t cur) -> void {
            if (count >= max_paths) return;
            if (cur == ib) {
                ++count;
                unsigned best = unsigned(dist_m[path[0]]);
                for (std::size_t v : path) best = std::min(best, unsigned(dist_m[v]));
                e.worst_detour = std::max(e.worst_detour, best);
                if (best > rep.delta_bound) e.pass = false;
                return;
            }
            if (int(path.size()) > e.d + 2) return;
            for (std::size_t v = 0; v < win.walls.size(); ++v) {
                if (!win.adjacent[cur][v] || onpath[v]) continue;
                onpath[v] = true;
                path.push_back(v);
                self(self, v);
                path.pop_back();
                onpath[v] = false;
            }
        };
        rec(rec, ia);
        rep.entries.push_back(e);
    }
    return rep;
}

// The straight path of a crossing-graph geodesic: x1 is the gate of N(J_n)
// on N(J_1), then iterated carrier projections.
inline std::vector<Word> straight_path(const Presentation& p,
                                       const std::vector<Hyperplane>& geodesic) {
    if (geodesic.size() < 2) throw std::invalid_argument("geodesic too short");
    for (std::size_t i = 0; i + 1 < geodesic.size(); ++i)
        if (!transverse(p, geodesic[i], geodesic[i + 1]))
            throw std::invalid_argument("input is not a crossing-graph path");
    std::vector<Word> xs;
    xs.push_back(min_pair(p, geodesic.front().carrier, geodesic.back().carrier).first);
    for (std::size_t i = 1; i < geodesic.size(); ++i)
        xs.push_back(project(p, xs.back(), geodesic[i].carrier));
    return xs;
}

inline bool straight_path_is_geodesic(const Presentation& p, const std::vector<Word>& xs) {
    unsigned total = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) total += distance(p, xs[i], xs[i + 1]);
    return total == distance(p, xs.front(), xs.back());
}

// Replace each interior wall per the straightening construction: among the
// walls transverse to both neighbors and separating N(J_i) from both end
// gates, take one whose carrier is closest to x1. Candidates are exactly the
// walls separating the end gates from their gates on N(J_i).
inline std::vector<Hyperplane> straighten(const Presentation& p,
                                          std::vector<Hyperplane> geodesic) {
    if (geodesic.size() < 3) return geodesic;
    const Word x1 = min_pair(p, geodesic.front().carrier, geodesic.back().carrier).first;
    const Word y1 = min_pair(p, geodesic.back().carrier, geodesic.front().carrier).first;
    for (std::size_t i = 1; i + 1 < geodesic.size(); ++i) {
        Word gate_x = project(p, x1, geodesic[i].carrier);
        Word gate_y = project(p, y1, geodesic[i].carrier);
        std::vector<Hyperplane> from_x = separating_hyperplanes(p, x1, gate_x);
        std::vector<Hyperplane> from_y = separating_hyperplanes(p, y1, gate_y);
        std::optional<Hyperplane> best;
        unsigned best_d = 0;
        for (const Hyperplane& cand : from_x) {
            bool also_y = false;
            for (const Hyperplane& h : from_y)
                if (h == cand) also_y = true;
            if (!also_y) continue;
            if (!transverse(p, cand, geodesic[i - 1]) || !transverse(p, cand, geodesic[i + 1]))
                continue;
            unsigned d = distance(p, x1, project(p, x1, cand.carrier));
            if (!best || d < best_d || (d == best_d && hyperplane_less(cand, *best))) {
                best = cand;
                best_d = d;
            }
        }
        if (best) geodesic[i] = *best;
    }
    return geodesic;
}

struct AxisChain {
    Word element;                 // cyclically reduced
    unsigned opp_diam = 0;        // D
    Hyperplane base;              // J0, dual to the first edge of [1, g]
    std::vector<std::int64_t> ks; // chain indices
    std::vector<Hyperplane> chain;            // g^{2Dk} J0
    std::vector<std::vector<int>> verdicts;   // pairwise: 1 Certified, 0 Refuted
    std::vector<std::optional<Hyperplane>> witnesses;  // per refuted pair, row-major
    bool all_certified = true;
};

// The contracting-axis chain g^{2Dk} J0 with pairwise strong-separation
// verdicts. For an element whose support is not contained in any join the
// verdicts are all Certified; a Refuted entry carries its witness wall.
inline AxisChain contracting_axis(const Presentation& p, const Word& g, std::int64_t k_min,
                                  std::int64_t k_max) {
    SupportClassification sc = support_classify(p, g);
    if (!sc.is_irreducible)
        throw std::invalid_argument("contracting_axis requires an irreducible element");
    AxisChain ax;
    ax.element = cyclic_reduce(p, g).core;
    ax.opp_diam = opp_diameter(p.graph, sc.support);
    ax.base = wall_at(p, Word{}, ax.element.front().vertex);
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        ax.ks.push_back(k);
        ax.chain.push_back(
            translate(p, word_pow(p, ax.element, 2 * std::int64_t(ax.opp_diam) * k), ax.base));
    }
    const std::size_t n = ax.chain.size();
    ax.verdicts.assign(n, std::vector<int>(n, 1));
    ax.witnesses.assign(n * n, std::nullopt);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SeparationVerdict v = strongly_separated(p, ax.chain[i], ax.chain[j]);
            int ok = v.status == VerdictStatus::Certified ? 1 : 0;
            ax.verdicts[i][j] = ax.verdicts[j][i] = ok;
            if (!ok) {
                ax.witnesses[i * n + j] = v.witness;
                ax.all_certified = false;
            }
        }
    return ax;
}

struct MaximalProductsWindow {
    std::vector<Coset> vertices;                  // cosets of maximal joins / isolated vertices
    std::vector<std::vector<int>> edge;           // 1 edge, 0 none found, -1 unknown
    std::vector<VertexSet> generators;            // the subgraphs used (joins + isolated)
};

// Finite piece of the graph of maximal products around a basepoint. Edges are
// witnessed intersections; with a finite side the test is exact, otherwise a
// ball-bounded witness search that reports Unknown when it fails.
inline MaximalProductsWindow maximal_products_window(const Presentation& p, const Word& basepoint,
                                                     unsigned radius,
                                                     std::int64_t exponent_cap = 2) {
    MaximalProductsWindow mw;
    mw.generators = maximal_joins(p.graph);
    for (VertexId v = 0; v < p.graph.size(); ++v)
        if (p.graph.link(v) == 0) mw.generators.push_back(set_single(v));
    std::vector<Word> ball = qm_ball(p, basepoint, radius, exponent_cap);
    std::set<std::pair<VertexSet, Word>> keys;
    for (const Word& x : ball)
        for (VertexSet lam : mw.generators) {
            Coset c = make_coset(p, x, lam);
            keys.insert({lam, c.rep});
        }
    for (const auto& [lam, rep] : keys) mw.vertices.push_back(Coset{rep, lam});

    auto subgroup_elements = [&](const Coset& c) {
        // all elements of rep <lambda> rep^-1 when <lambda> is finite
        std::vector<Word> out;
        std::vector<Word> members{Word{}};
        std::set<Word> seen{Word{}};
        for (std::size_t i = 0; i < members.size(); ++i)
            for (VertexId u = 0; u < p.graph.size(); ++u) {
                if (!set_contains(c.lambda, u)) continue;
                for (Elt e : p.group(u).nontrivial_elements()) {
                    Word nxt = compose(p, members[i], Word{Syllable{u, e}});
                    if (seen.insert(nxt).second) members.push_back(nxt);
                }
            }
        for (const Word& m : members)
            if (!m.empty()) out.push_back(conjugate(p, c.rep, m));
        return out;
    };
    auto member_of = [&](const Word& x, const Coset& c) {
        Word inside = conjugate(p, invert(p, c.rep), x);
        return (word_support(inside) & ~c.lambda) == 0;
    };

    const std::size_t n = mw.vertices.size();
    mw.edge.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Coset& a = mw.vertices[i];
            const Coset& b = mw.vertices[j];
            int result = -1;
            if (p.parabolic_order(a.lambda) > 0) {
                result = 0;
                for (const Word& x : subgroup_elements(a))
                    if (member_of(x, b)) {
                        result = 1;
                        break;
                    }
            } else if (p.parabolic_order(b.lambda) > 0) {
                result = 0;
                for (const Word& x : subgroup_elements(b))
                    if (member_of(x, a)) {
                        result = 1;
                        break;
                    }
            } else {
                // shared-vertex-group rule at the gates, then ball witnesses
                for (const Word& h : {min_pair(p, a, b).first, min_pair(p, a, b).second}) {
                    for (VertexId w = 0; w < p.graph.size(); ++w) {
                        if (!set_contains(a.lambda & b.lambda, w)) continue;
                        bool in_a = true, in_b = true;
                        for (Elt e : p.group(w).nontrivial_elements()) {
                            Word x = conjugate(p, h, Word{Syllable{w, e}});
                            in_a = in_a && member_of(x, a);
                            in_b = in_b && member_of(x, b);
                        }
                        if (in_a && in_b) result = 1;
                    }
                    if (result == 1) break;
                }
                if (result != 1) {
                    for (const Word& x : ball) {
                        if (x.empty()) continue;
                        if (member_of(x, a) && member_of(x, b)) {
                            result = 1;
                            break;
                        }
                    }
                }
            }
            mw.edge[i][j] = mw.edge[j][i] = result;
        }
    return mw;
}

struct QiCompareReport {
    unsigned max_distortion = 0;
    unsigned pairs_compared = 0;
    unsigned pairs_skipped = 0;  // disconnected or unmapped
};

// Compare the small crossing graph with the graph of maximal products through
// q : wall -> containing maximal product, reporting the worst distortion.
inline QiCompareReport qi_compare(const Presentation& p, const HyperplaneWindow& st,
                                  const MaximalProductsWindow& mw) {
    QiCompareReport rep;
    auto q_map = [&](const Hyperplane& j) -> std::optional<std::size_t> {
        VertexSet star = p.graph.star(j.label);
        for (VertexSet lam : mw.generators) {
            if ((star & ~lam) != 0) continue;
            Coset target = make_coset(p, j.carrier.rep, lam);
            for (std::size_t i = 0; i < mw.vertices.size(); ++i)
                if (mw.vertices[i] == target) return i;
        }
        return std::nullopt;
    };
    std::vector<std::optional<std::size_t>> q(st.walls.size());
    for (std::size_t i = 0; i < st.walls.size(); ++i) q[i] = q_map(st.walls[i]);

    // BFS over the certified edges of the products window
    auto mw_bfs = [&](std::size_t from) {
        std::vector<int> dist(mw.vertices.size(), -1);
        std::vector<std::size_t> queue{from};
        dist[from] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (std::size_t j = 0; j < mw.vertices.size(); ++j)
                if (mw.edge[queue[i]][j] == 1 && dist[j] < 0) {
                    dist[j] = dist[queue[i]] + 1;
                    queue.push_back(j);
                }
        return dist;
    };

    for (std::size_t a = 0; a < st.walls.size(); ++a) {
        std::vector<int> dst = window_bfs(st, a);
        std::vector<int> dmw;
        if (q[a]) dmw = mw_bfs(*q[a]);
        for (std::size_t b = a + 1; b < st.walls.size(); ++b) {
            if (!q[a] || !q[b] || dst[b] < 0 || dmw[*q[b]] < 0) {
                ++rep.pairs_skipped;
                continue;
            }
            ++rep.pairs_compared;
            unsigned diff = unsigned(std::abs(dst[b] - dmw[*q[b]]));
            rep.max_distortion = std::max(rep.max_distortion, diff);
        }
    }
    return rep;
}

}  // namespace gpkit

#endif
