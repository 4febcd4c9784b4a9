#ifndef GPKIT_TESTS_ORACLE_HPP
#define GPKIT_TESTS_ORACLE_HPP

// Independent oracles for property tests. Everything here works by exhaustive
// rewriting and explicit ball construction, never through the library's
// stack-based normal form, so the two paths check each other.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gpkit/presentation.hpp"

namespace oracle {

using gpkit::Elt;
using gpkit::Presentation;
using gpkit::Syllable;
using gpkit::VertexId;
using gpkit::VertexSet;

using RawWord = std::vector<Syllable>;

// All words reachable by O1 deletions, O2 merges and O3 swaps. Length never
// increases, so the closure is finite.
inline std::set<RawWord> rewrite_closure(const Presentation& p, const RawWord& start) {
    std::set<RawWord> seen{start};
    std::vector<RawWord> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        RawWord w = queue[qi];
        auto visit = [&](RawWord next) {
            if (seen.insert(next).second) queue.push_back(std::move(next));
        };
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].elt == 0) {  // O1
                RawWord next = w;
                next.erase(next.begin() + i);
                visit(std::move(next));
            }
            if (i + 1 < w.size()) {
                if (w[i].vertex == w[i + 1].vertex) {  // O2
                    RawWord next = w;
                    next[i].elt = p.group(w[i].vertex).mul(w[i].elt, w[i + 1].elt);
                    next.erase(next.begin() + i + 1);
                    if (next[i].elt == 0) next.erase(next.begin() + i);
                    visit(std::move(next));
                } else if (p.adjacent(w[i].vertex, w[i + 1].vertex)) {  // O3
                    RawWord next = w;
                    std::swap(next[i], next[i + 1]);
                    visit(std::move(next));
                }
            }
        }
    }
    return seen;
}

// The lexicographically least minimal-length word in the closure: an
// implementation-independent canonical representative.
inline RawWord canonical(const Presentation& p, const RawWord& w) {
    std::set<RawWord> closure = rewrite_closure(p, w);
    const RawWord* best = nullptr;
    for (const RawWord& c : closure) {
        if (!best || c.size() < best->size() ||
            (c.size() == best->size() && c < *best))
            best = &c;
    }
    return *best;
}

inline bool equal(const Presentation& p, const RawWord& a, const RawWord& b) {
    return canonical(p, a) == canonical(p, b);
}

// Explicit ball of the quasi-median Cayley graph: vertices are oracle-canonical
// words, edges multiply by one non-trivial vertex-group element.
struct Ball {
    std::vector<RawWord> verts;          // index -> canonical word
    std::map<RawWord, int> index;
    std::vector<int> dist;               // from the basepoint
    std::vector<std::vector<int>> adj;   // neighbor indices
    struct Edge {
        int from, to;
        VertexId label;
        Elt elt;  // to = from * (label, elt)
    };
    std::vector<Edge> edges;  // one direction per pair (from < to not guaranteed)
};

inline Ball qm_ball(const Presentation& p, unsigned radius, std::int64_t exponent_cap = 2) {
    Ball b;
    RawWord origin;
    b.verts.push_back(origin);
    b.index[origin] = 0;
    b.dist.push_back(0);
    b.adj.emplace_back();
    for (std::size_t qi = 0; qi < b.verts.size(); ++qi) {
        if (b.dist[qi] == int(radius)) continue;
        for (VertexId u = 0; u < p.graph.size(); ++u)
            for (Elt e : p.group(u).nontrivial_elements(exponent_cap)) {
                RawWord next = b.verts[qi];
                next.push_back({u, e});
                next = canonical(p, next);
                auto it = b.index.find(next);
                if (it == b.index.end()) {
                    int id = int(b.verts.size());
                    b.index[next] = id;
                    b.verts.push_back(next);
                    b.dist.push_back(b.dist[qi] + 1);
                    b.adj.emplace_back();
                    it = b.index.find(next);
                }
                b.adj[qi].push_back(it->second);
            }
    }
    // record edges once per unordered pair, with their labels
    std::set<std::pair<int, int>> done;
    for (std::size_t from = 0; from < b.verts.size(); ++from)
        for (VertexId u = 0; u < p.graph.size(); ++u)
            for (Elt e : p.group(u).nontrivial_elements(exponent_cap)) {
                RawWord next = b.verts[from];
                next.push_back({u, e});
                next = canonical(p, next);
                auto it = b.index.find(next);
                if (it == b.index.end()) continue;
                int a = int(from), c = it->second;
                if (done.insert({std::min(a, c), std::max(a, c)}).second)
                    b.edges.push_back({a, c, u, e});
            }
    return b;
}

// BFS distance inside the ball between two member words.
inline int ball_distance(const Ball& b, const RawWord& x, const RawWord& y) {
    auto ix = b.index.find(x);
    auto iy = b.index.find(y);
    if (ix == b.index.end() || iy == b.index.end()) return -1;
    std::vector<int> dist(b.verts.size(), -1);
    std::vector<int> queue{ix->second};
    dist[ix->second] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int nb : b.adj[queue[i]])
            if (dist[nb] < 0) {
                dist[nb] = dist[queue[i]] + 1;
                queue.push_back(nb);
            }
    return dist[iy->second];
}

// BFS distance in Cayl(GammaG, union of S_u): steps multiply by one generator
// or inverse generator of one vertex group.
inline int s_metric_distance(const Presentation& p, unsigned radius, const RawWord& x,
                             const RawWord& y) {
    RawWord target = canonical(p, y);
    RawWord start = canonical(p, x);
    std::set<RawWord> seen{start};
    std::vector<std::pair<RawWord, int>> queue{{start, 0}};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        if (queue[i].first == target) return queue[i].second;
        if (queue[i].second == int(radius)) continue;
        for (VertexId u = 0; u < p.graph.size(); ++u)
            for (Elt gen : p.group(u).generators)
                for (Elt step : {gen, p.group(u).inv(gen)}) {
                    RawWord next = queue[i].first;
                    next.push_back({u, step});
                    next = canonical(p, next);
                    if (seen.insert(next).second) queue.emplace_back(next, queue[i].second + 1);
                }
    }
    return -1;
}

// Wall classes of the ball by the square/triangle closure of Definition-style
// duality: edges of one clique are equivalent, and opposite edges of a square
// are equivalent.
struct WallClasses {
    std::vector<int> edge_class;                 // per Ball::edges index
    int num_classes = 0;
    std::set<std::pair<int, int>> transversal;   // class pairs crossing a common square
};

inline WallClasses wall_classes(const Presentation& p, const Ball& b) {
    std::vector<int> parent(b.edges.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int c) { parent[find(a)] = find(c); };

    // index edges by endpoint pair for square lookups
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (std::size_t i = 0; i < b.edges.size(); ++i) {
        auto key = std::pair(std::min(b.edges[i].from, b.edges[i].to),
                             std::max(b.edges[i].from, b.edges[i].to));
        by_pair[key].push_back(int(i));
    }
    auto edge_between = [&](int x, int y) -> int {
        auto it = by_pair.find({std::min(x, y), std::max(x, y)});
        if (it == by_pair.end()) return -1;
        return it->second.front();
    };

    // same clique: edges sharing a vertex with the same label lie in one
    // triangle chain exactly when the three points are pairwise adjacent
    for (std::size_t i = 0; i < b.edges.size(); ++i)
        for (std::size_t j = i + 1; j < b.edges.size(); ++j) {
            if (b.edges[i].label != b.edges[j].label) continue;
            int xs[2] = {b.edges[i].from, b.edges[i].to};
            int ys[2] = {b.edges[j].from, b.edges[j].to};
            bool share = false;
            for (int x : xs)
                for (int y : ys)
                    if (x == y) share = true;
            if (!share) continue;
            // same clique iff all involved vertices pairwise adjacent or equal
            bool clique = true;
            for (int x : xs)
                for (int y : ys)
                    if (x != y && edge_between(x, y) < 0) clique = false;
            if (clique) unite(int(i), int(j));
        }
    // squares from corners: for every vertex x and labels u != w, square
    // x, y = x.s_u, z = x.t_w, q with edges (y,q) labelled w and (z,q) labelled u
    std::vector<std::tuple<int, int>> square_pairs;
    std::map<int, std::vector<int>> edges_at;
    for (std::size_t i = 0; i < b.edges.size(); ++i) {
        edges_at[b.edges[i].from].push_back(int(i));
        edges_at[b.edges[i].to].push_back(int(i));
    }
    auto other_end = [&](int e, int v) {
        return b.edges[e].from == v ? b.edges[e].to : b.edges[e].from;
    };
    for (std::size_t x = 0; x < b.verts.size(); ++x) {
        auto it = edges_at.find(int(x));
        if (it == edges_at.end()) continue;
        const auto& star = it->second;
        for (int e1 : star)
            for (int e2 : star) {
                if (e1 == e2) continue;
                if (b.edges[e1].label == b.edges[e2].label) continue;
                int y = other_end(e1, int(x));
                int z = other_end(e2, int(x));
                // far corner: common neighbor q of y and z with matching labels
                for (int e3 : edges_at.count(y) ? edges_at[y] : std::vector<int>{}) {
                    if (b.edges[e3].label != b.edges[e2].label) continue;
                    int q = other_end(e3, y);
                    if (q == int(x)) continue;
                    int e4 = -1;
                    for (int cand : edges_at.count(z) ? edges_at[z] : std::vector<int>{})
                        if (b.edges[cand].label == b.edges[e1].label && other_end(cand, z) == q)
                            e4 = cand;
                    if (e4 < 0) continue;
                    unite(e1, e4);  // opposite in the square
                    unite(e2, e3);
                    square_pairs.emplace_back(e1, e2);
                }
            }
    }
    WallClasses wc;
    wc.edge_class.assign(b.edges.size(), -1);
    std::map<int, int> remap;
    for (std::size_t i = 0; i < b.edges.size(); ++i) {
        int root = find(int(i));
        auto [it2, fresh] = remap.try_emplace(root, wc.num_classes);
        if (fresh) ++wc.num_classes;
        wc.edge_class[i] = it2->second;
    }
    for (auto [e1, e2] : square_pairs) {
        int a = wc.edge_class[e1], c = wc.edge_class[e2];
        if (a != c) wc.transversal.insert({std::min(a, c), std::max(a, c)});
    }
    return wc;
}

// Does the wall class separate the two ball vertices once its edges are cut?
// Only meaningful well inside the ball; boundary effects make separation
// spurious near the rim, so callers restrict queries to interior vertices.
inline bool class_separates(const Ball& b, const WallClasses& wc, int cls, int x, int y) {
    std::vector<std::vector<int>> adj(b.verts.size());
    for (std::size_t i = 0; i < b.edges.size(); ++i) {
        if (wc.edge_class[i] == cls) continue;
        adj[b.edges[i].from].push_back(b.edges[i].to);
        adj[b.edges[i].to].push_back(b.edges[i].from);
    }
    std::vector<bool> seen(b.verts.size(), false);
    std::vector<int> queue{x};
    seen[x] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int nb : adj[queue[i]])
            if (!seen[nb]) {
                seen[nb] = true;
                queue.push_back(nb);
            }
    return !seen[y];
}

}  // namespace oracle

#endif
