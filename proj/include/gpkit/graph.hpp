#ifndef GPKIT_GRAPH_HPP
#define GPKIT_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpkit {

using VertexId = std::uint32_t;

// Vertex subsets as bitmasks; graphs here never exceed 32 vertices.
using VertexSet = std::uint32_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, VertexId v) { return (s >> v) & 1u; }
inline VertexSet set_single(VertexId v) { return VertexSet{1} << v; }

// Finite simplicial graph with a fixed vertex order. The order is the
// construction order and drives every canonical form downstream.
class SimplicialGraph {
public:
    SimplicialGraph() = default;

    explicit SimplicialGraph(std::vector<std::string> names)
        : names_(std::move(names)), adj_(names_.size(), 0) {
        if (names_.size() > 32)
            throw std::invalid_argument("graph limited to 32 vertices");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(VertexId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    VertexId vertex(const std::string& name) const {
        for (VertexId v = 0; v < names_.size(); ++v)
            if (names_[v] == name) return v;
        throw std::invalid_argument("unknown vertex: " + name);
    }

    bool has_vertex(const std::string& name) const {
        for (const auto& n : names_)
            if (n == name) return true;
        return false;
    }

    void add_edge(VertexId a, VertexId b) {
        check(a);
        check(b);
        if (a == b) throw std::invalid_argument("loops are not allowed");
        adj_[a] |= set_single(b);
        adj_[b] |= set_single(a);
    }

    bool adjacent(VertexId a, VertexId b) const {
        check(a);
        check(b);
        return set_contains(adj_[a], b);
    }

    VertexSet all_vertices() const {
        return size() == 32 ? ~VertexSet{0} : (VertexSet{1} << size()) - 1;
    }

    VertexSet link(VertexId v) const {
        check(v);
        return adj_[v];
    }

    VertexSet star(VertexId v) const { return link(v) | set_single(v); }

    // Common neighbors of every vertex in s.
    VertexSet link_of_set(VertexSet s) const {
        VertexSet l = all_vertices();
        for (VertexId v = 0; v < size(); ++v)
            if (set_contains(s, v)) l &= adj_[v];
        return l & ~s;
    }

    bool is_complete(VertexSet s) const {
        for (VertexId a = 0; a < size(); ++a) {
            if (!set_contains(s, a)) continue;
            for (VertexId b = a + 1; b < size(); ++b)
                if (set_contains(s, b) && !set_contains(adj_[a], b)) return false;
        }
        return true;
    }

    std::size_t clique_number() const {
        std::size_t best = 0;
        for (VertexSet s = 0; s < (VertexSet{1} << size()); ++s)
            if (is_complete(s)) best = std::max<std::size_t>(best, set_size(s));
        return best;
    }

private:
    void check(VertexId v) const {
        if (v >= names_.size()) throw std::invalid_argument("unknown vertex id");
    }

    std::vector<std::string> names_;
    std::vector<VertexSet> adj_;
};

enum class LinkMode { Link, Star };

inline VertexSet link_star(const SimplicialGraph& g, VertexId u, LinkMode mode) {
    return mode == LinkMode::Link ? g.link(u) : g.star(u);
}

inline SimplicialGraph opposite_graph(const SimplicialGraph& g) {
    SimplicialGraph o(g.names());
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = a + 1; b < g.size(); ++b)
            if (!g.adjacent(a, b)) o.add_edge(a, b);
    return o;
}

// Connected components of the subgraph induced on `within`.
inline std::vector<VertexSet> components(const SimplicialGraph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (!set_contains(within, v) || set_contains(seen, v)) continue;
        VertexSet comp = set_single(v);
        std::vector<VertexId> stack{v};
        while (!stack.empty()) {
            VertexId cur = stack.back();
            stack.pop_back();
            VertexSet nbrs = g.link(cur) & within & ~comp;
            for (VertexId w = 0; w < g.size(); ++w)
                if (set_contains(nbrs, w)) {
                    comp |= set_single(w);
                    stack.push_back(w);
                }
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

struct JoinDecomposition {
    VertexSet clique_part = 0;             // Gamma_0
    std::vector<VertexSet> factors;        // Gamma_1 ... Gamma_n, each >= 2 vertices, not a join
};

// A graph is a join iff its opposite graph is disconnected; the factors are
// the components of the opposite graph, singletons pooled into the clique part.
inline JoinDecomposition join_decomposition(const SimplicialGraph& g, VertexSet within) {
    SimplicialGraph opp = opposite_graph(g);
    JoinDecomposition d;
    for (VertexSet comp : components(opp, within)) {
        if (set_size(comp) == 1)
            d.clique_part |= comp;
        else
            d.factors.push_back(comp);
    }
    return d;
}

inline JoinDecomposition join_decomposition(const SimplicialGraph& g) {
    return join_decomposition(g, g.all_vertices());
}

// Is the induced subgraph on s a join? (needs >= 2 vertices)
inline bool is_join(const SimplicialGraph& g, VertexSet s) {
    if (set_size(s) < 2) return false;
    return components(opposite_graph(g), s).size() >= 2;
}

inline bool is_join(const SimplicialGraph& g) { return is_join(g, g.all_vertices()); }

// Is s contained in a join subgraph of g? Exhaustive over supersets (desk scale).
inline bool contained_in_join(const SimplicialGraph& g, VertexSet s) {
    if (s == 0) return false;
    const VertexSet rest = g.all_vertices() & ~s;
    VertexSet m = rest;
    while (true) {
        if (is_join(g, s | m)) return true;
        if (m == 0) break;
        m = (m - 1) & rest;
    }
    return false;
}

struct PrecStructure {
    // prec[u] = set of v with link(u) subset of star(v)
    std::vector<VertexSet> prec;
    VertexSet prec_maximal = 0;
    std::vector<VertexSet> classes;  // partition into [u] classes
};

inline PrecStructure prec_structure(const SimplicialGraph& g) {
    PrecStructure p;
    p.prec.assign(g.size(), 0);
    for (VertexId u = 0; u < g.size(); ++u)
        for (VertexId v = 0; v < g.size(); ++v)
            if ((g.link(u) & ~g.star(v)) == 0) p.prec[u] |= set_single(v);
    for (VertexId u = 0; u < g.size(); ++u) {
        bool maximal = true;
        for (VertexId v = 0; v < g.size(); ++v)
            if (v != u && set_contains(p.prec[u], v) && !set_contains(p.prec[v], u))
                maximal = false;
        if (maximal) p.prec_maximal |= set_single(u);
    }
    VertexSet seen = 0;
    for (VertexId u = 0; u < g.size(); ++u) {
        if (set_contains(seen, u)) continue;
        VertexSet cls = set_single(u);
        for (VertexId v = u + 1; v < g.size(); ++v)
            if (set_contains(p.prec[u], v) && set_contains(p.prec[v], u))
                cls |= set_single(v);
        seen |= cls;
        p.classes.push_back(cls);
    }
    return p;
}

enum class MergeKind { DirectSum, FreeProduct };

struct VertexGrouping {
    // For each output vertex: the set of input vertices merged into it and how.
    std::vector<VertexSet> members;
    std::vector<MergeKind> kinds;
    SimplicialGraph graph;
};

// Identify same-star classes (direct sums), then same-link classes (free
// products). The result has no two vertices with equal star or equal link.
inline VertexGrouping simplify_same_star_link(const SimplicialGraph& g) {
    auto quotient = [](const SimplicialGraph& in, bool by_star) {
        std::vector<VertexSet> cls;
        VertexSet seen = 0;
        for (VertexId u = 0; u < in.size(); ++u) {
            if (set_contains(seen, u)) continue;
            VertexSet c = set_single(u);
            for (VertexId v = u + 1; v < in.size(); ++v) {
                bool same = by_star ? in.star(u) == in.star(v) : in.link(u) == in.link(v);
                if (same) c |= set_single(v);
            }
            seen |= c;
            cls.push_back(c);
        }
        std::vector<std::string> names;
        for (VertexSet c : cls) {
            std::string n;
            for (VertexId v = 0; v < in.size(); ++v)
                if (set_contains(c, v)) n += (n.empty() ? "" : "+") + in.name(v);
            names.push_back(n);
        }
        SimplicialGraph out(names);
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b) {
                VertexId ra = std::countr_zero(cls[a]);
                VertexId rb = std::countr_zero(cls[b]);
                if (in.adjacent(ra, rb)) out.add_edge(VertexId(a), VertexId(b));
            }
        return std::pair(out, cls);
    };

    auto [psi, star_cls] = quotient(g, true);
    auto [phi, link_cls] = quotient(psi, false);

    VertexGrouping r;
    r.graph = phi;
    for (std::size_t i = 0; i < link_cls.size(); ++i) {
        VertexSet orig = 0;
        int merged_stars = 0;
        for (VertexId v = 0; v < psi.size(); ++v)
            if (set_contains(link_cls[i], v)) {
                orig |= star_cls[v];
                ++merged_stars;
            }
        r.members.push_back(orig);
        // A class that merged several Psi-vertices is a free product of the
        // (possibly direct-sum) pieces; otherwise the star merge dominates.
        r.kinds.push_back(merged_stars > 1 ? MergeKind::FreeProduct : MergeKind::DirectSum);
    }
    return r;
}

// All inclusion-maximal join subgraphs, by exhaustive subset search.
inline std::vector<VertexSet> maximal_joins(const SimplicialGraph& g) {
    std::vector<VertexSet> joins;
    const VertexSet all = g.all_vertices();
    for (VertexSet s = 0; s <= all; ++s) {
        if (is_join(g, s)) joins.push_back(s);
        if (s == all) break;
    }
    std::vector<VertexSet> out;
    for (VertexSet a : joins) {
        bool maximal = true;
        for (VertexSet b : joins)
            if (a != b && (a & ~b) == 0) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

// Diameter of the subgraph of the opposite graph induced on `support`.
// Throws when that subgraph is disconnected (reducible support).
inline unsigned opp_diameter(const SimplicialGraph& g, VertexSet support) {
    SimplicialGraph opp = opposite_graph(g);
    if (components(opp, support).size() != 1)
        throw std::invalid_argument("support is disconnected in the opposite graph");
    unsigned best = 0;
    for (VertexId s = 0; s < g.size(); ++s) {
        if (!set_contains(support, s)) continue;
        std::vector<int> dist(g.size(), -1);
        std::vector<VertexId> queue{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            VertexId cur = queue[i];
            for (VertexId w = 0; w < g.size(); ++w)
                if (set_contains(support, w) && opp.adjacent(cur, w) && dist[w] < 0) {
                    dist[w] = dist[cur] + 1;
                    queue.push_back(w);
                }
        }
        for (VertexId w = 0; w < g.size(); ++w)
            if (set_contains(support, w)) best = std::max(best, unsigned(dist[w]));
    }
    return best;
}

inline unsigned graph_diameter(const SimplicialGraph& g) {
    unsigned best = 0;
    for (VertexId s = 0; s < g.size(); ++s) {
        std::vector<int> dist(g.size(), -1);
        std::vector<VertexId> queue{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (VertexId w = 0; w < g.size(); ++w)
                if (g.adjacent(queue[i], w) && dist[w] < 0) {
                    dist[w] = dist[queue[i]] + 1;
                    queue.push_back(w);
                }
        for (VertexId w = 0; w < g.size(); ++w) {
            if (dist[w] < 0) throw std::invalid_argument("graph is disconnected");
            best = std::max(best, unsigned(dist[w]));
        }
    }
    return best;
}

inline bool is_connected(const SimplicialGraph& g) {
    if (g.size() == 0) return true;
    return components(g, g.all_vertices()).size() == 1;
}

}  // namespace gpkit

#endif
