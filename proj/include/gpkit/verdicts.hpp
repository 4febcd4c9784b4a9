#ifndef GPKIT_VERDICTS_HPP
#define GPKIT_VERDICTS_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gpkit/cone_off.hpp"

namespace gpkit {

// Per-vertex facts the theorems consume. Everything derivable from the group
// spec is derived; properties of abstract groups that a table cannot decide
// (graphic irreducibility, Aut finiteness of the clique part) are assertions.
struct VertexGroupMeta {
    std::vector<bool> is_graphically_irreducible;      // asserted, default true
    std::optional<bool> aut_of_clique_part_finite;     // asserted when needed
    std::map<VertexId, bool> finite_override;          // rarely needed
    std::map<VertexId, bool> finite_abelianization_override;

    static VertexGroupMeta defaults(const Presentation& p) {
        VertexGroupMeta m;
        m.is_graphically_irreducible.assign(p.graph.size(), true);
        return m;
    }
};

inline bool vertex_group_finite(const Presentation& p, const VertexGroupMeta& m, VertexId v) {
    auto it = m.finite_override.find(v);
    if (it != m.finite_override.end()) return it->second;
    return p.group(v).is_finite();
}

inline bool vertex_group_finite_abelianization(const Presentation& p, const VertexGroupMeta& m,
                                               VertexId v) {
    auto it = m.finite_abelianization_override.find(v);
    if (it != m.finite_abelianization_override.end()) return it->second;
    return p.group(v).is_finite();  // finite group => finite abelianization; Z => infinite
}

// Aut(<Gamma_0>) finiteness: derivable when the clique part is empty, all
// finite, or a single infinite cyclic vertex; otherwise needs the assertion.
inline std::optional<bool> aut_clique_part_finite(const Presentation& p, const VertexGroupMeta& m,
                                                  VertexSet clique) {
    if (m.aut_of_clique_part_finite) return m.aut_of_clique_part_finite;
    if (clique == 0) return true;
    bool all_finite = true;
    for (VertexId v = 0; v < p.graph.size(); ++v)
        if (set_contains(clique, v) && !vertex_group_finite(p, m, v)) all_finite = false;
    if (all_finite) return true;
    if (set_size(clique) == 1) {
        VertexId v = std::countr_zero(clique);
        if (p.group(v).kind == GroupKind::InfiniteCyclic) return true;  // Aut(Z) = Z/2
    }
    return std::nullopt;
}

inline bool group_has_order_two(const VertexGroupSpec& g) {
    return g.is_finite() && g.size() == 2;
}

// Factor equal to two isolated vertices both carrying order-two groups.
inline bool is_z2_pair(const Presentation& p, VertexSet factor) {
    if (set_size(factor) != 2) return false;
    VertexId a = std::countr_zero(factor);
    VertexId b = std::countr_zero(factor & (factor - 1));
    if (p.graph.adjacent(a, b)) return false;
    return group_has_order_two(p.group(a)) && group_has_order_two(p.group(b));
}

struct Condition {
    std::string name;
    bool holds = false;
    std::string detail;
};

enum class Answer { Yes, No, DihedralException, Unknown };

inline const char* to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        case Answer::DihedralException: return "dihedral-exception";
        default: return "unknown";
    }
}

struct StructureReport {
    JoinDecomposition decomposition;
    std::string formula;
    std::vector<Condition> factor_flags;  // per factor: Aut(<Gamma_i>) acyl. hyperbolic?
};

inline std::string vertex_set_names(const SimplicialGraph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (VertexId v = 0; v < g.size(); ++v)
        if (set_contains(s, v)) {
            if (!first) out += ",";
            out += g.name(v);
            first = false;
        }
    return out + "}";
}

// The decomposition formula for Aut of the graph product, with per-factor
// acylindrical hyperbolicity flags (the two-isolated-order-two factor is the
// infinite dihedral exception).
inline StructureReport structure_report(const Presentation& p, const VertexGroupMeta& meta) {
    for (VertexId v = 0; v < p.graph.size(); ++v)
        if (!meta.is_graphically_irreducible[v])
            throw std::invalid_argument(
                "structure_report requires graphically irreducible vertex groups; "
                "simplify or re-present first");
    StructureReport r;
    r.decomposition = join_decomposition(p.graph);
    const auto& d = r.decomposition;
    std::ostringstream f;
    std::string g0 = vertex_set_names(p.graph, d.clique_part);
    if (d.factors.empty()) {
        f << "Aut(<" << g0 << ">)";
    } else {
        std::string sum;
        std::string auts;
        for (std::size_t i = 0; i < d.factors.size(); ++i) {
            if (i) {
                sum += " + ";
                auts += " + ";
            }
            sum += "<" + vertex_set_names(p.graph, d.factors[i]) + ">";
            auts += "Aut(<" + vertex_set_names(p.graph, d.factors[i]) + ">)";
        }
        if (d.clique_part == 0 && d.factors.size() == 1) {
            f << auts;
        } else {
            f << "Hom(" << sum << " -> Z(<" << g0 << ">)) x| (Aut(<" << g0 << ">) + [("
              << auts << ") x| S])";
        }
    }
    r.formula = f.str();
    for (VertexSet factor : d.factors) {
        Condition c;
        c.name = "factor " + vertex_set_names(p.graph, factor);
        bool dihedral = is_z2_pair(p, factor);
        c.holds = !dihedral;
        c.detail = dihedral ? "pair of isolated order-two vertex groups (infinite dihedral)"
                            : "Aut of the factor is acylindrically hyperbolic";
        r.factor_flags.push_back(c);
    }
    return r;
}

enum class AcylTarget { Group, Aut, Raag, Racg };

struct Verdict {
    Answer answer = Answer::Unknown;
    std::vector<Condition> conditions;
    std::string missing;  // named metadata gap when Unknown
};

inline Verdict acyl_verdict(const Presentation& p, const VertexGroupMeta& meta,
                            AcylTarget target) {
    Verdict v;
    JoinDecomposition d = join_decomposition(p.graph);
    const std::size_t nfac = d.factors.size();
    auto push = [&](std::string name, bool holds, std::string detail = "") {
        v.conditions.push_back({std::move(name), holds, std::move(detail)});
    };

    if (target == AcylTarget::Raag) {
        bool not_join = !is_join(p.graph);
        bool two = p.graph.size() >= 2;
        push("graph is not a join", not_join);
        push("graph has at least two vertices", two);
        v.answer = (not_join && two) ? Answer::Yes : Answer::No;
        return v;
    }

    bool single_factor = nfac == 1;
    bool factor_not_pair = single_factor && !is_z2_pair(p, d.factors[0]);
    if (target == AcylTarget::Racg) {
        push("one non-join factor besides the clique part", single_factor);
        push("factor is not two isolated order-two vertices", factor_not_pair);
        if (single_factor && !factor_not_pair && d.clique_part == 0) {
            v.answer = Answer::DihedralException;
            return v;
        }
        v.answer = (single_factor && factor_not_pair) ? Answer::Yes : Answer::No;
        return v;
    }

    bool clique_finite = true;
    for (VertexId u = 0; u < p.graph.size(); ++u)
        if (set_contains(d.clique_part, u) && !vertex_group_finite(p, meta, u)) clique_finite = false;

    if (target == AcylTarget::Group) {
        push("vertex groups of the clique part are finite", clique_finite);
        push("one non-join factor besides the clique part", single_factor);
        push("factor is not two isolated order-two vertices", factor_not_pair);
        if (single_factor && !factor_not_pair && d.clique_part == 0) {
            v.answer = Answer::DihedralException;  // the graph product is infinite dihedral
            return v;
        }
        v.answer = (clique_finite && single_factor && factor_not_pair) ? Answer::Yes : Answer::No;
        return v;
    }

    // target == Aut
    if (single_factor && !factor_not_pair && d.clique_part == 0) {
        push("graph is two isolated order-two vertices", true,
             "the graph product is infinite dihedral");
        v.answer = Answer::DihedralException;
        return v;
    }
    bool branch_a = clique_finite && single_factor && factor_not_pair;
    push("A: clique-part vertex groups finite", clique_finite);
    push("A: one factor, not an order-two pair", single_factor && factor_not_pair);
    bool factors_fin_ab = true;
    for (VertexSet factor : d.factors)
        for (VertexId u = 0; u < p.graph.size(); ++u)
            if (set_contains(factor, u) && !vertex_group_finite_abelianization(p, meta, u))
                factors_fin_ab = false;
    std::optional<bool> aut0 = aut_clique_part_finite(p, meta, d.clique_part);
    push("B: factor vertex groups have finite abelianisation", factors_fin_ab);
    push("B: Aut of the clique part is finite", aut0.value_or(false),
         aut0 ? "" : "needs assertion aut_of_clique_part_finite");
    push("B: one factor, not an order-two pair", single_factor && factor_not_pair);
    bool branch_b_known = bool(aut0);
    bool branch_b = factors_fin_ab && aut0.value_or(false) && single_factor && factor_not_pair;
    if (branch_a || branch_b) {
        v.answer = Answer::Yes;
    } else if (!branch_b_known && factors_fin_ab && single_factor && factor_not_pair) {
        v.answer = Answer::Unknown;
        v.missing = "aut_of_clique_part_finite";
    } else {
        v.answer = Answer::No;
    }
    return v;
}

inline Verdict extension_verdict(const Presentation& p, const VertexGroupMeta& meta,
                                 bool kernel_finite) {
    Verdict v;
    JoinDecomposition d = join_decomposition(p.graph);
    bool clique_finite = true;
    for (VertexId u = 0; u < p.graph.size(); ++u)
        if (set_contains(d.clique_part, u) && !vertex_group_finite(p, meta, u)) clique_finite = false;
    bool single_factor = d.factors.size() == 1;
    bool factor_not_pair = single_factor && !is_z2_pair(p, d.factors[0]);
    v.conditions.push_back({"vertex groups of the clique part are finite", clique_finite, ""});
    v.conditions.push_back(
        {"one non-join factor, not an order-two pair", single_factor && factor_not_pair, ""});
    v.conditions.push_back({"kernel of H -> Out is finite", kernel_finite, "asserted"});
    v.answer = (clique_finite && single_factor && factor_not_pair && kernel_finite) ? Answer::Yes
                                                                                    : Answer::No;
    return v;
}

struct VastnessReport {
    Answer sq_universal = Answer::Unknown;
    Answer many_quasimorphisms = Answer::Unknown;
    Answer not_boundedly_generated = Answer::Unknown;
    std::vector<Condition> conditions;
};

// All three vastness flags hold unless the graph is a join of a clique with
// order-two pairs only; that excluded case stays Unknown.
inline VastnessReport vastness_report(const Presentation& p, const VertexGroupMeta&) {
    VastnessReport r;
    JoinDecomposition d = join_decomposition(p.graph);
    bool excluded = true;
    for (VertexSet factor : d.factors)
        if (!is_z2_pair(p, factor)) excluded = false;
    r.conditions.push_back({"some factor is not an order-two pair", !excluded,
                            excluded ? "excluded case: join of clique with order-two pairs" : ""});
    Answer a = excluded ? Answer::Unknown : Answer::Yes;
    r.sq_universal = a;
    r.many_quasimorphisms = a;
    r.not_boundedly_generated = a;
    return r;
}

// Generating set of pairwise non-commuting elements with maximal centralisers.
// Connected non-join branch: for each vertex u a word g_u tracing a covering
// walk of the opposite graph from alpha(u) to omega(u), padded to make walk
// lengths differ by at least two, times the elements of G_u.
inline std::vector<Word> build_noncommuting_genset(const Presentation& p) {
    const SimplicialGraph& g = p.graph;
    if (g.size() < 2 || is_join(g))
        throw std::invalid_argument("genset construction requires >= 2 vertices and no join");
    SimplicialGraph opp = opposite_graph(g);

    if (!is_connected(g)) {
        // free product branch A * B: A a component whose subgroup has order
        // >= 3 (them all order-two singletons only for the dihedral case),
        // B everything else; the explicit pattern g = a1 b a2, h = a1 b a1 b a2 b
        std::vector<VertexSet> comps = components(g, g.all_vertices());
        auto order_ge3 = [&](VertexSet c) {
            if (set_size(c) >= 2) return true;
            VertexId v = std::countr_zero(c);
            return !p.group(v).is_finite() || p.group(v).size() >= 3;
        };
        std::size_t ai = comps.size();
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (order_ge3(comps[i])) {
                ai = i;
                break;
            }
        if (ai == comps.size()) {
            if (g.size() == 2)  // infinite dihedral: the two involutions
                return {reduce(p, {{0, 1}}), reduce(p, {{1, 1}})};
            ai = 0;  // >= 3 order-two components: A = first two components
            comps[0] |= comps[1];
            comps.erase(comps.begin() + 1);
        }
        const VertexSet compA = comps[ai];
        // two distinct non-trivial elements of <compA>
        std::vector<Word> a_elts;
        for (VertexId v = 0; v < g.size() && a_elts.size() < 2; ++v)
            if (set_contains(compA, v))
                for (Elt e : p.group(v).nontrivial_elements()) {
                    Word w = reduce(p, {{v, e}});
                    if (a_elts.empty() || w != a_elts[0]) a_elts.push_back(w);
                    if (a_elts.size() == 2) break;
                }
        if (a_elts.size() < 2) {
            VertexId v = std::countr_zero(compA);
            VertexId w = std::countr_zero(compA & (compA - 1));
            a_elts.push_back(reduce(p, {{v, 1}, {w, 1}}));
        }
        VertexId b = 0;
        for (VertexId v = 0; v < g.size(); ++v)
            if (!set_contains(compA, v)) {
                b = v;
                break;
            }
        Word bw = reduce(p, {{b, p.group(b).nontrivial_elements()[0]}});
        Word gw = compose(p, a_elts[0], compose(p, bw, a_elts[1]));
        Word hw = compose(p, a_elts[0],
                          compose(p, bw, compose(p, a_elts[0],
                                                 compose(p, bw, compose(p, a_elts[1], bw)))));
        std::vector<Word> out;
        out.push_back(gw);
        for (VertexId v = 0; v < g.size(); ++v) {
            if (set_contains(compA, v)) continue;
            for (Elt r : p.group(v).nontrivial_elements())
                out.push_back(compose(p, gw, reduce(p, {{v, r}})));
        }
        out.push_back(hw);
        for (VertexId v = 0; v < g.size(); ++v) {
            if (!set_contains(compA, v)) continue;
            for (Elt s : p.group(v).nontrivial_elements())
                out.push_back(compose(p, hw, reduce(p, {{v, s}})));
        }
        return out;
    }

    // alpha/omega maps: omega(u) opposite-adjacent to u; alpha(u) outside
    // star_opp(u) and star_opp(omega(u)).
    std::vector<VertexId> alpha(g.size()), omega(g.size());
    for (VertexId u = 0; u < g.size(); ++u) {
        bool found = false;
        for (VertexId x = 0; x < g.size() && !found; ++x) {
            if (x == u || opp.adjacent(x, u)) continue;  // x in star_opp(u)
            for (VertexId y = 0; y < g.size() && !found; ++y) {
                if (!opp.adjacent(y, u)) continue;  // need omega in link_opp(u)
                if (x == y || opp.adjacent(x, y)) continue;
                alpha[u] = x;
                omega[u] = y;
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error("no alpha/omega pair; input should be connected non-join");
    }

    // shortest covering walk in the opposite graph (no immediate repeats)
    auto covering_walk = [&](VertexId from, VertexId to) {
        struct State {
            VertexId at;
            VertexSet visited;
        };
        std::map<std::pair<VertexId, VertexSet>, std::pair<VertexId, VertexSet>> parent;
        std::vector<State> queue{{from, set_single(from)}};
        parent[{from, set_single(from)}] = {from, 0};
        const VertexSet all = g.all_vertices();
        for (std::size_t i = 0; i < queue.size(); ++i) {
            State s = queue[i];
            if (s.at == to && s.visited == all) {
                std::vector<VertexId> walk;
                std::pair<VertexId, VertexSet> cur{s.at, s.visited};
                while (cur.second != 0) {
                    walk.push_back(cur.first);
                    cur = parent[cur];
                }
                std::reverse(walk.begin(), walk.end());
                return walk;
            }
            for (VertexId w = 0; w < g.size(); ++w) {
                if (!opp.adjacent(s.at, w)) continue;
                std::pair<VertexId, VertexSet> key{w, s.visited | set_single(w)};
                if (parent.count(key)) continue;
                parent[key] = {s.at, s.visited};
                queue.push_back({w, key.second});
            }
        }
        throw std::runtime_error("no covering walk in the opposite graph");
    };

    std::vector<std::vector<VertexId>> walks;
    for (VertexId u = 0; u < g.size(); ++u) walks.push_back(covering_walk(alpha[u], omega[u]));
    // pad to pairwise length gaps >= 2 by bouncing on the final opposite edge
    for (VertexId u = 0; u < g.size(); ++u) {
        std::vector<VertexId>& w = walks[u];
        std::size_t target = w.size();
        bool conflict = true;
        while (conflict) {
            conflict = false;
            for (VertexId v = 0; v < u; ++v) {
                std::size_t other = walks[v].size();
                if (target + 2 > other && other + 2 > target) {
                    conflict = true;
                    target += 2;
                    break;
                }
            }
        }
        VertexId back = w[w.size() - 2];
        while (w.size() < target) {
            w.push_back(back);
            w.push_back(omega[u]);
        }
    }

    std::vector<Word> out;
    for (VertexId u = 0; u < g.size(); ++u) {
        std::vector<Syllable> syls;
        for (VertexId step : walks[u]) syls.push_back({step, p.group(step).nontrivial_elements()[0]});
        Word gu = reduce(p, syls);
        out.push_back(gu);
        for (Elt s : p.group(u).nontrivial_elements())
            out.push_back(compose(p, gu, Word{Syllable{u, s}}));
    }
    return out;
}

struct EndomorphismCheck {
    bool valid = true;
    std::string violated;  // description of the first broken relation
};

// Verify that per-element images define an endomorphism: vertex-group
// multiplication tables and the commutation relations across edges.
inline EndomorphismCheck check_endomorphism(const Presentation& p,
                                            const std::vector<std::vector<Word>>& image) {
    // image[u][e] = image of element e of G_u (index 0 = identity, must map to 1)
    EndomorphismCheck r;
    for (VertexId u = 0; u < p.graph.size(); ++u) {
        const VertexGroupSpec& G = p.group(u);
        if (!G.is_finite())
            throw std::invalid_argument("endomorphism check needs finite vertex groups");
        if (std::int64_t(image[u].size()) != G.size())
            throw std::invalid_argument("one image required per vertex-group element");
        for (Elt a = 0; a < G.size(); ++a)
            for (Elt b = 0; b < G.size(); ++b) {
                Word lhs = compose(p, image[u][a], image[u][b]);
                const Word& rhs = image[u][G.mul(a, b)];
                if (lhs != rhs) {
                    r.valid = false;
                    r.violated = "multiplication in vertex group " + p.graph.name(u);
                    return r;
                }
            }
    }
    for (VertexId u = 0; u < p.graph.size(); ++u)
        for (VertexId v = u + 1; v < p.graph.size(); ++v) {
            if (!p.graph.adjacent(u, v)) continue;
            for (Elt a = 1; a < p.group(u).size(); ++a)
                for (Elt b = 1; b < p.group(v).size(); ++b) {
                    Word ab = compose(p, image[u][a], image[v][b]);
                    Word ba = compose(p, image[v][b], image[u][a]);
                    if (ab != ba) {
                        r.valid = false;
                        r.violated = "commutation across edge " + p.graph.name(u) + "-" +
                                     p.graph.name(v);
                        return r;
                    }
                }
        }
    return r;
}

struct InvariantBounds {
    unsigned asdim_bound = 0;        // sum of max(1, asdim(G_u))
    std::string dehn_bound;          // product of max(n, delta_{G_u}), symbolically
    unsigned dehn_poly_degree = 0;   // when every factor is polynomial
};

// asdim and Dehn-function bounds from per-vertex data. Dehn inputs are
// polynomial degrees (finite groups contribute degree 1 via max(n, .)).
inline InvariantBounds invariant_bounds_report(const Presentation& p,
                                               const std::vector<unsigned>& asdim,
                                               const std::vector<unsigned>& dehn_degree) {
    InvariantBounds b;
    for (VertexId u = 0; u < p.graph.size(); ++u) {
        b.asdim_bound += std::max(1u, asdim[u]);
        b.dehn_poly_degree += std::max(1u, dehn_degree[u]);
    }
    std::ostringstream f;
    f << "n^" << b.dehn_poly_degree;
    b.dehn_bound = f.str();
    return b;
}

}  // namespace gpkit

#endif
