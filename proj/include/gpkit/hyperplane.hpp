#ifndef GPKIT_HYPERPLANE_HPP
#define GPKIT_HYPERPLANE_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gpkit/coset.hpp"

namespace gpkit {

// A wall of the quasi-median graph: label u plus its carrier coset g<star(u)>.
// Walls labelled u correspond bijectively to carrier cosets, so equality is
// componentwise on the canonical carrier representative.
struct Hyperplane {
    VertexId label = 0;
    Coset carrier;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

inline bool hyperplane_less(const Hyperplane& a, const Hyperplane& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.carrier.rep < b.carrier.rep;
}

// The wall whose carrier contains x, labelled u.
inline Hyperplane wall_at(const Presentation& p, const Word& x, VertexId u) {
    return Hyperplane{u, make_coset(p, x, p.graph.star(u))};
}

inline Hyperplane translate(const Presentation& p, const Word& g, const Hyperplane& j) {
    return Hyperplane{j.label, make_coset(p, compose(p, g, j.carrier.rep), j.carrier.lambda)};
}

// Walls crossed by the canonical geodesic from x to y, in crossing order.
// The i-th wall is dual to the edge at prefix x s_1 ... s_{i-1}.
inline std::vector<Hyperplane> separating_hyperplanes(const Presentation& p, const Word& x,
                                                      const Word& y) {
    Word w = compose(p, invert(p, x), y);
    std::vector<Hyperplane> out;
    Word prefix = x;
    for (const Syllable& s : w) {
        out.push_back(wall_at(p, prefix, s.vertex));
        prefix = compose(p, prefix, Word{s});
    }
    return out;
}

// Key of the sector of J containing x: the element of the carrier clique
// rep.G_u reached by projecting x.
inline Word sector_key(const Presentation& p, const Hyperplane& j, const Word& x) {
    Coset clique{j.carrier.rep, set_single(j.label)};
    return project(p, x, clique);
}

inline bool separates(const Presentation& p, const Hyperplane& j, const Word& x, const Word& y) {
    return sector_key(p, j, x) != sector_key(p, j, y);
}

// delta_J: distance between the sector keys inside the clique, in |.|_{S_u}.
inline unsigned delta_J(const Presentation& p, const Hyperplane& j, const Word& x, const Word& y) {
    Word d = compose(p, invert(p, sector_key(p, j, x)), sector_key(p, j, y));
    if (d.empty()) return 0;
    return unsigned(p.group(j.label).length(d[0].elt));
}

enum class WallRelation { Equal, Transverse, Tangent, Separated };

struct WallRelationResult {
    WallRelation relation = WallRelation::Equal;
    unsigned separator_count = 0;           // Separated only
    std::vector<Hyperplane> separators;     // Separated only: walls between the carriers
};

// Transverse iff the labels are adjacent (hence distinct) and the carriers
// intersect; tangent iff distinct, carriers intersect, labels non-adjacent.
inline WallRelationResult hyperplane_relation(const Presentation& p, const Hyperplane& a,
                                              const Hyperplane& b) {
    WallRelationResult r;
    if (a == b) return r;
    auto [x, y] = min_pair(p, a.carrier, b.carrier);
    if (x == y) {
        r.relation = p.graph.adjacent(a.label, b.label) ? WallRelation::Transverse
                                                        : WallRelation::Tangent;
        return r;
    }
    r.relation = WallRelation::Separated;
    r.separators = separating_hyperplanes(p, x, y);
    r.separator_count = unsigned(r.separators.size());
    return r;
}

inline bool transverse(const Presentation& p, const Hyperplane& a, const Hyperplane& b) {
    if (a == b || !p.graph.adjacent(a.label, b.label)) return false;
    return cosets_intersect(p, a.carrier, b.carrier);
}

struct SeparationVerdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::string rule;                     // Certified: which exact rule fired
    std::optional<Hyperplane> witness;    // Refuted: a wall transverse to both
};

// Exact decision of strong separation. A common transversal minimising the
// distance from the gate point x (of the carriers' minimal pair) must have x
// in its carrier: any wall separating x from that carrier is itself a common
// transversal with a strictly closer carrier. So only the walls through x,
// one per label in link(a) ∩ link(b), need to be tested.
inline SeparationVerdict strongly_separated(const Presentation& p, const Hyperplane& a,
                                            const Hyperplane& b) {
    if (a == b) throw std::invalid_argument("strongly_separated requires distinct walls");
    if (transverse(p, a, b))
        throw std::invalid_argument("strongly_separated requires non-transverse walls");
    SeparationVerdict v;
    VertexSet common = p.graph.link(a.label) & p.graph.link(b.label);
    if (common == 0) {
        v.status = VerdictStatus::Certified;
        v.rule = "empty-common-link";
        return v;
    }
    auto [x, y] = min_pair(p, a.carrier, b.carrier);
    for (VertexId w = 0; w < p.graph.size(); ++w) {
        if (!set_contains(common, w)) continue;
        Hyperplane cand = wall_at(p, x, w);
        if (transverse(p, cand, a) && transverse(p, cand, b)) {
            v.status = VerdictStatus::Refuted;
            v.witness = cand;
            return v;
        }
    }
    v.status = VerdictStatus::Certified;
    v.rule = "no-transversal-at-gate";
    return v;
}

struct DeltaChainResult {
    unsigned delta = 0;                 // maximal pairwise strongly separated subchain
    std::vector<Hyperplane> chain;      // one such subchain
    std::vector<Hyperplane> separators; // all walls separating the carriers, in order
};

// Delta(A,B): longest chain of pairwise strongly separated walls separating
// A and B. The separators come linearly ordered along a geodesic between the
// carriers; DP over that order, with pairwise verification of the result.
inline DeltaChainResult delta_chain(const Presentation& p, const Hyperplane& a,
                                    const Hyperplane& b) {
    DeltaChainResult r;
    if (a == b) return r;
    auto [x, y] = min_pair(p, a.carrier, b.carrier);
    if (x == y) return r;  // tangent or transverse carriers: no separators
    r.separators = separating_hyperplanes(p, x, y);
    const std::size_t n = r.separators.size();
    std::vector<std::vector<bool>> ss(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (r.separators[i] == r.separators[j]) continue;
            if (transverse(p, r.separators[i], r.separators[j])) continue;
            ss[i][j] = strongly_separated(p, r.separators[i], r.separators[j]).status ==
                       VerdictStatus::Certified;
        }
    std::vector<unsigned> len(n, 1);
    std::vector<int> prev(n, -1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (ss[i][j] && len[i] + 1 > len[j]) {
                len[j] = len[i] + 1;
                prev[j] = int(i);
            }
    std::size_t best = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (len[j] > len[best]) best = j;
    if (n > 0) {
        for (int i = int(best); i >= 0; i = prev[i]) r.chain.push_back(r.separators[i]);
        std::reverse(r.chain.begin(), r.chain.end());
        r.delta = len[best];
    }
    return r;
}

// Does wall j separate the carriers of a and b entirely?
inline bool wall_separates_walls(const Presentation& p, const Hyperplane& j,
                                 const Hyperplane& a, const Hyperplane& b) {
    auto [x, y] = min_pair(p, a.carrier, b.carrier);
    for (const Hyperplane& s : separating_hyperplanes(p, x, y))
        if (s == j) return true;
    return false;
}

struct BridgeResult {
    Word from;                          // gate on c1
    Word to;                            // gate on c2
    std::vector<Hyperplane> separators;
    std::optional<Coset> enclosing_join;  // join coset containing the bridge
};

// Bridge data between two cosets: a minimal pair, the separating walls, and,
// when the disjoint cosets share a crossing wall, a join coset around the bridge.
inline BridgeResult bridge(const Presentation& p, const Coset& c1, const Coset& c2) {
    BridgeResult r;
    auto [x, y] = min_pair(p, c1, c2);
    r.from = x;
    r.to = y;
    r.separators = separating_hyperplanes(p, x, y);
    if (!r.separators.empty()) {
        // walls crossing both cosets pass the gate: one candidate per common label
        VertexSet crossing = 0;
        for (VertexId w = 0; w < p.graph.size(); ++w) {
            if (!set_contains(c1.lambda & c2.lambda, w)) continue;
            Hyperplane cand = wall_at(p, x, w);
            if (cosets_intersect(p, cand.carrier, c1) && cosets_intersect(p, cand.carrier, c2))
                crossing |= set_single(w);
        }
        if (crossing != 0) {
            VertexSet sep_labels = 0;
            for (const Hyperplane& s : r.separators) sep_labels |= set_single(s.label);
            r.enclosing_join = make_coset(p, x, sep_labels | crossing);
        }
    }
    return r;
}

}  // namespace gpkit

#endif
