#ifndef GPKIT_CONE_OFF_HPP
#define GPKIT_CONE_OFF_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "gpkit/crossing.hpp"

namespace gpkit {

// Adjacency in the cone-off Y of the quasi-median graph over all proper
// parabolic cosets: x ~ y iff x != y and x^-1 y lies in a proper parabolic.
inline bool coneoff_adjacent(const Presentation& p, const Word& x, const Word& y) {
    if (x == y) return false;
    Word diff = compose(p, invert(p, x), y);
    return word_support(diff) != p.graph.all_vertices();
}

// Depth-bounded BFS in Y. Each hop peels the maximal head of the remaining
// word over a maximal proper subgraph; any proper-support hop factors through
// one of those. Returns the first depth at which y is reached, or nullopt.
inline std::optional<unsigned> coneoff_distance(const Presentation& p, const Word& x,
                                                const Word& y, unsigned depth_bound) {
    if (x == y) return 0u;
    if (coneoff_adjacent(p, x, y)) return 1u;
    std::set<Word> seen;
    std::vector<Word> frontier{compose(p, invert(p, x), y)};  // remaining words
    seen.insert(frontier.front());
    for (unsigned depth = 1; depth <= depth_bound; ++depth) {
        std::vector<Word> next;
        for (const Word& rem : frontier) {
            if (word_support(rem) != p.graph.all_vertices()) return depth;  // one hop left
            for (VertexId skip = 0; skip < p.graph.size(); ++skip) {
                VertexSet lambda = p.graph.all_vertices() & ~set_single(skip);
                Word rest = head_decompose(p, rem, lambda).rest;
                if (rest == rem) continue;  // empty hop
                if (seen.insert(rest).second) next.push_back(rest);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

struct Block {
    std::vector<Hyperplane> walls;  // contains a wall labelled by every vertex
};

struct BlockChainCertificate {
    Word x, y;
    std::vector<Block> blocks;
    bool chain_verified = false;  // each block separates its neighbors
};

inline unsigned lower_bound(const BlockChainCertificate& cert) {
    // A chain of N separating blocks forces N+2 vertices on any Y-geodesic,
    // hence Y-distance at least N+1.
    return cert.blocks.empty() ? (cert.x == cert.y ? 0 : 1)
                               : unsigned(cert.blocks.size()) + 1;
}

// Group the separator list of (x, y) into consecutive label-covering blocks
// and verify the chain conditions; blocks failing separation merge into their
// predecessor. Every wall of every block separates x and y by construction.
inline BlockChainCertificate block_chain_certificate(const Presentation& p, const Word& x,
                                                     const Word& y) {
    BlockChainCertificate cert;
    cert.x = x;
    cert.y = y;
    std::vector<Hyperplane> seps = separating_hyperplanes(p, x, y);
    const VertexSet all = p.graph.all_vertices();
    std::vector<Block> blocks;
    Block cur;
    VertexSet labels = 0;
    for (Hyperplane& j : seps) {
        labels |= set_single(j.label);
        cur.walls.push_back(std::move(j));
        if (labels == all) {
            blocks.push_back(std::move(cur));
            cur = Block{};
            labels = 0;
        }
    }
    // wall j separates blocks A and B when it separates every pair of carriers
    auto separates_blocks = [&](const Block& mid, const Block& a, const Block& b) {
        for (const Hyperplane& j : mid.walls)
            for (const Hyperplane& wa : a.walls)
                for (const Hyperplane& wb : b.walls)
                    if (!wall_separates_walls(p, j, wa, wb)) return false;
        return true;
    };
    // merge neighbors until the chain conditions hold
    bool changed = true;
    while (changed && blocks.size() >= 3) {
        changed = false;
        for (std::size_t i = 1; i + 1 < blocks.size(); ++i)
            if (!separates_blocks(blocks[i], blocks[i - 1], blocks[i + 1])) {
                blocks[i - 1].walls.insert(blocks[i - 1].walls.end(), blocks[i].walls.begin(),
                                           blocks[i].walls.end());
                blocks.erase(blocks.begin() + i);
                changed = true;
                break;
            }
    }
    cert.blocks = std::move(blocks);
    cert.chain_verified = true;
    for (std::size_t i = 1; i + 1 < cert.blocks.size(); ++i)
        if (!separates_blocks(cert.blocks[i], cert.blocks[i - 1], cert.blocks[i + 1]))
            cert.chain_verified = false;
    return cert;
}

struct WpdAuditResult {
    VerdictStatus status = VerdictStatus::Unknown;
    std::vector<Word> members;   // the finite set S when certified
    unsigned radius_used = 0;
    std::string note;
};

// Audit of the WPD finiteness set S = {h : d_Y(x,hx) <= eps, d_Y(g^n x, h g^n x) <= eps}
// at x = 1. eps = 0 is exact (the action on vertices is free). For eps >= 1 the
// set {h : d_Y(1,h) <= eps} is enumerated exactly when every proper parabolic
// subgroup is finite; otherwise candidates come from a ball and the verdict
// stays Unknown.
inline WpdAuditResult wpd_sample_audit(const Presentation& p, const Word& g, unsigned eps,
                                       unsigned n, unsigned radius) {
    if (!support_classify(p, g).has_full_support)
        throw std::invalid_argument("wpd_sample_audit requires a full-support element");
    WpdAuditResult res;
    res.radius_used = radius;
    const Word gn = word_pow(p, g, n);
    auto in_S = [&](const Word& h) {
        auto d1 = coneoff_distance(p, Word{}, h, eps);
        if (!d1) return false;
        auto d2 = coneoff_distance(p, gn, compose(p, h, gn), eps);
        return bool(d2);
    };
    if (eps == 0) {
        res.status = VerdictStatus::Certified;
        res.members = {Word{}};
        res.note = "free action: only the identity fixes a vertex";
        return res;
    }
    // is every proper parabolic subgroup finite? (maximal proper ones suffice)
    bool proper_finite = true;
    for (VertexId skip = 0; skip < p.graph.size(); ++skip)
        if (p.parabolic_order(p.graph.all_vertices() & ~set_single(skip)) < 0) proper_finite = false;
    if (proper_finite) {
        // elements at Y-distance <= eps from 1: products of eps proper-parabolic pieces
        std::set<Word> layer{Word{}};
        for (unsigned step = 0; step < eps; ++step) {
            std::set<Word> next = layer;
            for (const Word& base : layer)
                for (VertexId skip = 0; skip < p.graph.size(); ++skip) {
                    VertexSet lambda = p.graph.all_vertices() & ~set_single(skip);
                    // all elements of <lambda>, finite by assumption
                    std::vector<Word> members{Word{}};
                    std::set<Word> seen{Word{}};
                    for (std::size_t i = 0; i < members.size(); ++i)
                        for (VertexId u = 0; u < p.graph.size(); ++u) {
                            if (!set_contains(lambda, u)) continue;
                            for (Elt e : p.group(u).nontrivial_elements()) {
                                Word w = compose(p, members[i], Word{Syllable{u, e}});
                                if (seen.insert(w).second) members.push_back(w);
                            }
                        }
                    for (const Word& m : members) next.insert(compose(p, base, m));
                }
            layer = std::move(next);
        }
        for (const Word& h : layer)
            if (in_S(h)) res.members.push_back(h);
        res.status = VerdictStatus::Certified;
        res.note = "exact: proper parabolics are finite";
        return res;
    }
    // honest fallback: ball enumeration only
    for (const Word& h : qm_ball(p, Word{}, radius))
        if (in_S(h)) res.members.push_back(h);
    res.status = VerdictStatus::Unknown;
    res.note = "candidates beyond the search radius not excluded";
    return res;
}

enum class ElementClass { Identity, VertexConjugate, Reducible, Irreducible };

struct ElementClassification {
    ElementClass cls = ElementClass::Identity;
    bool gen_loxodromic = false;      // irreducible elements
    bool rel_gen_loxodromic = false;  // full support: loxodromic rel. proper parabolics
    SupportClassification support;
};

inline ElementClassification classify_element(const Presentation& p, const Word& x) {
    ElementClassification c;
    c.support = support_classify(p, x);
    if (c.support.support == 0)
        c.cls = ElementClass::Identity;
    else if (c.support.is_single_vertex)
        c.cls = ElementClass::VertexConjugate;
    else if (c.support.is_irreducible)
        c.cls = ElementClass::Irreducible;
    else
        c.cls = ElementClass::Reducible;
    c.gen_loxodromic = c.support.is_irreducible;
    c.rel_gen_loxodromic = c.support.has_full_support;
    return c;
}

}  // namespace gpkit

#endif
