#ifndef GPKIT_COSET_HPP
#define GPKIT_COSET_HPP

#include <optional>
#include <stdexcept>
#include <utility>

#include "gpkit/word.hpp"

namespace gpkit {

// A parabolic coset g<Lambda>, stored with its minimal-length representative:
// no tail syllable of rep lies in lambda. That representative is the unique
// coset vertex closest to the identity, so equality is componentwise.
struct Coset {
    Word rep;
    VertexSet lambda = 0;
    friend bool operator==(const Coset&, const Coset&) = default;
};

struct HeadDecomposition {
    Word head;  // maximal left factor with syllables in lambda
    Word rest;  // w == head . rest, no lambda-syllable of rest front-shuffles
};

inline HeadDecomposition head_decompose(const Presentation& p, const Word& w,
                                        VertexSet lambda) {
    Word rest = w;
    Word head;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (!set_contains(lambda, rest[i].vertex)) continue;
            if (!shuffles_left(p, rest, i)) continue;
            head.push_back(rest[i]);
            rest.erase(rest.begin() + i);
            changed = true;
            break;
        }
    }
    detail::canonicalize(p, head);
    detail::canonicalize(p, rest);
    return {std::move(head), std::move(rest)};
}

struct TailDecomposition {
    Word rest;  // w == rest . tail
    Word tail;  // maximal right factor with syllables in lambda
};

inline TailDecomposition tail_decompose(const Presentation& p, const Word& w,
                                        VertexSet lambda) {
    HeadDecomposition mirrored = head_decompose(p, invert(p, w), lambda);
    return {invert(p, mirrored.rest), invert(p, mirrored.head)};
}

inline Coset make_coset(const Presentation& p, const Word& g, VertexSet lambda) {
    return Coset{tail_decompose(p, g, lambda).rest, lambda};
}

inline bool coset_contains(const Presentation& p, const Word& x, const Coset& c) {
    Word diff = compose(p, invert(p, c.rep), x);
    return (word_support(diff) & ~c.lambda) == 0;
}

// Gate of x on the coset: the unique coset vertex minimising the distance to x.
inline Word project(const Presentation& p, const Word& x, const Coset& c) {
    Word diff = compose(p, invert(p, c.rep), x);
    return compose(p, c.rep, head_decompose(p, diff, c.lambda).head);
}

inline VertexSet normalizer_support(const SimplicialGraph& g, VertexSet lambda) {
    return lambda | g.link_of_set(lambda);
}

// Pair realising the distance between two cosets, found by alternating
// projections between the two gated subgraphs. At the fixed point every
// hyperplane separating the pair separates the cosets, so the pair is minimal.
inline std::pair<Word, Word> min_pair(const Presentation& p, const Coset& a, const Coset& b) {
    Word q = b.rep;
    Word x = project(p, q, a);
    while (true) {
        Word q2 = project(p, x, b);
        Word x2 = project(p, q2, a);
        if (x2 == x && q2 == q) break;
        x = std::move(x2);
        q = std::move(q2);
    }
    return {x, q};
}

inline bool cosets_intersect(const Presentation& p, const Coset& a, const Coset& b) {
    auto [x, y] = min_pair(p, a, b);
    return x == y;
}

enum class VerdictStatus { Certified, Refuted, Unknown };

struct DoubleCosetVerdict {
    VerdictStatus status = VerdictStatus::Unknown;
    Word left;      // Certified: w == left . right with left in <A>, right in <B>
    Word right;
    Word residual;  // Refuted: non-trivial word separating the gated pair
};

// Decides w in <A>.<B> exactly: equivalent to <A> meeting w<B>.
inline DoubleCosetVerdict double_coset_member(const Presentation& p, const Word& w,
                                              VertexSet A, VertexSet B) {
    Coset ca = make_coset(p, Word{}, A);
    Coset cb = make_coset(p, w, B);
    auto [x, y] = min_pair(p, ca, cb);
    DoubleCosetVerdict v;
    if (x == y) {
        v.status = VerdictStatus::Certified;
        v.left = x;
        v.right = compose(p, invert(p, x), w);
    } else {
        v.status = VerdictStatus::Refuted;
        v.residual = compose(p, invert(p, x), y);
    }
    return v;
}

struct CentralizerDescription {
    Word conjugator;                       // h with supp core = h^-1 x h pieces
    VertexSet link_part = 0;               // link(supp(x))
    std::vector<std::pair<VertexId, Word>> vertex_parts;  // (u, the u-syllable a_i)
    std::vector<Word> cyclic_parts;        // primitive roots c_j, unconjugated
};

// Centralizer of x: h( <link(supp x)> + sum C_{G_u}(a_u) + sum <c_j> )h^-1
// with c_j a primitive root of the irreducible join factor b_j of the core.
inline CentralizerDescription centralizer_description(const Presentation& p, const Word& x,
                                                      std::size_t root_bound) {
    CyclicReduction cr = cyclic_reduce(p, x);
    CentralizerDescription out;
    out.conjugator = cr.conjugator;
    VertexSet supp = word_support(cr.core);
    out.link_part = p.graph.link_of_set(supp);
    JoinDecomposition jd = join_decomposition(p.graph, supp);
    // single-vertex factors: the syllable of the core at that vertex
    for (VertexId u = 0; u < p.graph.size(); ++u) {
        if (!set_contains(jd.clique_part, u)) continue;
        Word part = head_decompose(p, cr.core, set_single(u)).head;
        out.vertex_parts.emplace_back(u, part);
    }
    for (VertexSet factor : jd.factors) {
        Word piece = head_decompose(p, cr.core, factor).head;
        auto root = primitive_root(p, piece, root_bound);
        if (!root)
            throw std::runtime_error("root search exhausted in centralizer description");
        out.cyclic_parts.push_back(root->root);
    }
    return out;
}

// Elements of G_u commuting with a (exponent cap applies to infinite cyclic).
inline std::vector<Elt> vertex_centralizer_elements(const Presentation& p, VertexId u, Elt a,
                                                    std::int64_t cap = 3) {
    std::vector<Elt> out;
    const VertexGroupSpec& G = p.group(u);
    for (Elt e : G.nontrivial_elements(cap))
        if (G.mul(e, a) == G.mul(a, e)) out.push_back(e);
    return out;
}

struct CenterDescription {
    VertexSet clique_part = 0;   // Gamma_0 of the join decomposition
    bool trivial = false;        // center of <Gamma_0> when non-trivial vertex data allows
};

// Center of the graph product: the center of the clique part of the join
// decomposition (trivial when the clique part is empty).
inline CenterDescription center(const Presentation& p) {
    CenterDescription c;
    c.clique_part = join_decomposition(p.graph).clique_part;
    c.trivial = c.clique_part == 0;
    return c;
}

}  // namespace gpkit

#endif
