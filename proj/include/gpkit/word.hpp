#ifndef GPKIT_WORD_HPP
#define GPKIT_WORD_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gpkit/presentation.hpp"

namespace gpkit {

// A graphically reduced word in canonical form: among all O3-equivalent
// reduced words, the lexicographically least vertex-index sequence.
// The empty word is the identity.
using Word = std::vector<Syllable>;

namespace detail {

// Append one syllable, keeping the word graphically reduced (not canonical).
// Scans the commuting suffix for a same-vertex syllable to merge with.
inline void push_syllable(const Presentation& p, Word& w, Syllable s) {
    if (s.elt == 0) return;
    if (!p.group(s.vertex).valid(s.elt))
        throw std::invalid_argument("malformed group element");
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i].vertex == s.vertex) {
            Elt prod = p.group(s.vertex).mul(w[i].elt, s.elt);
            if (prod == 0)
                w.erase(w.begin() + i);
            else
                w[i].elt = prod;
            return;
        }
        if (!p.adjacent(w[i].vertex, s.vertex)) break;
    }
    w.push_back(s);
}

// Greedy lexicographic front-normalization: repeatedly emit the smallest
// vertex among the syllables that shuffle to the front of what remains.
inline void canonicalize(const Presentation& p, Word& w) {
    Word out;
    out.reserve(w.size());
    std::vector<bool> used(w.size(), false);
    for (std::size_t step = 0; step < w.size(); ++step) {
        std::size_t best = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (used[i]) continue;
            bool front = true;
            for (std::size_t j = 0; j < i && front; ++j)
                if (!used[j] && !p.adjacent(w[j].vertex, w[i].vertex)) front = false;
            if (front && (best == w.size() || w[i].vertex < w[best].vertex)) best = i;
        }
        used[best] = true;
        out.push_back(w[best]);
    }
    w = std::move(out);
}

}  // namespace detail

inline Word reduce(const Presentation& p, const std::vector<Syllable>& raw) {
    Word w;
    for (const Syllable& s : raw) {
        if (s.vertex >= p.graph.size()) throw std::invalid_argument("unknown vertex id");
        detail::push_syllable(p, w, s);
    }
    detail::canonicalize(p, w);
    return w;
}

inline Word compose(const Presentation& p, const Word& x, const Word& y) {
    Word w = x;
    for (const Syllable& s : y) detail::push_syllable(p, w, s);
    detail::canonicalize(p, w);
    return w;
}

inline Word invert(const Presentation& p, const Word& x) {
    Word w;
    w.reserve(x.size());
    for (std::size_t i = x.size(); i-- > 0;)
        w.push_back({x[i].vertex, p.group(x[i].vertex).inv(x[i].elt)});
    detail::canonicalize(p, w);
    return w;
}

inline Word word_pow(const Presentation& p, const Word& x, std::int64_t n) {
    Word base = n < 0 ? invert(p, x) : x;
    std::int64_t k = n < 0 ? -n : n;
    Word acc;
    for (std::int64_t i = 0; i < k; ++i) acc = compose(p, acc, base);
    return acc;
}

// Conjugate g x g^-1.
inline Word conjugate(const Presentation& p, const Word& g, const Word& x) {
    return compose(p, g, compose(p, x, invert(p, g)));
}

inline bool is_identity(const Word& w) { return w.empty(); }

// Syllable at position i shuffles to the right end across O3 moves.
inline bool shuffles_right(const Presentation& p, const Word& w, std::size_t i) {
    for (std::size_t j = i + 1; j < w.size(); ++j)
        if (!p.adjacent(w[i].vertex, w[j].vertex)) return false;
    return true;
}

inline bool shuffles_left(const Presentation& p, const Word& w, std::size_t i) {
    for (std::size_t j = 0; j < i; ++j)
        if (!p.adjacent(w[i].vertex, w[j].vertex)) return false;
    return true;
}

// All last syllables across the graphically reduced representatives of x.
inline std::vector<Syllable> tail(const Presentation& p, const Word& x) {
    std::vector<Syllable> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (shuffles_right(p, x, i)) out.push_back(x[i]);
    return out;
}

// Vertices of the syllables of a reduced word (not the cyclic support).
inline VertexSet word_support(const Word& w) {
    VertexSet s = 0;
    for (const Syllable& syl : w) s |= set_single(syl.vertex);
    return s;
}

struct CyclicReduction {
    Word conjugator;  // x = conjugator . core . conjugator^-1
    Word core;        // graphically cyclically reduced
};

inline CyclicReduction cyclic_reduce(const Presentation& p, const Word& x) {
    CyclicReduction r;
    r.core = x;
    while (true) {
        bool moved = false;
        for (std::size_t i = 0; i < r.core.size() && !moved; ++i) {
            if (!shuffles_left(p, r.core, i)) continue;
            for (std::size_t j = i + 1; j < r.core.size() && !moved; ++j) {
                if (r.core[j].vertex != r.core[i].vertex) continue;
                if (!shuffles_right(p, r.core, j)) continue;
                // conjugate the front syllable off: core <- s^-1 core s
                Syllable s = r.core[i];
                r.core.erase(r.core.begin() + i);
                detail::push_syllable(p, r.core, s);
                r.conjugator.push_back(s);
                moved = true;
            }
        }
        if (!moved) break;
    }
    detail::canonicalize(p, r.conjugator);
    detail::canonicalize(p, r.core);
    return r;
}

struct SupportClassification {
    VertexSet support = 0;       // vertex set of the cyclic core
    bool is_single_vertex = false;
    bool support_is_join = false;
    bool is_irreducible = false;  // neither a single vertex nor a join
    bool has_full_support = false;
};

inline SupportClassification support_classify(const Presentation& p, const Word& x) {
    SupportClassification c;
    c.support = word_support(cyclic_reduce(p, x).core);
    c.is_single_vertex = set_size(c.support) == 1;
    c.support_is_join = is_join(p.graph, c.support);
    c.is_irreducible = c.support != 0 && !c.is_single_vertex && !c.support_is_join;
    c.has_full_support = c.support == p.graph.all_vertices();
    return c;
}

struct GradedDistance {
    unsigned d = 0;                   // syllable count of reduce(x^-1 y)
    std::vector<unsigned> d_u;        // per-vertex syllable counts
    std::vector<unsigned> delta_u;    // per-vertex sum of |s|_{S_u}
    unsigned delta = 0;
};

inline GradedDistance graded_distance(const Presentation& p, const Word& x, const Word& y) {
    Word w = compose(p, invert(p, x), y);
    GradedDistance g;
    g.d_u.assign(p.graph.size(), 0);
    g.delta_u.assign(p.graph.size(), 0);
    g.d = unsigned(w.size());
    for (const Syllable& s : w) {
        g.d_u[s.vertex] += 1;
        g.delta_u[s.vertex] += unsigned(p.group(s.vertex).length(s.elt));
    }
    for (unsigned du : g.delta_u) g.delta += du;
    return g;
}

inline unsigned distance(const Presentation& p, const Word& x, const Word& y) {
    return unsigned(compose(p, invert(p, x), y).size());
}

namespace detail {

// Enumerate the order ideals (downward-closed subsets) of the commutation
// poset of w: position i precedes j (i < j) when their vertices are equal or
// non-adjacent. Calls f with each ideal as a list of positions in index order.
template <typename F>

inline void for_each_ideal(const Presentation& p, const Word& w, std::size_t want, F&& f) {
    std::vector<std::size_t> chosen;
    std::vector<bool> used(w.size(), false);
    auto rec = [&](auto&& self) -> void {
        if (chosen.size() == want) {
            f(chosen);
            return;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (used[i]) continue;
            bool available = true;
            for (std::size_t j = 0; j < i && available; ++j)
                if (!used[j] && (w[j].vertex == w[i].vertex || !p.adjacent(w[j].vertex, w[i].vertex)))
                    available = false;
            if (!available) continue;
            // avoid emitting the same ideal twice: only pick positions larger
            // than the last chosen one unless forced earlier by the poset
            if (!chosen.empty() && i < chosen.back()) continue;
            used[i] = true;
            chosen.push_back(i);
            self(self);
            chosen.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
}

}  // namespace detail

struct RootResult {
    Word root;
    std::int64_t exponent = 1;
};

// Exhaustive bounded root search for an irreducible element. Candidate roots
// of a cyclically reduced element are prefixes of its O3-representatives.
inline std::optional<RootResult> primitive_root(const Presentation& p, const Word& x,
                                                std::size_t bound) {
    if (!support_classify(p, x).is_irreducible)
        throw std::invalid_argument("primitive_root requires an irreducible element");
    CyclicReduction cr = cyclic_reduce(p, x);
    const std::size_t n = cr.core.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0 || len > bound) continue;
        std::optional<RootResult> found;
        detail::for_each_ideal(p, cr.core, len, [&](const std::vector<std::size_t>& idx) {
            if (found) return;
            Word r;
            for (std::size_t i : idx) r.push_back(cr.core[i]);
            detail::canonicalize(p, r);
            if (word_pow(p, r, std::int64_t(n / len)) == cr.core)
                found = RootResult{conjugate(p, cr.conjugator, r), std::int64_t(n / len)};
        });
        if (found) return found;
    }
    if (n <= bound) return RootResult{x, 1};
    return std::nullopt;
}

}  // namespace gpkit

#endif
