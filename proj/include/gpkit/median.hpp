#ifndef GPKIT_MEDIAN_HPP
#define GPKIT_MEDIAN_HPP

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "gpkit/hyperplane.hpp"

namespace gpkit {

// The interval I(x,y): vertices on geodesics from x to y. Enumerated as the
// order ideals of the commutation poset of reduce(x^-1 y); exact and finite.
inline std::vector<Word> interval(const Presentation& p, const Word& x, const Word& y) {
    Word w = compose(p, invert(p, x), y);
    std::set<Word> seen;
    std::vector<Word> out;
    for (std::size_t k = 0; k <= w.size(); ++k)
        detail::for_each_ideal(p, w, k, [&](const std::vector<std::size_t>& idx) {
            Word prefix = x;
            for (std::size_t i : idx) prefix = compose(p, prefix, Word{w[i]});
            if (seen.insert(prefix).second) out.push_back(prefix);
        });
    return out;
}

struct MedianTriangle {
    Word x1, y1, z1;   // the corners
    Coset prism;       // smallest complete-lambda coset containing them
    unsigned size = 0; // common pairwise corner distance
};

// The unique median triangle of (x,y,z): each corner maximises the distance
// from its base point inside the intersection of the two adjacent intervals.
inline MedianTriangle median_triangle(const Presentation& p, const Word& x, const Word& y,
                                      const Word& z) {
    auto far_corner = [&](const Word& a, const Word& b, const Word& c) {
        std::vector<Word> ab = interval(p, a, b);
        std::set<Word> ac_set;
        for (Word& w : interval(p, a, c)) ac_set.insert(std::move(w));
        const Word* best = nullptr;
        unsigned best_d = 0;
        for (const Word& w : ab) {
            if (!ac_set.count(w)) continue;
            unsigned d = distance(p, a, w);
            if (!best || d > best_d) {
                best = &w;
                best_d = d;
            }
        }
        return *best;  // the identity-distance point a itself is always present
    };
    MedianTriangle m;
    m.x1 = far_corner(x, y, z);
    m.y1 = far_corner(y, x, z);
    m.z1 = far_corner(z, x, y);

    unsigned dxy = distance(p, m.x1, m.y1);
    unsigned dyz = distance(p, m.y1, m.z1);
    unsigned dxz = distance(p, m.x1, m.z1);
    if (dxy != dyz || dyz != dxz)
        throw std::runtime_error("median triangle sides are not equal");
    m.size = dxy;

    if (distance(p, x, y) != distance(p, x, m.x1) + dxy + distance(p, m.y1, y) ||
        distance(p, x, z) != distance(p, x, m.x1) + dxz + distance(p, m.z1, z) ||
        distance(p, y, z) != distance(p, y, m.y1) + dyz + distance(p, m.z1, z))
        throw std::runtime_error("median triple identities failed");

    VertexSet labels = 0;
    for (const Hyperplane& j : separating_hyperplanes(p, m.x1, m.y1)) labels |= set_single(j.label);
    for (const Hyperplane& j : separating_hyperplanes(p, m.x1, m.z1)) labels |= set_single(j.label);
    for (const Hyperplane& j : separating_hyperplanes(p, m.y1, m.z1)) labels |= set_single(j.label);
    if (!p.graph.is_complete(labels))
        throw std::runtime_error("median triangle prism labels are not a clique");
    m.prism = make_coset(p, m.x1, labels);
    return m;
}

// Coarse median operator: the corner of the median triangle associated with
// the first argument. Symmetric only up to the prism diameter.
inline Word coarse_median(const Presentation& p, const Word& x, const Word& y, const Word& z) {
    return median_triangle(p, x, y, z).x1;
}

struct CoarseMedianDefects {
    unsigned c0 = 0;  // max over mu(a,a,b) vs a and permutation invariance
    unsigned c2 = 0;  // max over the four-point identity
};

inline unsigned c0_defect(const Presentation& p, const Word& a, const Word& b, const Word& c) {
    Word m = coarse_median(p, a, b, c);
    unsigned worst = 0;
    const Word* pts[3] = {&a, &b, &c};
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& q : perms) {
        Word mp = coarse_median(p, *pts[q[0]], *pts[q[1]], *pts[q[2]]);
        worst = std::max(worst, distance(p, m, mp));
    }
    return worst;
}

inline unsigned c2_defect(const Presentation& p, const Word& a, const Word& b, const Word& c,
                          const Word& d) {
    Word lhs = coarse_median(p, coarse_median(p, a, b, c), b, d);
    Word rhs = coarse_median(p, a, b, coarse_median(p, c, b, d));
    return distance(p, lhs, rhs);
}

}  // namespace gpkit

#endif
