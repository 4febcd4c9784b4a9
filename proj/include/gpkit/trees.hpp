#ifndef GPKIT_TREES_HPP
#define GPKIT_TREES_HPP

#include <algorithm>
#include <vector>

#include "gpkit/median.hpp"

namespace gpkit {

// Coordinates of a vertex in the product of trees T_u (and trees of spaces
// TS_u): per vertex u, the component of the complement of all u-walls that
// contains it, i.e. the canonical representative of its coset of <V - u>.
struct TreeCoordinate {
    std::vector<Word> component;  // indexed by vertex
    friend bool operator==(const TreeCoordinate&, const TreeCoordinate&) = default;
};

struct TreeOfSpacesCoordinate {
    std::vector<Word> component;
    friend bool operator==(const TreeOfSpacesCoordinate&, const TreeOfSpacesCoordinate&) = default;
};

struct Embedding {
    TreeCoordinate eta;
    TreeOfSpacesCoordinate pi;
};

inline Embedding embed(const Presentation& p, const Word& x) {
    Embedding e;
    for (VertexId u = 0; u < p.graph.size(); ++u) {
        VertexSet rest = p.graph.all_vertices() & ~set_single(u);
        Word rep = make_coset(p, x, rest).rep;
        e.eta.component.push_back(rep);
        e.pi.component.push_back(rep);
    }
    return e;
}

struct TreeDistances {
    unsigned d_T = 0;   // 2 d_u(x,y)
    unsigned d_TS = 0;  // 2 d_u(x,y) + delta_u(x,y)
};

inline TreeDistances tree_distance(const Presentation& p, VertexId u, const Word& x,
                                   const Word& y) {
    GradedDistance g = graded_distance(p, x, y);
    return TreeDistances{2 * g.d_u[u], 2 * g.d_u[u] + g.delta_u[u]};
}

struct MedianDefect {
    unsigned eta = 0;  // max over corners of the l1 tree distance to the tree median
    unsigned pi = 0;
};

// Distance in a tree from the image of a point q to the median of the images
// of x,y,z, via the Gromov product max (all distances are tree distances).
inline unsigned tree_median_distance(unsigned dqx, unsigned dqy, unsigned dqz, unsigned dxy,
                                     unsigned dxz, unsigned dyz) {
    auto gp = [](unsigned a, unsigned b, unsigned c) {
        return (a + b > c) ? (a + b - c) / 2 : 0u;
    };
    return std::max({gp(dqx, dqy, dxy), gp(dqx, dqz, dxz), gp(dqy, dqz, dyz)});
}

// Deviation of the corner images from the coordinatewise tree medians; the
// almost-median property bounds it by the number of vertices.
inline MedianDefect almost_median_defect(const Presentation& p, const Word& x, const Word& y,
                                         const Word& z) {
    MedianTriangle m = median_triangle(p, x, y, z);
    MedianDefect out;
    for (const Word* corner : {&m.x1, &m.y1, &m.z1}) {
        unsigned sum_eta = 0, sum_pi = 0;
        for (VertexId u = 0; u < p.graph.size(); ++u) {
            auto d = [&](const Word& a, const Word& b) { return tree_distance(p, u, a, b); };
            TreeDistances qx = d(*corner, x), qy = d(*corner, y), qz = d(*corner, z);
            TreeDistances xy = d(x, y), xz = d(x, z), yz = d(y, z);
            sum_eta += tree_median_distance(qx.d_T, qy.d_T, qz.d_T, xy.d_T, xz.d_T, yz.d_T);
            sum_pi += tree_median_distance(qx.d_TS, qy.d_TS, qz.d_TS, xy.d_TS, xz.d_TS, yz.d_TS);
        }
        out.eta = std::max(out.eta, sum_eta);
        out.pi = std::max(out.pi, sum_pi);
    }
    return out;
}

}  // namespace gpkit

#endif
