#ifndef GPKIT_TESTS_FIXTURES_HPP
#define GPKIT_TESTS_FIXTURES_HPP

#include "gpkit/gpkit.hpp"

namespace fixtures {

using namespace gpkit;

// RAAG on the path a - b - c - d.
inline Presentation p4() {
    SimplicialGraph g({"a", "b", "c", "d"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return Presentation{g, std::vector<VertexGroupSpec>(4, VertexGroupSpec::infinite_cyclic())};
}

// RAAG on the path a - b - c.
inline Presentation p3() {
    SimplicialGraph g({"a", "b", "c"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return Presentation{g, std::vector<VertexGroupSpec>(3, VertexGroupSpec::infinite_cyclic())};
}

// RACG on the pentagon v1 - v2 - v3 - v4 - v5 - v1.
inline Presentation c5() {
    SimplicialGraph g({"v1", "v2", "v3", "v4", "v5"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    return Presentation{g, std::vector<VertexGroupSpec>(5, VertexGroupSpec::cyclic(2))};
}

// Free product Z4 * Z3 on two isolated vertices u, v.
inline Presentation fp() {
    SimplicialGraph g({"u", "v"});
    return Presentation{g, {VertexGroupSpec::cyclic(4), VertexGroupSpec::cyclic(3)}};
}

// Infinite dihedral: two isolated order-two vertices.
inline Presentation dinf() {
    SimplicialGraph g({"a", "b"});
    return Presentation{g, std::vector<VertexGroupSpec>(2, VertexGroupSpec::cyclic(2))};
}

inline Word w(const Presentation& p, const std::string& text) { return parse_word(p, text); }

}  // namespace fixtures

#endif
