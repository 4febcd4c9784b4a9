#ifndef GPKIT_PRESENTATION_HPP
#define GPKIT_PRESENTATION_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "gpkit/graph.hpp"

namespace gpkit {

// A vertex-group element. Identity is 0 in every kind:
//   FiniteTable    : index into the element list (identity at index 0)
//   Cyclic(n)      : exponent in [1, n)
//   InfiniteCyclic : any non-zero exponent
using Elt = std::int64_t;

enum class GroupKind { FiniteTable, Cyclic, InfiniteCyclic };

struct VertexGroupSpec {
    GroupKind kind = GroupKind::Cyclic;
    std::int64_t order = 2;              // Cyclic only
    std::vector<Elt> table;              // FiniteTable: row-major k*k product table
    std::int64_t table_size = 0;
    std::vector<Elt> generators;         // FiniteTable: generating indices; others: {1}
    std::vector<int> word_length;        // FiniteTable: |g|_{S_u}, BFS-precomputed
    std::vector<Elt> inverse;            // FiniteTable: inverse indices

    static VertexGroupSpec cyclic(std::int64_t n) {
        if (n < 2) throw std::invalid_argument("cyclic order must be >= 2");
        VertexGroupSpec s;
        s.kind = GroupKind::Cyclic;
        s.order = n;
        s.generators = {1};
        return s;
    }

    static VertexGroupSpec infinite_cyclic() {
        VertexGroupSpec s;
        s.kind = GroupKind::InfiniteCyclic;
        s.generators = {1};
        return s;
    }

    static VertexGroupSpec finite_table(std::vector<Elt> table, std::int64_t k,
                                        std::vector<Elt> gens = {}) {
        VertexGroupSpec s;
        s.kind = GroupKind::FiniteTable;
        s.table = std::move(table);
        s.table_size = k;
        if (k < 2 || std::int64_t(s.table.size()) != k * k)
            throw std::invalid_argument("bad multiplication table size");
        for (Elt e : s.table)
            if (e < 0 || e >= k) throw std::invalid_argument("table entry out of range");
        for (Elt a = 0; a < k; ++a)
            if (s.table[a] != a || s.table[a * k] != a)
                throw std::invalid_argument("index 0 is not an identity");
        for (Elt a = 0; a < k; ++a)
            for (Elt b = 0; b < k; ++b)
                for (Elt c = 0; c < k; ++c)
                    if (s.table[s.table[a * k + b] * k + c] != s.table[a * k + s.table[b * k + c]])
                        throw std::invalid_argument("table is not associative");
        s.inverse.assign(k, -1);
        for (Elt a = 0; a < k; ++a)
            for (Elt b = 0; b < k; ++b)
                if (s.table[a * k + b] == 0) s.inverse[a] = b;
        for (Elt a = 0; a < k; ++a)
            if (s.inverse[a] < 0) throw std::invalid_argument("table has no inverse for an element");
        if (gens.empty())
            for (Elt a = 1; a < k; ++a) gens.push_back(a);
        for (Elt g : gens)
            if (g <= 0 || g >= k) throw std::invalid_argument("generator index out of range");
        s.generators = std::move(gens);
        // word length over S_u with inverses allowed
        s.word_length.assign(k, -1);
        s.word_length[0] = 0;
        std::vector<Elt> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Elt cur = queue[i];
            for (Elt g : s.generators)
                for (Elt step : {g, s.inverse[g]}) {
                    Elt nxt = s.table[cur * k + step];
                    if (s.word_length[nxt] < 0) {
                        s.word_length[nxt] = s.word_length[cur] + 1;
                        queue.push_back(nxt);
                    }
                }
        }
        for (Elt a = 0; a < k; ++a)
            if (s.word_length[a] < 0)
                throw std::invalid_argument("generating set does not generate the table group");
        return s;
    }

    bool is_finite() const { return kind != GroupKind::InfiniteCyclic; }

    std::int64_t size() const {
        switch (kind) {
            case GroupKind::Cyclic: return order;
            case GroupKind::FiniteTable: return table_size;
            default: return -1;
        }
    }

    Elt mul(Elt a, Elt b) const {
        switch (kind) {
            case GroupKind::Cyclic: return (a + b) % order;
            case GroupKind::InfiniteCyclic: return a + b;
            default: return table[a * table_size + b];
        }
    }

    Elt inv(Elt a) const {
        switch (kind) {
            case GroupKind::Cyclic: return a == 0 ? 0 : order - a;
            case GroupKind::InfiniteCyclic: return -a;
            default: return inverse[a];
        }
    }

    bool valid(Elt a) const {
        switch (kind) {
            case GroupKind::Cyclic: return a >= 0 && a < order;
            case GroupKind::InfiniteCyclic: return true;
            default: return a >= 0 && a < table_size;
        }
    }

    // Word length w.r.t. S_u, inverses counted as length 1.
    int length(Elt a) const {
        switch (kind) {
            case GroupKind::Cyclic: return int(std::min(a, order - a));
            case GroupKind::InfiniteCyclic: return int(a < 0 ? -a : a);
            default: return word_length[a];
        }
    }

    // Non-identity elements; for the infinite cyclic group, exponents up to cap.
    std::vector<Elt> nontrivial_elements(std::int64_t cap = 2) const {
        std::vector<Elt> out;
        if (kind == GroupKind::InfiniteCyclic) {
            for (std::int64_t e = 1; e <= cap; ++e) {
                out.push_back(e);
                out.push_back(-e);
            }
        } else {
            for (Elt a = 1; a < size(); ++a) out.push_back(a);
        }
        return out;
    }
};

struct Syllable {
    VertexId vertex;
    Elt elt;  // never the identity
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct Presentation {
    SimplicialGraph graph;
    std::vector<VertexGroupSpec> groups;  // one per vertex, in vertex order

    const VertexGroupSpec& group(VertexId v) const {
        if (v >= groups.size()) throw std::invalid_argument("unknown vertex id");
        return groups[v];
    }

    bool adjacent(VertexId a, VertexId b) const { return graph.adjacent(a, b); }

    bool all_groups_finite() const {
        for (const auto& g : groups)
            if (!g.is_finite()) return false;
        return true;
    }

    // |<Lambda>| when finite (Lambda complete, all groups finite), else -1.
    std::int64_t parabolic_order(VertexSet lambda) const {
        if (!graph.is_complete(lambda)) return -1;
        std::int64_t n = 1;
        for (VertexId v = 0; v < graph.size(); ++v)
            if (set_contains(lambda, v)) {
                if (!groups[v].is_finite()) return -1;
                n *= groups[v].size();
            }
        return n;
    }
};

}  // namespace gpkit

#endif
