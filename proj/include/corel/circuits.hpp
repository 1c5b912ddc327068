#pragma once

// Circuit-diagram decorations: edge-labeled multigraphs on the apex of a
// cospan, the syntax of open circuits. Edges are undirected, labels are
// exact rationals or free-form symbols, and multi-edges and self-loops are
// allowed.

#include <gmpxx.h>

#include <variant>

#include "corel/decoration.hpp"

namespace corel {

using EdgeLabel = std::variant<mpq_class, std::string>;

inline bool label_less(const EdgeLabel& a, const EdgeLabel& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (a.index() == 0) return cmp(std::get<0>(a), std::get<0>(b)) < 0;
    return std::get<1>(a) < std::get<1>(b);
}

inline bool label_equal(const EdgeLabel& a, const EdgeLabel& b) {
    return !label_less(a, b) && !label_less(b, a);
}

inline std::string label_str(const EdgeLabel& l) {
    return l.index() == 0 ? std::get<0>(l).get_str() : std::get<1>(l);
}

struct GraphEdge {
    std::size_t u = 0, v = 0; // normalized so u <= v
    EdgeLabel label;

    GraphEdge() = default;
    GraphEdge(std::size_t a, std::size_t b, EdgeLabel l)
        : u(std::min(a, b)), v(std::max(a, b)), label(std::move(l)) {}
};

inline bool operator<(const GraphEdge& a, const GraphEdge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return label_less(a.label, b.label);
}

inline bool operator==(const GraphEdge& a, const GraphEdge& b) {
    return a.u == b.u && a.v == b.v && label_equal(a.label, b.label);
}

/// An edge-labeled multigraph on the ordinal {0..vertices-1}. The edge list
/// is kept sorted so equality is multiset equality.
struct LabeledGraph {
    std::size_t vertices = 0;
    std::vector<GraphEdge> edges;

    LabeledGraph() = default;
    LabeledGraph(std::size_t n, std::vector<GraphEdge> es) : vertices(n), edges(std::move(es)) {
        for (const GraphEdge& e : edges)
            if (e.v >= vertices)
                throw std::invalid_argument("LabeledGraph: edge endpoint out of range");
        std::sort(edges.begin(), edges.end());
    }

    bool operator==(const LabeledGraph& o) const {
        return vertices == o.vertices && edges == o.edges;
    }

    std::string str() const {
        std::string s = "graph(" + std::to_string(vertices) + ";";
        for (const GraphEdge& e : edges)
            s += " " + std::to_string(e.u) + "-" + std::to_string(e.v) + ":" + label_str(e.label);
        return s + ")";
    }
};

/// Relabel endpoints through f; the edge multiset is preserved.
inline LabeledGraph graph_push(const FinFn& f, const LabeledGraph& g) {
    if (g.vertices != f.dom)
        throw std::invalid_argument("graph_push: vertex count does not match map domain");
    std::vector<GraphEdge> edges;
    edges.reserve(g.edges.size());
    for (const GraphEdge& e : g.edges) edges.emplace_back(f(e.u), f(e.v), e.label);
    return LabeledGraph(f.cod, std::move(edges));
}

/// Restrict to the vertices in the image of the injection m. Fails when an
/// edge touches a vertex outside the image: circuit decorations do not
/// descend to epi-mono corelations in general.
inline LabeledGraph graph_pull(const FinFn& m, const LabeledGraph& g) {
    if (g.vertices != m.cod)
        throw std::invalid_argument("graph_pull: vertex count does not match map codomain");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> inv(m.cod, unset);
    for (std::size_t i = 0; i < m.dom; ++i) {
        if (inv[m(i)] != unset)
            throw DecorationError("graph_pull: map is not injective");
        inv[m(i)] = i;
    }
    std::vector<GraphEdge> edges;
    edges.reserve(g.edges.size());
    for (const GraphEdge& e : g.edges) {
        if (inv[e.u] == unset || inv[e.v] == unset)
            throw DecorationError("graph_pull: edge endpoint outside the image of the M-map");
        edges.emplace_back(inv[e.u], inv[e.v], e.label);
    }
    return LabeledGraph(m.dom, std::move(edges));
}

/// Disjoint union with the right graph's vertices shifted past the left's.
inline LabeledGraph graph_disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
    std::vector<GraphEdge> edges = a.edges;
    edges.reserve(a.edges.size() + b.edges.size());
    for (const GraphEdge& e : b.edges)
        edges.emplace_back(a.vertices + e.u, a.vertices + e.v, e.label);
    return LabeledGraph(a.vertices + b.vertices, std::move(edges));
}

/// The circuit decoration functor. Pull is defined only along injections
/// whose image contains every edge endpoint, so only the all-iso system is
/// fully supported; a genuine semantic translation is needed beyond that.
inline DecorationContract circuit_contract() {
    DecorationContract F;
    F.name = "circuit";
    F.push = [](const FinFn& f, const Decoration& d) -> Decoration {
        return graph_push(f, std::any_cast<const LabeledGraph&>(d));
    };
    F.pull = [](const FinFn& m, const Decoration& d) -> Decoration {
        return graph_pull(m, std::any_cast<const LabeledGraph&>(d));
    };
    F.coherence = [](std::size_t, const Decoration& a, std::size_t, const Decoration& b) -> Decoration {
        return graph_disjoint_union(std::any_cast<const LabeledGraph&>(a),
                                    std::any_cast<const LabeledGraph&>(b));
    };
    F.unit = [] { return Decoration{LabeledGraph{}}; };
    F.empty = [](std::size_t n) { return Decoration{LabeledGraph(n, {})}; };
    F.equal = [](const Decoration& a, const Decoration& b) {
        return std::any_cast<const LabeledGraph&>(a) == std::any_cast<const LabeledGraph&>(b);
    };
    F.sample = [](std::size_t n, std::mt19937_64& rng) -> Decoration {
        std::uniform_int_distribution<std::size_t> edge_count(0, n == 0 ? 0 : 3);
        std::uniform_int_distribution<std::size_t> vertex(0, n == 0 ? 0 : n - 1);
        std::uniform_int_distribution<int> weight(1, 9);
        std::vector<GraphEdge> edges;
        if (n > 0)
            for (std::size_t k = edge_count(rng); k-- > 0;)
                edges.emplace_back(vertex(rng), vertex(rng), mpq_class(weight(rng)));
        return Decoration{LabeledGraph(n, std::move(edges))};
    };
    F.show = [](const Decoration& d) { return std::any_cast<const LabeledGraph&>(d).str(); };
    F.supports = [](FactorisationSystem sys) { return sys == all_iso; };
    return F;
}

} // namespace corel
