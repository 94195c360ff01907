#ifndef MCX_MORSE_HPP
#define MCX_MORSE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hasse.hpp"
#include "simplicial_complex.hpp"

namespace mcx {

// The primitive discrete vector fields of K: the single regular pairs, one
// per Hasse diagram edge, in Hasse edge order.  These are the vertices of
// the Morse complex.
inline DiscreteVectorField primitive_gvfs(const SimplicialComplex& K) {
    HasseDiagram H = hasse(K);
    DiscreteVectorField out;
    out.reserve(H.edges.size());
    for (const auto& [lo, up] : H.edges)
        out.push_back({H.nodes[static_cast<std::size_t>(lo)], H.nodes[static_cast<std::size_t>(up)]});
    return out;
}

// Resolve a vector field given by simplex pairs to Hasse edge ids.  Errors
// if a pair is not a cover pair of K.
inline std::vector<int> resolve_field(const HasseDiagram& H, const DiscreteVectorField& V) {
    std::vector<int> ids;
    ids.reserve(V.size());
    for (const auto& pr : V) {
        auto lower_it = H.node_index.find(pr.lower);
        auto upper_it = H.node_index.find(pr.upper);
        if (lower_it == H.node_index.end() || upper_it == H.node_index.end())
            throw precondition_error("vector field pair uses a simplex not in the complex");
        auto e = H.find_edge(lower_it->second, upper_it->second);
        if (!e) throw precondition_error("vector field pair is not a cover pair");
        ids.push_back(*e);
    }
    return ids;
}

inline MatchingCheck is_gradient_vector_field(const SimplicialComplex& K, const DiscreteVectorField& V) {
    HasseDiagram H = hasse(K);
    return is_acyclic_matching(H, resolve_field(H, V));
}

// Simplices not covered by any pair of V, in Hasse node order.
inline std::vector<Simplex> critical_simplices(const SimplicialComplex& K, const DiscreteVectorField& V) {
    HasseDiagram H = hasse(K);
    std::vector<int> ids = resolve_field(H, V);
    std::vector<char> used(H.node_count(), 0);
    for (int e : ids) {
        auto [lo, up] = H.edges[static_cast<std::size_t>(e)];
        used[static_cast<std::size_t>(lo)] = 1;
        used[static_cast<std::size_t>(up)] = 1;
    }
    std::vector<Simplex> crit;
    for (std::size_t i = 0; i < H.node_count(); ++i)
        if (!used[i]) crit.push_back(H.nodes[i]);
    return crit;
}

// V-path detector specialised to graphs (dim K <= 1).  A matched vertex
// launches a walk: vertex -> its matched edge -> the other endpoint, and so
// on.  V is a gradient field exactly when no walk returns to its start.
// Independent of the reversed-digraph test; the two must agree on graphs.
inline bool graph_field_has_closed_vpath(const SimplicialComplex& K, const DiscreteVectorField& V) {
    if (K.dim() > 1) throw precondition_error("graph_field_has_closed_vpath: complex is not a graph");
    const int nv = static_cast<int>(K.vertex_count());
    std::vector<std::optional<Vertex>> partner(static_cast<std::size_t>(nv));
    std::vector<char> matched(static_cast<std::size_t>(nv), 0);
    for (const auto& pr : V) {
        if (pr.lower.size() != 1 || pr.upper.size() != 2)
            throw precondition_error("graph_field_has_closed_vpath: pair degrees must be (0,1)");
        if (!K.contains(pr.lower) || !K.contains(pr.upper) || !detail::is_subset(pr.lower, pr.upper))
            throw precondition_error("graph_field_has_closed_vpath: not a cover pair of the complex");
        Vertex v = pr.lower[0];
        if (matched[static_cast<std::size_t>(v)])
            throw precondition_error("graph_field_has_closed_vpath: vertex matched twice");
        matched[static_cast<std::size_t>(v)] = 1;
        partner[static_cast<std::size_t>(v)] = (pr.upper[0] == v) ? pr.upper[1] : pr.upper[0];
    }
    // ensure no edge is used by two pairs
    {
        std::vector<Simplex> uppers;
        for (const auto& pr : V) uppers.push_back(pr.upper);
        std::sort(uppers.begin(), uppers.end());
        if (std::adjacent_find(uppers.begin(), uppers.end()) != uppers.end())
            throw precondition_error("graph_field_has_closed_vpath: edge matched twice");
    }
    for (int s = 0; s < nv; ++s) {
        if (!matched[static_cast<std::size_t>(s)]) continue;
        Vertex cur = s;
        for (int step = 0; step <= nv; ++step) {
            if (!matched[static_cast<std::size_t>(cur)]) break;
            cur = *partner[static_cast<std::size_t>(cur)];
            if (cur == s) return true;
        }
    }
    return false;
}

struct MorseComplexOptions {
    int vertex_cap = 64;               // primitive GVF count cap (mask width)
    std::size_t simplex_budget = 5'000'000;
};

// The Morse complex M(K): vertices are the primitive vector fields of K,
// faces are the gradient (acyclic) subsets.  Vertex labels are the Hasse
// pair names "(v)w".  Uses the incremental acyclicity check; f_of_poset on
// hasse(K) is the independent full-check route.
inline SimplicialComplex morse_complex(const SimplicialComplex& K, const MorseComplexOptions& opts = {}) {
    if (K.dim() > 1)
        throw precondition_error("morse_complex: defined for graphs (dimension <= 1)");
    HasseDiagram H = hasse(K);
    if (H.edge_count() > static_cast<std::size_t>(opts.vertex_cap))
        throw resource_error("morse_complex: primitive vector field count exceeds cap (" +
                             std::to_string(H.edge_count()) + " > " + std::to_string(opts.vertex_cap) + ")");
    EnumerateOptions eo;
    eo.simplex_budget = opts.simplex_budget;
    eo.incremental = true;
    return f_of_poset(H, eo);
}

} // namespace mcx

#endif
