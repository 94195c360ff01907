#ifndef MCX_HASSE_HPP
#define MCX_HASSE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "simplicial_complex.hpp"

namespace mcx {

// A codimension-1 cover pair (sigma, tau) with sigma a facet of tau.
struct RegularPair {
    Simplex lower;
    Simplex upper;
};

using DiscreteVectorField = std::vector<RegularPair>;

// Cover-relation digraph of a complex's face poset.  Nodes keep their
// rendered names so diagrams stay addressable after node or edge surgery,
// when they no longer correspond to a complex of their own.  Every edge
// joins simplices whose sizes differ by exactly one; surgery preserves
// this since it only deletes.
struct HasseDiagram {
    std::vector<Simplex> nodes;          // sorted by (dimension, lex)
    std::vector<std::string> node_names; // rendered from the source complex
    std::vector<std::pair<int, int>> edges;  // (lower node id, upper node id)
    std::vector<std::string> edge_names;     // "(v0)v1" style; see pair_name

    std::unordered_map<Simplex, int, SimplexHash> node_index;
    std::unordered_map<std::string, int> node_by_name;
    std::unordered_map<std::string, int> edge_by_name;

    // per node: incident edge ids where the node is the upper / lower end
    std::vector<std::vector<int>> down_edges;  // node is upper
    std::vector<std::vector<int>> up_edges;    // node is lower

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }

    int node_id(const std::string& name) const {
        auto it = node_by_name.find(name);
        if (it == node_by_name.end()) throw precondition_error("no such poset node: " + name);
        return it->second;
    }
    int edge_id(const std::string& name) const {
        auto it = edge_by_name.find(name);
        if (it == edge_by_name.end()) throw precondition_error("no such poset edge: " + name);
        return it->second;
    }
    std::optional<int> find_edge(int lower, int upper) const {
        for (int e : up_edges[static_cast<std::size_t>(lower)])
            if (edges[static_cast<std::size_t>(e)].second == upper) return e;
        return std::nullopt;
    }

    void rebuild_indices() {
        node_index.clear();
        node_by_name.clear();
        edge_by_name.clear();
        down_edges.assign(nodes.size(), {});
        up_edges.assign(nodes.size(), {});
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
            node_index.emplace(nodes[static_cast<std::size_t>(i)], i);
            node_by_name.emplace(node_names[static_cast<std::size_t>(i)], i);
        }
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            auto [l, u] = edges[static_cast<std::size_t>(e)];
            up_edges[static_cast<std::size_t>(l)].push_back(e);
            down_edges[static_cast<std::size_t>(u)].push_back(e);
            edge_by_name.emplace(edge_names[static_cast<std::size_t>(e)], e);
        }
    }
};

// Canonical name of a cover pair.  Dimension-zero pairs read "(v)w" where
// w is the added vertex; higher pairs spell both simplices, "(a b|a b c)".
inline std::string pair_name(const std::string& lower_name, const std::string& upper_name,
                             std::size_t lower_size, const std::string& added_vertex) {
    if (lower_size == 1) return "(" + lower_name + ")" + added_vertex;
    return "(" + lower_name + "|" + upper_name + ")";
}

// Face poset cover digraph of K.  Node order: dimension, then lexicographic;
// edge order: (lower node, upper node).
inline HasseDiagram hasse(const SimplicialComplex& K) {
    HasseDiagram H;
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) {
            H.node_names.push_back(K.render(s));
            H.nodes.push_back(s);
        }
    std::unordered_map<Simplex, int, SimplexHash> idx;
    for (int i = 0; i < static_cast<int>(H.nodes.size()); ++i)
        idx.emplace(H.nodes[static_cast<std::size_t>(i)], i);

    std::vector<std::pair<int, int>> raw;
    for (int i = 0; i < static_cast<int>(H.nodes.size()); ++i) {
        const Simplex& tau = H.nodes[static_cast<std::size_t>(i)];
        if (tau.size() == 1) continue;
        for (std::size_t k = 0; k < tau.size(); ++k)
            raw.emplace_back(idx.at(detail::without_index(tau, k)), i);
    }
    std::sort(raw.begin(), raw.end());
    for (auto [l, u] : raw) {
        const Simplex& lo = H.nodes[static_cast<std::size_t>(l)];
        const Simplex& hi = H.nodes[static_cast<std::size_t>(u)];
        Vertex added = -1;
        for (Vertex v : hi)
            if (!detail::contains_vertex(lo, v)) added = v;
        H.edges.emplace_back(l, u);
        H.edge_names.push_back(pair_name(H.node_names[static_cast<std::size_t>(l)],
                                         H.node_names[static_cast<std::size_t>(u)], lo.size(),
                                         K.label(added)));
    }
    H.rebuild_indices();
    return H;
}

namespace detail {

// Shared surgery tail: keep a subset of nodes/edges, re-densify ids.
inline HasseDiagram subdiagram(const HasseDiagram& H, const std::vector<bool>& keep_node,
                               const std::vector<bool>& keep_edge) {
    HasseDiagram out;
    std::vector<int> remap(H.nodes.size(), -1);
    for (std::size_t i = 0; i < H.nodes.size(); ++i) {
        if (!keep_node[i]) continue;
        remap[i] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(H.nodes[i]);
        out.node_names.push_back(H.node_names[i]);
    }
    for (std::size_t e = 0; e < H.edges.size(); ++e) {
        auto [l, u] = H.edges[e];
        if (!keep_edge[e]) continue;
        if (!keep_node[static_cast<std::size_t>(l)] || !keep_node[static_cast<std::size_t>(u)])
            continue;
        out.edges.emplace_back(remap[static_cast<std::size_t>(l)], remap[static_cast<std::size_t>(u)]);
        out.edge_names.push_back(H.edge_names[e]);
    }
    out.rebuild_indices();
    return out;
}

} // namespace detail

// Delete poset nodes (by name) together with all incident edges.
inline HasseDiagram remove_nodes(const HasseDiagram& H, const std::vector<std::string>& names) {
    std::vector<bool> keep_node(H.nodes.size(), true);
    for (const auto& n : names) keep_node[static_cast<std::size_t>(H.node_id(n))] = false;
    std::vector<bool> keep_edge(H.edges.size(), true);
    return detail::subdiagram(H, keep_node, keep_edge);
}

// Delete edges (by name) keeping all nodes.
inline HasseDiagram remove_edges(const HasseDiagram& H, const std::vector<std::string>& names) {
    std::vector<bool> keep_node(H.nodes.size(), true);
    std::vector<bool> keep_edge(H.edges.size(), true);
    for (const auto& n : names) keep_edge[static_cast<std::size_t>(H.edge_id(n))] = false;
    return detail::subdiagram(H, keep_node, keep_edge);
}

// Connected components in the undirected sense, isolated nodes included.
// Deterministic: components ordered by their smallest node id.
inline std::vector<HasseDiagram> components(const HasseDiagram& H) {
    std::vector<int> comp(H.nodes.size(), -1);
    int ncomp = 0;
    for (std::size_t start = 0; start < H.nodes.size(); ++start) {
        if (comp[start] != -1) continue;
        std::vector<int> stack{static_cast<int>(start)};
        comp[start] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            auto visit = [&](int e) {
                auto [l, u] = H.edges[static_cast<std::size_t>(e)];
                int y = (l == x) ? u : l;
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = ncomp;
                    stack.push_back(y);
                }
            };
            for (int e : H.up_edges[static_cast<std::size_t>(x)]) visit(e);
            for (int e : H.down_edges[static_cast<std::size_t>(x)]) visit(e);
        }
        ++ncomp;
    }
    std::vector<HasseDiagram> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<bool> keep_node(H.nodes.size());
        for (std::size_t i = 0; i < H.nodes.size(); ++i) keep_node[i] = (comp[i] == c);
        std::vector<bool> keep_edge(H.edges.size(), true);
        out.push_back(detail::subdiagram(H, keep_node, keep_edge));
    }
    return out;
}

// Result of checking a matching: either valid, or a witness for the
// violation (a node used twice, or a directed cycle after reversal).
struct MatchingCheck {
    bool is_matching = false;
    bool is_acyclic = false;
    std::optional<std::string> doubly_matched;  // node name
    std::vector<std::string> cycle;             // node names along a directed cycle
    bool ok() const { return is_matching && is_acyclic; }
};

// Check that the given edge set is a partial matching on the diagram and
// that reversing exactly the matched edges leaves the cover digraph acyclic
// (downward arcs upper->lower, matched arcs lower->upper).
inline MatchingCheck is_acyclic_matching(const HasseDiagram& H, const std::vector<int>& matched) {
    MatchingCheck res;
    std::vector<bool> in_matching(H.edges.size(), false);
    std::vector<int> used(H.nodes.size(), 0);
    for (int e : matched) {
        if (e < 0 || e >= static_cast<int>(H.edges.size()))
            throw precondition_error("matching refers to an edge not in the diagram");
        if (in_matching[static_cast<std::size_t>(e)]) continue;
        in_matching[static_cast<std::size_t>(e)] = true;
        auto [l, u] = H.edges[static_cast<std::size_t>(e)];
        for (int x : {l, u}) {
            if (++used[static_cast<std::size_t>(x)] > 1) {
                res.doubly_matched = H.node_names[static_cast<std::size_t>(x)];
                return res;
            }
        }
    }
    res.is_matching = true;

    // adjacency under reversal
    std::vector<std::vector<int>> succ(H.nodes.size());
    for (std::size_t e = 0; e < H.edges.size(); ++e) {
        auto [l, u] = H.edges[e];
        if (in_matching[e])
            succ[static_cast<std::size_t>(l)].push_back(u);
        else
            succ[static_cast<std::size_t>(u)].push_back(l);
    }
    // iterative 3-color DFS with cycle reconstruction
    enum { WHITE, GREY, BLACK };
    std::vector<char> color(H.nodes.size(), WHITE);
    std::vector<int> parent(H.nodes.size(), -1);
    for (std::size_t root = 0; root < H.nodes.size(); ++root) {
        if (color[root] != WHITE) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
        color[root] = GREY;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            auto& out = succ[static_cast<std::size_t>(x)];
            if (next < out.size()) {
                int y = out[next++];
                if (color[static_cast<std::size_t>(y)] == WHITE) {
                    color[static_cast<std::size_t>(y)] = GREY;
                    parent[static_cast<std::size_t>(y)] = x;
                    stack.emplace_back(y, 0);
                } else if (color[static_cast<std::size_t>(y)] == GREY) {
                    // cycle: walk parents from x back to y
                    std::vector<std::string> cyc{H.node_names[static_cast<std::size_t>(y)]};
                    for (int z = x; z != y; z = parent[static_cast<std::size_t>(z)])
                        cyc.push_back(H.node_names[static_cast<std::size_t>(z)]);
                    std::reverse(cyc.begin() + 1, cyc.end());
                    res.cycle = std::move(cyc);
                    return res;
                }
            } else {
                color[static_cast<std::size_t>(x)] = BLACK;
                stack.pop_back();
            }
        }
    }
    res.is_acyclic = true;
    return res;
}

inline MatchingCheck is_acyclic_matching(const HasseDiagram& H,
                                         const std::vector<std::string>& edge_names) {
    std::vector<int> ids;
    ids.reserve(edge_names.size());
    for (const auto& n : edge_names) ids.push_back(H.edge_id(n));
    return is_acyclic_matching(H, ids);
}

namespace detail {

// Does adding reversed edge e to the (already acyclic) matching S create a
// directed cycle?  Any new cycle must pass through the new arc lower->upper,
// so search for a directed path upper ~> lower.
inline bool creates_cycle(const HasseDiagram& H, const std::vector<int>& matched_out_edge,
                          int new_edge) {
    auto [l, u] = H.edges[static_cast<std::size_t>(new_edge)];
    std::vector<int> stack{u};
    std::vector<bool> seen(H.nodes.size(), false);
    seen[static_cast<std::size_t>(u)] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == l) return true;
        // matched arc x -> upper
        int m = matched_out_edge[static_cast<std::size_t>(x)];
        if (m >= 0 && m != new_edge) {
            int y = H.edges[static_cast<std::size_t>(m)].second;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
        // downward arcs x -> face, for unmatched cover edges below x
        for (int e : H.down_edges[static_cast<std::size_t>(x)]) {
            int lo = H.edges[static_cast<std::size_t>(e)].first;
            if (matched_out_edge[static_cast<std::size_t>(lo)] == e) continue;
            if (!seen[static_cast<std::size_t>(lo)]) {
                seen[static_cast<std::size_t>(lo)] = true;
                stack.push_back(lo);
            }
        }
    }
    return false;
}

} // namespace detail

struct EnumerateOptions {
    std::size_t simplex_budget = 5'000'000;
    // Use the incremental single-path acyclicity check instead of a full
    // digraph scan per candidate.
    bool incremental = false;
};

// All nonempty acyclic matchings on H, each as an ascending vector of edge
// ids.  Enumerates by cardinality: a set is admitted iff all its
// one-smaller subsets were admitted and the full set passes the acyclicity
// check.  Requires at most 64 edges.
inline std::vector<Simplex> enumerate_acyclic_matchings(const HasseDiagram& H,
                                                        const EnumerateOptions& opts = {}) {
    const int E = static_cast<int>(H.edge_count());
    if (E > 64) throw resource_error("poset has more than 64 edges; raise the design cap");
    std::vector<Simplex> admitted;
    if (E == 0) return admitted;

    using Mask = std::uint64_t;
    auto edges_of = [&](Mask m) {
        Simplex s;
        for (int e = 0; e < E; ++e)
            if (m & (Mask{1} << e)) s.push_back(e);
        return s;
    };

    // matched_out_edge[node] = matching edge with this node as lower end
    std::vector<int> matched_out_edge(H.node_count(), -1);

    std::vector<Mask> prev;
    std::unordered_set<Mask> prev_set;
    for (int e = 0; e < E; ++e) {
        prev.push_back(Mask{1} << e);
        admitted.push_back({e});
    }
    prev_set.insert(prev.begin(), prev.end());

    while (!prev.empty()) {
        std::vector<Mask> cur;
        std::unordered_set<Mask> cur_set;
        for (Mask S : prev) {
            int top = 63 - std::countl_zero(S);
            Simplex sedges = edges_of(S);
            for (int e = top + 1; e < E; ++e) {
                auto [l, u] = H.edges[static_cast<std::size_t>(e)];
                bool disjoint = true;
                for (int b : sedges) {
                    auto [bl, bu] = H.edges[static_cast<std::size_t>(b)];
                    if (bl == l || bl == u || bu == l || bu == u) {
                        disjoint = false;
                        break;
                    }
                }
                if (!disjoint) continue;
                Mask C = S | (Mask{1} << e);
                bool subsets_ok = true;
                for (int b : sedges) {
                    if (!prev_set.count(C ^ (Mask{1} << b))) {
                        subsets_ok = false;
                        break;
                    }
                }
                if (!subsets_ok) continue;

                bool acyclic;
                if (opts.incremental) {
                    for (int b : sedges)
                        matched_out_edge[static_cast<std::size_t>(
                            H.edges[static_cast<std::size_t>(b)].first)] = b;
                    matched_out_edge[static_cast<std::size_t>(l)] = e;
                    acyclic = !detail::creates_cycle(H, matched_out_edge, e);
                    for (int b : sedges)
                        matched_out_edge[static_cast<std::size_t>(
                            H.edges[static_cast<std::size_t>(b)].first)] = -1;
                    matched_out_edge[static_cast<std::size_t>(l)] = -1;
                } else {
                    Simplex cedges = sedges;
                    cedges.push_back(e);
                    acyclic = is_acyclic_matching(H, cedges).ok();
                }
                if (!acyclic) continue;
                if (cur_set.insert(C).second) {
                    cur.push_back(C);
                    Simplex cedges = sedges;
                    cedges.push_back(e);
                    admitted.push_back(std::move(cedges));
                    if (admitted.size() > opts.simplex_budget)
                        throw resource_error("matching enumeration exceeded the simplex budget");
                }
            }
        }
        prev = std::move(cur);
        prev_set = std::move(cur_set);
    }
    return admitted;
}

// The complex of acyclic matchings on H: one vertex per diagram edge
// (labeled by its pair name), one simplex per nonempty acyclic matching.
// An edgeless diagram yields the empty complex.
inline SimplicialComplex f_of_poset(const HasseDiagram& H, const EnumerateOptions& opts = {}) {
    auto admitted = enumerate_acyclic_matchings(H, opts);
    return SimplicialComplex::from_all_simplices(H.edge_names, admitted);
}

} // namespace mcx

#endif
