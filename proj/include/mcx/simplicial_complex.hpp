#ifndef MCX_SIMPLICIAL_COMPLEX_HPP
#define MCX_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace mcx {

// Vertices are indices into a complex's label table; a simplex is its
// strictly ascending vertex list.  The empty simplex is implicit and never
// stored.
using Vertex = int;
using Simplex = std::vector<Vertex>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Vertex v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

namespace detail {

inline Simplex sorted_unique(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Union of two ascending vertex lists.
inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool contains_vertex(const Simplex& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// s with vertex v added (v not already present).
inline Simplex with_vertex(const Simplex& s, Vertex v) {
    Simplex out;
    out.reserve(s.size() + 1);
    auto it = std::lower_bound(s.begin(), s.end(), v);
    out.insert(out.end(), s.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, s.end());
    return out;
}

// s with the element at position i removed.
inline Simplex without_index(const Simplex& s, std::size_t i) {
    Simplex out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) out.push_back(s[j]);
    return out;
}

} // namespace detail

// A finite abstract simplicial complex.  Immutable once built: every
// operation returns a new complex.  All simplices are materialized and
// cached per dimension, facets are kept in lexicographic index order, and
// the vertex order (index -> label) is fixed at construction.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Build from facets given as label lists.  Vertex order is first
    // appearance across the facet list unless an explicit order is given,
    // in which case it must cover exactly the labels used, without repeats.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets,
                                         const std::vector<std::string>& vertex_order = {});

    // Build from an already downward-closed simplex set over a fixed label
    // table.  Validates closure; facets are computed.
    static SimplicialComplex from_all_simplices(std::vector<std::string> labels,
                                                const std::vector<Simplex>& simplices);

    bool empty() const { return by_dim_.empty(); }
    // Dimension of the complex; -1 when empty.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t simplex_count() const { return total_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    Vertex index_of(const std::string& label) const;
    bool has_label(const std::string& label) const { return label_index_.count(label) > 0; }

    // All p-simplices in lexicographic order; empty vector if p out of range.
    const std::vector<Simplex>& simplices(int p) const;
    const std::vector<Simplex>& facets() const { return facets_; }
    bool contains(const Simplex& s) const { return membership_.count(s) > 0; }
    const SimplexSet& simplex_set() const { return membership_; }

    // Simplex from labels; errors on unknown labels or repeats.
    Simplex simplex_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const Simplex& s) const;
    // Space-joined label rendering, e.g. "v0 v1".
    std::string render(const Simplex& s) const;

    std::size_t count(int p) const {
        return (p >= 0 && p <= dim()) ? by_dim_[static_cast<std::size_t>(p)].size() : 0;
    }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> label_index_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<Simplex> facets_;
    SimplexSet membership_;
    std::size_t total_ = 0;

    void index_labels();
    void finish(std::vector<Simplex> simplices, bool validate_closure);
};

inline void SimplicialComplex::index_labels() {
    label_index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!label_index_.emplace(labels_[i], static_cast<Vertex>(i)).second)
            throw precondition_error("duplicate vertex label: " + labels_[i]);
    }
}

inline Vertex SimplicialComplex::index_of(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) throw precondition_error("unknown vertex label: " + label);
    return it->second;
}

inline const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    static const std::vector<Simplex> none;
    if (p < 0 || p > dim()) return none;
    return by_dim_[static_cast<std::size_t>(p)];
}

inline Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& names) const {
    Simplex s;
    s.reserve(names.size());
    for (const auto& n : names) s.push_back(index_of(n));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw precondition_error("repeated vertex in simplex");
    return s;
}

inline std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(label(v));
    return out;
}

inline std::string SimplicialComplex::render(const Simplex& s) const {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += label(s[i]);
    }
    return out;
}

// Shared tail of construction: sort per dimension, dedupe, optionally
// validate downward closure, compute facets.
inline void SimplicialComplex::finish(std::vector<Simplex> simplices, bool validate_closure) {
    membership_.clear();
    by_dim_.clear();
    facets_.clear();
    total_ = 0;
    for (auto& s : simplices) {
        if (s.empty()) throw precondition_error("empty simplex is implicit, not stored");
        if (membership_.insert(s).second) {
            auto d = s.size() - 1;
            if (by_dim_.size() <= d) by_dim_.resize(d + 1);
            by_dim_[d].push_back(s);
        }
    }
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
    for (auto& level : by_dim_) total_ += level.size();

    if (validate_closure) {
        for (const auto& s : membership_) {
            if (s.size() == 1) continue;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (!membership_.count(detail::without_index(s, i)))
                    throw precondition_error("simplex set is not downward closed");
        }
    }

    // A simplex is a facet iff no single-vertex extension is present.
    for (const auto& level : by_dim_) {
        for (const auto& s : level) {
            bool maximal = true;
            for (Vertex v = 0; v < static_cast<Vertex>(labels_.size()) && maximal; ++v) {
                if (detail::contains_vertex(s, v)) continue;
                if (membership_.count(detail::with_vertex(s, v))) maximal = false;
            }
            if (maximal) facets_.push_back(s);
        }
    }
    std::sort(facets_.begin(), facets_.end());
}

inline SimplicialComplex SimplicialComplex::from_facets(
        const std::vector<std::vector<std::string>>& facets,
        const std::vector<std::string>& vertex_order) {
    SimplicialComplex K;
    if (!vertex_order.empty()) {
        K.labels_ = vertex_order;
        K.index_labels();
        for (const auto& f : facets)
            for (const auto& name : f)
                if (!K.label_index_.count(name))
                    throw precondition_error("facet label not in vertex order: " + name);
    } else {
        for (const auto& f : facets)
            for (const auto& name : f)
                if (K.label_index_.emplace(name, static_cast<Vertex>(K.labels_.size())).second)
                    K.labels_.push_back(name);
    }

    // Close each facet under nonempty subsets.
    std::vector<Simplex> all;
    for (const auto& f : facets) {
        Simplex fs;
        fs.reserve(f.size());
        for (const auto& name : f) fs.push_back(K.label_index_.at(name));
        fs = detail::sorted_unique(std::move(fs));
        if (fs.empty()) throw precondition_error("facets must be nonempty");
        if (fs.size() > 25) throw resource_error("facet too large to close over subsets");
        const std::uint32_t full = (1u << fs.size()) - 1u;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < fs.size(); ++i)
                if (mask & (1u << i)) sub.push_back(fs[i]);
            all.push_back(std::move(sub));
        }
    }
    K.finish(std::move(all), false);
    // An explicit order listing labels that never occur would leave phantom
    // vertices; reject rather than guess.
    for (const auto& name : vertex_order)
        if (!K.membership_.count(Simplex{K.label_index_.at(name)}))
            throw precondition_error("vertex order lists unused label: " + name);
    return K;
}

inline SimplicialComplex SimplicialComplex::from_all_simplices(std::vector<std::string> labels,
                                                               const std::vector<Simplex>& simplices) {
    SimplicialComplex K;
    K.labels_ = std::move(labels);
    K.index_labels();
    for (const auto& s : simplices)
        for (Vertex v : s)
            if (v < 0 || v >= static_cast<Vertex>(K.labels_.size()))
                throw precondition_error("simplex vertex out of range");
    K.finish(simplices, true);
    return K;
}

// Restrict K to a subset of its simplices (which must be downward closed).
// The result keeps only labels that still occur, in K's order.
inline SimplicialComplex filter_to_simplices(const SimplicialComplex& K, std::vector<Simplex> kept) {
    std::vector<bool> used(K.vertex_count(), false);
    for (const auto& s : kept)
        for (Vertex v : s) used[static_cast<std::size_t>(v)] = true;
    std::vector<std::string> labels;
    std::vector<Vertex> remap(K.vertex_count(), -1);
    for (std::size_t v = 0; v < K.vertex_count(); ++v) {
        if (used[v]) {
            remap[v] = static_cast<Vertex>(labels.size());
            labels.push_back(K.labels()[v]);
        }
    }
    for (auto& s : kept)
        for (auto& v : s) v = remap[static_cast<std::size_t>(v)];
    return SimplicialComplex::from_all_simplices(std::move(labels), kept);
}

// Open star materialized as a complex: all simplices s with s + {v} in K.
// Note v itself lies in the star (take s = {v}).
inline SimplicialComplex star(const SimplicialComplex& K, const std::string& vertex) {
    Vertex v = K.index_of(vertex);
    std::vector<Simplex> kept;
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) {
            if (detail::contains_vertex(s, v) || K.contains(detail::with_vertex(s, v)))
                kept.push_back(s);
        }
    return filter_to_simplices(K, std::move(kept));
}

// Star cluster of a simplex: the union of the stars of its vertices.
inline SimplicialComplex star_cluster(const SimplicialComplex& K,
                                      const std::vector<std::string>& simplex_labels) {
    Simplex sigma = K.simplex_of(simplex_labels);
    if (!K.contains(sigma)) throw precondition_error("star_cluster: not a simplex of the complex");
    std::vector<Simplex> kept;
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) {
            for (Vertex v : sigma) {
                if (detail::contains_vertex(s, v) || K.contains(detail::with_vertex(s, v))) {
                    kept.push_back(s);
                    break;
                }
            }
        }
    return filter_to_simplices(K, std::move(kept));
}

// Whether K is the clique complex of its own 1-skeleton.  Enumerates
// cliques of the edge graph in index order and checks each is a simplex;
// stops at the first missing one.
inline bool is_flag(const SimplicialComplex& K) {
    if (K.empty()) return true;
    const int n = static_cast<int>(K.vertex_count());
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& e : K.simplices(1)) {
        adj[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = true;
        adj[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = true;
    }
    std::vector<Simplex> cliques = K.simplices(1);
    while (!cliques.empty()) {
        std::vector<Simplex> next;
        for (const auto& c : cliques) {
            for (Vertex w = c.back() + 1; w < n; ++w) {
                bool joined = true;
                for (Vertex v : c)
                    if (!adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
                        joined = false;
                        break;
                    }
                if (!joined) continue;
                Simplex cw = detail::with_vertex(c, w);
                if (!K.contains(cw)) return false;
                next.push_back(std::move(cw));
            }
        }
        cliques = std::move(next);
    }
    return true;
}

// v dominates v' when every facet containing v' also contains v.
struct DominationWitness {
    std::string dominated;
    std::string dominator;
};

// Check one candidate pair directly against the facet list.
inline bool dominates(const SimplicialComplex& K, const std::string& dominator,
                      const std::string& dominated) {
    Vertex v = K.index_of(dominator), w = K.index_of(dominated);
    if (v == w) return false;
    for (const auto& f : K.facets())
        if (detail::contains_vertex(f, w) && !detail::contains_vertex(f, v)) return false;
    return true;
}

// All ordered witnesses (dominated, dominator), in vertex-index order.
inline std::vector<DominationWitness> find_dominated(const SimplicialComplex& K) {
    std::vector<DominationWitness> out;
    const int n = static_cast<int>(K.vertex_count());
    // facet indices per vertex
    std::vector<std::vector<int>> at(static_cast<std::size_t>(n));
    for (int i = 0; i < static_cast<int>(K.facets().size()); ++i)
        for (Vertex v : K.facets()[static_cast<std::size_t>(i)])
            at[static_cast<std::size_t>(v)].push_back(i);
    for (Vertex w = 0; w < n; ++w) {
        for (Vertex v = 0; v < n; ++v) {
            if (v == w) continue;
            bool dom = true;
            for (int fi : at[static_cast<std::size_t>(w)]) {
                if (!detail::contains_vertex(K.facets()[static_cast<std::size_t>(fi)], v)) {
                    dom = false;
                    break;
                }
            }
            if (dom) out.push_back({K.label(w), K.label(v)});
        }
    }
    return out;
}

// Full subcomplex spanned by all vertices except one.
inline SimplicialComplex delete_vertex(const SimplicialComplex& K, const std::string& vertex) {
    Vertex v = K.index_of(vertex);
    std::vector<Simplex> kept;
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p))
            if (!detail::contains_vertex(s, v)) kept.push_back(s);
    return filter_to_simplices(K, std::move(kept));
}

struct CollapseStep {
    DominationWitness witness;
};

struct CollapseResult {
    SimplicialComplex core;
    std::vector<CollapseStep> steps;
};

// Repeatedly delete the first dominated vertex (lowest dominated index,
// then lowest dominator index) until none remains.
inline CollapseResult strong_collapse_core(const SimplicialComplex& K) {
    CollapseResult r{K, {}};
    for (;;) {
        auto wits = find_dominated(r.core);
        if (wits.empty()) return r;
        r.steps.push_back({wits.front()});
        r.core = delete_vertex(r.core, wits.front().dominated);
    }
}

// Rename L's labels away from a set of taken names by appending primes.
inline SimplicialComplex rename_apart(const SimplicialComplex& L,
                                      const std::vector<std::string>& taken) {
    std::unordered_set<std::string> used(taken.begin(), taken.end());
    std::vector<std::string> labels = L.labels();
    for (auto& name : labels) {
        while (used.count(name)) name += '\'';
        used.insert(name);
    }
    std::vector<Simplex> all;
    for (int p = 0; p <= L.dim(); ++p)
        for (const auto& s : L.simplices(p)) all.push_back(s);
    return SimplicialComplex::from_all_simplices(std::move(labels), all);
}

// Join: simplices s ∪ t with s in K + {∅}, t in L + {∅}.  L's labels are
// renamed apart from K's when they clash.  Join with the empty complex is
// the identity.
inline SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.empty()) return L;
    if (L.empty()) return K;
    SimplicialComplex L2 = rename_apart(L, K.labels());
    std::vector<std::string> labels = K.labels();
    labels.insert(labels.end(), L2.labels().begin(), L2.labels().end());
    const Vertex shift = static_cast<Vertex>(K.vertex_count());

    std::vector<Simplex> all;
    all.reserve((K.simplex_count() + 1) * (L2.simplex_count() + 1) - 1);
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) all.push_back(s);
    std::vector<Simplex> lsimp;
    for (int q = 0; q <= L2.dim(); ++q)
        for (const auto& t : L2.simplices(q)) {
            Simplex ts = t;
            for (auto& v : ts) v += shift;
            all.push_back(ts);
            lsimp.push_back(std::move(ts));
        }
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p))
            for (const auto& ts : lsimp) {
                Simplex u = s;
                u.insert(u.end(), ts.begin(), ts.end());
                all.push_back(std::move(u));
            }
    return SimplicialComplex::from_all_simplices(std::move(labels), all);
}

inline SimplicialComplex disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.empty()) return L;
    if (L.empty()) return K;
    SimplicialComplex L2 = rename_apart(L, K.labels());
    std::vector<std::string> labels = K.labels();
    labels.insert(labels.end(), L2.labels().begin(), L2.labels().end());
    const Vertex shift = static_cast<Vertex>(K.vertex_count());
    std::vector<Simplex> all;
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) all.push_back(s);
    for (int q = 0; q <= L2.dim(); ++q)
        for (const auto& t : L2.simplices(q)) {
            Simplex ts = t;
            for (auto& v : ts) v += shift;
            all.push_back(std::move(ts));
        }
    return SimplicialComplex::from_all_simplices(std::move(labels), all);
}

// Label-level equality of simplex sets (vertex order may differ).
inline bool equal_complexes(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.simplex_count() != L.simplex_count() || K.vertex_count() != L.vertex_count()) return false;
    std::vector<Vertex> map(K.vertex_count());
    for (std::size_t v = 0; v < K.vertex_count(); ++v) {
        if (!L.has_label(K.labels()[v])) return false;
        map[v] = L.index_of(K.labels()[v]);
    }
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) {
            Simplex t;
            t.reserve(s.size());
            for (Vertex v : s) t.push_back(map[static_cast<std::size_t>(v)]);
            std::sort(t.begin(), t.end());
            if (!L.contains(t)) return false;
        }
    return true;
}

} // namespace mcx

#endif
