#ifndef MCX_FAMILIES_HPP
#define MCX_FAMILIES_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "simplicial_complex.hpp"

namespace mcx {

// Graph families used throughout: paths, extended stars and wedges of two
// extended stars joined by a path.  All are 1-dimensional complexes with
// fixed, documented labels so proofs and tests can address vertices by name.

// Path with u edges, vertices v0..vu.  u = 0 is the single vertex v0.
inline SimplicialComplex path(int u) {
    if (u < 0) throw precondition_error("path: negative length");
    std::vector<std::string> order;
    for (int i = 0; i <= u; ++i) order.push_back("v" + std::to_string(i));
    std::vector<std::vector<std::string>> facets;
    if (u == 0) {
        facets.push_back({"v0"});
    } else {
        for (int i = 0; i < u; ++i) facets.push_back({order[i], order[i + 1]});
    }
    return SimplicialComplex::from_facets(facets, order);
}

// Extended star S_{m,n}: center c, m leaves d1..dm at distance one, and n
// arms c-ai-bi of length two.
inline SimplicialComplex extended_star(int m, int n) {
    if (m < 0 || n < 0) throw precondition_error("extended_star: negative parameter");
    std::vector<std::string> order{"c"};
    std::vector<std::vector<std::string>> facets;
    for (int i = 1; i <= m; ++i) order.push_back("d" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        order.push_back("a" + std::to_string(i));
        order.push_back("b" + std::to_string(i));
    }
    for (int i = 1; i <= m; ++i) facets.push_back({"c", "d" + std::to_string(i)});
    for (int i = 1; i <= n; ++i) {
        facets.push_back({"c", "a" + std::to_string(i)});
        facets.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
    }
    if (facets.empty()) facets.push_back({"c"});
    return SimplicialComplex::from_facets(facets, order);
}

// One star side of a wedge: number of length-1 leaves and length-2 arms.
struct StarVariant {
    int leaves = 0;
    int arms = 0;
};

// Name bookkeeping for P_t wedges.  The path runs left to right; each end
// carries an extended star (the two centers coincide when t = 0).
struct PWedgeLayout {
    int t = 0;
    int u = 0;        // t div 3
    int residue = 0;  // t mod 3
    std::vector<std::string> path;  // leftmost .. rightmost
    std::string left_center;
    std::string right_center;
    std::vector<std::string> left_leaves;                      // w (or w1..)
    std::vector<std::string> right_leaves;                     // w' (or w'1..)
    std::vector<std::pair<std::string, std::string>> left_arms;   // (ai, bi)
    std::vector<std::pair<std::string, std::string>> right_arms;  // (cs, ds)

    // Path vertex by its index in the labeling scheme (may be negative for
    // the pure two-star wedge labelings).
    const std::string& v(int idx) const {
        return path.at(static_cast<std::size_t>(idx - first_index));
    }
    int first_index = 0;
};

inline PWedgeLayout p_wedge_layout(int t, StarVariant left, StarVariant right) {
    if (t < 0) throw precondition_error("p_wedge: negative path length");
    if (left.leaves < 0 || left.arms < 0 || right.leaves < 0 || right.arms < 0)
        throw precondition_error("p_wedge: negative star parameter");
    PWedgeLayout L;
    L.t = t;
    L.u = t / 3;
    L.residue = t % 3;
    // The two-star wedge without leaves uses residue-shifted path labels
    // (v-1, v-2 on the left); any variant with leaves uses v0..vt.
    bool pure = (left.leaves == 0 && right.leaves == 0);
    L.first_index = pure ? -L.residue : 0;
    for (int i = L.first_index; i <= L.first_index + t; ++i)
        L.path.push_back("v" + std::to_string(i));
    L.left_center = L.path.front();
    L.right_center = L.path.back();
    if (left.leaves == 1) {
        L.left_leaves.push_back("w");
    } else {
        for (int i = 1; i <= left.leaves; ++i) L.left_leaves.push_back("w" + std::to_string(i));
    }
    if (right.leaves == 1) {
        L.right_leaves.push_back("w'");
    } else {
        for (int i = 1; i <= right.leaves; ++i) L.right_leaves.push_back("w'" + std::to_string(i));
    }
    for (int i = 1; i <= left.arms; ++i)
        L.left_arms.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    for (int s = 1; s <= right.arms; ++s)
        L.right_arms.emplace_back("c" + std::to_string(s), "d" + std::to_string(s));
    return L;
}

inline SimplicialComplex p_wedge(int t, StarVariant left, StarVariant right) {
    PWedgeLayout L = p_wedge_layout(t, left, right);
    std::vector<std::string> order = L.path;
    for (const auto& w : L.left_leaves) order.push_back(w);
    for (const auto& [a, b] : L.left_arms) {
        order.push_back(a);
        order.push_back(b);
    }
    for (const auto& w : L.right_leaves) order.push_back(w);
    for (const auto& [c, d] : L.right_arms) {
        order.push_back(c);
        order.push_back(d);
    }
    std::vector<std::vector<std::string>> facets;
    for (int i = 0; i + 1 < static_cast<int>(L.path.size()); ++i)
        facets.push_back({L.path[static_cast<std::size_t>(i)], L.path[static_cast<std::size_t>(i) + 1]});
    for (const auto& w : L.left_leaves) facets.push_back({L.left_center, w});
    for (const auto& [a, b] : L.left_arms) {
        facets.push_back({L.left_center, a});
        facets.push_back({a, b});
    }
    for (const auto& w : L.right_leaves) facets.push_back({L.right_center, w});
    for (const auto& [c, d] : L.right_arms) {
        facets.push_back({L.right_center, c});
        facets.push_back({c, d});
    }
    if (facets.empty()) facets.push_back({L.path.front()});
    return SimplicialComplex::from_facets(facets, order);
}

// K with a fresh path of u edges attached at an existing vertex.  New
// vertices are named x1..xu, primed as needed to avoid clashes.
inline SimplicialComplex attach_path(const SimplicialComplex& K, const std::string& at, int u) {
    if (u < 0) throw precondition_error("attach_path: negative length");
    K.index_of(at);  // validates the attachment vertex
    if (u == 0) return K;
    std::unordered_set<std::string> used(K.labels().begin(), K.labels().end());
    std::vector<std::string> fresh;
    for (int i = 1; i <= u; ++i) {
        std::string name = "x" + std::to_string(i);
        while (used.count(name)) name += '\'';
        used.insert(name);
        fresh.push_back(name);
    }
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : K.facets()) facets.push_back(K.labels_of(f));
    facets.push_back({at, fresh[0]});
    for (int i = 0; i + 1 < u; ++i)
        facets.push_back({fresh[static_cast<std::size_t>(i)], fresh[static_cast<std::size_t>(i) + 1]});
    std::vector<std::string> order = K.labels();
    order.insert(order.end(), fresh.begin(), fresh.end());
    return SimplicialComplex::from_facets(facets, order);
}

// Declarative family description, used by the CLI and test enumeration.
struct FamilySpec {
    enum class Kind { Path, ExtendedStar, PWedge, AttachPath };
    Kind kind = Kind::Path;
    int len = 0;                 // Path / AttachPath: edge count
    int m = 0, n = 0;            // ExtendedStar
    int t = 0;                   // PWedge
    StarVariant left, right;     // PWedge
    std::shared_ptr<FamilySpec> base;  // AttachPath
    std::string attach;                // AttachPath vertex

    std::string name() const {
        switch (kind) {
            case Kind::Path:
                return "path(" + std::to_string(len) + ")";
            case Kind::ExtendedStar:
                return "ext-star(" + std::to_string(m) + "," + std::to_string(n) + ")";
            case Kind::PWedge:
                return "p-wedge(" + std::to_string(t) + ";" + std::to_string(left.leaves) + "," +
                       std::to_string(left.arms) + ";" + std::to_string(right.leaves) + "," +
                       std::to_string(right.arms) + ")";
            case Kind::AttachPath:
                return "attach(" + (base ? base->name() : "?") + "," + attach + "," +
                       std::to_string(len) + ")";
        }
        return "?";
    }
};

inline SimplicialComplex build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Path:
            return path(spec.len);
        case FamilySpec::Kind::ExtendedStar:
            return extended_star(spec.m, spec.n);
        case FamilySpec::Kind::PWedge:
            return p_wedge(spec.t, spec.left, spec.right);
        case FamilySpec::Kind::AttachPath: {
            if (!spec.base) throw precondition_error("attach-path spec needs a base family");
            return attach_path(build_family(*spec.base), spec.attach, spec.len);
        }
    }
    throw precondition_error("unknown family kind");
}

} // namespace mcx

#endif
