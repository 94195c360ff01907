#ifndef MCX_SURGERY_HPP
#define MCX_SURGERY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "families.hpp"
#include "hasse.hpp"
#include "homology.hpp"
#include "morse.hpp"
#include "simplicial_complex.hpp"

namespace mcx {

struct SurgeryStep {
    std::string removed;        // Morse-complex vertex (a primitive pair name)
    DominationWitness witness;  // why the deletion is a strong collapse step
};

// Record of one surgery decomposition: delete dominated vertices from M(K)
// one at a time, check the result equals the matching complex of the poset
// with those pair edges removed, split into components, and certify the
// homotopy type twice (join of the pieces, and the collapsed complex
// directly).
struct SurgeryReport {
    bool ok = false;
    std::string failure;

    SimplicialComplex complex;  // K
    SimplicialComplex morse;    // M(K)
    std::vector<SurgeryStep> steps;
    bool poset_route_equal = false;
    std::vector<std::pair<std::size_t, std::size_t>> pieces;  // (nodes, edges) per component, sorted
    SphereWedgeSignature predicted;
    HomologyProfile join_profile;
    HomologyProfile direct_profile;
    bool join_ok = false;
    bool direct_ok = false;
};

namespace detail {

// One removal: the Morse vertex to delete and, when the proof names it, the
// dominator to verify against (empty = locate one by scanning).
struct Removal {
    std::string name;
    std::string canonical_dominator;
};

inline void surgery_run(SurgeryReport& rep, const SimplicialComplex& K,
                        const std::vector<Removal>& removals,
                        std::vector<std::pair<std::size_t, std::size_t>> expected_pieces,
                        const MorseComplexOptions& mopts) {
    rep.complex = K;
    rep.morse = morse_complex(K, mopts);
    auto fail = [&](std::string msg) { rep.failure = std::move(msg); };

    SimplicialComplex cur = rep.morse;
    for (const auto& rm : removals) {
        if (!cur.has_label(rm.name)) return fail("removal target is not a vertex: " + rm.name);
        if (!rm.canonical_dominator.empty()) {
            if (!dominates(cur, rm.canonical_dominator, rm.name))
                return fail(rm.name + " is not dominated by " + rm.canonical_dominator +
                            " at its removal step");
            rep.steps.push_back({rm.name, {rm.name, rm.canonical_dominator}});
        } else {
            auto wits = find_dominated(cur);
            auto it = std::find_if(wits.begin(), wits.end(),
                                   [&](const DominationWitness& w) { return w.dominated == rm.name; });
            if (it == wits.end())
                return fail(rm.name + " is not dominated at its removal step");
            rep.steps.push_back({rm.name, *it});
        }
        cur = delete_vertex(cur, rm.name);
    }

    // The collapsed complex must equal the matching complex of the surgered
    // poset: removing a pair edge removes exactly the matchings using it.
    HasseDiagram H = hasse(K);
    std::vector<std::string> enames;
    for (const auto& rm : removals) enames.push_back(rm.name);
    HasseDiagram H2 = remove_edges(H, enames);
    EnumerateOptions eopts;
    eopts.simplex_budget = mopts.simplex_budget;
    eopts.incremental = true;
    rep.poset_route_equal = equal_complexes(cur, f_of_poset(H2, eopts));
    if (!rep.poset_route_equal)
        return fail("collapsed complex differs from the surgered poset's matching complex");

    auto comps = components(H2);
    for (const auto& c : comps) rep.pieces.emplace_back(c.node_count(), c.edge_count());
    std::sort(rep.pieces.begin(), rep.pieces.end());
    std::sort(expected_pieces.begin(), expected_pieces.end());
    if (rep.pieces != expected_pieces) {
        std::string got;
        for (auto [a, b] : rep.pieces)
            got += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        return fail("component census mismatch: got " + got);
    }

    SimplicialComplex J;
    for (const auto& c : comps) J = join(J, f_of_poset(c, eopts));
    rep.join_profile = reduced_homology(J);
    rep.direct_profile = reduced_homology(cur);
    rep.join_ok = matches_signature(rep.join_profile, rep.predicted);
    rep.direct_ok = matches_signature(rep.direct_profile, rep.predicted);
    if (!rep.join_ok) return fail("join of pieces has the wrong homology");
    if (!rep.direct_ok) return fail("collapsed complex has the wrong homology");
    rep.ok = true;
}

} // namespace detail

// Collapse M(S_{1,n}) by deleting the center-to-arm pairs, each dominated
// by the leaf pair; the poset splits into n+1 two-point shapes whose join
// is an n-sphere.
inline SurgeryReport hasse_surgery_s1n(int n, const MorseComplexOptions& mopts = {}) {
    if (n < 1) throw precondition_error("hasse_surgery_s1n: need n >= 1");
    SurgeryReport rep;
    rep.predicted = SphereWedgeSignature::wedge(n, 1);
    std::vector<detail::Removal> removals;
    for (int i = 1; i <= n; ++i) removals.push_back({"(c)a" + std::to_string(i), "(d1)c"});
    std::vector<std::pair<std::size_t, std::size_t>> expected{{3, 2}};
    for (int i = 0; i < n; ++i) expected.emplace_back(4, 3);
    detail::surgery_run(rep, extended_star(1, n), removals, std::move(expected), mopts);
    return rep;
}

// Surgery for the leafed path wedges S_{1,n} v P_t v S_{right_k,l}.  The
// leaf pairs dominate every pair out of their center; with a leaf on one
// side only, a cascade of dominations eats the path from the left.
inline SurgeryReport hasse_surgery_mixed(int t, int n, int l, int left_k, int right_k,
                                         const MorseComplexOptions& mopts = {}) {
    if (left_k < 0 || left_k > 1 || right_k < 0 || right_k > 1 || left_k + right_k == 0)
        throw precondition_error("hasse_surgery_mixed: star leaf counts must be 0/1 with at least one 1");
    if (t < 0 || n < 0 || l < 0) throw precondition_error("hasse_surgery_mixed: negative parameter");
    if (left_k == 0) return hasse_surgery_mixed(t, l, n, right_k, left_k, mopts);
    if (t == 0 && right_k == 1)
        throw precondition_error("hasse_surgery_mixed: both leaves at one center; use the strong collapse route");

    const int u = t / 3, residue = t % 3;
    SurgeryReport rep;
    PWedgeLayout lay = p_wedge_layout(t, {1, n}, {right_k, l});
    SimplicialComplex K = p_wedge(t, {1, n}, {right_k, l});
    const std::string w = lay.left_leaves.front();
    const std::string v0 = lay.left_center, vt = lay.right_center;
    auto pv = [&](int i, int j) { return "(" + lay.v(i) + ")" + lay.v(j); };

    std::vector<detail::Removal> removals;
    std::vector<std::pair<std::size_t, std::size_t>> expected;
    const std::string left_dom = "(" + w + ")" + v0;
    for (int i = 1; i <= n; ++i)
        removals.push_back({"(" + v0 + ")" + lay.left_arms[static_cast<std::size_t>(i - 1)].first, left_dom});
    expected.emplace_back(3, 2);                              // leaf piece at the left center
    for (int i = 0; i < n; ++i) expected.emplace_back(4, 3);  // detached left arms

    if (right_k == 1) {
        const std::string right_dom = "(" + lay.right_leaves.front() + ")" + vt;
        removals.push_back({pv(0, 1), left_dom});
        for (int s = 1; s <= l; ++s)
            removals.push_back({"(" + vt + ")" + lay.right_arms[static_cast<std::size_t>(s - 1)].first, right_dom});
        removals.push_back({pv(t, t - 1), right_dom});
        for (int s = 0; s < l; ++s) expected.emplace_back(4, 3);  // detached right arms
        expected.emplace_back(3, 2);
        if (t == 1)
            expected.emplace_back(1, 0);
        else
            expected.emplace_back(2 * t - 1, 2 * t - 2);
        switch (residue) {
            case 0: rep.predicted = SphereWedgeSignature::Point(); break;
            case 1: rep.predicted = SphereWedgeSignature::wedge(n + l + 2 * u + 1, 1); break;
            default: rep.predicted = SphereWedgeSignature::wedge(n + l + 2 * u + 2, 1);
        }
    } else {
        if (t == 0) {
            // Both stars share the single path vertex: S_{1,n+l} in disguise.
            for (int s = 1; s <= l; ++s)
                removals.push_back({"(" + v0 + ")" + lay.right_arms[static_cast<std::size_t>(s - 1)].first, left_dom});
            for (int s = 0; s < l; ++s) expected.emplace_back(4, 3);
            rep.predicted = SphereWedgeSignature::wedge(n + l, 1);
        } else {
            removals.push_back({pv(0, 1), left_dom});
            // Interleaved path cascade: (v_{3k+2})v_{3k+1} then (v_{3k})v_{3k+1},
            // ascending along the path; dominators vary, located per step.
            const int first_hi = (residue == 2) ? u : u - 1;
            const int second_hi = u - 1 + (residue == 2 ? 1 : 0);
            std::vector<std::pair<int, std::string>> cascade;
            for (int k = 0; k <= first_hi; ++k) cascade.emplace_back(3 * k + 1, pv(3 * k + 2, 3 * k + 1));
            for (int k = 1; k <= second_hi; ++k) cascade.emplace_back(3 * k, pv(3 * k, 3 * k + 1));
            std::sort(cascade.begin(), cascade.end());
            for (auto& [key, name] : cascade) removals.push_back({name, ""});

            int interior;
            switch (residue) {
                case 0:
                    interior = 2 * u - 1;
                    expected.emplace_back(4 * l + 3, 4 * l + 2);
                    rep.predicted = SphereWedgeSignature::wedge(n + l + 2 * u, 1);
                    break;
                case 1:
                    interior = u >= 1 ? 2 * u - 1 : 0;
                    expected.emplace_back(u >= 1 ? 4 * l + 5 : 4 * l + 2, u >= 1 ? 4 * l + 4 : 4 * l + 1);
                    rep.predicted = SphereWedgeSignature::wedge(n + l + 2 * u + 1, l);
                    break;
                default:
                    interior = 2 * u + 1;
                    expected.emplace_back(4 * l + 1, 4 * l);
                    rep.predicted = SphereWedgeSignature::wedge(n + l + 2 * u + 2, l - 1);
            }
            for (int i = 0; i < interior; ++i) expected.emplace_back(3, 2);
        }
    }

    detail::surgery_run(rep, K, removals, std::move(expected), mopts);
    return rep;
}

// Morse complexes turn wedging a 3t-path onto a vertex into a 2t-fold
// suspension; checked as an exact degree shift of the whole reduced
// homology profile (torsion included).
struct SuspensionReport {
    bool ok = false;
    std::string failure;
    SimplicialComplex base;       // M(K)
    SimplicialComplex suspended;  // M(K v_at P_3t)
    HomologyProfile base_profile;
    HomologyProfile suspended_profile;
    int shift = 0;  // 2t
};

inline SuspensionReport check_suspension(const SimplicialComplex& K, const std::string& at, int t,
                                         const MorseComplexOptions& mopts = {}) {
    if (t < 1) throw precondition_error("check_suspension: need t >= 1");
    SuspensionReport rep;
    rep.shift = 2 * t;
    rep.base = morse_complex(K, mopts);
    rep.suspended = morse_complex(attach_path(K, at, 3 * t), mopts);
    rep.base_profile = reduced_homology(rep.base);
    rep.suspended_profile = reduced_homology(rep.suspended);

    if (rep.suspended_profile.empty_complex) {
        rep.failure = "suspended complex is empty";
        return rep;
    }
    // An empty base has reduced homology concentrated in degree -1, so its
    // suspension carries a single class in degree shift-1.
    auto tor_at = [](const HomologyProfile& h, int p) {
        return (p >= 0 && p < static_cast<int>(h.torsion.size()))
                   ? h.torsion[static_cast<std::size_t>(p)]
                   : std::vector<Int>{};
    };
    int q_max = std::max(static_cast<int>(rep.suspended_profile.betti.size()),
                         rep.shift + static_cast<int>(rep.base_profile.betti.size())) + 1;
    for (int q = 0; q <= q_max; ++q) {
        long long want = (rep.base_profile.empty_complex && q == rep.shift - 1)
                             ? 1
                             : rep.base_profile.betti_at(q - rep.shift);
        if (rep.suspended_profile.betti_at(q) != want) {
            rep.failure = "betti mismatch at degree " + std::to_string(q);
            return rep;
        }
        if (tor_at(rep.suspended_profile, q) != tor_at(rep.base_profile, q - rep.shift)) {
            rep.failure = "torsion mismatch at degree " + std::to_string(q);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

// For a leaf a with unique neighbor b and c a further neighbor of b, the
// pair (a)b dominates (b)c in the Morse complex.
inline bool check_domination_lemma(const SimplicialComplex& K, const std::string& a,
                                   const std::string& b, const std::string& c,
                                   const MorseComplexOptions& mopts = {}) {
    if (K.dim() > 1) throw precondition_error("check_domination_lemma: complex is not a graph");
    Vertex va = K.index_of(a), vb = K.index_of(b), vc = K.index_of(c);
    int deg_a = 0;
    bool ab = false, bc = false;
    for (const auto& e : K.simplices(1)) {
        if (detail::contains_vertex(e, va)) ++deg_a;
        if (e == detail::sorted_unique({va, vb})) ab = true;
        if (e == detail::sorted_unique({vb, vc})) bc = true;
    }
    if (deg_a != 1 || !ab) throw precondition_error("check_domination_lemma: first vertex is not a leaf at the second");
    if (!bc || vc == va) throw precondition_error("check_domination_lemma: third vertex is not a further neighbor");
    SimplicialComplex M = morse_complex(K, mopts);
    return dominates(M, "(" + a + ")" + b, "(" + b + ")" + c);
}

} // namespace mcx

#endif
