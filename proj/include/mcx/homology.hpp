#ifndef MCX_HOMOLOGY_HPP
#define MCX_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "simplicial_complex.hpp"
#include "snf.hpp"

namespace mcx {

// Reduced integral homology profile.  For the empty complex the convention
// is one reduced class in degree -1 (recorded via the empty flag); betti
// and torsion are then empty.
struct HomologyProfile {
    bool empty_complex = false;
    std::vector<long long> betti;              // reduced Betti numbers, degree 0..dim
    std::vector<std::vector<Int>> torsion;     // torsion coefficients per degree
    long long euler = 0;                       // unreduced Euler characteristic

    long long betti_at(int p) const {
        if (p < 0 || p >= static_cast<int>(betti.size())) return 0;
        return betti[static_cast<std::size_t>(p)];
    }
    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }
    bool is_point() const {
        if (empty_complex) return false;
        for (auto b : betti)
            if (b != 0) return false;
        return torsion_free();
    }
};

// Homotopy-type target: a wedge of count n-spheres, or a point (count 0).
struct SphereWedgeSignature {
    bool point = true;
    int n = 0;
    long long count = 0;

    static SphereWedgeSignature Point() { return {}; }
    static SphereWedgeSignature wedge(int n, long long count) {
        SphereWedgeSignature s;
        if (count > 0) {
            s.point = false;
            s.n = n;
            s.count = count;
        }
        return s;
    }
    std::string to_string() const {
        if (point) return "point";
        if (count == 1) return "S^" + std::to_string(n);
        return "(S^" + std::to_string(n) + ")^" + std::to_string(count);
    }
};

// Alternating-sign face count.  chi(empty) = 0.
inline long long euler_characteristic(const SimplicialComplex& K) {
    long long chi = 0;
    for (int p = 0; p <= K.dim(); ++p)
        chi += (p % 2 == 0) ? static_cast<long long>(K.count(p)) : -static_cast<long long>(K.count(p));
    return chi;
}

// Boundary matrix of degree p: rows are (p-1)-simplices, columns are
// p-simplices, entry (-1)^k for the face omitting the k-th vertex.  Degree
// zero is the 1 x n0 augmentation row of ones.
inline IntMatrix boundary_matrix(const SimplicialComplex& K, int p) {
    if (p < 0 || p > K.dim()) throw precondition_error("boundary_matrix: degree out of range");
    if (p == 0) {
        IntMatrix A(1, static_cast<int>(K.count(0)));
        for (int j = 0; j < A.cols; ++j) A.push(0, j, 1);
        return A;
    }
    const auto& lower = K.simplices(p - 1);
    const auto& upper = K.simplices(p);
    IntMatrix A(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (int j = 0; j < static_cast<int>(upper.size()); ++j) {
        const Simplex& tau = upper[static_cast<std::size_t>(j)];
        // faces in row order so pushes stay ascending
        std::vector<std::pair<int, Int>> entries;
        for (std::size_t k = 0; k < tau.size(); ++k) {
            Simplex face = detail::without_index(tau, k);
            auto it = std::lower_bound(lower.begin(), lower.end(), face);
            int row = static_cast<int>(it - lower.begin());
            entries.emplace_back(row, (k % 2 == 0) ? 1 : -1);
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [r, v] : entries) A.push(r, j, v);
    }
    return A;
}

// Exact reduced integral homology by Smith normal form of every boundary
// matrix.  Internal consistency: chi = 1 + sum (-1)^p bettip must hold; a
// violation indicates a bug and throws.
inline HomologyProfile reduced_homology(const SimplicialComplex& K) {
    HomologyProfile H;
    H.euler = euler_characteristic(K);
    if (K.empty()) {
        H.empty_complex = true;
        return H;
    }
    const int d = K.dim();
    std::vector<int> rank(static_cast<std::size_t>(d) + 2, 0);
    std::vector<std::vector<Int>> tors(static_cast<std::size_t>(d) + 1);
    for (int p = 0; p <= d; ++p) {
        SNFResult snf = smith_normal_form(boundary_matrix(K, p));
        rank[static_cast<std::size_t>(p)] = snf.rank;
        if (p >= 1) {
            for (const auto& v : snf.invariants)
                if (v > 1) tors[static_cast<std::size_t>(p) - 1].push_back(v);
        }
    }
    H.betti.resize(static_cast<std::size_t>(d) + 1);
    H.torsion = std::move(tors);
    for (int p = 0; p <= d; ++p)
        H.betti[static_cast<std::size_t>(p)] = static_cast<long long>(K.count(p)) -
                                               rank[static_cast<std::size_t>(p)] -
                                               rank[static_cast<std::size_t>(p) + 1];
    long long alt = 1;
    for (int p = 0; p <= d; ++p)
        alt += (p % 2 == 0) ? H.betti[static_cast<std::size_t>(p)]
                            : -H.betti[static_cast<std::size_t>(p)];
    if (alt != H.euler) throw error("reduced_homology: Euler characteristic mismatch (internal)");
    return H;
}

// Independent route to the free part: reduced Betti numbers from rational
// ranks alone.  Used to cross-check reduced_homology in the test suites.
inline std::vector<long long> betti_via_rational_rank(const SimplicialComplex& K) {
    if (K.empty()) return {};
    const int d = K.dim();
    std::vector<int> rank(static_cast<std::size_t>(d) + 2, 0);
    for (int p = 0; p <= d; ++p) rank[static_cast<std::size_t>(p)] = rational_rank(boundary_matrix(K, p));
    std::vector<long long> betti(static_cast<std::size_t>(d) + 1);
    for (int p = 0; p <= d; ++p)
        betti[static_cast<std::size_t>(p)] = static_cast<long long>(K.count(p)) -
                                             rank[static_cast<std::size_t>(p)] -
                                             rank[static_cast<std::size_t>(p) + 1];
    return betti;
}

inline bool matches_signature(const HomologyProfile& H, const SphereWedgeSignature& sig) {
    if (H.empty_complex) return false;
    if (!H.torsion_free()) return false;
    if (sig.point) return H.is_point();
    for (int p = 0; p < static_cast<int>(H.betti.size()); ++p)
        if (H.betti_at(p) != (p == sig.n ? sig.count : 0)) return false;
    return H.betti_at(sig.n) == sig.count;  // covers n beyond the profile (count 0 handled above)
}

} // namespace mcx

#endif
