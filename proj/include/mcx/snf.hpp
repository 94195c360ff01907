#ifndef MCX_SNF_HPP
#define MCX_SNF_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace mcx {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sparse column-major integer matrix.  Rows within a column are kept
// ascending; zero entries are never stored.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Int>>> columns;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

    void push(int r, int c, Int v) {
        if (v == 0) return;
        auto& col = columns[static_cast<std::size_t>(c)];
        if (!col.empty() && col.back().first >= r)
            throw precondition_error("IntMatrix entries must be pushed in ascending row order");
        col.emplace_back(r, std::move(v));
    }

    static IntMatrix from_dense(const std::vector<std::vector<long long>>& d) {
        int r = static_cast<int>(d.size());
        int c = r ? static_cast<int>(d[0].size()) : 0;
        IntMatrix A(r, c);
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i)
                if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                    A.push(i, j, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return A;
    }

    std::vector<std::vector<Int>> to_dense() const {
        std::vector<std::vector<Int>> d(static_cast<std::size_t>(rows),
                                        std::vector<Int>(static_cast<std::size_t>(cols), 0));
        for (int j = 0; j < cols; ++j)
            for (const auto& [i, v] : columns[static_cast<std::size_t>(j)])
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        return d;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
};

// Smith normal form: invariant factors d1 | d2 | ... | dr (all positive),
// rank r, and optionally unimodular U (rows x rows) and V (cols x cols)
// with U * A * V = diag(d1..dr).
struct SNFResult {
    std::vector<Int> invariants;
    int rank = 0;
    std::vector<std::vector<Int>> U;  // empty unless transforms requested
    std::vector<std::vector<Int>> V;
};

namespace detail {

// Working state for the elimination: hash-map sparse access in both
// directions plus a (nnz, col) ordering for pivot column selection.
struct SnfState {
    int m, n;
    std::vector<std::unordered_map<int, Int>> col;  // col -> row -> value
    std::vector<std::unordered_set<int>> rowcols;   // row -> cols with a nonzero
    std::vector<bool> row_active, col_active;
    std::set<std::pair<std::size_t, int>> colq;  // (nnz, col id)
    bool track;
    std::vector<std::vector<Int>> U, V;

    SnfState(const IntMatrix& A, bool transforms)
        : m(A.rows), n(A.cols), col(static_cast<std::size_t>(A.cols)),
          rowcols(static_cast<std::size_t>(A.rows)), row_active(static_cast<std::size_t>(A.rows), true),
          col_active(static_cast<std::size_t>(A.cols), true), track(transforms) {
        for (int j = 0; j < n; ++j)
            for (const auto& [i, v] : A.columns[static_cast<std::size_t>(j)]) {
                col[static_cast<std::size_t>(j)].emplace(i, v);
                rowcols[static_cast<std::size_t>(i)].insert(j);
            }
        for (int j = 0; j < n; ++j)
            if (!col[static_cast<std::size_t>(j)].empty())
                colq.emplace(col[static_cast<std::size_t>(j)].size(), j);
        if (track) {
            U.assign(static_cast<std::size_t>(m), std::vector<Int>(static_cast<std::size_t>(m), 0));
            V.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < m; ++i) U[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
            for (int j = 0; j < n; ++j) V[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
        }
    }

    Int value(int r, int c) const {
        auto it = col[static_cast<std::size_t>(c)].find(r);
        return it == col[static_cast<std::size_t>(c)].end() ? Int(0) : it->second;
    }

    void colq_update(int c, std::size_t old_size) {
        colq.erase({old_size, c});
        if (col_active[static_cast<std::size_t>(c)] && !col[static_cast<std::size_t>(c)].empty())
            colq.emplace(col[static_cast<std::size_t>(c)].size(), c);
    }

    void set_entry(int r, int c, const Int& v) {
        auto& column = col[static_cast<std::size_t>(c)];
        std::size_t old = column.size();
        auto it = column.find(r);
        if (v == 0) {
            if (it != column.end()) {
                column.erase(it);
                rowcols[static_cast<std::size_t>(r)].erase(c);
            }
        } else {
            if (it != column.end()) {
                it->second = v;
            } else {
                column.emplace(r, v);
                rowcols[static_cast<std::size_t>(r)].insert(c);
            }
        }
        if (column.size() != old) colq_update(c, old);
    }

    // row_i += q * row_r
    void row_op(int i, int r, const Int& q) {
        if (q == 0) return;
        std::vector<int> cs(rowcols[static_cast<std::size_t>(r)].begin(),
                            rowcols[static_cast<std::size_t>(r)].end());
        for (int c : cs) set_entry(i, c, value(i, c) + q * value(r, c));
        if (track)
            for (int k = 0; k < m; ++k)
                U[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                    q * U[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    }

    // col_j += q * col_c
    void col_op(int j, int c, const Int& q) {
        if (q == 0) return;
        std::vector<std::pair<int, Int>> entries(col[static_cast<std::size_t>(c)].begin(),
                                                 col[static_cast<std::size_t>(c)].end());
        for (const auto& [r, v] : entries) set_entry(r, j, value(r, j) + q * v);
        if (track)
            for (int k = 0; k < n; ++k)
                V[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] +=
                    q * V[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
    }

    void negate_row(int r) {
        std::vector<int> cs(rowcols[static_cast<std::size_t>(r)].begin(),
                            rowcols[static_cast<std::size_t>(r)].end());
        for (int c : cs) {
            auto& v = col[static_cast<std::size_t>(c)].at(r);
            v = -v;
        }
        if (track)
            for (int k = 0; k < m; ++k)
                U[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                    -U[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    }
};

} // namespace detail

inline SNFResult smith_normal_form(const IntMatrix& A, bool transforms = false) {
    detail::SnfState st(A, transforms);
    SNFResult out;
    std::vector<std::pair<int, int>> pivots;  // (row, col) per invariant

    auto abs_int = [](const Int& v) { return v < 0 ? Int(-v) : v; };

    for (;;) {
        // ---- pivot selection: prefer a +-1 entry in a thin column ----
        int pr = -1, pc = -1;
        {
            int probes = 0;
            for (auto it = st.colq.begin(); it != st.colq.end() && probes < 32; ++it, ++probes) {
                int c = it->second;
                if (!st.col_active[static_cast<std::size_t>(c)] ||
                    st.col[static_cast<std::size_t>(c)].empty())
                    continue;
                int best_row = -1;
                std::size_t best_deg = 0;
                for (const auto& [r, v] : st.col[static_cast<std::size_t>(c)]) {
                    if (v != 1 && v != -1) continue;
                    std::size_t deg = st.rowcols[static_cast<std::size_t>(r)].size();
                    if (best_row == -1 || deg < best_deg || (deg == best_deg && r < best_row)) {
                        best_row = r;
                        best_deg = deg;
                    }
                }
                if (best_row != -1) {
                    pr = best_row;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == -1) {
            // global min-|value| scan (no unit entry nearby; rare)
            Int best;
            for (int c = 0; c < st.n; ++c) {
                if (!st.col_active[static_cast<std::size_t>(c)]) continue;
                for (const auto& [r, v] : st.col[static_cast<std::size_t>(c)]) {
                    Int a = abs_int(v);
                    if (pr == -1 || a < best || (a == best && (c < pc || (c == pc && r < pr)))) {
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
            }
        }
        if (pr == -1) break;  // matrix exhausted

        // ---- eliminate around (pr, pc) ----
        for (;;) {
            Int piv = st.value(pr, pc);
            bool switched = false;
            // clear the pivot column
            {
                std::vector<std::pair<int, Int>> entries(st.col[static_cast<std::size_t>(pc)].begin(),
                                                         st.col[static_cast<std::size_t>(pc)].end());
                for (const auto& [i, w] : entries) {
                    if (i == pr) continue;
                    Int q = w / piv;
                    st.row_op(i, pr, -q);
                    if (st.value(i, pc) != 0) {  // remainder: smaller pivot found
                        pr = i;
                        switched = true;
                        break;
                    }
                }
            }
            if (switched) continue;
            // clear the pivot row
            {
                std::vector<int> cs(st.rowcols[static_cast<std::size_t>(pr)].begin(),
                                    st.rowcols[static_cast<std::size_t>(pr)].end());
                std::sort(cs.begin(), cs.end());
                for (int j : cs) {
                    if (j == pc) continue;
                    Int w = st.value(pr, j);
                    Int q = w / piv;
                    st.col_op(j, pc, -q);
                    if (st.value(pr, j) != 0) {
                        pc = j;
                        switched = true;
                        break;
                    }
                }
            }
            if (switched) continue;
            // enforce divisibility: a non-unit pivot must divide the rest
            piv = st.value(pr, pc);
            if (piv != 1 && piv != -1) {
                bool merged = false;
                for (int c = 0; c < st.n && !merged; ++c) {
                    if (!st.col_active[static_cast<std::size_t>(c)] || c == pc) continue;
                    for (const auto& [r, v] : st.col[static_cast<std::size_t>(c)]) {
                        if (v % piv != 0) {
                            st.row_op(pr, r, 1);
                            merged = true;
                            break;
                        }
                    }
                }
                if (merged) continue;
            }
            break;
        }

        if (st.value(pr, pc) < 0) st.negate_row(pr);
        out.invariants.push_back(st.value(pr, pc));
        pivots.emplace_back(pr, pc);
        // deactivate pivot row and column
        st.row_active[static_cast<std::size_t>(pr)] = false;
        std::size_t old = st.col[static_cast<std::size_t>(pc)].size();
        st.col_active[static_cast<std::size_t>(pc)] = false;
        st.colq.erase({old, pc});
        st.rowcols[static_cast<std::size_t>(pr)].clear();
        st.col[static_cast<std::size_t>(pc)].clear();
    }

    out.rank = static_cast<int>(out.invariants.size());
    for (std::size_t i = 0; i + 1 < out.invariants.size(); ++i)
        if (out.invariants[i + 1] % out.invariants[i] != 0)
            throw error("smith_normal_form: divisibility chain violated (internal)");

    if (transforms) {
        // permute recorded pivots onto the leading diagonal
        std::vector<int> row_perm, col_perm;
        std::vector<bool> rused(static_cast<std::size_t>(st.m), false),
            cused(static_cast<std::size_t>(st.n), false);
        for (auto [r, c] : pivots) {
            row_perm.push_back(r);
            col_perm.push_back(c);
            rused[static_cast<std::size_t>(r)] = true;
            cused[static_cast<std::size_t>(c)] = true;
        }
        for (int r = 0; r < st.m; ++r)
            if (!rused[static_cast<std::size_t>(r)]) row_perm.push_back(r);
        for (int c = 0; c < st.n; ++c)
            if (!cused[static_cast<std::size_t>(c)]) col_perm.push_back(c);
        out.U.assign(static_cast<std::size_t>(st.m), {});
        for (int i = 0; i < st.m; ++i)
            out.U[static_cast<std::size_t>(i)] = st.U[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(i)])];
        out.V.assign(static_cast<std::size_t>(st.n),
                     std::vector<Int>(static_cast<std::size_t>(st.n), 0));
        for (int j = 0; j < st.n; ++j)
            for (int k = 0; k < st.n; ++k)
                out.V[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    st.V[static_cast<std::size_t>(k)][static_cast<std::size_t>(col_perm[static_cast<std::size_t>(j)])];
    }
    return out;
}

// Exact rank over the rationals, by sparse column elimination.  This is an
// independent route from smith_normal_form and is used to cross-check the
// free part of homology.
inline int rational_rank(const IntMatrix& A) {
    std::vector<std::unordered_map<int, Rational>> col(static_cast<std::size_t>(A.cols));
    std::vector<std::unordered_set<int>> rowcols(static_cast<std::size_t>(A.rows));
    for (int j = 0; j < A.cols; ++j)
        for (const auto& [i, v] : A.columns[static_cast<std::size_t>(j)]) {
            col[static_cast<std::size_t>(j)].emplace(i, Rational(v));
            rowcols[static_cast<std::size_t>(i)].insert(j);
        }
    std::set<std::pair<std::size_t, int>> colq;
    for (int j = 0; j < A.cols; ++j)
        if (!col[static_cast<std::size_t>(j)].empty())
            colq.emplace(col[static_cast<std::size_t>(j)].size(), j);

    auto resize_key = [&](int c, std::size_t old) {
        colq.erase({old, c});
        if (!col[static_cast<std::size_t>(c)].empty())
            colq.emplace(col[static_cast<std::size_t>(c)].size(), c);
    };

    int rank = 0;
    while (!colq.empty()) {
        int c = colq.begin()->second;
        // pivot entry: fewest other columns in its row
        int pr = -1;
        std::size_t deg = 0;
        for (const auto& [r, v] : col[static_cast<std::size_t>(c)]) {
            std::size_t d = rowcols[static_cast<std::size_t>(r)].size();
            if (pr == -1 || d < deg || (d == deg && r < pr)) {
                pr = r;
                deg = d;
            }
        }
        ++rank;
        Rational pv = col[static_cast<std::size_t>(c)].at(pr);
        std::vector<int> js(rowcols[static_cast<std::size_t>(pr)].begin(),
                            rowcols[static_cast<std::size_t>(pr)].end());
        for (int j : js) {
            if (j == c) continue;
            Rational f = col[static_cast<std::size_t>(j)].at(pr) / pv;
            std::size_t old = col[static_cast<std::size_t>(j)].size();
            for (const auto& [r, v] : col[static_cast<std::size_t>(c)]) {
                auto it = col[static_cast<std::size_t>(j)].find(r);
                Rational nv = (it == col[static_cast<std::size_t>(j)].end() ? Rational(0) : it->second) - f * v;
                if (nv == 0) {
                    if (it != col[static_cast<std::size_t>(j)].end()) {
                        col[static_cast<std::size_t>(j)].erase(it);
                        rowcols[static_cast<std::size_t>(r)].erase(j);
                    }
                } else if (it != col[static_cast<std::size_t>(j)].end()) {
                    it->second = nv;
                } else {
                    col[static_cast<std::size_t>(j)].emplace(r, nv);
                    rowcols[static_cast<std::size_t>(r)].insert(j);
                }
            }
            resize_key(j, old);
        }
        // retire pivot column and row
        std::size_t old = col[static_cast<std::size_t>(c)].size();
        for (const auto& [r, v] : col[static_cast<std::size_t>(c)])
            rowcols[static_cast<std::size_t>(r)].erase(c);
        col[static_cast<std::size_t>(c)].clear();
        resize_key(c, old);
    }
    return rank;
}

} // namespace mcx

#endif
