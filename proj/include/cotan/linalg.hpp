#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cotan/field.hpp"

namespace cotan {

// Sparse integer matrix, the field-independent form every coboundary is
// built in. Entries accumulate (duplicate positions add up).
struct IntMat {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int r, c, v;
    };
    std::vector<Entry> entries;

    void add(int r, int c, int v) { entries.push_back({r, c, v}); }
};

namespace linalg {

template <class F>
struct Dense {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    Dense() = default;
    Dense(const F& f, int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}

    typename F::Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const typename F::Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

template <class F>
Dense<F> to_dense(const F& f, const IntMat& m) {
    Dense<F> d(f, m.rows, m.cols);
    for (const auto& e : m.entries) d.at(e.r, e.c) = f.add(d.at(e.r, e.c), f.from_int(e.v));
    return d;
}

// In-place row echelon; returns the rank and (optionally) the pivot column
// of each eliminated row. Pivot choice prefers unit entries, which keeps
// the rational fast path inside int64 on the near-unimodular matrices
// coboundaries produce.
template <class F>
int echelon(const F& f, Dense<F>& m, std::vector<int>* pivot_cols = nullptr) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (f.is_zero(m.at(r, col))) continue;
            if (pivot < 0) pivot = r;
            if (F::is_unit_pivot(m.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        auto inv_p = f.div(f.one(), m.at(rank, col));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || f.is_zero(m.at(r, col))) continue;
            auto factor = f.mul(m.at(r, col), inv_p);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

template <class F>
int rank(const F& f, const IntMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    Dense<F> d = to_dense(f, m);
    return echelon(f, d);
}

// Basis of { x : M x = 0 }, x indexed by columns of M.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& f, const IntMat& m) {
    std::vector<std::vector<typename F::Elem>> basis;
    if (m.cols == 0) return basis;
    Dense<F> d = to_dense(f, m);
    std::vector<int> pivots;
    int rk = echelon(f, d, &pivots);
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(m.cols), -1);
    for (int i = 0; i < rk; ++i) pivot_row_of_col[static_cast<std::size_t>(pivots[i])] = i;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (pivot_row_of_col[static_cast<std::size_t>(free_col)] >= 0) continue;
        std::vector<typename F::Elem> x(static_cast<std::size_t>(m.cols), f.zero());
        x[static_cast<std::size_t>(free_col)] = f.one();
        // Echelon rows are reduced (zeros above and below pivots), so each
        // pivot coordinate reads off directly.
        for (int i = 0; i < rk; ++i) {
            int pc = pivots[i];
            if (f.is_zero(d.at(i, free_col))) continue;
            x[static_cast<std::size_t>(pc)] =
                f.neg(f.div(d.at(i, free_col), d.at(i, pc)));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// dim of the image of span(P) in coker(span(Q)) = rank[P|Q] - rank[Q],
// with P, Q given column-wise over the same row space.
template <class F>
int rank_modulo(const F& f, int rows, const std::vector<std::vector<typename F::Elem>>& p_cols,
                const std::vector<std::vector<typename F::Elem>>& q_cols) {
    int pc = static_cast<int>(p_cols.size());
    int qc = static_cast<int>(q_cols.size());
    Dense<F> both(f, rows, pc + qc);
    Dense<F> qonly(f, rows, qc);
    for (int c = 0; c < pc; ++c)
        for (int r = 0; r < rows; ++r) both.at(r, c) = p_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    for (int c = 0; c < qc; ++c)
        for (int r = 0; r < rows; ++r) {
            both.at(r, pc + c) = q_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            qonly.at(r, c) = q_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        }
    return echelon(f, both) - echelon(f, qonly);
}

}  // namespace linalg

// Rank with the field chosen at runtime. Rationals go through the int64
// fast path and fall back to GMP on overflow.
inline int rank_over(const IntMat& m, FieldChoice field) {
    if (!field.is_rational) return linalg::rank(PrimeFieldArith{field.p}, m);
    try {
        return linalg::rank(Rat64Field{}, m);
    } catch (const RatOverflow&) {
        return linalg::rank(GmpRatField{}, m);
    }
}

}  // namespace cotan
