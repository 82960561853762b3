#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torint/errors.hpp"
#include "torint/integer.hpp"
#include "torint/matrix.hpp"

// Hermite and Smith normal forms with unimodular witnesses, plus the integer
// solver built on them. Conventions:
//   hnf:  U * M = H, row echelon, pivots positive, entries above a pivot
//         reduced into [0, pivot), zero rows last. Unique for this convention.
//   snf:  U * M * V = D diagonal, d_1 | d_2 | ... | d_r, all nonnegative.

namespace torint {

struct hermite_form {
    int_matrix H;
    int_matrix U;                        // unimodular, U * M = H
    std::vector<std::size_t> pivot_cols; // column of the pivot in row k
};

inline hermite_form hnf(const int_matrix& m) {
    hermite_form hf{m, int_matrix::identity(m.rows()), {}};
    int_matrix& h = hf.H;
    int_matrix& u = hf.U;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // Euclidean reduction within the column until one entry survives.
        for (;;) {
            std::size_t piv = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i)
                if (h(i, c) != 0 && (piv == m.rows() || abs(h(i, c)) < abs(h(piv, c)))) piv = i;
            if (piv == m.rows()) break; // column is zero from row r down
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Int q = h(i, c) / h(r, c);
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c) == 0) continue; // no pivot in this column
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        hf.pivot_cols.push_back(c);
        ++r;
    }
    return hf;
}

// Row rank over Q, exact.
inline std::size_t rank(const int_matrix& m) {
    return hnf(m).pivot_cols.size();
}

struct smith_form {
    int_matrix U; // rows x rows, unimodular
    int_matrix D; // diagonal, nonnegative, divisibility chain
    int_matrix V; // cols x cols, unimodular
    std::vector<Int> factors; // positive diagonal entries d_1..d_r
};

inline smith_form snf(const int_matrix& m) {
    smith_form sf{int_matrix::identity(m.rows()), m, int_matrix::identity(m.cols()), {}};
    int_matrix& d = sf.D;
    std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // Minimal nonzero |entry| of the trailing submatrix as pivot.
            std::size_t pi = m.rows(), pj = m.cols();
            for (std::size_t i = t; i < m.rows(); ++i)
                for (std::size_t j = t; j < m.cols(); ++j)
                    if (d(i, j) != 0 && (pi == m.rows() || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m.rows()) { t = nmin; break; } // trailing submatrix is zero
            d.swap_rows(t, pi);
            sf.U.swap_rows(t, pi);
            d.swap_cols(t, pj);
            sf.V.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                sf.U.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                sf.V.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Enforce the divisibility chain before moving on.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < m.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        sf.U.add_row_multiple(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (t >= nmin) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            sf.U.negate_row(t);
        }
    }
    for (std::size_t t = 0; t < nmin && d(t, t) != 0; ++t) sf.factors.push_back(d(t, t));
    return sf;
}

struct integer_solution {
    std::vector<Int> particular; // one x with x^T M = b^T
    int_matrix kernel_basis;     // rows span { x : x^T M = 0 }
};

// Solve x^T M = b^T over the integers. Unsolvable systems return nullopt.
inline std::optional<integer_solution> solve_integer(const int_matrix& m,
                                                     const std::vector<Int>& b) {
    require(b.size() == m.cols(), errc::ambient_mismatch,
            "solve_integer: target length must equal column count");
    hermite_form hf = hnf(m);
    std::vector<Int> y(m.rows());
    std::vector<Int> res = b;
    for (std::size_t k = 0; k < hf.pivot_cols.size(); ++k) {
        std::size_t c = hf.pivot_cols[k];
        const Int& p = hf.H(k, c);
        if (res[c] % p != 0) return std::nullopt;
        Int q = res[c] / p;
        if (q != 0)
            for (std::size_t j = c; j < m.cols(); ++j) res[j] -= q * hf.H(k, j);
        y[k] = q;
    }
    for (const Int& v : res)
        if (v != 0) return std::nullopt;

    integer_solution sol;
    sol.particular.assign(m.rows(), 0);
    for (std::size_t j = 0; j < m.rows(); ++j) {
        Int acc = 0;
        for (std::size_t k = 0; k < hf.pivot_cols.size(); ++k) acc += y[k] * hf.U(k, j);
        sol.particular[j] = acc;
    }
    std::size_t r = hf.pivot_cols.size();
    sol.kernel_basis = int_matrix(m.rows() - r, m.rows());
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) sol.kernel_basis(i - r, j) = hf.U(i, j);
    return sol;
}

// Basis of { x : x^T M = 0 }, one row per basis vector. Always saturated.
inline int_matrix left_kernel(const int_matrix& m) {
    hermite_form hf = hnf(m);
    std::size_t r = hf.pivot_cols.size();
    int_matrix k(m.rows() - r, m.rows());
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) k(i - r, j) = hf.U(i, j);
    return k;
}

// Basis of { x : M x = 0 } as rows.
inline int_matrix right_kernel(const int_matrix& m) {
    return left_kernel(m.transpose());
}

}  // namespace torint
