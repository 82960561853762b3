#pragma once

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torint/errors.hpp"
#include "torint/integer.hpp"

namespace torint {

// Dense row-major matrix over Int. Zero-row and zero-column shapes are legal
// (a 0 x n matrix still remembers its column count).
class int_matrix {
public:
    int_matrix() = default;

    int_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static int_matrix identity(std::size_t n) {
        int_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static int_matrix from_rows(std::vector<std::vector<Int>> rows, std::size_t cols_hint = 0) {
        std::size_t cols = rows.empty() ? cols_hint : rows.front().size();
        int_matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, errc::parse_error, "ragged row list");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = std::move(rows[i][j]);
        }
        return m;
    }

    // Test and literal convenience.
    static int_matrix of(std::initializer_list<std::initializer_list<long long>> rows) {
        std::vector<std::vector<Int>> v;
        for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
        return from_rows(std::move(v));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const int_matrix&) const = default;

    std::vector<Int> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    int_matrix transpose() const {
        int_matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

    // row[dst] += a * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& a) {
        if (a == 0) return;
        for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += a * (*this)(src, k);
    }

    // col[dst] += a * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& a) {
        if (a == 0) return;
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += a * (*this)(k, src);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

inline int_matrix operator*(const int_matrix& a, const int_matrix& b) {
    require(a.cols() == b.rows(), errc::ambient_mismatch, "matrix product shape mismatch");
    int_matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// Rows of a on top of rows of b.
inline int_matrix vstack(const int_matrix& a, const int_matrix& b) {
    require(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0, errc::ambient_mismatch,
            "vstack column mismatch");
    std::size_t cols = a.rows() == 0 ? (b.rows() == 0 ? std::max(a.cols(), b.cols()) : b.cols())
                                     : a.cols();
    int_matrix m(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

// x^T M for a row vector x.
inline std::vector<Int> mul_row(const std::vector<Int>& x, const int_matrix& m) {
    require(x.size() == m.rows(), errc::ambient_mismatch, "row-vector product shape mismatch");
    std::vector<Int> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
    }
    return out;
}

// Exact determinant, Bareiss fraction-free elimination.
inline Int det(const int_matrix& m) {
    require(m.rows() == m.cols(), errc::ambient_mismatch, "determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    int_matrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// Text format: first line "rows cols", then one line of entries per row.
inline int_matrix parse_matrix_text(std::istream& in) {
    long long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw error(errc::parse_error, "matrix header must be two nonnegative integers");
    int_matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string tok;
            if (!(in >> tok)) throw error(errc::parse_error, "matrix has too few entries");
            try {
                m(i, j) = Int(tok);
            } catch (const std::exception&) {
                throw error(errc::parse_error, "bad matrix entry '" + tok + "'");
            }
        }
    std::string trailing;
    if (in >> trailing) throw error(errc::parse_error, "trailing input after matrix entries");
    return m;
}

inline int_matrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_text(in);
}

inline std::string to_matrix_text(const int_matrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const int_matrix& m) {
    return os << to_matrix_text(m);
}

}  // namespace torint
