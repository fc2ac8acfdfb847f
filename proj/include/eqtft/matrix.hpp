#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact field, reduced row echelon form, null spaces.
 *
 * Every routine is exact. Null-space bases are canonical: one basis vector
 * per free column of the reduced row echelon form, in increasing column
 * order, with that free variable set to 1 and the other free variables 0.
 */

#include <algorithm>
#include <cstddef>
#include <concepts>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace eqtft {

/// Scalar types usable throughout the engine.
template <class S>
concept ExactField = std::regular<S> && requires(const S a, const S b) {
    { S(0) } -> std::same_as<S>;
    { S(1) } -> std::same_as<S>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

template <ExactField S>
using Vec = std::vector<S>;

template <ExactField S>
Vec<S> zero_vector(std::size_t n) {
    return Vec<S>(n, S(0));
}

template <ExactField S>
bool is_zero_vector(const Vec<S>& v) {
    return std::all_of(v.begin(), v.end(), [](const S& x) { return x.is_zero(); });
}

template <ExactField S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
    if (a.size() != b.size()) throw Error("vector size mismatch in addition");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
    return a;
}

template <ExactField S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
    if (a.size() != b.size()) throw Error("vector size mismatch in subtraction");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
    return a;
}

template <ExactField S>
Vec<S> scale(const S& c, Vec<S> v) {
    for (auto& x : v) x = c * x;
    return v;
}

template <ExactField S>
std::string to_string(const Vec<S>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

template <ExactField S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<S>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec<S>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw Error("ragged matrix columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<S> row(std::size_t i) const { return Vec<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vec<S> column(std::size_t j) const {
        Vec<S> c(rows_, S(0));
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

    friend Vec<S> operator*(const Matrix& a, const Vec<S>& v) {
        if (a.cols_ != v.size()) throw Error("matrix-vector dimension mismatch");
        Vec<S> r(a.rows_, S(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!v[k].is_zero()) r[i] = r[i] + a(i, k) * v[k];
        return r;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] - b.data_[i];
        return a;
    }

    friend Matrix operator*(const S& c, Matrix a) {
        for (auto& x : a.data_) x = c * x;
        return a;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    S trace() const {
        if (!is_square()) throw Error("trace of non-square matrix");
        S t(0);
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const S& x) { return x.is_zero(); });
    }

    /// Kronecker product; index (i*b.rows + k, j*b.cols + l).
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << " ";
                os << (*this)(i, j).to_string();
            }
        }
        os << "]";
        return os.str();
    }

    const std::vector<S>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

/// Incremental Gauss-Jordan elimination. Rows are kept fully reduced and
/// sorted by pivot column, so the state is always the unique RREF of the
/// span of everything inserted so far.
template <ExactField S>
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Returns true if the row enlarged the span.
    bool insert(Vec<S> row) {
        if (row.size() != cols_) throw Error("row length mismatch in elimination");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S c = row[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = pivots_[r]; j < cols_; ++j)
                if (!rows_[r][j].is_zero()) row[j] = row[j] - c * rows_[r][j];
        }
        std::size_t p = 0;
        while (p < cols_ && row[p].is_zero()) ++p;
        if (p == cols_) return false;
        const S inv = S(1) / row[p];
        for (std::size_t j = p; j < cols_; ++j) row[j] = row[j] * inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S c = rows_[r][p];
            if (c.is_zero()) continue;
            for (std::size_t j = p; j < cols_; ++j)
                if (!row[j].is_zero()) rows_[r][j] = rows_[r][j] - c * row[j];
        }
        const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + at, p);
        rows_.insert(rows_.begin() + at, std::move(row));
        return true;
    }

    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const std::vector<Vec<S>>& rows() const noexcept { return rows_; }

    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> free;
        std::size_t r = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (r < pivots_.size() && pivots_[r] == j) {
                ++r;
                continue;
            }
            free.push_back(j);
        }
        return free;
    }

    /// Canonical basis of the solution space of {row . x = 0}.
    std::vector<Vec<S>> nullspace() const {
        std::vector<Vec<S>> basis;
        for (std::size_t f : free_columns()) {
            Vec<S> v(cols_, S(0));
            v[f] = S(1);
            for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Matrix<S> reduced() const { return Matrix<S>::from_rows(rows_, cols_); }

private:
    std::size_t cols_;
    std::vector<Vec<S>> rows_;
    std::vector<std::size_t> pivots_;
};

template <ExactField S>
RowReducer<S> row_reduce(const Matrix<S>& m) {
    RowReducer<S> red(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) red.insert(m.row(i));
    return red;
}

template <ExactField S>
std::size_t rank(const Matrix<S>& m) {
    return row_reduce(m).rank();
}

template <ExactField S>
std::vector<Vec<S>> nullspace(const Matrix<S>& m) {
    return row_reduce(m).nullspace();
}

/// Inverse of a square matrix, or nullopt when singular.
template <ExactField S>
std::optional<Matrix<S>> try_inverse(const Matrix<S>& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    const auto red = row_reduce(aug);
    if (red.rank() < n || red.pivots()[n - 1] != n - 1) return std::nullopt;
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.rows()[i][n + j];
    return inv;
}

template <ExactField S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (m.rows() == 0 && m.cols() == 0) return m;
    auto inv = try_inverse(m);
    if (!inv) throw Error("matrix is singular: " + m.to_string());
    return *inv;
}

/// Some x with m x = b, or nullopt when inconsistent.
template <ExactField S>
std::optional<Vec<S>> solve(const Matrix<S>& m, const Vec<S>& b) {
    if (b.size() != m.rows()) throw Error("right-hand side length mismatch");
    const std::size_t n = m.cols();
    Matrix<S> aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    const auto red = row_reduce(aug);
    Vec<S> x(n, S(0));
    for (std::size_t r = 0; r < red.rank(); ++r) {
        if (red.pivots()[r] == n) return std::nullopt;
        x[red.pivots()[r]] = red.rows()[r][n];
    }
    return x;
}

}  // namespace eqtft
