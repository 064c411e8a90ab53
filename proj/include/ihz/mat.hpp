#pragma once

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ihz/error.hpp"
#include "ihz/exactnum.hpp"

namespace ihz {

// Dense exact matrix, row-major. Zero-dimension matrices (0 x n, n x 0,
// 0 x 0) are first-class values with empty entry lists.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}
    Mat(size_t rows, size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw DimensionError("entry list of length " + std::to_string(e_.size()) +
                                 " does not fill a " + shape_str() + " matrix");
    }
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionError("ragged initializer rows");
            for (const auto& x : r)
                e_.push_back(x);
        }
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = T(1);
        return m;
    }
    static Mat zero(size_t rows, size_t cols) { return Mat(rows, cols); }
    // Permutation matrix P with P * e_j = e_{perm[j]}.
    static Mat permutation(const std::vector<size_t>& perm) {
        Mat m(perm.size(), perm.size());
        for (size_t j = 0; j < perm.size(); ++j) {
            if (perm[j] >= perm.size())
                throw DimensionError("permutation index out of range");
            m.at(perm[j], j) = T(1);
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    T& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator-() const {
        Mat m(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k)
            m.e_[k] = -e_[k];
        return m;
    }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                m.at(j, i) = at(i, j);
        return m;
    }

    std::vector<T> row(size_t i) const {
        std::vector<T> r(cols_);
        for (size_t j = 0; j < cols_; ++j)
            r[j] = at(i, j);
        return r;
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> c(rows_);
        for (size_t i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

private:
    size_t rows_, cols_;
    std::vector<T> e_;
};

using MatZ = Mat<Int>;
using MatQ = Mat<Rat>;

template <typename T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows())
        throw DimensionError("dimension mismatch in product: " + a.shape_str() + " * " +
                             b.shape_str());
    Mat<T> m(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (size_t j = 0; j < b.cols(); ++j)
                m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) { return mul(a, b); }

template <typename T>
std::vector<T> matvec(const Mat<T>& a, const std::vector<T>& x) {
    if (x.size() != a.cols())
        throw DimensionError("dimension mismatch in apply: " + a.shape_str() + " * vector of " +
                             std::to_string(x.size()));
    std::vector<T> y(a.rows(), T(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            y[i] += a.at(i, j) * x[j];
    return y;
}

// (A|B): side-by-side stacking of matrices with equal row counts.
template <typename T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows())
        throw DimensionError("dimension mismatch in (A|B): " + a.shape_str() + " vs " +
                             b.shape_str());
    Mat<T> m(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j)
            m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

// (C/D): C above D, equal column counts.
template <typename T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.cols())
        throw DimensionError("dimension mismatch in (C/D): " + a.shape_str() + " vs " +
                             b.shape_str());
    Mat<T> m(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

template <typename T>
Mat<T> direct_sum(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

template <typename T>
Mat<T> submatrix_rows(const Mat<T>& a, size_t first, size_t count) {
    Mat<T> m(count, a.cols());
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(first + i, j);
    return m;
}

template <typename T>
Mat<T> submatrix_cols(const Mat<T>& a, size_t first, size_t count) {
    Mat<T> m(a.rows(), count);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < count; ++j)
            m.at(i, j) = a.at(i, first + j);
    return m;
}

MatQ to_q(const MatZ& a);

// Text format: "ROWS COLS" header, then ROWS lines of COLS space-separated
// entries. Blank lines and '#' comments are skipped. Consumes exactly one
// matrix from the stream.
MatZ read_matz(std::istream& in);
MatQ read_matq(std::istream& in);
MatZ parse_matz(const std::string& text);
MatQ parse_matq(const std::string& text);
void write_mat(std::ostream& out, const MatZ& a);
void write_mat(std::ostream& out, const MatQ& a);
std::string to_string(const MatZ& a);
std::string to_string(const MatQ& a);

} // namespace ihz
