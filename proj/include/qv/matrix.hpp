#pragma once

#include <cassert>
#include <vector>

#include "qv/scalar.hpp"

namespace qv {

// Dense matrix over an exact field (Rational or Fp). Everything here is
// sized for the tiny systems this library manipulates; no pivoting
// strategies beyond "first nonzero".
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, K fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix zeros(int rows, int cols, K zero) { return Matrix(rows, cols, zero); }
    static Matrix identity(int n, K zero, K one) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    const K& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (!a.same_shape(b)) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.same_shape(b));
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.same_shape(b));
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_, K{});
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    Matrix scaled(const K& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x *= c;
        return r;
    }
    Matrix transposed() const {
        Matrix r(cols_, rows_, K{});
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    // Lexicographic order on the flattened entries; shape compared first.
    // Used for canonical representatives.
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (size_t i = 0; i < a.data_.size(); ++i) {
            if (a.data_[i] < b.data_[i]) return true;
            if (b.data_[i] < a.data_[i]) return false;
        }
        return false;
    }

private:
    int rows_, cols_;
    std::vector<K> data_;
};

// Row echelon reduction in place; returns the pivot columns. Destroys m.
template <class K>
std::vector<int> row_reduce(Matrix<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        K inv_pivot = m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / inv_pivot;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return static_cast<int>(row_reduce(m).size());
}

// Basis of { x : m x = 0 }, one column vector per basis element, in the
// standard echelon parameterization (free columns in increasing order).
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, K zero, K one) {
    int n = m.cols();
    std::vector<int> pivots = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(n, zero);
        v[free] = one;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = zero - m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A X = B for X, requiring an exact solution (A need not be square).
// Throws if the system is inconsistent or underdetermined columns are hit;
// callers use it when solvability is guaranteed structurally.
template <class K>
Matrix<K> solve_exact(const Matrix<K>& a, const Matrix<K>& b, K zero) {
    assert(a.rows() == b.rows());
    int n = a.cols();
    Matrix<K> aug(a.rows(), n + b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, n + j) = b.at(i, j);
    }
    std::vector<int> pivots = row_reduce(aug);
    Matrix<K> x(n, b.cols(), zero);
    std::vector<int> pivot_of_col(n, -1);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= n) throw Error("solve_exact: inconsistent system");
        pivot_of_col[pivots[r]] = static_cast<int>(r);
    }
    for (int j = 0; j < n; ++j) {
        if (pivot_of_col[j] < 0) continue;  // free column: take 0
        for (int c = 0; c < b.cols(); ++c) x.at(j, c) = aug.at(pivot_of_col[j], n + c);
    }
    return x;
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
    if (m.rows() != m.cols()) return false;
    return rank(m) == m.rows();
}

// Characteristic polynomial by the Faddeev-LeVerrier recurrence, exact over
// the rationals. Coefficients returned lowest degree first, monic.
inline std::vector<Rational> char_poly(const Matrix<Rational>& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> mk = Matrix<Rational>::identity(n, Rational(0), Rational(1));
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        Rational ck = -tr / k;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

}  // namespace qv
