#pragma once

// Dense exact matrices over Scalar, sized at runtime.  Used for the 4x4
// switch, the 6x6 Yang-Baxter check, braid representations and the
// presentation matrices of the invariant engine.

#include <cstddef>
#include <vector>

#include "field.hpp"
#include "quat2.hpp"

namespace quatknot {

class MatN {
public:
    MatN() = default;

    MatN(const FieldDescriptor& d, std::size_t rows, std::size_t cols)
        : desc_(d), rows_(rows), cols_(cols), v_(rows * cols, Scalar::zero(d)) {}

    static MatN identity(const FieldDescriptor& d, std::size_t n) {
        MatN m(d, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(d);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDescriptor& descriptor() const { return desc_; }

    Scalar& at(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

    bool operator==(const MatN& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }
    bool operator!=(const MatN& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& s : v_)
            if (!s.is_zero()) return false;
        return true;
    }

    MatN operator+(const MatN& o) const {
        MatN r = *this;
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = r.v_[i] + o.v_[i];
        return r;
    }
    MatN operator-(const MatN& o) const {
        MatN r = *this;
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = r.v_[i] - o.v_[i];
        return r;
    }

    MatN operator*(const MatN& o) const {
        MatN r(desc_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }

    void set_block2(std::size_t bi, std::size_t bj, const Mat2& m) {
        at(2 * bi, 2 * bj) = m.e11;
        at(2 * bi, 2 * bj + 1) = m.e12;
        at(2 * bi + 1, 2 * bj) = m.e21;
        at(2 * bi + 1, 2 * bj + 1) = m.e22;
    }

    Mat2 block2(std::size_t bi, std::size_t bj) const {
        return Mat2(at(2 * bi, 2 * bj), at(2 * bi, 2 * bj + 1),
                    at(2 * bi + 1, 2 * bj), at(2 * bi + 1, 2 * bj + 1));
    }

    // Bareiss fraction-free elimination; exact over any of the fields.
    Scalar determinant() const {
        if (rows_ != cols_) throw InternalError("determinant of non-square matrix");
        const std::size_t n = rows_;
        if (n == 0) return Scalar::one(desc_);
        MatN w = *this;
        Scalar prev = Scalar::one(desc_);
        bool neg = false;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (w.at(k, k).is_zero()) {
                std::size_t s = k + 1;
                while (s < n && w.at(s, k).is_zero()) ++s;
                if (s == n) return Scalar::zero(desc_);
                for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(s, j));
                neg = !neg;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            prev = w.at(k, k);
        }
        Scalar d = w.at(n - 1, n - 1);
        return neg ? -d : d;
    }

    std::size_t rank() const {
        MatN w = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && w.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(r, j), w.at(piv, j));
            Scalar inv = w.at(r, col).inverse();
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (w.at(i, col).is_zero()) continue;
                Scalar f = w.at(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    w.at(i, j) = w.at(i, j) - f * w.at(r, j);
            }
            ++r;
        }
        return r;
    }

    MatN inverse() const {
        if (rows_ != cols_) throw InternalError("inverse of non-square matrix");
        const std::size_t n = rows_;
        MatN w = *this;
        MatN inv = identity(desc_, n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && w.at(piv, col).is_zero()) ++piv;
            if (piv == n) throw SingularMatrix("matrix is singular");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(w.at(col, j), w.at(piv, j));
                    std::swap(inv.at(col, j), inv.at(piv, j));
                }
            Scalar f = w.at(col, col).inverse();
            for (std::size_t j = 0; j < n; ++j) {
                w.at(col, j) = w.at(col, j) * f;
                inv.at(col, j) = inv.at(col, j) * f;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || w.at(i, col).is_zero()) continue;
                Scalar g = w.at(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    w.at(i, j) = w.at(i, j) - g * w.at(col, j);
                    inv.at(i, j) = inv.at(i, j) - g * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    // minor with one row and one column removed
    MatN submatrix_without(std::size_t row, std::size_t col) const {
        MatN r(desc_, rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
                if (j == col) continue;
                r.at(ii, jj) = at(i, j);
                ++jj;
            }
            ++ii;
        }
        return r;
    }

private:
    FieldDescriptor desc_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> v_;
};

} // namespace quatknot
