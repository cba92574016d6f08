#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plumbook {

using Integer = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    [[nodiscard]] bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    [[nodiscard]] bool is_skew() const {
        if (!square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r; c < cols_; ++c)
                if ((*this)(r, c) != -(*this)(c, r)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }
    /// row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
    }
    /// col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
    }

    [[nodiscard]] std::vector<Integer> column(std::size_t c) const {
        std::vector<Integer> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? " [" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Matrix-vector product.
inline std::vector<Integer> mat_vec(const IntMatrix& m, const std::vector<Integer>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Integer> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (v[c] != 0) out[r] += m(r, c) * v[c];
    return out;
}

/// Bilinear form xᵀ·M·y.
inline Integer bilinear(const std::vector<Integer>& x, const IntMatrix& m, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (y[c] != 0) s += x[r] * m(r, c) * y[c];
    }
    return s;
}

/// Fraction-free Gaussian elimination (Bareiss). Exact for integer input.
inline Integer determinant(IntMatrix m) {
    if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Inverse of a unimodular matrix; throws if det ≠ ±1.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("unimodular_inverse: matrix not square");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    IntMatrix inv = IntMatrix::identity(n);
    // Row-reduce with the euclidean algorithm on each column; keeps everything integral.
    for (std::size_t c = 0; c < n; ++c) {
        for (;;) {
            std::size_t piv = n;
            for (std::size_t r = c; r < n; ++r)
                if (a(r, c) != 0 && (piv == n || abs(a(r, c)) < abs(a(piv, c)))) piv = r;
            if (piv == n) throw std::domain_error("unimodular_inverse: matrix is singular");
            a.swap_rows(c, piv);
            inv.swap_rows(c, piv);
            bool clean = true;
            for (std::size_t r = c + 1; r < n; ++r) {
                if (a(r, c) == 0) continue;
                Integer q = a(r, c) / a(c, c);
                a.add_row(r, c, -q);
                inv.add_row(r, c, -q);
                if (a(r, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (abs(a(c, c)) != 1) throw std::domain_error("unimodular_inverse: determinant is not ±1");
        if (a(c, c) < 0) {
            a.negate_row(c);
            inv.negate_row(c);
        }
    }
    for (std::size_t c = n; c-- > 0;)
        for (std::size_t r = 0; r < c; ++r) {
            Integer q = a(r, c);
            a.add_row(r, c, -q);
            inv.add_row(r, c, -q);
        }
    return inv;
}

}  // namespace plumbook
