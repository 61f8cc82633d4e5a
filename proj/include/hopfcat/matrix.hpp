#ifndef HOPFCAT_MATRIX_HPP
#define HOPFCAT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopfcat/scalar.hpp"

namespace hopfcat {

/// Dense row-major matrix over an exact field F.
template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Mat zero(int r, int c) { return Mat(r, c); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_) if (!x.is_zero()) return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& v = (*this)(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in sum");
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in difference");
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Mat operator*(const F& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat col(int j) const {
        Mat r(rows_, 1);
        for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }
    Mat row(int i) const {
        Mat r(1, cols_);
        for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<F> a_;
};

template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Mat<F> r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Mat<F> r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

/// Kronecker product with the convention (i (x) j) -> i*cols(b)+j on columns
/// and i*rows(b)+j on rows; this indexing is fixed project-wide.
template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
    Mat<F> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const F& v = a(i, j);
            if (v.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
        }
    return r;
}

/// Permutation matrix sending V (x) W to W (x) V, dims (d1, d2).
template <class F>
Mat<F> swap_factors(int d1, int d2) {
    Mat<F> r(d1 * d2, d1 * d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) r(j * d1 + i, i * d2 + j) = F(1);
    return r;
}

/// Reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<int> rref_inplace(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = m(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Mat<F> m) {
    return static_cast<int>(rref_inplace(m).size());
}

/// Solves m*X = rhs. Returns nullopt if inconsistent. Free variables are
/// set to zero under the elimination's column order, so the result is
/// deterministic.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& m, const Mat<F>& rhs) {
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: row mismatch");
    Mat<F> aug = hstack(m, rhs);
    std::vector<int> piv = rref_inplace(aug);
    for (int c : piv)
        if (c >= m.cols()) return std::nullopt; // pivot in rhs block: inconsistent
    Mat<F> x(m.cols(), rhs.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < rhs.cols(); ++j)
            x(piv[r], j) = aug(static_cast<int>(r), m.cols() + j);
    return x;
}

/// Columns form an echelon-normalized basis of the null space of m.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
    Mat<F> r = m;
    std::vector<int> piv = rref_inplace(r);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Mat<F> k(m.cols(), static_cast<int>(free_cols.size()));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], static_cast<int>(f)) = F(1);
        for (std::size_t p = 0; p < piv.size(); ++p)
            k(piv[p], static_cast<int>(f)) = -r(static_cast<int>(p), free_cols[f]);
    }
    return k;
}

/// A finite-dimensional quotient space presented by relation vectors.
/// projection * section = identity on the quotient, and projection
/// annihilates every relation row.
template <class F>
struct Quotient {
    int ambient_dim = 0;
    Mat<F> relations;  // rows are relation vectors
    Mat<F> projection; // qdim x ambient
    Mat<F> section;    // ambient x qdim

    int dim() const { return projection.rows(); }
};

template <class F>
Quotient<F> quotient_by(int ambient_dim, const Mat<F>& relations) {
    if (relations.cols() != ambient_dim && relations.rows() != 0)
        throw std::invalid_argument("quotient_by: relation width mismatch");
    Quotient<F> q;
    q.ambient_dim = ambient_dim;
    q.relations = relations;
    Mat<F> r = relations.rows() == 0 ? Mat<F>(0, ambient_dim) : relations;
    std::vector<int> piv = rref_inplace(r);
    std::vector<bool> is_piv(ambient_dim, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    int qd = static_cast<int>(free_cols.size());
    q.projection = Mat<F>(qd, ambient_dim);
    q.section = Mat<F>(ambient_dim, qd);
    for (int f = 0; f < qd; ++f) {
        q.projection(f, free_cols[f]) = F(1);
        q.section(free_cols[f], f) = F(1);
    }
    // pivot coordinates reduce to combinations of free ones
    for (std::size_t p = 0; p < piv.size(); ++p)
        for (int f = 0; f < qd; ++f)
            q.projection(f, piv[p]) = -r(static_cast<int>(p), free_cols[f]);
    return q;
}

/// Column span comparison: true iff span(a) is contained in span(b).
template <class F>
bool span_contained(const Mat<F>& a, const Mat<F>& b) {
    return solve(b, a).has_value();
}

template <class F>
bool span_equal(const Mat<F>& a, const Mat<F>& b) {
    return span_contained(a, b) && span_contained(b, a);
}

} // namespace hopfcat

#endif
