#pragma once

// Dense exact matrices, reduced row echelon form, kernels, linear solves and
// subspaces in canonical (RREF) form.

#include "augalg/field.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace augalg {

template <Field K>
using Vec = std::vector<Scalar<K>>;

template <Field K>
class Matrix {
public:
    using E = Scalar<K>;

    Matrix() = default;
    Matrix(K k, std::size_t rows, std::size_t cols)
        : k_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

    static Matrix identity(K k, std::size_t n) {
        Matrix m(k, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
        return m;
    }
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(K k, std::size_t rows, const std::vector<Vec<K>>& cols) {
        Matrix m(k, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            assert(cols[j].size() == rows);
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix from_rows(K k, std::size_t cols, const std::vector<Vec<K>>& rows) {
        Matrix m(k, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            assert(rows[i].size() == cols);
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
        }
        return m;
    }

    const K& field() const { return k_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const {
        return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    Vec<K> col(std::size_t j) const {
        Vec<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const Vec<K>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero_matrix() const {
        return std::all_of(data_.begin(), data_.end(), [](const E& a) { return is_zero(a); });
    }

    Matrix transpose() const {
        Matrix t(k_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Product skipping zero entries of the left factor; the matrices in this
    /// library are overwhelmingly sparse.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix c(a.k_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const E& aik = a(i, k);
                if (is_zero(aik)) continue;
                const E* brow = &b.data_[k * b.cols_];
                E* crow = &c.data_[i * c.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(brow[j])) crow[j] += aik * brow[j];
            }
        }
        return c;
    }
    friend Vec<K> operator*(const Matrix& a, const Vec<K>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
        Vec<K> out(a.rows_, a.k_.zero());
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (is_zero(v[k])) continue;
            for (std::size_t i = 0; i < a.rows_; ++i) {
                const E& aik = a(i, k);
                if (!is_zero(aik)) out[i] += aik * v[k];
            }
        }
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Horizontal concatenation [a | b].
    friend Matrix hconcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row mismatch");
        Matrix c(a.k_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
        }
        return c;
    }
    friend Matrix vconcat(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vconcat: column mismatch");
        Matrix c(a.k_, a.rows_ + b.rows_, a.cols_);
        std::copy(a.data_.begin(), a.data_.end(), c.data_.begin());
        std::copy(b.data_.begin(), b.data_.end(), c.data_.begin() + a.data_.size());
        return c;
    }

    /// In-place Gauss-Jordan elimination restricted to the first `limit`
    /// columns. Pivot search scans left to right and takes the first row with
    /// a nonzero entry. Returns the pivot columns.
    std::vector<std::size_t> reduce_in_place(std::size_t limit) {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        std::vector<std::size_t> support;
        for (std::size_t c = 0; c < limit && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && is_zero((*this)(p, c))) ++p;
            if (p == rows_) continue;
            if (p != r)
                std::swap_ranges(data_.begin() + p * cols_, data_.begin() + (p + 1) * cols_, data_.begin() + r * cols_);
            E* prow = &data_[r * cols_];
            E inv = k_.inv(prow[c]);
            support.clear();
            for (std::size_t j = c; j < cols_; ++j) {
                if (is_zero(prow[j])) continue;
                prow[j] *= inv;
                support.push_back(j);
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                E* irow = &data_[i * cols_];
                if (is_zero(irow[c])) continue;
                E f = irow[c];
                for (std::size_t j : support) irow[j] -= f * prow[j];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    /// Drops trailing rows (used to strip zero rows after elimination).
    void truncate_rows(std::size_t n) {
        rows_ = std::min(rows_, n);
        data_.resize(rows_ * cols_);
    }

private:
    K k_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<E> data_;
};

template <Field K>
Matrix<K> rref(Matrix<K> m, std::vector<std::size_t>* pivots = nullptr) {
    auto piv = m.reduce_in_place(m.cols());
    if (pivots) *pivots = std::move(piv);
    return m;
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
    Matrix<K> c = m;
    return c.reduce_in_place(c.cols()).size();
}

/// A subspace of k^n held as the nonzero rows of an RREF matrix. Two
/// subspaces are equal iff their bases are identical.
template <Field K>
class Subspace {
public:
    using E = Scalar<K>;

    Subspace() = default;
    Subspace(K k, std::size_t ambient) : basis_(k, 0, ambient) {}

    /// Span of the given row vectors.
    static Subspace span(K k, std::size_t ambient, const std::vector<Vec<K>>& vectors) {
        return from_rows(Matrix<K>::from_rows(k, ambient, vectors));
    }
    static Subspace from_rows(Matrix<K> rows) {
        Subspace s;
        s.pivots_ = rows.reduce_in_place(rows.cols());
        rows.truncate_rows(s.pivots_.size());
        s.basis_ = std::move(rows);
        return s;
    }
    static Subspace full(K k, std::size_t ambient) {
        return from_rows(Matrix<K>::identity(k, ambient));
    }

    const K& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<K>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec<K> vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vec<K>> vectors() const {
        std::vector<Vec<K>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    /// Canonical representative of v modulo this subspace (zero at pivots).
    Vec<K> reduce(Vec<K> v) const {
        assert(v.size() == ambient_dim());
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            E f = v[pivots_[i]];
            if (is_zero(f)) continue;
            for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j) {
                const E& b = basis_(i, j);
                if (!is_zero(b)) v[j] -= f * b;
            }
        }
        return v;
    }
    bool contains(const Vec<K>& v) const {
        Vec<K> r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const E& a) { return is_zero(a); });
    }
    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.vector(i))) return false;
        return true;
    }
    /// Coordinates of v (assumed in the subspace) in the RREF basis.
    Vec<K> coordinates(const Vec<K>& v) const {
        Vec<K> c(dim());
        for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Matrix<K> basis_;
    std::vector<std::size_t> pivots_;
};

template <Field K>
Subspace<K> kernel_basis(const Matrix<K>& m) {
    std::vector<std::size_t> piv;
    Matrix<K> r = rref(m, &piv);
    const K& k = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec<K>> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(m.cols(), k.zero());
        v[f] = k.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace<K>::span(k, m.cols(), vecs);
}

/// Column space (image) of m as a subspace of k^rows.
template <Field K>
Subspace<K> image(const Matrix<K>& m) {
    return Subspace<K>::from_rows(m.transpose());
}

struct NoSolution {};

/// Any x with a*x = b; free variables are set to zero after RREF.
template <Field K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    Matrix<K> aug = hconcat(a, b);
    auto piv = aug.reduce_in_place(a.cols());
    const K& k = a.field();
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!is_zero(aug(i, a.cols() + j))) return std::nullopt;
    Matrix<K> x(k, a.cols(), b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, a.cols() + j);
    return x;
}

/// Records T with T*a = rref(a) so repeated solves against the same matrix
/// cost one matrix-vector product each.
template <Field K>
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(const Matrix<K>& a) : k_(a.field()), rows_(a.rows()), cols_(a.cols()) {
        Matrix<K> aug = hconcat(a, Matrix<K>::identity(a.field(), a.rows()));
        pivots_ = aug.reduce_in_place(a.cols());
        transform_ = Matrix<K>(k_, a.rows(), a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.rows(); ++j) transform_(i, j) = aug(i, a.cols() + j);
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::optional<Vec<K>> solve(const Vec<K>& b) const {
        Vec<K> c = transform_ * b;
        for (std::size_t i = pivots_.size(); i < rows_; ++i)
            if (!is_zero(c[i])) return std::nullopt;
        Vec<K> x(cols_, k_.zero());
        for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = c[i];
        return x;
    }
    Vec<K> solve_or_throw(const Vec<K>& b) const {
        auto x = solve(b);
        if (!x) throw std::runtime_error("linear system has no solution");
        return *x;
    }

private:
    K k_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::size_t> pivots_;
    Matrix<K> transform_;
};

template <Field K>
struct SubspaceOps {
    Subspace<K> sum;
    Subspace<K> intersection;
    bool contains;  // u contains v
};

template <Field K>
Subspace<K> subspace_sum(const Subspace<K>& u, const Subspace<K>& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace sum: ambient mismatch");
    return Subspace<K>::from_rows(vconcat(u.basis(), v.basis()));
}

template <Field K>
Subspace<K> subspace_intersection(const Subspace<K>& u, const Subspace<K>& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace intersection: ambient mismatch");
    const K& k = u.field();
    std::size_t n = u.ambient_dim();
    if (u.dim() == 0 || v.dim() == 0) return Subspace<K>(k, n);
    // x = sum a_i u_i = sum b_j v_j  <=>  [U^T | -V^T] (a;b) = 0
    Matrix<K> m(k, n, u.dim() + v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) m(c, i) = u.basis()(i, c);
    for (std::size_t j = 0; j < v.dim(); ++j)
        for (std::size_t c = 0; c < n; ++c) m(c, u.dim() + j) = -v.basis()(j, c);
    Subspace<K> ker = kernel_basis(m);
    std::vector<Vec<K>> vecs;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vec<K> x(n, k.zero());
        for (std::size_t i = 0; i < u.dim(); ++i) {
            const auto& a = ker.basis()(r, i);
            if (is_zero(a)) continue;
            for (std::size_t c = 0; c < n; ++c) x[c] += a * u.basis()(i, c);
        }
        vecs.push_back(std::move(x));
    }
    return Subspace<K>::span(k, n, vecs);
}

template <Field K>
SubspaceOps<K> subspace_ops(const Subspace<K>& u, const Subspace<K>& v) {
    return {subspace_sum(u, v), subspace_intersection(u, v), u.contains(v)};
}

template <Field K>
bool is_zero_vector(const Vec<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& a) { return is_zero(a); });
}

/// Echelon basis grown one vector at a time; used for greedy choices of
/// minimal generators where rebuilding an RREF per candidate is wasteful.
template <Field K>
class IncrementalBasis {
public:
    IncrementalBasis(K k, std::size_t ambient) : k_(k), ambient_(ambient) {}

    std::size_t dim() const { return rows_.size(); }

    Vec<K> reduce(Vec<K> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& c = v[pivots_[r]];
            if (is_zero(c)) continue;
            Scalar<K> f = c;
            const Vec<K>& row = rows_[r];
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!is_zero(row[j])) v[j] -= f * row[j];
        }
        return v;
    }
    bool contains(const Vec<K>& v) const { return is_zero_vector<K>(reduce(v)); }
    /// Adds v if independent; returns whether it was added.
    bool add(const Vec<K>& v) {
        Vec<K> r = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && is_zero(r[p])) ++p;
        if (p == ambient_) return false;
        Scalar<K> inv = k_.inv(r[p]);
        for (auto& x : r)
            if (!is_zero(x)) x *= inv;
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

private:
    K k_;
    std::size_t ambient_;
    std::vector<Vec<K>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace augalg
