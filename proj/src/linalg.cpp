#include "posvote/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace posvote {

Rational RatVector::sum() const {
    Rational s;
    for (const auto& x : e_) s += x;
    return s;
}

Rational RatVector::dot(const RatVector& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < dim(); ++i) s += e_[i] * o.e_[i];
    return s;
}

Rational RatVector::max_abs() const {
    Rational m;
    for (const auto& x : e_) {
        Rational a = x.abs();
        if (a > m) m = a;
    }
    return m;
}

RatVector& RatVector::operator+=(const RatVector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector add: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) e_[i] += o.e_[i];
    return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector sub: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) e_[i] -= o.e_[i];
    return *this;
}

RatVector& RatVector::operator*=(const Rational& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::constant(std::size_t n, const Rational& c) {
    RatMatrix m(n, n);
    for (auto& x : m.e_) x = c;
    return m;
}

RatVector RatMatrix::row(std::size_t r) const {
    RatVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

RatVector RatMatrix::col(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

Rational RatMatrix::row_sum(std::size_t r) const {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(r, j);
    return s;
}

Rational RatMatrix::col_sum(std::size_t c) const {
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += at(i, c);
    return s;
}

Rational RatMatrix::min_entry() const {
    if (e_.empty()) throw std::invalid_argument("min_entry: empty matrix");
    Rational m = e_[0];
    for (const auto& x : e_) {
        if (x < m) m = x;
    }
    return m;
}

bool RatMatrix::all_entries_equal() const {
    for (const auto& x : e_) {
        if (x != e_[0]) return false;
    }
    return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("matrix add: dimension mismatch");
    }
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("matrix sub: dimension mismatch");
    }
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    if (m.cols() != v.dim()) throw std::invalid_argument("mat_vec: dimension mismatch");
    RatVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return out;
}

namespace {

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RatMatrix> mat_inverse(const RatMatrix& m) {
    if (!m.is_square() || m.rows() == 0) {
        throw std::invalid_argument("mat_inverse: matrix must be square and nonempty");
    }
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    // Singular inputs push pivots past the left block into the identity half.
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    }
    return inv;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
    if (m.rows() != b.dim()) throw std::invalid_argument("solve_linear: dimension mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    // A pivot in the augmented column means 0 = 1: inconsistent.
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

std::size_t mat_rank(RatMatrix m) {
    return rref(m).size();
}

std::optional<RatVector> nullspace_vector(const RatMatrix& m) {
    RatMatrix r = m;
    auto pivots = rref(r);
    if (pivots.size() == m.cols()) return std::nullopt;
    // First non-pivot column gives a kernel vector: x_free = 1, pivots balance it.
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < m.cols() && is_pivot[free_col]) ++free_col;
    RatVector x(m.cols());
    x[free_col] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        x[pivots[row]] = -r.at(row, free_col);
    }
    return x;
}

}  // namespace posvote
