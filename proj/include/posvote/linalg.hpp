// Dense vectors and matrices over Rational, with exact Gauss-Jordan
// solving, inversion, rank and nullspace. No floating point anywhere.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "posvote/rational.hpp"

namespace posvote {

class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : e_(dim) {}
    RatVector(std::initializer_list<Rational> init) : e_(init) {}
    explicit RatVector(std::vector<Rational> entries) : e_(std::move(entries)) {}

    std::size_t dim() const { return e_.size(); }
    const Rational& operator[](std::size_t i) const { return e_[i]; }
    Rational& operator[](std::size_t i) { return e_[i]; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    Rational sum() const;
    Rational dot(const RatVector& o) const;
    Rational max_abs() const;

    RatVector& operator+=(const RatVector& o);
    RatVector& operator-=(const RatVector& o);
    RatVector& operator*=(const Rational& c);

    friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
    friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
    friend RatVector operator*(const Rational& c, RatVector v) { return v *= c; }

    friend bool operator==(const RatVector& a, const RatVector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const RatVector& a, const RatVector& b) { return !(a == b); }

private:
    std::vector<Rational> e_;
};

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    // Row-major nested initializer, e.g. {{1,2},{3,4}}. Throws if ragged.
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    // The all-c matrix; constant(n, 1) is J.
    static RatMatrix constant(std::size_t n, const Rational& c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    RatVector col(std::size_t c) const;
    Rational row_sum(std::size_t r) const;
    Rational col_sum(std::size_t c) const;
    Rational min_entry() const;
    bool all_entries_equal() const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& c);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const Rational& c, RatMatrix m) { return m *= c; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

// Exact matrix-vector product. Throws std::invalid_argument on dimension mismatch.
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

// Exact inverse via Gauss-Jordan; nullopt when singular.
std::optional<RatMatrix> mat_inverse(const RatMatrix& m);

// Solves m x = b exactly. Accepts rectangular systems; free variables are
// set to zero. nullopt when inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);

std::size_t mat_rank(RatMatrix m);

// Any nonzero kernel vector of m, or nullopt when the kernel is trivial.
std::optional<RatVector> nullspace_vector(const RatMatrix& m);

}  // namespace posvote
