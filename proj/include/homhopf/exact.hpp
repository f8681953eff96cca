#pragma once

// Exact rational scalars and dense structure-constant containers.
//
// Conventions (used everywhere in the library):
//   * Matrix rows are images: map(e_i) = sum_j m(i, j) e_j, so compose(f, g)
//     means "apply f, then g" and equals the ordinary product f * g.
//   * Tensor3 t(i, j, k): e_i * e_j = sum_k t(i, j, k) e_k for products and
//     Delta(e_i) = sum_{j,k} t(i, j, k) e_j (x) e_k for coproducts.
//   * Pairs are flattened row-major: p = i * n2 + j.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "homhopf/errors.hpp"

namespace homhopf {

using Scalar = mpq_class;

// Accepts "p", "-p", "p/q" with q != 0; the result is canonical.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& s);
bool is_canonical(const Scalar& s);

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : v_(dim) {}
    Vector(std::initializer_list<Scalar> values) : v_(values) {}

    static Vector basis(std::size_t dim, std::size_t i);

    std::size_t size() const { return v_.size(); }
    Scalar& operator[](std::size_t i) { return v_[i]; }
    const Scalar& operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool is_zero() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& c);
    bool operator==(const Vector& o) const { return v_ == o.v_; }

private:
    std::vector<Scalar> v_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& c, Vector v);
Scalar dot(const Vector& a, const Vector& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    // Image of v (a vector over the row space).
    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

Matrix mat_compose(const Matrix& f, const Matrix& g);
// Fraction-free Gauss-Jordan; throws Singular with the rank found.
Matrix mat_inverse(const Matrix& m);
std::size_t mat_rank(const Matrix& m);
Matrix alpha_power(const Matrix& alpha, int k);
Matrix kron(const Matrix& f, const Matrix& g);
// Matrix of the flip V1 (x) V2 -> V2 (x) V1.
Matrix flip_matrix(std::size_t n1, std::size_t n2);
Vector kron(const Vector& x, const Vector& y);

class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), a_(n1 * n2 * n3) {}

    std::size_t dim1() const { return n1_; }
    std::size_t dim2() const { return n2_; }
    std::size_t dim3() const { return n3_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return a_[(i * n2_ + j) * n3_ + k];
    }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * n2_ + j) * n3_ + k];
    }
    Vector slice(std::size_t i, std::size_t j) const;
    void set_slice(std::size_t i, std::size_t j, const Vector& v);
    // Views the tensor as a matrix from V1 to V2 (x) V3.
    Matrix as_matrix() const;
    static Tensor3 from_matrix(const Matrix& m, std::size_t n2, std::size_t n3);
    // t'(j, i, k) = t(i, j, k)
    Tensor3 swap12() const;

    bool operator==(const Tensor3& o) const {
        return n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_ && a_ == o.a_;
    }

private:
    std::size_t n1_ = 0, n2_ = 0, n3_ = 0;
    std::vector<Scalar> a_;
};

Vector bilinear_apply(const Tensor3& t, const Vector& x, const Vector& y);

// Lazily filled, thread-safe table of powers of one invertible matrix.
class PowerCache {
public:
    explicit PowerCache(Matrix base);
    const Matrix& base() const { return base_; }
    const Matrix& power(int k) const;

private:
    Matrix base_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<Matrix>> cache_;
};

}  // namespace homhopf
