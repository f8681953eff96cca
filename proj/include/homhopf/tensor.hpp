#pragma once

// Elements of V_1 (x) ... (x) V_r, used to evaluate Sweedler-notation
// formulas leg by leg. Only nonzero coefficients are stored; the flat key
// is the row-major index over the legs.

#include <cstdint>
#include <map>
#include <vector>

#include "homhopf/exact.hpp"

namespace homhopf {

class Tensor {
public:
    using Index = std::vector<std::size_t>;

    Tensor() : Tensor(std::vector<std::size_t>{}) {}
    explicit Tensor(std::vector<std::size_t> dims);

    static Tensor basis(std::vector<std::size_t> dims, const Index& idx);
    static Tensor scalar(const Scalar& s);
    static Tensor from_vector(const Vector& v);

    std::size_t rank() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t leg) const { return dims_.at(leg); }
    const std::map<std::uint64_t, Scalar>& entries() const { return data_; }
    bool is_zero() const { return data_.empty(); }

    Scalar get(const Index& idx) const;
    void add(const Index& idx, const Scalar& c);

    // Linear map on one leg.
    Tensor apply(std::size_t leg, const Matrix& m) const;
    // Linear map on the two adjacent legs (leg, leg+1), output dims (d1, d2).
    Tensor apply2(std::size_t leg, const Matrix& m, std::size_t d1, std::size_t d2) const;
    // Replace one leg by two legs: e_i -> sum t(i, j, k) e_j (x) e_k.
    Tensor split(std::size_t leg, const Tensor3& t) const;
    // Replace legs (leg, leg+1) by one: e_i (x) e_j -> sum t(i, j, k) e_k.
    Tensor merge(std::size_t leg, const Tensor3& t) const;
    // Contract one leg against a linear form.
    Tensor evaluate(std::size_t leg, const Vector& form) const;
    // Contract two legs against a bilinear form gram(i_a, i_b).
    Tensor pair(std::size_t leg_a, std::size_t leg_b, const Matrix& gram) const;
    // New leg k is old leg order[k].
    Tensor permute(const std::vector<std::size_t>& order) const;
    Tensor outer(const Tensor& other) const;
    // Same row-major coefficients viewed with different leg dimensions.
    Tensor reshape(std::vector<std::size_t> dims) const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor scaled(const Scalar& c) const;

    // Dense row-major coefficient vector.
    Vector flatten() const;
    Scalar as_scalar() const;

    bool operator==(const Tensor& o) const { return dims_ == o.dims_ && data_ == o.data_; }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

private:
    Index decode(std::uint64_t key) const;
    std::uint64_t encode(const Index& idx) const;
    static std::uint64_t encode(const std::vector<std::size_t>& dims, const Index& idx);
    static void accumulate(std::map<std::uint64_t, Scalar>& acc, std::uint64_t key, const Scalar& c);
    static void prune(std::map<std::uint64_t, Scalar>& acc);

    std::vector<std::size_t> dims_;
    std::map<std::uint64_t, Scalar> data_;
};

// Componentwise product in the tensor-power algebra: (x1 (x) .. )(y1 (x) ..) = x1y1 (x) ...
Tensor componentwise_mul(const Tensor& x, const Tensor& y, const Tensor3& mul);

}  // namespace homhopf
