#include "homhopf/tensor.hpp"

#include <numeric>

namespace homhopf {

namespace {

void check_leg(const Tensor& t, std::size_t leg, std::size_t expected) {
    if (leg >= t.rank()) throw DimensionMismatch("tensor leg out of range");
    if (t.dim(leg) != expected) throw DimensionMismatch("tensor leg dimension mismatch");
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (auto d : dims_)
        if (d == 0) throw DimensionMismatch("tensor legs must be nonempty");
}

Tensor Tensor::basis(std::vector<std::size_t> dims, const Index& idx) {
    Tensor t(std::move(dims));
    t.add(idx, 1);
    return t;
}

Tensor Tensor::scalar(const Scalar& s) {
    Tensor t;
    if (sgn(s) != 0) t.data_.emplace(0, s);
    return t;
}

Tensor Tensor::from_vector(const Vector& v) {
    Tensor t({v.size()});
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) t.data_.emplace(i, v[i]);
    return t;
}

std::uint64_t Tensor::encode(const std::vector<std::size_t>& dims, const Index& idx) {
    std::uint64_t key = 0;
    for (std::size_t l = 0; l < dims.size(); ++l) key = key * dims[l] + idx[l];
    return key;
}

std::uint64_t Tensor::encode(const Index& idx) const { return encode(dims_, idx); }

Tensor::Index Tensor::decode(std::uint64_t key) const {
    Index idx(dims_.size());
    for (std::size_t l = dims_.size(); l-- > 0;) {
        idx[l] = key % dims_[l];
        key /= dims_[l];
    }
    return idx;
}

void Tensor::accumulate(std::map<std::uint64_t, Scalar>& acc, std::uint64_t key, const Scalar& c) {
    auto [it, fresh] = acc.try_emplace(key, c);
    if (!fresh) it->second += c;
}

void Tensor::prune(std::map<std::uint64_t, Scalar>& acc) {
    for (auto it = acc.begin(); it != acc.end();) {
        if (sgn(it->second) == 0)
            it = acc.erase(it);
        else
            ++it;
    }
}

Scalar Tensor::get(const Index& idx) const {
    auto it = data_.find(encode(idx));
    return it == data_.end() ? Scalar(0) : it->second;
}

void Tensor::add(const Index& idx, const Scalar& c) {
    if (idx.size() != dims_.size()) throw DimensionMismatch("index rank mismatch");
    for (std::size_t l = 0; l < idx.size(); ++l)
        if (idx[l] >= dims_[l]) throw DimensionMismatch("index out of range");
    if (sgn(c) == 0) return;
    auto key = encode(idx);
    accumulate(data_, key, c);
    if (sgn(data_[key]) == 0) data_.erase(key);
}

Tensor Tensor::apply(std::size_t leg, const Matrix& m) const {
    check_leg(*this, leg, m.rows());
    auto dims = dims_;
    dims[leg] = m.cols();
    Tensor out(dims);
    for (const auto& [key, c] : data_) {
        Index idx = decode(key);
        const std::size_t i = idx[leg];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& v = m(i, j);
            if (sgn(v) == 0) continue;
            idx[leg] = j;
            accumulate(out.data_, encode(dims, idx), c * v);
        }
    }
    prune(out.data_);
    return out;
}

Tensor Tensor::apply2(std::size_t leg, const Matrix& m, std::size_t d1, std::size_t d2) const {
    if (leg + 1 >= rank()) throw DimensionMismatch("apply2 needs two legs");
    if (dims_[leg] * dims_[leg + 1] != m.rows() || d1 * d2 != m.cols())
        throw DimensionMismatch("apply2: matrix shape mismatch");
    std::vector<std::size_t> dims = dims_;
    dims[leg] = d1;
    dims[leg + 1] = d2;
    Tensor out(dims);
    for (const auto& [key, c] : data_) {
        Index idx = decode(key);
        const std::size_t row = idx[leg] * dims_[leg + 1] + idx[leg + 1];
        for (std::size_t p = 0; p < m.cols(); ++p) {
            const Scalar& v = m(row, p);
            if (sgn(v) == 0) continue;
            idx[leg] = p / d2;
            idx[leg + 1] = p % d2;
            accumulate(out.data_, encode(dims, idx), c * v);
        }
    }
    prune(out.data_);
    return out;
}

Tensor Tensor::split(std::size_t leg, const Tensor3& t) const {
    check_leg(*this, leg, t.dim1());
    std::vector<std::size_t> dims(dims_.begin(), dims_.begin() + leg);
    dims.push_back(t.dim2());
    dims.push_back(t.dim3());
    dims.insert(dims.end(), dims_.begin() + leg + 1, dims_.end());
    Tensor out(dims);
    for (const auto& [key, c] : data_) {
        Index idx = decode(key);
        Index nidx(idx.begin(), idx.begin() + leg);
        nidx.push_back(0);
        nidx.push_back(0);
        nidx.insert(nidx.end(), idx.begin() + leg + 1, idx.end());
        const std::size_t i = idx[leg];
        for (std::size_t j = 0; j < t.dim2(); ++j)
            for (std::size_t k = 0; k < t.dim3(); ++k) {
                const Scalar& v = t(i, j, k);
                if (sgn(v) == 0) continue;
                nidx[leg] = j;
                nidx[leg + 1] = k;
                accumulate(out.data_, encode(dims, nidx), c * v);
            }
    }
    prune(out.data_);
    return out;
}

Tensor Tensor::merge(std::size_t leg, const Tensor3& t) const {
    if (leg + 1 >= rank()) throw DimensionMismatch("merge needs two legs");
    check_leg(*this, leg, t.dim1());
    check_leg(*this, leg + 1, t.dim2());
    std::vector<std::size_t> dims(dims_.begin(), dims_.begin() + leg);
    dims.push_back(t.dim3());
    dims.insert(dims.end(), dims_.begin() + leg + 2, dims_.end());
    Tensor out(dims);
    for (const auto& [key, c] : data_) {
        Index idx = decode(key);
        const std::size_t i = idx[leg], j = idx[leg + 1];
        Index nidx(idx.begin(), idx.begin() + leg);
        nidx.push_back(0);
        nidx.insert(nidx.end(), idx.begin() + leg + 2, idx.end());
        for (std::size_t k = 0; k < t.dim3(); ++k) {
            const Scalar& v = t(i, j, k);
            if (sgn(v) == 0) continue;
            nidx[leg] = k;
            accumulate(out.data_, encode(dims, nidx), c * v);
        }
    }
    prune(out.data_);
    return out;
}

Tensor Tensor::evaluate(std::size_t leg, const Vector& form) const {
    check_leg(*this, leg, form.size());
    std::vector<std::size_t> dims = dims_;
    dims.erase(dims.begin() + leg);
    Tensor out(dims);
    for (const auto& [key, c] : data_) {
        Index idx = decode(key);
        const Scalar& v = form[idx[leg]];
        if (sgn(v) == 0) continue;
        idx.erase(idx.begin() + leg);
        accumulate(out.data_, encode(dims, idx), c * v);
    }
    prune(out.data_);
    return out;
}

Tensor Tensor::pair(std::size_t leg_a, std::size_t leg_b, const Matrix& gram) const {
    if (leg_a == leg_b) throw DimensionMismatch("pair needs two distinct legs");
    check_leg(*this, leg_a, gram.rows());
    check_leg(*this, leg_b, gram.cols());
    std::vector<std::size_t> dims;
    for (std::size_t l = 0; l < rank(); ++l)
        if (l != leg_a && l != leg_b) dims.push_back(dims_[l]);
    Tensor out(dims);
    for (const auto& [key, c] : data_) {
        Index idx = decode(key);
        const Scalar& v = gram(idx[leg_a], idx[leg_b]);
        if (sgn(v) == 0) continue;
        Index nidx;
        for (std::size_t l = 0; l < rank(); ++l)
            if (l != leg_a && l != leg_b) nidx.push_back(idx[l]);
        accumulate(out.data_, encode(dims, nidx), c * v);
    }
    prune(out.data_);
    return out;
}

Tensor Tensor::permute(const std::vector<std::size_t>& order) const {
    if (order.size() != rank()) throw DimensionMismatch("permutation rank mismatch");
    std::vector<std::size_t> dims(rank());
    std::vector<bool> seen(rank(), false);
    for (std::size_t k = 0; k < rank(); ++k) {
        if (order[k] >= rank() || seen[order[k]]) throw DimensionMismatch("not a permutation");
        seen[order[k]] = true;
        dims[k] = dims_[order[k]];
    }
    Tensor out(dims);
    for (const auto& [key, c] : data_) {
        Index idx = decode(key), nidx(rank());
        for (std::size_t k = 0; k < rank(); ++k) nidx[k] = idx[order[k]];
        out.data_.emplace(encode(dims, nidx), c);
    }
    return out;
}

Tensor Tensor::outer(const Tensor& other) const {
    std::vector<std::size_t> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    std::uint64_t stride = 1;
    for (auto d : other.dims_) stride *= d;
    Tensor out(dims);
    for (const auto& [k1, c1] : data_)
        for (const auto& [k2, c2] : other.data_) out.data_.emplace(k1 * stride + k2, c1 * c2);
    return out;
}

Tensor Tensor::reshape(std::vector<std::size_t> dims) const {
    auto total = [](const std::vector<std::size_t>& d) {
        return std::accumulate(d.begin(), d.end(), std::uint64_t{1}, std::multiplies<>());
    };
    if (total(dims) != total(dims_)) throw DimensionMismatch("reshape changes the total size");
    Tensor out(std::move(dims));
    out.data_ = data_;
    return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (dims_ != o.dims_) throw DimensionMismatch("tensor shapes differ");
    for (const auto& [k, c] : o.data_) accumulate(data_, k, c);
    prune(data_);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    if (dims_ != o.dims_) throw DimensionMismatch("tensor shapes differ");
    for (const auto& [k, c] : o.data_) accumulate(data_, k, -c);
    prune(data_);
    return *this;
}

Tensor Tensor::scaled(const Scalar& c) const {
    Tensor out(dims_);
    if (sgn(c) == 0) return out;
    for (const auto& [k, v] : data_) out.data_.emplace(k, v * c);
    return out;
}

Vector Tensor::flatten() const {
    std::size_t n = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
    Vector v(n);
    for (const auto& [k, c] : data_) v[k] = c;
    return v;
}

Scalar Tensor::as_scalar() const {
    if (rank() != 0) throw DimensionMismatch("tensor is not a scalar");
    return data_.empty() ? Scalar(0) : data_.begin()->second;
}

Tensor componentwise_mul(const Tensor& x, const Tensor& y, const Tensor3& mul) {
    if (x.rank() != y.rank()) throw DimensionMismatch("componentwise product rank mismatch");
    const std::size_t r = x.rank();
    Tensor t = x.outer(y);
    std::vector<std::size_t> order;
    for (std::size_t l = 0; l < r; ++l) {
        order.push_back(l);
        order.push_back(r + l);
    }
    t = t.permute(order);
    for (std::size_t l = 0; l < r; ++l) t = t.merge(l, mul);
    return t;
}

}  // namespace homhopf
