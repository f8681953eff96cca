#include "homhopf/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace homhopf {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

void require_dims(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string format_scalar(const Scalar& s) { return s.get_str(10); }

bool is_canonical(const Scalar& s) {
    if (sgn(s.get_den()) <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return s.get_num() == 0 ? s.get_den() == 1 : g == 1;
}

Vector Vector::basis(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v[i] = 1;
    return v;
}

bool Vector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector& Vector::operator+=(const Vector& o) {
    require_dims(size() == o.size(), "vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require_dims(size() == o.size(), "vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
    for (auto& x : v_) x *= c;
    return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(const Scalar& c, Vector v) { return v *= c; }

Scalar dot(const Vector& a, const Vector& b) {
    require_dims(a.size() == b.size(), "vector sizes differ");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) s += a[i] * b[i];
    return s;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_dims(rows[i].size() == c, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vector Matrix::apply(const Vector& v) const {
    require_dims(v.size() == rows_, "matrix/vector dimension mismatch");
    Vector out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0) out[j] += v[i] * (*this)(i, j);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Matrix mat_compose(const Matrix& f, const Matrix& g) {
    require_dims(f.cols() == g.rows(), "compose: f.cols != g.rows");
    Matrix out(f.rows(), g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t k = 0; k < f.cols(); ++k) {
            const Scalar& a = f(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (sgn(g(k, j)) != 0) out(i, j) += a * g(k, j);
        }
    return out;
}

std::size_t mat_rank(const Matrix& m) {
    Matrix a = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (sgn(a(r, c)) == 0) continue;
            Scalar f = a(r, c) / a(rank, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

Matrix mat_inverse(const Matrix& m) {
    if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    // Clear denominators row by row: A = D m with D diagonal, so m^-1 = A^-1 D.
    std::vector<mpz_class> scale(n, 1);
    std::vector<mpz_class> a(n * 2 * n);
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * 2 * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).get_num() * (scale[i] / m(i, j).get_den());
        at(i, n + i) = 1;
    }
    // Fraction-free Gauss-Jordan: every division below is exact.
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) throw Singular("matrix is singular", mat_rank(m));
        if (p != k)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(k, j));
        const mpz_class pivot = at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const mpz_class f = at(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                mpz_class v = pivot * at(i, j) - f * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = v;
            }
        }
        prev = pivot;
    }
    // Left block is det * I now; right block is det * (D m)^-1 = det * m^-1 D^-1.
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar v(at(i, n + j) * scale[j], at(i, i));
            v.canonicalize();
            inv(i, j) = v;
        }
    return inv;
}

Matrix alpha_power(const Matrix& alpha, int k) {
    if (!alpha.square()) throw DimensionMismatch("power of a non-square matrix");
    Matrix base = k < 0 ? mat_inverse(alpha) : alpha;
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    Matrix result = Matrix::identity(alpha.rows());
    while (e) {
        if (e & 1u) result = mat_compose(result, base);
        e >>= 1;
        if (e) base = mat_compose(base, base);
    }
    return result;
}

Matrix kron(const Matrix& f, const Matrix& g) {
    Matrix out(f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            if (sgn(f(i, j)) == 0) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l)
                    if (sgn(g(k, l)) != 0) out(i * g.rows() + k, j * g.cols() + l) = f(i, j) * g(k, l);
        }
    return out;
}

Vector kron(const Vector& x, const Vector& y) {
    Vector out(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
    }
    return out;
}

Matrix flip_matrix(std::size_t n1, std::size_t n2) {
    Matrix p(n1 * n2, n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) p(i * n2 + j, j * n1 + i) = 1;
    return p;
}

Vector Tensor3::slice(std::size_t i, std::size_t j) const {
    Vector v(n3_);
    for (std::size_t k = 0; k < n3_; ++k) v[k] = (*this)(i, j, k);
    return v;
}

void Tensor3::set_slice(std::size_t i, std::size_t j, const Vector& v) {
    require_dims(v.size() == n3_, "slice length mismatch");
    for (std::size_t k = 0; k < n3_; ++k) (*this)(i, j, k) = v[k];
}

Matrix Tensor3::as_matrix() const {
    Matrix m(n1_, n2_ * n3_);
    for (std::size_t i = 0; i < n1_; ++i)
        for (std::size_t p = 0; p < n2_ * n3_; ++p) m(i, p) = a_[i * n2_ * n3_ + p];
    return m;
}

Tensor3 Tensor3::from_matrix(const Matrix& m, std::size_t n2, std::size_t n3) {
    require_dims(m.cols() == n2 * n3, "matrix columns do not factor");
    Tensor3 t(m.rows(), n2, n3);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t p = 0; p < n2 * n3; ++p) t.a_[i * n2 * n3 + p] = m(i, p);
    return t;
}

Tensor3 Tensor3::swap12() const {
    Tensor3 t(n2_, n1_, n3_);
    for (std::size_t i = 0; i < n1_; ++i)
        for (std::size_t j = 0; j < n2_; ++j)
            for (std::size_t k = 0; k < n3_; ++k) t(j, i, k) = (*this)(i, j, k);
    return t;
}

Vector bilinear_apply(const Tensor3& t, const Vector& x, const Vector& y) {
    require_dims(x.size() == t.dim1() && y.size() == t.dim2(), "bilinear_apply: dimension mismatch");
    Vector out(t.dim3());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (sgn(y[j]) == 0) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < t.dim3(); ++k)
                if (sgn(t(i, j, k)) != 0) out[k] += c * t(i, j, k);
        }
    }
    return out;
}

PowerCache::PowerCache(Matrix base) : base_(std::move(base)) {
    if (!base_.square()) throw DimensionMismatch("structure map must be square");
    cache_.emplace(0, std::make_unique<Matrix>(Matrix::identity(base_.rows())));
    cache_.emplace(1, std::make_unique<Matrix>(base_));
}

const Matrix& PowerCache::power(int k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return *it->second;
    if (k < 0 && !cache_.count(-1)) cache_.emplace(-1, std::make_unique<Matrix>(mat_inverse(base_)));
    const int step = k < 0 ? -1 : 1;
    int have = step;
    while (cache_.count(have + step) && have != k) have += step;
    while (have != k) {
        Matrix next = mat_compose(*cache_.at(have), *cache_.at(step));
        have += step;
        cache_.emplace(have, std::make_unique<Matrix>(std::move(next)));
    }
    return *cache_.at(k);
}

}  // namespace homhopf
