#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homhopf/catalog.hpp"
#include "homhopf/errors.hpp"
#include "homhopf/exact.hpp"
#include "homhopf/tensor.hpp"

using namespace homhopf;

namespace {

Matrix diag(std::initializer_list<long> d) {
    Matrix m(d.size(), d.size());
    std::size_t i = 0;
    for (long x : d) m(i, i) = x, ++i;
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(num(rng), den(rng));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
    return m;
}

}  // namespace

TEST_CASE("scalars parse and print in canonical form") {
    CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
    CHECK(format_scalar(parse_scalar("-2/4")) == "-1/2");
    CHECK_THROWS(parse_scalar("2/-4"));
    CHECK(format_scalar(parse_scalar("0/7")) == "0");
    CHECK(format_scalar(parse_scalar("-3")) == "-3");
    CHECK(is_canonical(parse_scalar("10/4")));
    CHECK_THROWS(parse_scalar("1/0"));
    CHECK_THROWS(parse_scalar("abc"));
    CHECK_THROWS(parse_scalar(""));
}

TEST_CASE("large denominators stay exact") {
    Scalar s = 1;
    for (int i = 0; i < 200; ++i) s /= 3;
    for (int i = 0; i < 200; ++i) s *= 3;
    CHECK(s == 1);
    CHECK(is_canonical(s));
}

TEST_CASE("composition follows the row-image convention") {
    CHECK(mat_compose(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(2));
    // f(e0) = e1, g(e1) = 2 e0: f then g sends e0 to 2 e0
    Matrix f(2, 2), g(2, 2);
    f(0, 1) = 1;
    g(1, 0) = 2;
    Matrix fg = mat_compose(f, g);
    CHECK(fg(0, 0) == 2);
    CHECK(fg(1, 0) == 0);
    CHECK_THROWS_AS(mat_compose(Matrix(2, 3), Matrix(2, 2)), DimensionMismatch);

    const Matrix beta = catalog_ax1().hopf.alpha();
    CHECK(mat_compose(beta, beta) == Matrix::identity(2));
}

TEST_CASE("exact inverse and singular matrices") {
    CHECK(mat_inverse(Matrix::identity(3)) == Matrix::identity(3));
    Matrix m = Matrix::from_rows({{1, 1}, {0, 1}});
    CHECK(mat_inverse(m) == Matrix::from_rows({{1, -1}, {0, 1}}));
    try {
        mat_inverse(Matrix(2, 2));
        FAIL("expected Singular");
    } catch (const Singular& e) {
        CHECK(e.rank == 0);
    }
    try {
        mat_inverse(Matrix::from_rows({{1, 2}, {2, 4}}));
        FAIL("expected Singular");
    } catch (const Singular& e) {
        CHECK(e.rank == 1);
    }
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        Matrix r = random_matrix(rng, 4, 4);
        if (mat_rank(r) < 4) continue;
        Matrix inv = mat_inverse(r);
        CHECK(mat_compose(r, inv) == Matrix::identity(4));
        CHECK(mat_compose(inv, r) == Matrix::identity(4));
    }
}

TEST_CASE("alpha powers") {
    const Matrix beta = catalog_ax1().hopf.alpha();
    CHECK(alpha_power(beta, 2) == Matrix::identity(2));
    CHECK(alpha_power(beta, 0) == Matrix::identity(2));
    CHECK(alpha_power(Matrix::from_rows({{2, 1}, {0, 3}}), 0) == Matrix::identity(2));

    const Matrix phi = catalog_cyclic(3).hopf.alpha();
    CHECK(alpha_power(phi, -1) == phi);
    CHECK(phi(1, 2) == 1);
    CHECK(phi(0, 0) == 1);

    CHECK_THROWS_AS(alpha_power(Matrix(2, 2), -1), Singular);

    const Matrix m = Matrix::from_rows({{2, 1}, {0, Scalar(1, 3)}});
    PowerCache cache(m);
    for (int j = -7; j <= 7; ++j)
        for (int k = -7; k <= 7; ++k) CHECK(cache.power(j + k) == mat_compose(cache.power(j), cache.power(k)));
}

TEST_CASE("Kronecker products") {
    CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
    CHECK(kron(diag({1, -1}), Matrix::identity(2)) == diag({1, 1, -1, -1}));
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
        Matrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
        CHECK(mat_compose(kron(a, b), kron(c, d)) == kron(mat_compose(a, c), mat_compose(b, d)));
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
    // the flip sends e_i (x) e_j to e_j (x) e_i
    Matrix f = flip_matrix(2, 3);
    CHECK(f(0 * 3 + 2, 2 * 2 + 0) == 1);
    CHECK(mat_compose(f, flip_matrix(3, 2)) == Matrix::identity(6));
}

TEST_CASE("bilinear evaluation of structure constants") {
    const auto ax1 = catalog_ax1().hopf;
    const Vector one = Vector::basis(2, 0), x = Vector::basis(2, 1);
    CHECK(bilinear_apply(ax1.mul(), x, x).is_zero());
    CHECK(bilinear_apply(ax1.mul(), one, x) == ax1.alpha().transpose().apply(x));
    CHECK(bilinear_apply(ax1.mul(), one, x) == Vector{0, -1});

    const auto c3 = catalog_cyclic(3).hopf;
    CHECK(bilinear_apply(c3.mul(), Vector::basis(3, 1), Vector::basis(3, 1)) == Vector::basis(3, 1));
    CHECK_THROWS_AS(bilinear_apply(c3.mul(), Vector::basis(2, 0), Vector::basis(3, 0)), DimensionMismatch);
}

TEST_CASE("sparse multi-leg tensors") {
    const auto c3 = catalog_cyclic(3).hopf;
    Tensor g1 = Tensor::basis({3}, {1});
    Tensor d = g1.split(0, c3.comul());
    CHECK(d.dims() == std::vector<std::size_t>{3, 3});
    CHECK(d.get({2, 2}) == 1);
    CHECK(d.entries().size() == 1);
    Tensor m = d.merge(0, c3.mul());
    CHECK(m.get({2}) == 1);
    CHECK(d.permute({1, 0}) == d);
    Tensor o = Tensor::basis({3}, {0}).outer(Tensor::basis({3}, {2}));
    CHECK(o.get({0, 2}) == 1);
    CHECK(o.flatten() == Vector::basis(9, 2));
    CHECK(o.evaluate(0, c3.counit()).get({2}) == 1);
    CHECK(Tensor::scalar(5).as_scalar() == 5);
}
