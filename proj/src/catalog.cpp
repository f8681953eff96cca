#include "homhopf/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "homhopf/constructions.hpp"

namespace homhopf {

namespace {

using Entry3 = std::tuple<std::size_t, std::size_t, std::size_t, long>;
using Entry2 = std::tuple<std::size_t, std::size_t, long>;

Tensor3 tensor_of(std::size_t n, std::initializer_list<Entry3> entries) {
    Tensor3 t(n, n, n);
    for (const auto& [i, j, k, c] : entries) t(i, j, k) = c;
    return t;
}

Matrix matrix_of(std::size_t n, std::initializer_list<Entry2> entries) {
    Matrix m(n, n);
    for (const auto& [i, j, c] : entries) m(i, j) = c;
    return m;
}

Vector vector_of(std::initializer_list<long> xs) {
    Vector v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

HomHopfAlgebra hopf_of(Tensor3 mul, Vector unit, Tensor3 comul, Vector counit, const Matrix& alpha, Matrix S) {
    return HomHopfAlgebra(HomBialgebra(HomAlgebra(std::move(mul), std::move(unit), alpha),
                                       HomCoalgebra(std::move(comul), std::move(counit), alpha)),
                          std::move(S));
}

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::size_t neg(std::size_t i, std::size_t n) { return (n - i % n) % n; }

void require_cyclic_order(std::size_t n) {
    if (n < 2) throw InvalidParameter("cyclic group order must be at least 2");
}

}  // namespace

CatalogEntry catalog_ax1() {
    // basis 1, x
    HomHopfAlgebra A = hopf_of(tensor_of(2, {{0, 0, 0, 1}, {0, 1, 1, -1}, {1, 0, 1, -1}}), vector_of({1, 0}),
                               tensor_of(2, {{0, 0, 0, 1}, {1, 1, 0, -1}, {1, 0, 1, -1}}), vector_of({1, 0}),
                               matrix_of(2, {{0, 0, 1}, {1, 1, -1}}), matrix_of(2, {{0, 0, 1}, {1, 1, -1}}));
    CatalogEntry k2 = catalog_classical_cyclic(2);
    // 1.1 = 1, 1.x = -x, g.1 = 1, g.x = x
    Tensor3 act = tensor_of(2, {{0, 0, 0, 1}, {0, 1, 1, -1}, {1, 0, 0, 1}, {1, 1, 1, 1}});
    // rho(1) = 1 (x) 1, rho(g) = g (x) 1
    Tensor3 co = tensor_of(2, {{0, 0, 0, 1}, {1, 1, 0, 1}});
    CatalogEntry e{"ax1", {"1", "x"}, A, k2.hopf, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    e.action.emplace(k2.hopf.bialgebra(), A.bialgebra(), std::move(act));
    e.coaction.emplace(A.bialgebra(), k2.hopf.bialgebra(), std::move(co));
    return e;
}

CatalogEntry catalog_sweedler_hom() {
    // basis 1, g, x, gx
    Tensor3 mul = tensor_of(4, {{0, 0, 0, 1},  {0, 1, 1, 1},  {0, 2, 2, -1}, {0, 3, 3, -1},
                                {1, 0, 1, 1},  {1, 1, 0, 1},  {1, 2, 3, 1},  {1, 3, 2, 1},
                                {2, 0, 2, -1}, {2, 1, 3, -1}, {3, 0, 3, -1}, {3, 1, 2, -1}});
    Tensor3 comul = tensor_of(4, {{0, 0, 0, 1},
                                  {1, 1, 1, 1},
                                  {2, 2, 1, -1},
                                  {2, 0, 2, -1},
                                  {3, 3, 0, -1},
                                  {3, 1, 3, -1}});
    Matrix alpha = matrix_of(4, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}, {3, 3, -1}});
    Matrix S = matrix_of(4, {{0, 0, 1}, {1, 1, 1}, {2, 3, -1}, {3, 2, 1}});
    HomHopfAlgebra H = hopf_of(std::move(mul), vector_of({1, 0, 0, 0}), std::move(comul), vector_of({1, 1, 0, 0}),
                               alpha, std::move(S));
    // R = 1/2 (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g)
    Matrix R(4, 4);
    const Scalar half(1, 2);
    R(0, 0) = half;
    R(0, 1) = half;
    R(1, 0) = half;
    R(1, 1) = -half;
    CatalogEntry e{"sweedler_hom", {"1", "g", "x", "gx"}, H,           std::nullopt,
                   std::nullopt,   std::nullopt,           std::nullopt, std::nullopt};
    e.rmatrix.emplace(H.bialgebra(), std::move(R));
    return e;
}

CatalogEntry catalog_group(const std::vector<std::vector<std::size_t>>& table, const std::vector<std::size_t>& phi,
                           const std::string& name) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != n) throw NotAGroup("multiplication table is not square");
        for (std::size_t x : row)
            if (x >= n) throw NotAGroup("multiplication table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) throw NotAGroup("multiplication is not associative");
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
        if (ok) e = a;
    }
    if (e == n) throw NotAGroup("no identity element");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (std::find(inv.begin(), inv.end(), n) != inv.end()) throw NotAGroup("some element has no inverse");

    if (phi.size() != n) throw NotAnAutomorphism("automorphism has the wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t x : phi) {
        if (x >= n || seen[x]) throw NotAnAutomorphism("automorphism is not a permutation");
        seen[x] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (phi[table[a][b]] != table[phi[a]][phi[b]])
                throw NotAnAutomorphism("automorphism does not respect the product");

    Tensor3 mul(n, n, n), comul(n, n, n);
    Matrix alpha(n, n), S(n, n);
    Vector unit(n), counit(n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) mul(g, h, phi[table[g][h]]) = 1;
        comul(g, phi[g], phi[g]) = 1;
        alpha(g, phi[g]) = 1;
        S(g, inv[g]) = 1;
        counit[g] = 1;
    }
    unit[e] = 1;
    std::vector<std::string> basis;
    for (std::size_t g = 0; g < n; ++g) basis.push_back("g" + std::to_string(g));
    CatalogEntry out{name,         basis,        hopf_of(std::move(mul), unit, std::move(comul), counit, alpha, S),
                     std::nullopt, std::nullopt, std::nullopt,
                     std::nullopt, std::nullopt};
    out.group = GroupData{table, phi};
    return out;
}

CatalogEntry catalog_cyclic(std::size_t n) {
    require_cyclic_order(n);
    std::vector<std::size_t> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = neg(i, n);
    CatalogEntry e = catalog_group(cyclic_table(n), phi, "cyclic:" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) e.basis[i] = "g^" + std::to_string(i);
    return e;
}

CatalogEntry catalog_classical_cyclic(std::size_t n) {
    require_cyclic_order(n);
    std::vector<std::size_t> phi(n);
    std::iota(phi.begin(), phi.end(), 0);
    CatalogEntry e = catalog_group(cyclic_table(n), phi, "classical_cyclic:" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) e.basis[i] = "g^" + std::to_string(i);
    return e;
}

CatalogEntry catalog_s3() {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    auto index = [&](const std::array<std::size_t, 3>& q) {
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    auto compose = [&](std::size_t a, std::size_t b) {
        std::array<std::size_t, 3> q{};
        for (std::size_t i = 0; i < 3; ++i) q[i] = perms[a][perms[b][i]];
        return index(q);
    };
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = compose(a, b);
    // conjugation by the transposition perms[1] (an involution)
    std::vector<std::size_t> phi(n);
    for (std::size_t a = 0; a < n; ++a) phi[a] = compose(compose(1, a), 1);
    CatalogEntry e = catalog_group(table, phi, "s3");
    for (std::size_t a = 0; a < n; ++a)
        e.basis[a] = "p" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]);
    return e;
}

CatalogEntry catalog_onedim() {
    HomHopfAlgebra H = hopf_of(tensor_of(1, {{0, 0, 0, 1}}), vector_of({1}), tensor_of(1, {{0, 0, 0, 1}}),
                               vector_of({1}), Matrix::identity(1), Matrix::identity(1));
    return CatalogEntry{"onedim", {"1"}, H, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
}

std::vector<std::string> catalog_names() {
    return {"ax1", "sweedler_hom", "cyclic:N", "classical_cyclic:N", "s3", "onedim"};
}

CatalogEntry catalog_lookup(const std::string& key) {
    const auto colon = key.find(':');
    const std::string name = key.substr(0, colon);
    std::optional<std::size_t> param;
    if (colon != std::string::npos) {
        const std::string p = key.substr(colon + 1);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
        if (p.empty() || ec != std::errc() || ptr != p.data() + p.size())
            throw InvalidParameter("bad catalog parameter in '" + key + "'");
        param = v;
    }
    auto no_param = [&]() {
        if (param) throw InvalidParameter("catalog entry '" + name + "' takes no parameter");
    };
    if (name == "ax1") return no_param(), catalog_ax1();
    if (name == "sweedler_hom") return no_param(), catalog_sweedler_hom();
    if (name == "s3") return no_param(), catalog_s3();
    if (name == "onedim") return no_param(), catalog_onedim();
    if (name == "cyclic") return catalog_cyclic(param.value_or(3));
    if (name == "classical_cyclic") return catalog_classical_cyclic(param.value_or(2));
    throw InvalidParameter("unknown catalog entry '" + key + "'");
}

Ex27Expected catalog_ex27_expected() {
    // 0 = 1#1, 1 = 1#g, 2 = x#1, 3 = x#g
    Tensor3 mul = tensor_of(4, {{0, 0, 0, 1},  {0, 1, 1, 1},  {0, 2, 2, -1}, {0, 3, 3, -1},
                                {1, 0, 1, 1},  {1, 1, 0, 1},  {1, 2, 3, 1},  {1, 3, 2, 1},
                                {2, 0, 2, -1}, {2, 1, 3, -1}, {3, 0, 3, -1}, {3, 1, 2, -1}});
    Tensor3 comul = tensor_of(4, {{0, 0, 0, 1},
                                  {1, 1, 1, 1},
                                  {2, 2, 0, -1},
                                  {2, 0, 2, -1},
                                  {3, 1, 3, 1},
                                  {3, 3, 1, -1}});
    Matrix S = matrix_of(4, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}, {3, 3, 1}});
    return Ex27Expected{{"1#1", "1#g", "x#1", "x#g"}, std::move(mul), std::move(comul), std::move(S)};
}

Tensor3 cyclic_double_product(std::size_t n) {
    require_cyclic_order(n);
    const std::size_t N = n * n;
    Tensor3 t(N, N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) t(i * n + j, m * n + j, neg(i + m, n) * n + neg(j, n)) = 1;
    return t;
}

Tensor3 cyclic_heisenberg_product(std::size_t n) {
    require_cyclic_order(n);
    const std::size_t N = n * n;
    Tensor3 t(N, N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const std::size_t k = (j + m) % n;
                t(i * n + j, m * n + k, neg(i + m, n) * n + neg(k, n)) = 1;
            }
    return t;
}

Matrix cyclic_sigma(std::size_t n) {
    require_cyclic_order(n);
    Matrix s(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m) s(i * n + neg(m, n), m * n + 0) = 1;
    return s;
}

Matrix cyclic_r_matrix(std::size_t n) {
    require_cyclic_order(n);
    Matrix r(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) r(0 * n + neg(i, n), neg(i, n) * n + k) = 1;
    return r;
}

}  // namespace homhopf
