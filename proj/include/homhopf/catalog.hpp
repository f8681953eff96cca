#pragma once

// Built-in exact instances used as fixtures and as CLI inputs. Entries can be
// addressed by name, optionally with a parameter: "ax1", "cyclic:5".

#include <optional>
#include <string>
#include <vector>

#include "homhopf/structures.hpp"

namespace homhopf {

// Multiplication table of a finite group (table[g][h] = index of gh) together
// with an automorphism phi.
struct GroupData {
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> phi;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::string> basis;
    HomHopfAlgebra hopf;
    // Bundled bicrossproduct datum: partner acts on hopf, hopf coacts on partner.
    std::optional<HomHopfAlgebra> partner;
    std::optional<ModuleAction> action;
    std::optional<ComoduleCoaction> coaction;
    std::optional<RMatrix> rmatrix;
    std::optional<GroupData> group;
};

// 2-dim A^1_x: beta(x) = -x, 1x = x1 = -x, x^2 = 0, Delta(x) = -x (x) 1 - 1 (x) x,
// S(x) = -x. Bundled with the k[Z/2] action g.x = x and coaction rho(g) = g (x) 1.
CatalogEntry catalog_ax1();
// 4-dim Sweedler algebra with basis {1, g, x, gx} where gx is the product g.x.
CatalogEntry catalog_sweedler_hom();
// Yau twist of k[Z/n] by g^i -> g^-i.
CatalogEntry catalog_cyclic(std::size_t n);
// Classical k[Z/n] (structure map id).
CatalogEntry catalog_classical_cyclic(std::size_t n);
// kG with g.h = phi(gh), Delta(g) = phi(g) (x) phi(g), S(g) = g^-1.
CatalogEntry catalog_group(const std::vector<std::vector<std::size_t>>& table, const std::vector<std::size_t>& phi,
                           const std::string& name = "group");
// S3 twisted by conjugation with a transposition.
CatalogEntry catalog_s3();
CatalogEntry catalog_onedim();

CatalogEntry catalog_lookup(const std::string& key);
std::vector<std::string> catalog_names();

// Product, coproduct and antipode tables of the bicrossproduct A^1_x # k[Z/2]
// on the basis (1#1, 1#g, x#1, x#g), as printed.
struct Ex27Expected {
    std::vector<std::string> basis;
    Tensor3 mul;
    Tensor3 comul;
    Matrix antipode;
};
Ex27Expected catalog_ex27_expected();

// Closed forms for cyclic(n). Doubles live on H^op (x) H* with index i * n + j
// for g^i (x) e_j.
Tensor3 cyclic_double_product(std::size_t n);      // delta_{j,k} g^{n-(i+m)} (x) e_{n-k}
Tensor3 cyclic_heisenberg_product(std::size_t n);  // delta_{j+m,k} g^{n-(i+m)} (x) e_{n-k}
Matrix cyclic_sigma(std::size_t n);                // delta_{k,0} delta_{j,n-m}
Matrix cyclic_r_matrix(std::size_t n);             // sum_i 1 (x) e_{n-i} (x) g^-i (x) eps

}  // namespace homhopf
