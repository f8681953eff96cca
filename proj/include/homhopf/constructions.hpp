#pragma once

// Derived objects: opposites, duals, Yau twists, smash products and
// bicrossproducts, double crossed products, Drinfel'd and Heisenberg doubles,
// and cocycle twists. Tensor factor orders are fixed per construction:
//   drinfeld_double(H)       H^op (x) H*
//   drinfeld_double_tilde(A) (A^op)* (x) A
//   heisenberg_double(A)     A (x) A*
//   dual_pair_double(P)      A (x) B
//   bicrossproduct(A, H)     A (x) H
// Pairs are flattened row-major, so basis element (i, j) has index i * n2 + j.

#include <string>

#include "homhopf/structures.hpp"

namespace homhopf {

struct BuildOptions {
    // Skip precondition verification; the output is then unvalidated.
    bool force = false;
};

HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const Matrix& endo);

// Reversed multiplication; comultiplication, structure map and S unchanged.
HomHopfAlgebra opposite(const HomHopfAlgebra& H);
// Reversed multiplication with antipode S^{-1}.
HomHopfAlgebra opposite_hopf(const HomHopfAlgebra& H);
HomHopfAlgebra dual(const HomHopfAlgebra& H);

// Actions of H on H*: <f <- h, k> = <f, h a^-2(k)>, <h -> f, k> = <f, a^-2(k) h>.
// Both tensors are indexed (h, f, g): coefficient of e^g.
struct HarpoonContext {
    explicit HarpoonContext(const HomHopfAlgebra& H);
    HomHopfAlgebra host;
    Tensor3 left;
    Tensor3 right;
};

HomAlgebra smash_product(const HomAlgebra& A, const HomBialgebra& H, const ModuleAction& act,
                         BuildOptions opts = {});
// phi: C (x) D -> D (x) C
HomCoalgebra cotwist_coproduct(const HomCoalgebra& C, const HomCoalgebra& D, const Matrix& phi,
                               BuildOptions opts = {});
// For a coaction of H on C, the map H (x) C -> C (x) H.
Matrix comodule_cotwist(const ComoduleCoaction& co, BuildOptions opts = {});

// act: H acts on A; co: A coacts on H (rho: H -> H (x) A).
CheckReport bicrossproduct_hypotheses(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ModuleAction& act,
                                      const ComoduleCoaction& co);
HomHopfAlgebra bicrossproduct(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ModuleAction& act,
                              const ComoduleCoaction& co, BuildOptions opts = {});

// Action of H^op on H and coaction of H on H^op used for H (x) H^op.
ModuleAction self_action(const HomHopfAlgebra& H);
ComoduleCoaction self_coaction(const HomHopfAlgebra& H);
struct SelfBicross {
    HomHopfAlgebra hopf;
    CheckReport cross_check;
};
SelfBicross self_bicross(const HomHopfAlgebra& H, BuildOptions opts = {});

HomHopfAlgebra double_cross_product(const MatchedPairData& mp, BuildOptions opts = {});
// Matched pair (H, A*) induced by a bicrossproduct datum.
MatchedPairData dual_matched_pair(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ModuleAction& act,
                                  const ComoduleCoaction& co, BuildOptions opts = {});

HomHopfAlgebra drinfeld_double(const HomHopfAlgebra& H);
RMatrix canonical_r_matrix(const HomHopfAlgebra& H);

// (H^op, (H^op)*) with the evaluation form.
PairingForm evaluation_pairing(const HomHopfAlgebra& H);
struct DualPairDouble {
    HomHopfAlgebra hopf;
    Matrix twisting;  // B (x) A -> A (x) B
    Matrix r1, r2;
    // Embedding identities and the comparison of the closed-form inverses.
    CheckReport report;
};
DualPairDouble dual_pair_double(const PairingForm& P, BuildOptions opts = {});

HomAlgebra heisenberg_double(const HomHopfAlgebra& A);
HomBialgebra drinfeld_double_tilde(const HomHopfAlgebra& A);

HomAlgebra cocycle_twist(const HomBialgebra& B, const TwoCocycle& sigma, BuildOptions opts = {});
struct CanonicalCocycles {
    TwoCocycle sigma;  // left, on drinfeld_double(A)
    TwoCocycle eta;    // right, on drinfeld_double_tilde(A)
};
CanonicalCocycles canonical_cocycles(const HomHopfAlgebra& A);
// sigma(h (x) f, k (x) g) = eps(h) g(1) <f, alpha(k)>
Matrix sigma_form(const HomHopfAlgebra& A);
// eta(f (x) a, g (x) b) = eps(b) f(1) <g, alpha(a)>
Matrix eta_form(const HomHopfAlgebra& A);

// Tabulates a bilinear map on V = V_1 (x) ... (x) V_r. The callback gets a
// basis element of V (x) V as a 2r-leg tensor and returns an element of V.
Tensor3 product_table(const std::vector<std::size_t>& legs, const std::function<Tensor(const Tensor&)>& f);
// The callback gets a basis element of V and returns an element of V (x) V.
Tensor3 coproduct_table(const std::vector<std::size_t>& legs, const std::function<Tensor(const Tensor&)>& f);
// The callback gets a basis element of V and returns an element of W.
Matrix map_table(const std::vector<std::size_t>& legs, std::size_t out_dim,
                 const std::function<Tensor(const Tensor&)>& f);

}  // namespace homhopf
