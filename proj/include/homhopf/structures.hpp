#pragma once

// Hom-algebraic objects given by structure constants, and their axiom
// checkers. Every checker sweeps basis multi-indices in lexicographic order
// and records the first failing index together with both sides.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homhopf/exact.hpp"
#include "homhopf/tensor.hpp"

namespace homhopf {

class HomAlgebra {
public:
    HomAlgebra(Tensor3 mul, Vector unit, Matrix alpha);

    std::size_t dim() const { return unit_.size(); }
    const Tensor3& mul() const { return mul_; }
    const Vector& unit() const { return unit_; }
    const Matrix& alpha() const { return powers_->base(); }
    const Matrix& alpha_pow(int k) const { return powers_->power(k); }
    Vector product(const Vector& x, const Vector& y) const { return bilinear_apply(mul_, x, y); }

private:
    Tensor3 mul_;
    Vector unit_;
    std::shared_ptr<PowerCache> powers_;
};

class HomCoalgebra {
public:
    HomCoalgebra(Tensor3 comul, Vector counit, Matrix alpha);

    std::size_t dim() const { return counit_.size(); }
    const Tensor3& comul() const { return comul_; }
    const Vector& counit() const { return counit_; }
    const Matrix& alpha() const { return powers_->base(); }
    const Matrix& alpha_pow(int k) const { return powers_->power(k); }

private:
    Tensor3 comul_;
    Vector counit_;
    std::shared_ptr<PowerCache> powers_;
};

class HomBialgebra {
public:
    HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra);

    const HomAlgebra& algebra() const { return algebra_; }
    const HomCoalgebra& coalgebra() const { return coalgebra_; }
    std::size_t dim() const { return algebra_.dim(); }
    const Tensor3& mul() const { return algebra_.mul(); }
    const Vector& unit() const { return algebra_.unit(); }
    const Tensor3& comul() const { return coalgebra_.comul(); }
    const Vector& counit() const { return coalgebra_.counit(); }
    const Matrix& alpha() const { return algebra_.alpha(); }
    const Matrix& alpha_pow(int k) const { return algebra_.alpha_pow(k); }
    Vector product(const Vector& x, const Vector& y) const { return algebra_.product(x, y); }

private:
    HomAlgebra algebra_;
    HomCoalgebra coalgebra_;
};

class HomHopfAlgebra {
public:
    HomHopfAlgebra(HomBialgebra bialgebra, Matrix antipode);

    const HomBialgebra& bialgebra() const { return bialgebra_; }
    const HomAlgebra& algebra() const { return bialgebra_.algebra(); }
    const HomCoalgebra& coalgebra() const { return bialgebra_.coalgebra(); }
    std::size_t dim() const { return bialgebra_.dim(); }
    const Tensor3& mul() const { return bialgebra_.mul(); }
    const Vector& unit() const { return bialgebra_.unit(); }
    const Tensor3& comul() const { return bialgebra_.comul(); }
    const Vector& counit() const { return bialgebra_.counit(); }
    const Matrix& alpha() const { return bialgebra_.alpha(); }
    const Matrix& alpha_pow(int k) const { return bialgebra_.alpha_pow(k); }
    const Matrix& antipode() const { return antipode_->base(); }
    // Throws Singular when S is not invertible.
    const Matrix& antipode_inverse() const { return antipode_->power(-1); }
    Vector product(const Vector& x, const Vector& y) const { return bialgebra_.product(x, y); }

private:
    HomBialgebra bialgebra_;
    std::shared_ptr<PowerCache> antipode_;
};

// act(h, m, m') : h . e_m = sum act(h, m, m') e_m'
struct ModuleAction {
    ModuleAction(HomBialgebra actor, HomBialgebra carrier, Tensor3 act);
    HomBialgebra actor;
    HomBialgebra carrier;
    Tensor3 act;
};

// coact(m, m', h) : rho(e_m) = sum coact(m, m', h) e_m' (x) e_h
struct ComoduleCoaction {
    ComoduleCoaction(HomBialgebra coactor, HomBialgebra carrier, Tensor3 coact);
    HomBialgebra coactor;
    HomBialgebra carrier;
    Tensor3 coact;
};

// coact(m, h, m') : lambda(e_m) = sum coact(m, h, m') e_h (x) e_m'
struct LeftComoduleCoaction {
    LeftComoduleCoaction(HomBialgebra coactor, HomBialgebra carrier, Tensor3 coact);
    HomBialgebra coactor;
    HomBialgebra carrier;
    Tensor3 coact;
};

struct PairingForm {
    PairingForm(HomHopfAlgebra left, HomHopfAlgebra right, Matrix gram);
    HomHopfAlgebra left;
    HomHopfAlgebra right;
    Matrix gram;
};

enum class Side { left, right };
std::string to_string(Side s);
Side parse_side(const std::string& s);

struct TwoCocycle {
    TwoCocycle(HomBialgebra algebra, Matrix gram, Side side);
    HomBialgebra algebra;
    Matrix gram;
    Side side;
};

struct RMatrix {
    RMatrix(HomBialgebra host, Matrix entries);
    HomBialgebra host;
    Matrix entries;
};

// H acts on A from the left (left_action: H x A -> A) and A acts on H from
// the right (right_action: H x A -> H).
struct MatchedPairData {
    MatchedPairData(HomHopfAlgebra A, HomHopfAlgebra H, Tensor3 left_action, Tensor3 right_action);
    HomHopfAlgebra A;
    HomHopfAlgebra H;
    Tensor3 left_action;
    Tensor3 right_action;
};

struct Witness {
    std::vector<std::size_t> index;
    Vector lhs;
    Vector rhs;
};

struct CheckEntry {
    std::string id;
    bool passed = true;
    std::optional<Witness> witness;
};

struct CheckReport {
    std::vector<CheckEntry> checks;
    std::vector<std::string> notes;

    bool passed() const;
    std::size_t failures() const;
    const CheckEntry* find(const std::string& id) const;
    void add(CheckEntry e) { checks.push_back(std::move(e)); }
    void append(const CheckReport& other);
    std::string summary() const;
};

struct PreconditionFailed : Error {
    PreconditionFailed(const std::string& what, CheckReport r) : Error(what), report(std::move(r)) {}
    CheckReport report;
};

struct HypothesisFailed : Error {
    HypothesisFailed(const std::string& what, CheckReport r) : Error(what), report(std::move(r)) {}
    CheckReport report;
};

// Number of worker threads used by basis sweeps. Results never depend on it.
void set_sweep_jobs(unsigned jobs);
unsigned sweep_jobs();

using SweepBody = std::function<std::pair<Tensor, Tensor>(const std::vector<std::size_t>&)>;
// Compares both sides at every multi-index of the given shape and keeps the
// lexicographically first mismatch.
CheckEntry sweep(const std::string& id, const std::vector<std::size_t>& dims, const SweepBody& body);

// R as a two-leg tensor.
Tensor as_tensor(const Matrix& m);
Tensor as_tensor(const Vector& v);

CheckReport check_hom_algebra(const HomAlgebra& A);
CheckReport check_hom_coalgebra(const HomCoalgebra& C);
CheckReport check_hom_bialgebra(const HomBialgebra& B);
CheckReport check_antipode(const HomHopfAlgebra& H);
// Algebra, coalgebra, bialgebra and antipode checks in one report.
CheckReport check_hopf_suite(const HomHopfAlgebra& H);
CheckReport check_bialgebra_suite(const HomBialgebra& B);

CheckReport check_module(const ModuleAction& m);
CheckReport check_module_algebra(const ModuleAction& m);
CheckReport check_module_coalgebra(const ModuleAction& m);
CheckReport check_comodule(const ComoduleCoaction& c);
CheckReport check_comodule_coalgebra(const ComoduleCoaction& c);
CheckReport check_left_comodule(const LeftComoduleCoaction& c);

// phi: C (x) D -> D (x) C
CheckReport check_cotwisting(const HomCoalgebra& C, const HomCoalgebra& D, const Matrix& phi);
// t: B (x) A -> A (x) B
CheckReport check_twisting(const HomAlgebra& A, const HomAlgebra& B, const Matrix& t);
CheckReport check_matched_pair(const MatchedPairData& mp);
CheckReport check_dual_pair(const PairingForm& p);
CheckReport check_cocycle(const TwoCocycle& sigma);
CheckReport check_quasitriangular(const HomBialgebra& H, const RMatrix& R);
CheckReport check_comodule_algebra(const HomAlgebra& A, const ComoduleCoaction& c);
CheckReport check_left_comodule_algebra(const HomAlgebra& A, const LeftComoduleCoaction& c);

}  // namespace homhopf
