#include "homhopf/structures.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

namespace homhopf {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DimensionMismatch(what);
}

void require_tensor(const Tensor3& t, std::size_t a, std::size_t b, std::size_t c, const std::string& what) {
    require(t.dim1() == a && t.dim2() == b && t.dim3() == c, what + ": tensor shape mismatch");
}

void require_matrix(const Matrix& m, std::size_t r, std::size_t c, const std::string& what) {
    require(m.rows() == r && m.cols() == c, what + ": matrix shape mismatch");
}

Tensor basis(std::vector<std::size_t> dims, const std::vector<std::size_t>& idx) {
    return Tensor::basis(std::move(dims), idx);
}

std::atomic<unsigned> g_jobs{1};

}  // namespace

HomAlgebra::HomAlgebra(Tensor3 mul, Vector unit, Matrix alpha)
    : mul_(std::move(mul)), unit_(std::move(unit)) {
    const std::size_t n = unit_.size();
    require(n > 0, "algebra dimension must be positive");
    require_tensor(mul_, n, n, n, "multiplication");
    require_matrix(alpha, n, n, "structure map");
    powers_ = std::make_shared<PowerCache>(std::move(alpha));
    powers_->power(-1);
}

HomCoalgebra::HomCoalgebra(Tensor3 comul, Vector counit, Matrix alpha)
    : comul_(std::move(comul)), counit_(std::move(counit)) {
    const std::size_t n = counit_.size();
    require(n > 0, "coalgebra dimension must be positive");
    require_tensor(comul_, n, n, n, "comultiplication");
    require_matrix(alpha, n, n, "structure map");
    powers_ = std::make_shared<PowerCache>(std::move(alpha));
    powers_->power(-1);
}

HomBialgebra::HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)) {
    require(algebra_.dim() == coalgebra_.dim(), "algebra and coalgebra dimensions differ");
    require(algebra_.alpha() == coalgebra_.alpha(), "algebra and coalgebra structure maps differ");
}

HomHopfAlgebra::HomHopfAlgebra(HomBialgebra bialgebra, Matrix antipode) : bialgebra_(std::move(bialgebra)) {
    require_matrix(antipode, dim(), dim(), "antipode");
    antipode_ = std::make_shared<PowerCache>(std::move(antipode));
}

ModuleAction::ModuleAction(HomBialgebra actor_, HomBialgebra carrier_, Tensor3 act_)
    : actor(std::move(actor_)), carrier(std::move(carrier_)), act(std::move(act_)) {
    require_tensor(act, actor.dim(), carrier.dim(), carrier.dim(), "action");
}

ComoduleCoaction::ComoduleCoaction(HomBialgebra coactor_, HomBialgebra carrier_, Tensor3 coact_)
    : coactor(std::move(coactor_)), carrier(std::move(carrier_)), coact(std::move(coact_)) {
    require_tensor(coact, carrier.dim(), carrier.dim(), coactor.dim(), "coaction");
}

LeftComoduleCoaction::LeftComoduleCoaction(HomBialgebra coactor_, HomBialgebra carrier_, Tensor3 coact_)
    : coactor(std::move(coactor_)), carrier(std::move(carrier_)), coact(std::move(coact_)) {
    require_tensor(coact, carrier.dim(), coactor.dim(), carrier.dim(), "left coaction");
}

PairingForm::PairingForm(HomHopfAlgebra left_, HomHopfAlgebra right_, Matrix gram_)
    : left(std::move(left_)), right(std::move(right_)), gram(std::move(gram_)) {
    require_matrix(gram, left.dim(), right.dim(), "pairing");
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw InvalidParameter("side must be 'left' or 'right', got '" + s + "'");
}

TwoCocycle::TwoCocycle(HomBialgebra algebra_, Matrix gram_, Side side_)
    : algebra(std::move(algebra_)), gram(std::move(gram_)), side(side_) {
    require_matrix(gram, algebra.dim(), algebra.dim(), "cocycle");
}

RMatrix::RMatrix(HomBialgebra host_, Matrix entries_) : host(std::move(host_)), entries(std::move(entries_)) {
    require_matrix(entries, host.dim(), host.dim(), "R-matrix");
}

MatchedPairData::MatchedPairData(HomHopfAlgebra A_, HomHopfAlgebra H_, Tensor3 left_, Tensor3 right_)
    : A(std::move(A_)), H(std::move(H_)), left_action(std::move(left_)), right_action(std::move(right_)) {
    require_tensor(left_action, H.dim(), A.dim(), A.dim(), "left action");
    require_tensor(right_action, H.dim(), A.dim(), H.dim(), "right action");
}

bool CheckReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& e) { return e.passed; });
}

std::size_t CheckReport::failures() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckEntry& e) { return !e.passed; });
}

const CheckEntry* CheckReport::find(const std::string& id) const {
    for (const auto& e : checks)
        if (e.id == id) return &e;
    return nullptr;
}

void CheckReport::append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    for (const auto& e : checks) {
        os << (e.passed ? "  ok   " : "  FAIL ") << e.id;
        if (e.witness) {
            os << "  at (";
            for (std::size_t i = 0; i < e.witness->index.size(); ++i) os << (i ? "," : "") << e.witness->index[i];
            os << ")";
        }
        os << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

void set_sweep_jobs(unsigned jobs) { g_jobs = std::max(1u, jobs); }
unsigned sweep_jobs() { return g_jobs; }

CheckEntry sweep(const std::string& id, const std::vector<std::size_t>& dims, const SweepBody& body) {
    const std::uint64_t total =
        std::accumulate(dims.begin(), dims.end(), std::uint64_t{1}, std::multiplies<>());
    auto decode = [&](std::uint64_t flat) {
        std::vector<std::size_t> idx(dims.size());
        for (std::size_t l = dims.size(); l-- > 0;) {
            idx[l] = flat % dims[l];
            flat /= dims[l];
        }
        return idx;
    };
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> first{none};

    auto worker = [&](std::uint64_t start, std::uint64_t stride) {
        for (std::uint64_t t = start; t < total && t < first.load(); t += stride) {
            auto [lhs, rhs] = body(decode(t));
            if (lhs != rhs) {
                std::uint64_t cur = first.load();
                while (t < cur && !first.compare_exchange_weak(cur, t)) {
                }
                return;
            }
        }
    };

    const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(g_jobs, total));
    if (jobs <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker, j, jobs);
        for (auto& t : pool) t.join();
    }

    CheckEntry e{id, true, std::nullopt};
    if (first != none) {
        auto idx = decode(first);
        auto [lhs, rhs] = body(idx);
        e.passed = false;
        e.witness = Witness{idx, lhs.flatten(), rhs.flatten()};
    }
    return e;
}

Tensor as_tensor(const Matrix& m) {
    Tensor t({m.rows(), m.cols()});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.add({i, j}, m(i, j));
    return t;
}

Tensor as_tensor(const Vector& v) { return Tensor::from_vector(v); }

CheckReport check_hom_algebra(const HomAlgebra& A) {
    const std::size_t n = A.dim();
    const auto& mu = A.mul();
    const auto& al = A.alpha();
    const Tensor one = as_tensor(A.unit());
    CheckReport r;
    r.add(sweep("algebra.alpha_multiplicative", {n, n}, [&](const auto& i) {
        Tensor x = basis({n, n}, i);
        return std::pair{x.merge(0, mu).apply(0, al), x.apply(0, al).apply(1, al).merge(0, mu)};
    }));
    r.add(sweep("algebra.alpha_unit", {}, [&](const auto&) { return std::pair{one.apply(0, al), one}; }));
    r.add(sweep("algebra.left_unit", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{one.outer(x).merge(0, mu), x.apply(0, al)};
    }));
    r.add(sweep("algebra.right_unit", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.outer(one).merge(0, mu), x.apply(0, al)};
    }));
    r.add(sweep("algebra.hom_associative", {n, n, n}, [&](const auto& i) {
        Tensor x = basis({n, n, n}, i);
        return std::pair{x.merge(1, mu).apply(0, al).merge(0, mu), x.merge(0, mu).apply(1, al).merge(0, mu)};
    }));
    return r;
}

CheckReport check_hom_coalgebra(const HomCoalgebra& C) {
    const std::size_t n = C.dim();
    const auto& de = C.comul();
    const auto& al = C.alpha();
    const auto& eps = C.counit();
    CheckReport r;
    r.add(sweep("coalgebra.counit_alpha", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.apply(0, al).evaluate(0, eps), x.evaluate(0, eps)};
    }));
    r.add(sweep("coalgebra.alpha_comultiplicative", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.split(0, de).apply(0, al).apply(1, al), x.apply(0, al).split(0, de)};
    }));
    r.add(sweep("coalgebra.left_counit", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.split(0, de).evaluate(0, eps), x.apply(0, al)};
    }));
    r.add(sweep("coalgebra.right_counit", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.split(0, de).evaluate(1, eps), x.apply(0, al)};
    }));
    r.add(sweep("coalgebra.hom_coassociative", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i).split(0, de);
        return std::pair{x.apply(1, al).split(0, de), x.apply(0, al).split(1, de)};
    }));
    return r;
}

CheckReport check_hom_bialgebra(const HomBialgebra& B) {
    const std::size_t n = B.dim();
    const auto& mu = B.mul();
    const auto& de = B.comul();
    const auto& eps = B.counit();
    const Tensor one = as_tensor(B.unit());
    CheckReport r;
    r.add(sweep("bialgebra.comul_multiplicative", {n, n}, [&](const auto& i) {
        Tensor x = basis({n, n}, i);
        Tensor rhs = x.split(1, de).split(0, de).permute({0, 2, 1, 3}).merge(0, mu).merge(1, mu);
        return std::pair{x.merge(0, mu).split(0, de), rhs};
    }));
    r.add(sweep("bialgebra.comul_unit", {}, [&](const auto&) { return std::pair{one.split(0, de), one.outer(one)}; }));
    r.add(sweep("bialgebra.counit_multiplicative", {n, n}, [&](const auto& i) {
        Tensor x = basis({n, n}, i);
        return std::pair{x.merge(0, mu).evaluate(0, eps), x.evaluate(1, eps).evaluate(0, eps)};
    }));
    r.add(sweep("bialgebra.counit_unit", {},
                [&](const auto&) { return std::pair{one.evaluate(0, eps), Tensor::scalar(1)}; }));
    return r;
}

CheckReport check_antipode(const HomHopfAlgebra& H) {
    const std::size_t n = H.dim();
    const auto& mu = H.mul();
    const auto& de = H.comul();
    const auto& eps = H.counit();
    const auto& al = H.alpha();
    const auto& S = H.antipode();
    const Tensor one = as_tensor(H.unit());
    CheckReport r;
    r.add(sweep("antipode.commutes_with_alpha", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.apply(0, S).apply(0, al), x.apply(0, al).apply(0, S)};
    }));
    r.add(sweep("antipode.left_inverse", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.split(0, de).apply(0, S).merge(0, mu), one.scaled(x.evaluate(0, eps).as_scalar())};
    }));
    r.add(sweep("antipode.right_inverse", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.split(0, de).apply(1, S).merge(0, mu), one.scaled(x.evaluate(0, eps).as_scalar())};
    }));
    r.add(sweep("antipode.anti_comultiplicative", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.apply(0, S).split(0, de), x.split(0, de).apply(0, S).apply(1, S).permute({1, 0})};
    }));
    r.add(sweep("antipode.anti_multiplicative", {n, n}, [&](const auto& i) {
        Tensor x = basis({n, n}, i);
        return std::pair{x.merge(0, mu).apply(0, S), x.apply(0, S).apply(1, S).permute({1, 0}).merge(0, mu)};
    }));
    r.add(sweep("antipode.counit", {n}, [&](const auto& i) {
        Tensor x = basis({n}, i);
        return std::pair{x.apply(0, S).evaluate(0, eps), x.evaluate(0, eps)};
    }));
    return r;
}

CheckReport check_bialgebra_suite(const HomBialgebra& B) {
    CheckReport r = check_hom_algebra(B.algebra());
    r.append(check_hom_coalgebra(B.coalgebra()));
    r.append(check_hom_bialgebra(B));
    return r;
}

CheckReport check_hopf_suite(const HomHopfAlgebra& H) {
    CheckReport r = check_bialgebra_suite(H.bialgebra());
    r.append(check_antipode(H));
    return r;
}

CheckReport check_module(const ModuleAction& m) {
    const std::size_t nh = m.actor.dim(), nm = m.carrier.dim();
    const auto& act = m.act;
    const auto& aH = m.actor.alpha();
    const auto& aM = m.carrier.alpha();
    const Tensor one = as_tensor(m.actor.unit());
    CheckReport r;
    r.add(sweep("module.unit", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i);
        return std::pair{one.outer(x).merge(0, act), x.apply(0, aM)};
    }));
    r.add(sweep("module.alpha", {nh, nm}, [&](const auto& i) {
        Tensor x = basis({nh, nm}, i);
        return std::pair{x.merge(0, act).apply(0, aM), x.apply(0, aH).apply(1, aM).merge(0, act)};
    }));
    r.add(sweep("module.hom_associative", {nh, nh, nm}, [&](const auto& i) {
        Tensor x = basis({nh, nh, nm}, i);
        return std::pair{x.apply(0, aH).merge(1, act).merge(0, act),
                         x.merge(0, m.actor.mul()).apply(1, aM).merge(0, act)};
    }));
    return r;
}

CheckReport check_module_algebra(const ModuleAction& m) {
    const std::size_t nh = m.actor.dim(), nm = m.carrier.dim();
    const auto& act = m.act;
    const auto& muM = m.carrier.mul();
    const Tensor oneM = as_tensor(m.carrier.unit());
    CheckReport r;
    r.add(sweep("module_algebra.product", {nh, nm, nm}, [&](const auto& i) {
        Tensor x = basis({nh, nm, nm}, i);
        Tensor lhs = x.merge(1, muM).apply(0, m.actor.alpha_pow(2)).merge(0, act);
        Tensor rhs = x.split(0, m.actor.comul()).permute({0, 2, 1, 3}).merge(0, act).merge(1, act).merge(0, muM);
        return std::pair{lhs, rhs};
    }));
    r.add(sweep("module_algebra.unit", {nh}, [&](const auto& i) {
        Tensor x = basis({nh}, i);
        return std::pair{x.outer(oneM).merge(0, act), oneM.scaled(x.evaluate(0, m.actor.counit()).as_scalar())};
    }));
    return r;
}

CheckReport check_module_coalgebra(const ModuleAction& m) {
    const std::size_t nh = m.actor.dim(), nm = m.carrier.dim();
    const auto& act = m.act;
    const auto& deM = m.carrier.comul();
    CheckReport r;
    r.add(sweep("module_coalgebra.comul", {nh, nm}, [&](const auto& i) {
        Tensor x = basis({nh, nm}, i);
        Tensor rhs = x.split(1, deM).split(0, m.actor.comul()).permute({0, 2, 1, 3}).merge(0, act).merge(1, act);
        return std::pair{x.merge(0, act).split(0, deM), rhs};
    }));
    r.add(sweep("module_coalgebra.counit", {nh, nm}, [&](const auto& i) {
        Tensor x = basis({nh, nm}, i);
        return std::pair{x.merge(0, act).evaluate(0, m.carrier.counit()),
                         x.evaluate(1, m.carrier.counit()).evaluate(0, m.actor.counit())};
    }));
    return r;
}

CheckReport check_comodule(const ComoduleCoaction& c) {
    const std::size_t nm = c.carrier.dim();
    const auto& co = c.coact;
    const auto& aM = c.carrier.alpha();
    const auto& aH = c.coactor.alpha();
    CheckReport r;
    r.add(sweep("comodule.counit", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i);
        return std::pair{x.split(0, co).evaluate(1, c.coactor.counit()), x.apply(0, aM)};
    }));
    r.add(sweep("comodule.alpha", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i);
        return std::pair{x.split(0, co).apply(0, aM).apply(1, aH), x.apply(0, aM).split(0, co)};
    }));
    r.add(sweep("comodule.coassociative", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i).split(0, co);
        return std::pair{x.apply(1, aH).split(0, co), x.apply(0, aM).split(1, c.coactor.comul())};
    }));
    return r;
}

CheckReport check_left_comodule(const LeftComoduleCoaction& c) {
    const std::size_t nm = c.carrier.dim();
    const auto& co = c.coact;
    const auto& aM = c.carrier.alpha();
    const auto& aH = c.coactor.alpha();
    CheckReport r;
    r.add(sweep("left_comodule.counit", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i);
        return std::pair{x.split(0, co).evaluate(0, c.coactor.counit()), x.apply(0, aM)};
    }));
    r.add(sweep("left_comodule.alpha", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i);
        return std::pair{x.split(0, co).apply(0, aH).apply(1, aM), x.apply(0, aM).split(0, co)};
    }));
    r.add(sweep("left_comodule.coassociative", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i).split(0, co);
        return std::pair{x.apply(1, aM).split(0, c.coactor.comul()), x.apply(0, aH).split(1, co)};
    }));
    return r;
}

CheckReport check_comodule_coalgebra(const ComoduleCoaction& c) {
    const std::size_t nm = c.carrier.dim();
    const auto& co = c.coact;
    const auto& deM = c.carrier.comul();
    const Tensor oneH = as_tensor(c.coactor.unit());
    CheckReport r;
    r.add(sweep("comodule_coalgebra.counit", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i);
        return std::pair{x.split(0, co).evaluate(0, c.carrier.counit()),
                         oneH.scaled(x.evaluate(0, c.carrier.counit()).as_scalar())};
    }));
    r.add(sweep("comodule_coalgebra.comul", {nm}, [&](const auto& i) {
        Tensor x = basis({nm}, i);
        Tensor lhs = x.split(0, co).apply(1, c.coactor.alpha_pow(2)).split(0, deM);
        Tensor rhs = x.split(0, deM).split(1, co).split(0, co).permute({0, 2, 1, 3}).merge(2, c.coactor.mul());
        return std::pair{lhs, rhs};
    }));
    return r;
}

CheckReport check_cotwisting(const HomCoalgebra& C, const HomCoalgebra& D, const Matrix& phi) {
    const std::size_t nc = C.dim(), nd = D.dim();
    require_matrix(phi, nc * nd, nd * nc, "cotwisting map");
    const auto& aC = C.alpha();
    const auto& aD = D.alpha();
    CheckReport r;
    r.add(sweep("cotwisting.comul_second", {nc, nd}, [&](const auto& i) {
        Tensor x = basis({nc, nd}, i);
        Tensor lhs = x.apply2(0, phi, nd, nc).split(0, D.comul()).apply(2, aC);
        Tensor rhs = x.apply(0, aC).split(1, D.comul()).apply2(0, phi, nd, nc).apply2(1, phi, nd, nc);
        return std::pair{lhs, rhs};
    }));
    r.add(sweep("cotwisting.comul_first", {nc, nd}, [&](const auto& i) {
        Tensor x = basis({nc, nd}, i);
        Tensor lhs = x.apply2(0, phi, nd, nc).apply(0, aD).split(1, C.comul());
        Tensor rhs = x.split(0, C.comul()).apply(2, aD).apply2(1, phi, nd, nc).apply2(0, phi, nd, nc);
        return std::pair{lhs, rhs};
    }));
    r.add(sweep("cotwisting.alpha", {nc, nd}, [&](const auto& i) {
        Tensor x = basis({nc, nd}, i);
        return std::pair{x.apply2(0, phi, nd, nc).apply(0, aD).apply(1, aC),
                         x.apply(0, aC).apply(1, aD).apply2(0, phi, nd, nc)};
    }));
    r.add(sweep("cotwisting.counit_first", {nc, nd}, [&](const auto& i) {
        Tensor x = basis({nc, nd}, i);
        return std::pair{x.apply2(0, phi, nd, nc).evaluate(1, C.counit()), x.evaluate(0, C.counit())};
    }));
    r.add(sweep("cotwisting.counit_second", {nc, nd}, [&](const auto& i) {
        Tensor x = basis({nc, nd}, i);
        return std::pair{x.apply2(0, phi, nd, nc).evaluate(0, D.counit()), x.evaluate(1, D.counit())};
    }));
    return r;
}

CheckReport check_twisting(const HomAlgebra& A, const HomAlgebra& B, const Matrix& t) {
    const std::size_t na = A.dim(), nb = B.dim();
    require_matrix(t, nb * na, na * nb, "twisting map");
    const auto& aA = A.alpha();
    const auto& aB = B.alpha();
    CheckReport r;
    r.add(sweep("twisting.alpha", {nb, na}, [&](const auto& i) {
        Tensor x = basis({nb, na}, i);
        return std::pair{x.apply2(0, t, na, nb).apply(0, aA).apply(1, aB),
                         x.apply(0, aB).apply(1, aA).apply2(0, t, na, nb)};
    }));
    r.add(sweep("twisting.multiplication_B", {nb, nb, na}, [&](const auto& i) {
        Tensor x = basis({nb, nb, na}, i);
        Tensor lhs = x.merge(0, B.mul()).apply(1, aA).apply2(0, t, na, nb);
        Tensor rhs = x.apply2(1, t, na, nb).apply2(0, t, na, nb).apply(0, aA).merge(1, B.mul());
        return std::pair{lhs, rhs};
    }));
    r.add(sweep("twisting.multiplication_A", {nb, na, na}, [&](const auto& i) {
        Tensor x = basis({nb, na, na}, i);
        Tensor lhs = x.apply(0, aB).merge(1, A.mul()).apply2(0, t, na, nb);
        Tensor rhs = x.apply2(0, t, na, nb).apply2(1, t, na, nb).merge(0, A.mul()).apply(1, aB);
        return std::pair{lhs, rhs};
    }));
    return r;
}

CheckReport check_matched_pair(const MatchedPairData& mp) {
    const auto& A = mp.A;
    const auto& H = mp.H;
    const std::size_t na = A.dim(), nh = H.dim();
    const auto& tri = mp.left_action;
    const auto& tril = mp.right_action;
    const auto& aA = A.alpha();
    const auto& aH = H.alpha();

    CheckReport r;
    ModuleAction left(H.bialgebra(), A.bialgebra(), tri);
    CheckReport lm = check_module(left);
    CheckReport lc = check_module_coalgebra(left);
    for (auto& e : lm.checks) e.id = "left_action." + e.id.substr(e.id.find('.') + 1);
    for (auto& e : lc.checks) e.id = "left_action." + e.id.substr(e.id.find('.') + 1);
    r.append(lm);
    r.append(lc);

    const Tensor oneA = as_tensor(A.unit());
    r.add(sweep("right_action.unit", {nh}, [&](const auto& i) {
        Tensor x = basis({nh}, i);
        return std::pair{x.outer(oneA).merge(0, tril), x.apply(0, aH)};
    }));
    r.add(sweep("right_action.alpha", {nh, na}, [&](const auto& i) {
        Tensor x = basis({nh, na}, i);
        return std::pair{x.merge(0, tril).apply(0, aH), x.apply(0, aH).apply(1, aA).merge(0, tril)};
    }));
    r.add(sweep("right_action.hom_associative", {nh, na, na}, [&](const auto& i) {
        Tensor x = basis({nh, na, na}, i);
        return std::pair{x.apply(2, aA).merge(0, tril).merge(0, tril),
                         x.apply(0, aH).merge(1, A.mul()).merge(0, tril)};
    }));
    r.add(sweep("right_action.comul", {nh, na}, [&](const auto& i) {
        Tensor x = basis({nh, na}, i);
        Tensor rhs = x.split(1, A.comul()).split(0, H.comul()).permute({0, 2, 1, 3}).merge(0, tril).merge(1, tril);
        return std::pair{x.merge(0, tril).split(0, H.comul()), rhs};
    }));
    r.add(sweep("right_action.counit", {nh, na}, [&](const auto& i) {
        Tensor x = basis({nh, na}, i);
        return std::pair{x.merge(0, tril).evaluate(0, H.counit()),
                         x.evaluate(1, A.counit()).evaluate(0, H.counit())};
    }));

    // (hg) < a = (h < (g1 > a1)) (g2 < a2), with the structure-map shifts
    r.add(sweep("compat.right_action_product", {nh, nh, na}, [&](const auto& i) {
        Tensor x = basis({nh, nh, na}, i);
        Tensor lhs = x.merge(0, H.mul()).merge(0, tril);
        Tensor rhs = x.split(1, H.comul())
                         .split(3, A.comul())
                         .apply(1, H.alpha_pow(-2))
                         .apply(2, H.alpha_pow(-1))
                         .apply(3, A.alpha_pow(-3))
                         .apply(4, A.alpha_pow(-2))
                         .permute({0, 1, 3, 2, 4})
                         .merge(1, tri)
                         .merge(0, tril)
                         .merge(1, tril)
                         .merge(0, H.mul());
        return std::pair{lhs, rhs};
    }));
    // h > (ab) = (h1 > a1) ((h2 < a2) > b), with the structure-map shifts
    r.add(sweep("compat.left_action_product", {nh, na, na}, [&](const auto& i) {
        Tensor x = basis({nh, na, na}, i);
        Tensor lhs = x.merge(1, A.mul()).merge(0, tri);
        Tensor rhs = x.split(0, H.comul())
                         .split(2, A.comul())
                         .apply(0, H.alpha_pow(-2))
                         .apply(1, H.alpha_pow(-3))
                         .apply(2, A.alpha_pow(-1))
                         .apply(3, A.alpha_pow(-2))
                         .permute({0, 2, 1, 3, 4})
                         .merge(0, tri)
                         .merge(1, tril)
                         .merge(1, tri)
                         .merge(0, A.mul());
        return std::pair{lhs, rhs};
    }));
    r.add(sweep("compat.actions_cocommute", {nh, na}, [&](const auto& i) {
        Tensor x = basis({nh, na}, i).split(1, A.comul()).split(0, H.comul());
        Tensor lhs = x.permute({0, 2, 1, 3}).merge(0, tril).merge(1, tri);
        Tensor rhs = x.permute({1, 3, 0, 2}).merge(0, tril).merge(1, tri);
        return std::pair{lhs, rhs};
    }));
    return r;
}

CheckReport check_dual_pair(const PairingForm& p) {
    const auto& A = p.left;
    const auto& B = p.right;
    const auto& G = p.gram;
    const std::size_t na = A.dim(), nb = B.dim();
    CheckReport r;
    r.add(sweep("dual_pair.unit_right", {na}, [&](const auto& i) {
        Tensor x = basis({na}, i).outer(as_tensor(B.unit()));
        return std::pair{x.pair(0, 1, G), basis({na}, i).evaluate(0, A.counit())};
    }));
    r.add(sweep("dual_pair.unit_left", {nb}, [&](const auto& i) {
        Tensor x = as_tensor(A.unit()).outer(basis({nb}, i));
        return std::pair{x.pair(0, 1, G), basis({nb}, i).evaluate(0, B.counit())};
    }));
    r.add(sweep("dual_pair.alpha_invariant", {na, nb}, [&](const auto& i) {
        Tensor x = basis({na, nb}, i);
        return std::pair{x.apply(0, A.alpha()).apply(1, B.alpha()).pair(0, 1, G), x.pair(0, 1, G)};
    }));
    r.add(sweep("dual_pair.product_left", {na, na, nb}, [&](const auto& i) {
        Tensor x = basis({na, na, nb}, i);
        Tensor lhs = x.merge(0, A.mul()).pair(0, 1, G);
        Tensor rhs =
            x.apply(0, A.alpha_pow(2)).apply(1, A.alpha_pow(2)).split(2, B.comul()).pair(0, 2, G).pair(0, 1, G);
        return std::pair{lhs, rhs};
    }));
    r.add(sweep("dual_pair.product_right", {na, nb, nb}, [&](const auto& i) {
        Tensor x = basis({na, nb, nb}, i);
        Tensor lhs = x.merge(1, B.mul()).pair(0, 1, G);
        Tensor rhs =
            x.apply(1, B.alpha_pow(2)).apply(2, B.alpha_pow(2)).split(0, A.comul()).pair(0, 2, G).pair(0, 1, G);
        return std::pair{lhs, rhs};
    }));
    r.notes.push_back(
        "product_right uses (a, bb') = (a1, alpha^2(b))(a2, alpha^2(b')); the alternative reading "
        "(a1, alpha^2(b))(alpha^2(b'), b2) pairs an element of B against B and cannot be evaluated");
    const Matrix& SBinv = B.antipode_inverse();
    r.add(sweep("dual_pair.antipode", {na, nb}, [&](const auto& i) {
        Tensor x = basis({na, nb}, i);
        return std::pair{x.apply(0, A.antipode()).pair(0, 1, G), x.apply(1, SBinv).pair(0, 1, G)};
    }));
    CheckEntry nd{"dual_pair.nondegenerate", true, std::nullopt};
    const std::size_t rank = mat_rank(G);
    if (na != nb || rank != na) {
        nd.passed = false;
        nd.witness = Witness{{}, Vector{Scalar(static_cast<long>(rank))}, Vector{Scalar(static_cast<long>(na))}};
    }
    r.add(nd);
    return r;
}

CheckReport check_cocycle(const TwoCocycle& sigma) {
    const auto& B = sigma.algebra;
    const auto& s = sigma.gram;
    const std::size_t n = B.dim();
    const auto& de = B.comul();
    const auto& mu = B.mul();
    const auto& a2 = B.alpha_pow(2);
    CheckReport r;
    r.add(sweep("cocycle.alpha_invariant", {n, n}, [&](const auto& i) {
        Tensor x = basis({n, n}, i);
        return std::pair{x.apply(0, B.alpha()).apply(1, B.alpha()).pair(0, 1, s), x.pair(0, 1, s)};
    }));
    if (sigma.side == Side::left) {
        // sigma(l1, k1) sigma(a^2 h, l2 k2) = sigma(h1, l1) sigma(h2 l2, a^2 k)
        r.add(sweep("cocycle.left", {n, n, n}, [&](const auto& i) {
            Tensor x = basis({n, n, n}, i);
            Tensor lhs = x.split(2, de).split(1, de).pair(1, 3, s).merge(1, mu).apply(0, a2).pair(0, 1, s);
            Tensor rhs = x.split(1, de).split(0, de).pair(0, 2, s).merge(0, mu).apply(1, a2).pair(0, 1, s);
            return std::pair{lhs, rhs};
        }));
    } else {
        // sigma(a^2 h, l1 k1) sigma(l2, k2) = sigma(h1 l1, a^2 k) sigma(h2, l2)
        r.add(sweep("cocycle.right", {n, n, n}, [&](const auto& i) {
            Tensor x = basis({n, n, n}, i);
            Tensor lhs = x.split(2, de).split(1, de).pair(2, 4, s).merge(1, mu).apply(0, a2).pair(0, 1, s);
            Tensor rhs = x.split(1, de).split(0, de).pair(1, 3, s).merge(0, mu).apply(1, a2).pair(0, 1, s);
            return std::pair{lhs, rhs};
        }));
    }
    const Tensor one = as_tensor(B.unit());
    r.add(sweep("cocycle.normal", {2, n}, [&](const auto& i) {
        Tensor x = basis({n}, {i[1]});
        Tensor pairs = i[0] == 0 ? one.outer(x) : x.outer(one);
        return std::pair{pairs.pair(0, 1, s), x.evaluate(0, B.counit())};
    }));
    return r;
}

CheckReport check_quasitriangular(const HomBialgebra& H, const RMatrix& R) {
    const std::size_t n = H.dim();
    const auto& mu = H.mul();
    const auto& de = H.comul();
    const Tensor Rt = as_tensor(R.entries);
    const Tensor one = as_tensor(H.unit());
    CheckReport r;
    r.add(sweep("quasitriangular.intertwines", {n}, [&](const auto& i) {
        Tensor d = basis({n}, i).split(0, de);
        return std::pair{componentwise_mul(d.permute({1, 0}), Rt, mu), componentwise_mul(Rt, d, mu)};
    }));
    const Tensor R13 = Rt.outer(one).permute({0, 2, 1});
    const Tensor R23 = one.outer(Rt);
    const Tensor R12 = Rt.outer(one);
    r.add(sweep("quasitriangular.comul_first", {}, [&](const auto&) {
        return std::pair{Rt.split(0, de).apply(2, H.alpha()), componentwise_mul(R13, R23, mu)};
    }));
    r.add(sweep("quasitriangular.comul_second", {}, [&](const auto&) {
        return std::pair{Rt.apply(0, H.alpha()).split(1, de), componentwise_mul(R13, R12, mu)};
    }));
    return r;
}

CheckReport check_comodule_algebra(const HomAlgebra& A, const ComoduleCoaction& c) {
    require(A.dim() == c.carrier.dim(), "comodule algebra: dimension mismatch");
    const std::size_t n = A.dim();
    const auto& co = c.coact;
    CheckReport r = check_comodule(c);
    const Tensor one = as_tensor(A.unit());
    r.add(sweep("comodule_algebra.product", {n, n}, [&](const auto& i) {
        Tensor x = basis({n, n}, i);
        Tensor rhs = x.split(1, co).split(0, co).permute({0, 2, 1, 3}).merge(0, A.mul()).merge(1, c.coactor.mul());
        return std::pair{x.merge(0, A.mul()).split(0, co), rhs};
    }));
    r.add(sweep("comodule_algebra.unit", {}, [&](const auto&) {
        return std::pair{one.split(0, co), one.outer(as_tensor(c.coactor.unit()))};
    }));
    return r;
}

CheckReport check_left_comodule_algebra(const HomAlgebra& A, const LeftComoduleCoaction& c) {
    require(A.dim() == c.carrier.dim(), "comodule algebra: dimension mismatch");
    const std::size_t n = A.dim();
    const auto& co = c.coact;
    CheckReport r = check_left_comodule(c);
    const Tensor one = as_tensor(A.unit());
    r.add(sweep("left_comodule_algebra.product", {n, n}, [&](const auto& i) {
        Tensor x = basis({n, n}, i);
        Tensor rhs = x.split(1, co).split(0, co).permute({0, 2, 1, 3}).merge(0, c.coactor.mul()).merge(1, A.mul());
        return std::pair{x.merge(0, A.mul()).split(0, co), rhs};
    }));
    r.add(sweep("left_comodule_algebra.unit", {}, [&](const auto&) {
        return std::pair{one.split(0, co), as_tensor(c.coactor.unit()).outer(one)};
    }));
    return r;
}

}  // namespace homhopf
