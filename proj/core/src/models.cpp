#include "slgen/models.hpp"

#include <sstream>

namespace slgen {

namespace {

const Complex kI{0.0, 1.0};

void check_layout(const SpacePtr& space, int N, int n, SiteKind matter_kind, const char* who) {
    const int atoms = 2 * N + 1;
    if (space->site_count() != atoms + n)
        throw SpaceMismatchError(std::string(who) + ": space has " +
                                 std::to_string(space->site_count()) + " sites, expected " +
                                 std::to_string(atoms + n));
    for (int r = 0; r < atoms; ++r)
        if (space->site(r).kind != matter_kind)
            throw SpaceMismatchError(std::string(who) + ": site " + std::to_string(r) +
                                     " must be a matter site");
    for (int l = 0; l < n; ++l)
        if (space->site(atoms + l).kind != SiteKind::BosonMode)
            throw SpaceMismatchError(std::string(who) + ": site " + std::to_string(atoms + l) +
                                     " must be a boson mode");
}

void check_internal_invariants(const Superoperator& sop, const char* who) {
    if (identity_kernel_defect(sop) > 1e-12)
        throw DecompositionFailure(std::string(who) +
                                   ": assembled generator does not annihilate the identity");
    if (hermiticity_preservation_defect(sop) > 1e-12)
        throw DecompositionFailure(std::string(who) +
                                   ": assembled generator does not preserve hermiticity");
}

// matter dissipator of one spin site with explicit channel rates
SpMat spin_matter_block(double gamma1, double gamma2, double eta, double epsilon,
                        const SpMat& sp, const SpMat& sm, const SpMat& sz) {
    const double down = 0.25 * gamma2 * (1.0 - eta);
    const double up = 0.25 * gamma2 * (1.0 + eta);
    const double dephase = 0.125 * (2.0 * gamma1 - gamma2);
    SpMat block = sl_dissipator(Complex(down, 0.0), sm);
    block += sl_dissipator(Complex(up, 0.0), sp);
    if (dephase != 0.0) block += sl_dissipator(Complex(dephase, 0.0), sz);
    block += kI * (0.5 * epsilon) * commutator_super(sz);
    return block;
}

std::vector<SparseOp> spin_raising_ops(const SpacePtr& space, int atoms) {
    std::vector<SparseOp> raising;
    raising.reserve(static_cast<size_t>(atoms));
    for (int r = 0; r < atoms; ++r) raising.push_back(pauli(PauliKind::Plus, r, space));
    return raising;
}

} // namespace

void ASParams::validate() const {
    if (N < 0) throw ParamInvariantViolation("N must be >= 0");
    if (n < 0) throw ParamInvariantViolation("n must be >= 0");
    if (!(epsilon > 0.0)) throw ParamInvariantViolation("the atomic gap epsilon must be > 0");
    if (!(gamma2 > 0.0) || gamma2 > 2.0 * gamma1 * (1.0 + 1e-12))
        throw ParamInvariantViolation(
            "matter rates must satisfy 0 < gamma2 <= 2*gamma1 (got gamma1=" +
            std::to_string(gamma1) + ", gamma2=" + std::to_string(gamma2) + ")");
    if (eta < -1.0 || eta > 1.0)
        throw ParamInvariantViolation("the pump parameter must satisfy -1 <= eta <= 1");
    if (static_cast<int>(omega.size()) != n || static_cast<int>(kappa.size()) != n ||
        static_cast<int>(lambda.size()) != n)
        throw ParamMismatchError("omega/kappa/lambda must all have length n");
    for (int l = 0; l < n; ++l) {
        if (!(omega[static_cast<size_t>(l)] > 0.0))
            throw ParamInvariantViolation("mode frequencies must be > 0");
        if (!(kappa[static_cast<size_t>(l)] > 0.0))
            throw ParamInvariantViolation("mode dampings must be > 0");
    }
}

void HLParams::validate() const {
    if (beta < 0.0) throw ParamInvariantViolation("beta must be >= 0");
    if (!(alpha > 0.0)) throw ParamInvariantViolation("alpha must be > 0");
}

void DHLParams::validate() const {}

SparseOp interaction_hamiltonian(const std::vector<SparseOp>& raising,
                                 const std::vector<SparseOp>& phi) {
    if (raising.size() != phi.size())
        throw ParamMismatchError("interaction_hamiltonian: per-site lists differ in length");
    if (raising.empty()) throw ParamMismatchError("interaction_hamiltonian: empty site list");
    SparseOp h = SparseOp::zero(raising.front().space());
    for (size_t r = 0; r < raising.size(); ++r) {
        const SparseOp term = raising[r] * phi[r];
        h = h + term + term.adjoint();
    }
    return h;
}

Superoperator build_as_generator(const ASParams& p, const SpacePtr& space) {
    p.validate();
    check_layout(space, p.N, p.n, SiteKind::Spin, "build_as_generator");
    const int atoms = 2 * p.N + 1;
    const long d2 = space->dim() * space->dim();

    SpMat matter(d2, d2);
    for (int r = 0; r < atoms; ++r) {
        const SpMat sp = pauli(PauliKind::Plus, r, space).matrix();
        const SpMat sm = pauli(PauliKind::Minus, r, space).matrix();
        const SpMat sz = pauli(PauliKind::Z, r, space).matrix();
        matter += spin_matter_block(p.gamma1, p.gamma2, p.eta, p.epsilon, sp, sm, sz);
    }

    SpMat radiation(d2, d2);
    for (int l = 0; l < p.n; ++l) {
        const SpMat a = boson(BosonKind::Annihilate, atoms + l, space).matrix();
        radiation += sl_dissipator(Complex(p.kappa[static_cast<size_t>(l)],
                                           p.omega[static_cast<size_t>(l)]),
                                   a);
    }

    SpMat interaction(d2, d2);
    if (p.n > 0) {
        const std::vector<SparseOp> phi =
            radiation_field(RadiationParams{p.N, p.n, p.lambda}, space, atoms);
        const SparseOp h = interaction_hamiltonian(spin_raising_ops(space, atoms), phi);
        interaction = kI * commutator_super(h.matrix());
    }

    Superoperator out;
    out.space = space;
    out.picture = Picture::Heisenberg;
    out.matrix = SpMat(matter + radiation + interaction);
    std::ostringstream prov;
    prov << "AS generator, N=" << p.N << ", n=" << p.n << ", eps=" << p.epsilon
         << ", gamma1=" << p.gamma1 << ", gamma2=" << p.gamma2 << ", eta=" << p.eta;
    out.provenance = prov.str();
    out.blocks.emplace_back("matter", std::move(matter));
    out.blocks.emplace_back("radiation", std::move(radiation));
    out.blocks.emplace_back("interaction", std::move(interaction));
    check_internal_invariants(out, "build_as_generator");
    return out;
}

Superoperator build_hlsl_generator(const GammaSet& gammas, const std::vector<double>& lambdas,
                                   const SpacePtr& space) {
    if (gammas.model != GammaModel::HL)
        throw ParamMismatchError("build_hlsl_generator needs an HL gamma set");
    const int n = static_cast<int>(gammas.radiation.size());
    if (static_cast<int>(lambdas.size()) != n)
        throw ParamMismatchError("build_hlsl_generator: lambda list must match mode count");
    int atoms = space->site_count() - n;
    if (atoms < 1 || atoms % 2 == 0)
        throw SpaceMismatchError("build_hlsl_generator: matter stretch must hold 2N+1 spins");
    const int N = (atoms - 1) / 2;
    check_layout(space, N, n, SiteKind::Spin, "build_hlsl_generator");
    const long d2 = space->dim() * space->dim();

    SpMat radiation(d2, d2);
    for (int l = 0; l < n; ++l) {
        const SpMat a = boson(BosonKind::Annihilate, atoms + l, space).matrix();
        radiation += sl_dissipator(gammas.radiation[static_cast<size_t>(l)].value, a);
    }

    SpMat matter(d2, d2);
    for (int r = 0; r < atoms; ++r) {
        const SpMat sp = pauli(PauliKind::Plus, r, space).matrix();
        const SpMat sm = pauli(PauliKind::Minus, r, space).matrix();
        matter += sl_dissipator(gammas.h1.value, sm);
        matter += sl_dissipator(gammas.h2.value, sp);
    }

    SpMat interaction(d2, d2);
    if (n > 0) {
        const std::vector<SparseOp> phi =
            radiation_field(RadiationParams{N, n, lambdas}, space, atoms);
        const SparseOp h = interaction_hamiltonian(spin_raising_ops(space, atoms), phi);
        interaction = kI * commutator_super(h.matrix());
    }

    Superoperator out;
    out.space = space;
    out.picture = Picture::Heisenberg;
    out.matrix = SpMat(matter + radiation + interaction);
    out.provenance = "HL stochastic-limit generator, N=" + std::to_string(N) +
                     ", n=" + std::to_string(n);
    out.blocks.emplace_back("matter", std::move(matter));
    out.blocks.emplace_back("radiation", std::move(radiation));
    out.blocks.emplace_back("interaction", std::move(interaction));
    check_internal_invariants(out, "build_hlsl_generator");
    return out;
}

namespace {

SpMat dhl_site_block(const GammaSet& g, int site, const SpacePtr& space) {
    const SpMat bp = fermion(FermiLevel::Plus, FermiKind::Annihilate, site, space).matrix();
    const SpMat bm = fermion(FermiLevel::Minus, FermiKind::Annihilate, site, space).matrix();
    SpMat block = sl_dissipator(g.B_plus.value, bp);
    block += sl_dissipator(g.C_plus.value, SpMat(bp.adjoint()));
    block += sl_dissipator(g.B_minus.value, bm);
    block += sl_dissipator(g.C_minus.value, SpMat(bm.adjoint()));
    return block;
}

} // namespace

Superoperator build_dhlsl_generator(const GammaSet& gammas, const std::vector<double>& lambdas,
                                    const SpacePtr& space) {
    if (gammas.model != GammaModel::DHL)
        throw ParamMismatchError("build_dhlsl_generator needs a DHL gamma set");
    const int n = static_cast<int>(gammas.radiation.size());
    if (static_cast<int>(lambdas.size()) != n)
        throw ParamMismatchError("build_dhlsl_generator: lambda list must match mode count");
    int atoms = space->site_count() - n;
    if (atoms < 1 || atoms % 2 == 0)
        throw SpaceMismatchError("build_dhlsl_generator: matter stretch must hold 2N+1 fermion pairs");
    const int N = (atoms - 1) / 2;
    check_layout(space, N, n, SiteKind::FermionPair, "build_dhlsl_generator");
    const long d2 = space->dim() * space->dim();

    SpMat radiation(d2, d2);
    for (int l = 0; l < n; ++l) {
        const SpMat a = boson(BosonKind::Annihilate, atoms + l, space).matrix();
        radiation += sl_dissipator(gammas.radiation[static_cast<size_t>(l)].value, a);
    }

    SpMat matter(d2, d2);
    for (int r = 0; r < atoms; ++r) matter += dhl_site_block(gammas, r, space);

    SpMat interaction(d2, d2);
    if (n > 0) {
        const std::vector<SparseOp> phi =
            radiation_field(RadiationParams{N, n, lambdas}, space, atoms);
        std::vector<SparseOp> raising;
        raising.reserve(static_cast<size_t>(atoms));
        for (int r = 0; r < atoms; ++r) raising.push_back(spin_from_fermions(r, space).plus);
        const SparseOp h = interaction_hamiltonian(raising, phi);
        interaction = kI * commutator_super(h.matrix());
    }

    Superoperator out;
    out.space = space;
    out.picture = Picture::Heisenberg;
    out.matrix = SpMat(matter + radiation + interaction);
    out.provenance = "DHL stochastic-limit generator, N=" + std::to_string(N) +
                     ", n=" + std::to_string(n);
    out.blocks.emplace_back("matter", std::move(matter));
    out.blocks.emplace_back("radiation", std::move(radiation));
    out.blocks.emplace_back("interaction", std::move(interaction));
    check_internal_invariants(out, "build_dhlsl_generator");
    return out;
}

Superoperator matter_generator(double gamma1, double gamma2, double eta, double epsilon,
                               int site, const SpacePtr& space) {
    if (!(gamma2 > 0.0) || gamma2 > 2.0 * gamma1 * (1.0 + 1e-12))
        throw ParamInvariantViolation("matter rates must satisfy 0 < gamma2 <= 2*gamma1");
    if (eta < -1.0 || eta > 1.0)
        throw ParamInvariantViolation("the pump parameter must satisfy -1 <= eta <= 1");
    const SpMat sp = pauli(PauliKind::Plus, site, space).matrix();
    const SpMat sm = pauli(PauliKind::Minus, site, space).matrix();
    const SpMat sz = pauli(PauliKind::Z, site, space).matrix();
    Superoperator out;
    out.space = space;
    out.picture = Picture::Heisenberg;
    out.matrix = spin_matter_block(gamma1, gamma2, eta, epsilon, sp, sm, sz);
    out.provenance = "single-site matter generator";
    return out;
}

Superoperator dhl_matter_site_generator(const GammaSet& gammas, int site, const SpacePtr& space) {
    if (gammas.model != GammaModel::DHL)
        throw ParamMismatchError("dhl_matter_site_generator needs a DHL gamma set");
    Superoperator out;
    out.space = space;
    out.picture = Picture::Heisenberg;
    out.matrix = dhl_site_block(gammas, site, space);
    out.provenance = "DHL single-site matter dissipator";
    return out;
}

Superoperator dhl_matter_compressed(const GammaSet& gammas) {
    SpacePtr fspace = build_space(HilbertSpec{{Site::fermion_pair()}});
    const Superoperator l2 = dhl_matter_site_generator(gammas, 0, fspace);
    const SpinTriple f = spin_from_fermions(0, fspace);
    const Eigen::MatrixXcd lifts[4] = {
        Eigen::MatrixXcd(SparseOp::identity(fspace).dense()),
        f.plus.dense(), f.minus.dense(), f.z.dense()};

    // one-electron basis columns: |upper>, |lower> map to spin up, down
    Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(4, 2);
    V(2, 0) = 1.0;
    V(1, 1) = 1.0;

    const Eigen::Matrix2cd sp = pauli_local(PauliKind::Plus);
    const Eigen::Matrix2cd sm = pauli_local(PauliKind::Minus);
    const Eigen::Matrix2cd sz = pauli_local(PauliKind::Z);

    const Eigen::MatrixXcd l2d = l2.dense();
    Eigen::MatrixXcd out4 = Eigen::MatrixXcd::Zero(4, 4);
    for (long c = 0; c < 2; ++c) {
        for (long r = 0; r < 2; ++r) {
            Eigen::Matrix2cd E = Eigen::Matrix2cd::Zero();
            E(r, c) = 1.0;
            // expand E in {I, sigma+, sigma-, sigma_z} and lift through the dictionary
            const Complex y0 = E.trace() / 2.0;
            const Complex yp = (sm * E).trace();
            const Complex ym = (sp * E).trace();
            const Complex yz = (sz * E).trace() / 2.0;
            const Eigen::MatrixXcd lifted =
                y0 * lifts[0] + yp * lifts[1] + ym * lifts[2] + yz * lifts[3];
            const Eigen::MatrixXcd image = unvectorize(l2d * vectorize(lifted), 4);
            const Eigen::MatrixXcd compressed = V.adjoint() * image * V;
            out4.col(c * 2 + r) = vectorize(compressed);
        }
    }

    Superoperator out;
    out.space = build_space(HilbertSpec{{Site::spin()}});
    out.picture = Picture::Heisenberg;
    out.matrix = out4.sparseView();
    out.provenance = "DHL matter dissipator compressed onto the spin algebra";
    return out;
}

} // namespace slgen
