#include "slgen/ops.hpp"

#include <cmath>
#include <numbers>

namespace slgen {

namespace {

const Complex kI{0.0, 1.0};

void require_same_space(const SparseOp& x, const SparseOp& y) {
    if (!x.space()->same_as(*y.space()))
        throw SpaceMismatchError("operands live on different spaces: " +
                                 x.space()->describe() + " vs " + y.space()->describe());
}

void require_site_kind(const SpacePtr& space, int site, SiteKind kind, const char* what) {
    if (site < 0 || site >= space->site_count())
        throw SiteMismatchError(std::string(what) + ": site index out of range");
    if (space->site(site).kind != kind)
        throw SiteMismatchError(std::string(what) + ": wrong site kind at index " +
                                std::to_string(site));
}

} // namespace

SparseOp::SparseOp(SpacePtr space, SpMat matrix, bool hermitian_hint)
    : space_(std::move(space)), mat_(std::move(matrix)), hermitian_hint_(hermitian_hint) {
    if (!space_) throw ValidationError("SparseOp requires a space");
    if (mat_.rows() != space_->dim() || mat_.cols() != space_->dim())
        throw SpaceMismatchError("matrix is " + std::to_string(mat_.rows()) + "x" +
                                 std::to_string(mat_.cols()) + " but space has dimension " +
                                 std::to_string(space_->dim()));
    if (!mat_.isCompressed()) mat_.makeCompressed();
    if (hermitian_hint_) {
        SpMat diff = SpMat(mat_.adjoint()) - mat_;
        for (int k = 0; k < diff.outerSize(); ++k)
            for (SpMat::InnerIterator it(diff, k); it; ++it)
                if (it.value() != Complex(0.0, 0.0))
                    throw ValidationError("hermitian_hint set but operator is not hermitian");
    }
}

SparseOp SparseOp::zero(SpacePtr space) {
    const long d = space->dim();
    return SparseOp(std::move(space), SpMat(d, d));
}

SparseOp SparseOp::identity(SpacePtr space) {
    const long d = space->dim();
    SpMat m(d, d);
    m.setIdentity();
    return SparseOp(std::move(space), std::move(m), true);
}

SparseOp SparseOp::adjoint() const {
    return SparseOp(space_, SpMat(mat_.adjoint()), hermitian_hint_);
}

SparseOp SparseOp::operator+(const SparseOp& o) const {
    require_same_space(*this, o);
    return SparseOp(space_, SpMat(mat_ + o.mat_));
}

SparseOp SparseOp::operator-(const SparseOp& o) const {
    require_same_space(*this, o);
    return SparseOp(space_, SpMat(mat_ - o.mat_));
}

SparseOp SparseOp::operator*(const SparseOp& o) const {
    require_same_space(*this, o);
    return SparseOp(space_, SpMat(mat_ * o.mat_));
}

SparseOp SparseOp::operator*(Complex a) const {
    return SparseOp(space_, SpMat(mat_ * a));
}

SparseOp commutator(const SparseOp& x, const SparseOp& y) { return x * y - y * x; }

SparseOp anticommutator(const SparseOp& x, const SparseOp& y) { return x * y + y * x; }

Complex trace(const SparseOp& x) {
    Complex t{0.0, 0.0};
    const SpMat& m = x.matrix();
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMat::InnerIterator it(m, k); it; ++it)
            if (it.row() == it.col()) t += it.value();
    return t;
}

double frobenius_norm(const SparseOp& x) { return x.matrix().norm(); }

double max_abs(const SparseOp& x) {
    double m = 0.0;
    const SpMat& mat = x.matrix();
    for (int k = 0; k < mat.outerSize(); ++k)
        for (SpMat::InnerIterator it(mat, k); it; ++it)
            m = std::max(m, std::abs(it.value()));
    return m;
}

double max_abs_diff(const SparseOp& x, const SparseOp& y) {
    require_same_space(x, y);
    return max_abs(x - y);
}

Eigen::Matrix2cd pauli_local(PauliKind which) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    switch (which) {
        case PauliKind::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case PauliKind::Y: m(0, 1) = -kI; m(1, 0) = kI; break;
        case PauliKind::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        case PauliKind::Plus: m(0, 1) = 1.0; break;
        case PauliKind::Minus: m(1, 0) = 1.0; break;
    }
    return m;
}

SpMat boson_local(BosonKind op, int cutoff) {
    const int d = cutoff + 1;
    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(d));
    switch (op) {
        case BosonKind::Annihilate:
            for (int m = 1; m < d; ++m) trip.emplace_back(m - 1, m, std::sqrt(double(m)));
            break;
        case BosonKind::Create:
            for (int m = 1; m < d; ++m) trip.emplace_back(m, m - 1, std::sqrt(double(m)));
            break;
        case BosonKind::Number:
            for (int m = 1; m < d; ++m) trip.emplace_back(m, m, double(m));
            break;
    }
    SpMat mat(d, d);
    mat.setFromTriplets(trip.begin(), trip.end());
    return mat;
}

SpMat fermion_local(FermiLevel level, FermiKind op) {
    // local occupation basis order: (empty, lower, upper, both) = (0, 1, 2, 3)
    std::vector<Triplet> trip;
    if (level == FermiLevel::Minus) {
        // b- : |lower> -> |empty>, |both> -> |upper>
        trip.emplace_back(0, 1, 1.0);
        trip.emplace_back(2, 3, 1.0);
    } else {
        // b+ : |upper> -> |empty>, |both> -> -|lower> (sign from the occupied
        // lower level preceding it in the ordering)
        trip.emplace_back(0, 2, 1.0);
        trip.emplace_back(1, 3, -1.0);
    }
    SpMat mat(4, 4);
    mat.setFromTriplets(trip.begin(), trip.end());
    if (op == FermiKind::Create) mat = SpMat(mat.adjoint());
    return mat;
}

SparseOp embed(const SpMat& local, int site, const SpacePtr& space) {
    if (site < 0 || site >= space->site_count())
        throw SiteMismatchError("embed: site index out of range");
    const long ds = space->factor_dim(site);
    if (local.rows() != ds || local.cols() != ds)
        throw SiteMismatchError("embed: local operator is " + std::to_string(local.rows()) +
                                "x" + std::to_string(local.cols()) + " but site " +
                                std::to_string(site) + " has dimension " + std::to_string(ds));
    const long right = space->stride(site);
    const long left = space->dim() / (ds * right);

    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(local.nonZeros() * left * right));
    for (int k = 0; k < local.outerSize(); ++k) {
        for (SpMat::InnerIterator it(local, k); it; ++it) {
            for (long L = 0; L < left; ++L) {
                const long rowBase = (L * ds + it.row()) * right;
                const long colBase = (L * ds + it.col()) * right;
                for (long R = 0; R < right; ++R)
                    trip.emplace_back(rowBase + R, colBase + R, it.value());
            }
        }
    }
    SpMat mat(space->dim(), space->dim());
    mat.setFromTriplets(trip.begin(), trip.end());
    return SparseOp(space, std::move(mat));
}

SparseOp pauli(PauliKind which, int site, const SpacePtr& space) {
    require_site_kind(space, site, SiteKind::Spin, "pauli");
    return embed(pauli_local(which).sparseView(), site, space);
}

SparseOp boson(BosonKind op, int site, const SpacePtr& space) {
    require_site_kind(space, site, SiteKind::BosonMode, "boson");
    return embed(boson_local(op, space->site(site).boson_cutoff), site, space);
}

SparseOp fermion(FermiLevel level, FermiKind op, int site, const SpacePtr& space) {
    require_site_kind(space, site, SiteKind::FermionPair, "fermion");
    return embed(fermion_local(level, op), site, space);
}

SpinTriple spin_from_fermions(int site, const SpacePtr& space) {
    require_site_kind(space, site, SiteKind::FermionPair, "spin_from_fermions");
    SparseOp bp = fermion(FermiLevel::Plus, FermiKind::Annihilate, site, space);
    SparseOp bm = fermion(FermiLevel::Minus, FermiKind::Annihilate, site, space);
    SparseOp bpd = bp.adjoint();
    SparseOp bmd = bm.adjoint();
    return SpinTriple{bpd * bm, bmd * bp, bpd * bp - bmd * bm};
}

SparseOp one_electron_projector(int site, const SpacePtr& space) {
    require_site_kind(space, site, SiteKind::FermionPair, "one_electron_projector");
    std::vector<Triplet> trip{{1, 1, 1.0}, {2, 2, 1.0}};
    SpMat local(4, 4);
    local.setFromTriplets(trip.begin(), trip.end());
    return embed(local, site, space);
}

CompositeModelOps make_composite_ops(const RadiationParams& p, const SpacePtr& space) {
    CompositeModelOps ops;
    if (p.n > 0) ops.phi = radiation_field(p, space);
    for (int s = 0; s < space->site_count(); ++s) {
        if (space->site(s).kind != SiteKind::FermionPair) continue;
        ops.sigma_from_fermions.push_back(spin_from_fermions(s, space));
        ops.projector_phys.push_back(one_electron_projector(s, space));
    }
    return ops;
}

std::vector<SparseOp> radiation_field(const RadiationParams& p, const SpacePtr& space,
                                      int first_mode_site) {
    if (static_cast<int>(p.lambdas.size()) != p.n)
        throw ParamMismatchError("radiation_field: coupling list has " +
                                 std::to_string(p.lambdas.size()) + " entries, expected " +
                                 std::to_string(p.n));
    const int site0 = first_mode_site >= 0 ? first_mode_site : space->site_count() - p.n;
    for (int l = 0; l < p.n; ++l)
        require_site_kind(space, site0 + l, SiteKind::BosonMode, "radiation_field");

    std::vector<SparseOp> modes;
    modes.reserve(static_cast<size_t>(p.n));
    for (int l = 0; l < p.n; ++l) modes.push_back(boson(BosonKind::Annihilate, site0 + l, space));

    const double norm = 1.0 / std::sqrt(double(2 * p.N + 1));
    std::vector<SparseOp> phi;
    phi.reserve(static_cast<size_t>(2 * p.N + 1));
    for (int r = -p.N; r <= p.N; ++r) {
        SparseOp acc = SparseOp::zero(space);
        for (int l = 0; l < p.n; ++l) {
            const double angle = 2.0 * std::numbers::pi * double(l) * double(r) / double(p.n);
            const Complex phase = std::exp(kI * angle);
            acc = acc + (-kI * norm * p.lambdas[static_cast<size_t>(l)] * phase) * modes[static_cast<size_t>(l)];
        }
        phi.push_back(acc);
    }
    return phi;
}

} // namespace slgen
