// ops.hpp — sparse operator algebra on tensor-product spaces: Pauli matrices,
// truncated boson ladders, paired fermi levels, embeddings and the collective
// radiation field
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "slgen/hilbert.hpp"

namespace slgen {

using Complex = std::complex<double>;
using SpMat = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

// Complex sparse matrix bound to the space it acts on. Values are immutable
// after construction; all algebra returns new operators. Structural zeros are
// kept as produced by the arithmetic, never pruned by tolerance.
class SparseOp {
public:
    SparseOp(SpacePtr space, SpMat matrix, bool hermitian_hint = false);

    static SparseOp zero(SpacePtr space);
    static SparseOp identity(SpacePtr space);

    const SpMat& matrix() const { return mat_; }
    const SpacePtr& space() const { return space_; }
    long dim() const { return space_->dim(); }
    bool hermitian_hint() const { return hermitian_hint_; }

    SparseOp adjoint() const;
    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat_); }

    SparseOp operator+(const SparseOp& o) const;
    SparseOp operator-(const SparseOp& o) const;
    SparseOp operator*(const SparseOp& o) const;
    SparseOp operator*(Complex a) const;
    SparseOp operator-() const { return *this * Complex(-1.0, 0.0); }

private:
    SpacePtr space_;
    SpMat mat_;
    bool hermitian_hint_{false};
};

inline SparseOp operator*(Complex a, const SparseOp& x) { return x * a; }
inline SparseOp operator*(double a, const SparseOp& x) { return x * Complex(a, 0.0); }

SparseOp commutator(const SparseOp& x, const SparseOp& y);
SparseOp anticommutator(const SparseOp& x, const SparseOp& y);
Complex trace(const SparseOp& x);
double frobenius_norm(const SparseOp& x);
double max_abs(const SparseOp& x);
// max entrywise |x - y|
double max_abs_diff(const SparseOp& x, const SparseOp& y);

// --- local building blocks -------------------------------------------------

enum class PauliKind { X, Y, Z, Plus, Minus };
enum class BosonKind { Annihilate, Create, Number };
enum class FermiLevel { Plus, Minus };
enum class FermiKind { Annihilate, Create };

// Local matrices (site-sized, not embedded).
Eigen::Matrix2cd pauli_local(PauliKind which);
SpMat boson_local(BosonKind op, int cutoff);
// 4x4 on the local occupation basis ordered (empty, lower, upper, both);
// the two levels of a pair anticommute within the site.
SpMat fermion_local(FermiLevel level, FermiKind op);

// --- embedded operators ----------------------------------------------------

// Kronecker embedding of a local operator at the given site, identity on all
// other factors. Operators embedded at different sites commute for every site
// kind; fermion pairs carry no sign string across sites.
SparseOp embed(const SpMat& local, int site, const SpacePtr& space);

SparseOp pauli(PauliKind which, int site, const SpacePtr& space);
SparseOp boson(BosonKind op, int site, const SpacePtr& space);
SparseOp fermion(FermiLevel level, FermiKind op, int site, const SpacePtr& space);

struct SpinTriple {
    SparseOp plus;
    SparseOp minus;
    SparseOp z;
};

// sigma_+ = b+^dag b-, sigma_- = b-^dag b+, sigma_z = n+ - n-. Restricted to
// the one-electron subspace the triple satisfies the Pauli relations.
SpinTriple spin_from_fermions(int site, const SpacePtr& space);

// Projector onto the one-electron subspace of a fermion-pair site.
SparseOp one_electron_projector(int site, const SpacePtr& space);

struct RadiationParams {
    int N{0};                    // half chain size; 2N+1 lattice sites
    int n{1};                    // number of boson modes
    std::vector<double> lambdas; // real mode couplings, length n
};

// Collective field phi_r = -i (2N+1)^{-1/2} sum_l lambda_l a_l e^{2 pi i l r / n}
// for r = -N..N, returned indexed by r + N. The space must end with n boson
// modes (sites site0 + l), where site0 defaults to the site after the matter
// stretch.
std::vector<SparseOp> radiation_field(const RadiationParams& p, const SpacePtr& space,
                                      int first_mode_site = -1);

// Per-site composites used by the lattice models.
struct CompositeModelOps {
    std::vector<SparseOp> phi;                  // per lattice site r (index r+N)
    std::vector<SpinTriple> sigma_from_fermions; // per fermion-pair site
    std::vector<SparseOp> projector_phys;        // matching projectors
};

// Assembles the collective field and, on fermion lattices, the per-site spin
// bilinears with their one-electron projectors.
CompositeModelOps make_composite_ops(const RadiationParams& p, const SpacePtr& space);

} // namespace slgen
