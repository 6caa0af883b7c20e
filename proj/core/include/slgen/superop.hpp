// superop.hpp — generators as explicit matrices on column-vectorized
// operators, picture conversion and the complete-positivity check
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "slgen/ops.hpp"

namespace slgen {

enum class Picture { Heisenberg, Schrodinger };

// Linear map on vectorized operators. vec stacks columns: vec(X)[c*d + r] =
// X(r, c), so vec(A X B) = (B^T kron A) vec(X). Immutable after construction.
struct Superoperator {
    SpacePtr space;
    Picture picture{Picture::Heisenberg};
    SpMat matrix; // d^2 x d^2
    std::string provenance;
    std::vector<std::pair<std::string, SpMat>> blocks;

    long dim() const { return space->dim(); }
    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix); }
    double norm() const { return matrix.norm(); }
};

Eigen::VectorXcd vectorize(const SpMat& x);
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& x);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, long d);

// sparse Kronecker product, (a kron b)(ia*rb + ib, ja*cb + jb) = a(ia,ja) b(ib,jb)
SpMat kron(const SpMat& a, const SpMat& b);

SpMat left_mult(const SpMat& a);   // X -> A X
SpMat right_mult(const SpMat& b);  // X -> X B
SpMat commutator_super(const SpMat& h); // X -> [H, X]

// Heisenberg dissipation with a complex rate:
//   X -> Gamma (L^dag X L - X L^dag L) + conj(Gamma) (L^dag X L - L^dag L X).
// Re Gamma is a damping rate, Im Gamma a frequency shift of L^dag L.
SpMat sl_dissipator(Complex gamma, const SpMat& l);

// L applied to an operator; requires the Heisenberg picture and a matching space.
SparseOp apply(const Superoperator& sop, const SparseOp& x);

// Dual map: trace(L*(rho) X) = trace(rho L(X)) for all rho, X.
Superoperator to_schrodinger(const Superoperator& sop);

// residual of the hermiticity-preservation property L(X^dag) = L(X)^dag,
// relative to the map norm
double hermiticity_preservation_defect(const Superoperator& sop);
// residual |L(I)| (Heisenberg) relative to the map norm
double identity_kernel_defect(const Superoperator& sop);

struct KossakowskiReport {
    double min_eigenvalue{0.0};
    Eigen::VectorXd eigenvalues;
    double hermiticity_defect{0.0};
    bool completely_positive(double tol = 1e-10) const { return min_eigenvalue >= -tol; }
};

// Extracts the dissipative coefficient matrix of a Heisenberg generator in a
// traceless hermitian operator basis; its smallest eigenvalue is >= 0 exactly
// when the generated semigroup is completely positive.
KossakowskiReport kossakowski_check(const Superoperator& sop);

// Dense little-endian binary format: "SLGENSO1", u32 d, u8 picture tag,
// then d^4 (re, im) f64 pairs in column-major order.
void write_superoperator(std::ostream& os, const Superoperator& sop);
Superoperator read_superoperator(std::istream& is, SpacePtr space);

} // namespace slgen
