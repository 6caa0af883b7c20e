// models.hpp — the dissipative laser generators: the AS lattice generator and
// the stochastic-limit generators of the HL and DHL hamiltonians
#pragma once

#include <vector>

#include "slgen/gamma.hpp"
#include "slgen/superop.hpp"

namespace slgen {

// 2N+1 two-level atoms coupled to n damped modes through the collective
// radiation field. All rates are in units of a caller-declared reference rate.
struct ASParams {
    int N{0};
    int n{0};
    double epsilon{1.0};           // atomic gap (> 0)
    double gamma1{1.0};            // coherence damping
    double gamma2{2.0};            // inversion damping, 0 < gamma2 <= 2*gamma1
    double eta{0.0};               // pump parameter in [-1, 1]
    std::vector<double> omega;     // mode frequencies (> 0), length n
    std::vector<double> kappa;     // mode dampings (> 0), length n
    std::vector<double> lambda;    // real mode couplings, length n

    void validate() const;
    HilbertSpec space_spec(int boson_cutoff) const {
        return HilbertSpec::spin_lattice(N, n, boson_cutoff);
    }
};

struct HLParams {
    double omega_R{2.0}; // mode frequency; the resonance condition is omega_R = 2*mu
    double mu{1.0};      // half atomic gap
    double alpha{1.0};   // dipolar coupling strength
    double beta{0.0};    // counter-rotating strength (>= 0), enters only the
                         // stochastic-limit convergence checks
    void validate() const;
};

struct DHLParams {
    double omega_R{2.0};
    double mu{1.0};
    void validate() const;
};

// L = L_mat + L_rad + i[H_int, .] in the Heisenberg picture. Blocks are named
// "matter", "radiation", "interaction".
Superoperator build_as_generator(const ASParams& p, const SpacePtr& space);

// L = L1 + L2 + L3 from an HL gamma set: L1 radiation dissipators with
// Gamma_j, L2 matter dissipators with Gamma_h1 (sigma_- jump) and Gamma_h2
// (sigma_+ jump), L3 the collective-field commutator. Block names match the
// AS builder so the two can be compared term by term.
Superoperator build_hlsl_generator(const GammaSet& gammas, const std::vector<double>& lambdas,
                                   const SpacePtr& space);

// Fermionic variant: per-site dissipators with jumps b+, b+^dag, b-, b-^dag
// and coefficients Gamma_B+/C+/B-/C-; the coupling uses b+^dag b- in place of
// the raising operator.
Superoperator build_dhlsl_generator(const GammaSet& gammas, const std::vector<double>& lambdas,
                                    const SpacePtr& space);

// Single-site matter generator, no mode coupling. Used for reductions and
// cross-model comparisons; does not constrain the sign of epsilon.
Superoperator matter_generator(double gamma1, double gamma2, double eta, double epsilon,
                               int site, const SpacePtr& space);

// The DHL matter dissipator of one fermion-pair site (no radiation, no coupling).
Superoperator dhl_matter_site_generator(const GammaSet& gammas, int site, const SpacePtr& space);

// Compression of the single-site DHL matter dissipator onto the spin algebra:
// observables are lifted through the fermionic dictionary (identity -> identity,
// sigma_u -> bilinear sigma_u), the dissipator applied, and the result
// restricted to the one-electron subspace. Returns a generator on [Spin].
Superoperator dhl_matter_compressed(const GammaSet& gammas);

// H_int = sum_r (raising_r phi_r + h.c.)
SparseOp interaction_hamiltonian(const std::vector<SparseOp>& raising,
                                 const std::vector<SparseOp>& phi);

} // namespace slgen
