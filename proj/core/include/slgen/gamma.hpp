// gamma.hpp — complex reservoir coefficients: half-line time integral of the
// reservoir correlation, evaluated as a regularized frequency integral with
// extrapolation of the regulator to zero
#pragma once

#include <complex>
#include <vector>

#include "slgen/spectral.hpp"

namespace slgen {

// Unit-slope affine detuning Delta(omega) = sign * (omega - root).
struct LinearDetuning {
    double sign{1.0};
    double root{0.0};

    double operator()(double omega) const { return sign * (omega - root); }
};

struct GammaOptions {
    // regulator sequence, strictly decreasing; default 0.1 * 2^-i, i = 0..6
    std::vector<double> eps_seq{};
    double quad_abs_tol{1e-13};
    double quad_rel_tol{1e-11};
    long max_intervals{20000};
    double residual_tolerance{1e-6};
    // flips the sign of the oscillating exponent (conjugates the result);
    // kept for sensitivity checks of the time-integral convention
    bool conjugate_convention{false};
    double resonance_tolerance{1e-9};

    std::vector<double> effective_eps_seq() const;
};

struct GammaCoefficient {
    std::complex<double> value{0.0, 0.0};
    double resonance{0.0};          // root of the detuning
    bool resonance_in_support{false};
    std::vector<double> eps_seq;
    std::vector<std::complex<double>> gamma_at_eps;
    std::vector<std::complex<double>> extrapolation_diagonal;
    double residual{0.0};           // magnitude of the last extrapolation update
    bool residual_ok{true};
};

// Re = pi * J(root) (when the root lies in the support) plus the principal
// value of J/Delta in the imaginary part, both obtained by extrapolating
// integral of J(w) / (eps - i Delta(w)) over eps -> 0+.
GammaCoefficient gamma_minus(const SpectralDensity& J, const LinearDetuning& detuning,
                             const GammaOptions& opt = {});

// Closed forms, used as independent cross-checks of the quadrature path.
std::complex<double> gamma_flat_closed_form(double J0, double lo, double hi,
                                            const LinearDetuning& detuning);
std::complex<double> gamma_lorentzian_closed_form(double J0, double center, double width,
                                                  double lo, double hi,
                                                  const LinearDetuning& detuning);

struct HLDensities {
    std::vector<SpectralDensity> g; // one per radiation mode
    SpectralDensity h1;             // damping channel (sigma_- jump)
    SpectralDensity h2;             // pump channel (sigma_+ jump)
};

struct DHLDensities {
    std::vector<SpectralDensity> g;
    SpectralDensity B_plus, B_minus; // dissipation channels
    SpectralDensity C_plus, C_minus; // pump channels
};

enum class GammaModel { HL, DHL };

struct GammaSet {
    GammaModel model{GammaModel::HL};
    std::vector<GammaCoefficient> radiation; // per mode j
    // HL matter channels
    GammaCoefficient h1, h2;
    // DHL matter channels
    GammaCoefficient B_plus, B_minus, C_plus, C_minus;
};

// Detunings: radiation omega - omega_R; h1 omega - omega_R; h2 omega + omega_R.
// Requires the resonance condition omega_R = 2 mu, otherwise the coupling
// term would not be stationary under the free evolution.
GammaSet gamma_set_hl(const HLDensities& densities, double omega_R, double mu,
                      const GammaOptions& opt = {});

// Detunings: radiation omega - omega_R; B+/- : +(omega -/+ mu); C+/- : -(omega -/+ mu).
GammaSet gamma_set_dhl(const DHLDensities& densities, double omega_R, double mu,
                       const GammaOptions& opt = {});

} // namespace slgen
