// sl_oracle.hpp — numerical certification of the van Hove limit at second
// order: discretized reservoirs, the rescaled second-order wave-operator term
// and its convergence to the reservoir coefficient prediction
#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "slgen/gamma.hpp"

namespace slgen {

struct DiscreteReservoir {
    std::vector<double> omega;     // strictly increasing mode frequencies
    std::vector<double> coupling2; // g_k^2 = J(omega_k) * dw (midpoint rule)
    double band_lo{0.0}, band_hi{0.0};

    double total_weight() const;
};

// Midpoint discretization of J over [band_lo, band_hi] into M modes. The band
// must contain the detuning root (the resonance carries the whole damping
// part), otherwise the construction refuses.
DiscreteReservoir discretize(const SpectralDensity& J, int M, double band_lo, double band_hi,
                             double resonance_root);

enum class SlChannel { Rotating, CounterRotating };

// Second-order term of the rescaled wave-operator expansion, system factor
// removed:
//   I_lambda(t) = -(1/lambda^2) int_0^t dt1 int_0^t1 dt2
//                 sum_k g_k^2 e^{i (omega_k - omega_ref)(t1 - t2)/lambda^2}.
// The counter-rotating channel carries the extra non-difference phase
// e^{2 i omega_R t1 / lambda^2}, so its magnitude must vanish with lambda.
// Evaluated by the closed-form antiderivative per mode; no time quadrature.
std::complex<double> second_order_term(SlChannel channel, const DiscreteReservoir& res,
                                       double omega_ref, double lambda, double t,
                                       double omega_R = 0.0);

struct ConvergenceRow {
    double lambda{0.0};
    std::complex<double> value_over_t;  // I_lambda(t) / t
    std::complex<double> predicted;     // -Gamma_-
    double abs_error{0.0};              // |I/t - predicted|
    double counter_rotating_magnitude{0.0};
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    bool error_monotone{true};
    std::complex<double> gamma;
    double discretization_weight_defect{0.0}; // |sum g_k^2 - integral J|
};

// Runs second_order_term along a decreasing lambda sequence against the
// quadrature value of the reservoir coefficient for the same density.
// cr_strength scales the counter-rotating magnitude column (the relative
// weight of the counter-rotating coupling); it does not affect the limit.
ConvergenceTable convergence_report(const SpectralDensity& J, int M, double band_lo,
                                    double band_hi, const std::vector<double>& lambda_seq,
                                    double t, double omega_ref, double omega_R,
                                    const GammaOptions& gopt = {}, double cr_strength = 1.0);

// First-order time-consecutive residual: the reservoir kernel integrated over
// the rescaled window [(t - t')/lambda^2, t/lambda^2]. Vanishes with lambda
// for t > t' when the discretization approximates a continuum; stays finite
// for an isolated mode. t' = 0 gives exactly zero.
double time_consecutive_check(const DiscreteReservoir& res, double omega_ref, double lambda,
                              double t, double t_prime);

// CSV columns: lambda,re_I_over_t,im_I_over_t,re_pred,im_pred,abs_err,cr_mag
void write_convergence_csv(std::ostream& os, const ConvergenceTable& table);

} // namespace slgen
