#include "slgen/sl_oracle.hpp"

#include <cmath>
#include <ostream>

#include "slgen/parallel.hpp"
#include "slgen/textio.hpp"

namespace slgen {

namespace {

using Cd = std::complex<double>;
const Cd kI{0.0, 1.0};

// f(theta) = i/theta - (e^{i theta} - 1)/theta^2 = sum_m (i theta)^m / (m+2)!
// so that the per-mode double integral is (t^2/lambda^2) f(Delta t / lambda^2).
Cd kernel_f(double theta) {
    if (std::abs(theta) < 0.1) {
        Cd acc{0.0, 0.0};
        Cd pow{1.0, 0.0};
        double fact = 2.0; // (m+2)! running value
        for (int m = 0;; ++m) {
            const Cd term = pow / fact;
            acc += term;
            if (std::abs(term) < 1e-20) break;
            pow *= kI * theta;
            fact *= double(m + 3);
            if (m > 20) break;
        }
        return acc;
    }
    const Cd e = std::exp(kI * theta);
    return kI / theta - (e - 1.0) / (theta * theta);
}

// E(x; t) = int_0^t e^{i x s} ds, stable near x = 0
Cd phase_integral(double x, double t) {
    const double xt = x * t;
    if (std::abs(xt) < 1e-4) {
        Cd acc{0.0, 0.0};
        Cd pow{1.0, 0.0};
        double fact = 1.0; // (m+1)! running value
        for (int m = 0; m < 8; ++m) {
            acc += pow / fact;
            pow *= kI * xt;
            fact *= double(m + 2);
        }
        return t * acc;
    }
    return (std::exp(kI * xt) - 1.0) / (kI * x);
}

// d/dx E(x; t) = (t x e^{i x t} + i (e^{i x t} - 1)) / x^2
Cd phase_integral_dx(double x, double t) {
    const double xt = x * t;
    if (std::abs(xt) < 1e-4) {
        // i t^2 sum_{m>=1} m (i x t)^{m-1} / (m+1)!
        Cd acc{0.0, 0.0};
        Cd pow{1.0, 0.0};
        double fact = 2.0;
        for (int m = 1; m < 8; ++m) {
            acc += double(m) * pow / fact;
            pow *= kI * xt;
            fact *= double(m + 2);
        }
        return kI * t * t * acc;
    }
    const Cd e = std::exp(kI * xt);
    return (t * x * e + kI * (e - 1.0)) / (x * x);
}

} // namespace

double DiscreteReservoir::total_weight() const {
    double s = 0.0;
    for (double g2 : coupling2) s += g2;
    return s;
}

DiscreteReservoir discretize(const SpectralDensity& J, int M, double band_lo, double band_hi,
                             double resonance_root) {
    if (M < 2) throw ValidationError("discretize: need at least 2 modes");
    if (!(band_hi > band_lo)) throw ValidationError("discretize: empty band");
    if (resonance_root < band_lo || resonance_root > band_hi)
        throw BandTooNarrowError("discretize: the resonance at " +
                                 std::to_string(resonance_root) +
                                 " lies outside the band [" + std::to_string(band_lo) + ", " +
                                 std::to_string(band_hi) + "]");
    DiscreteReservoir res;
    res.band_lo = band_lo;
    res.band_hi = band_hi;
    res.omega.reserve(static_cast<size_t>(M));
    res.coupling2.reserve(static_cast<size_t>(M));
    const double dw = (band_hi - band_lo) / double(M);
    for (int k = 0; k < M; ++k) {
        const double w = band_lo + (double(k) + 0.5) * dw;
        res.omega.push_back(w);
        res.coupling2.push_back(J(w) * dw);
    }
    return res;
}

Cd second_order_term(SlChannel channel, const DiscreteReservoir& res, double omega_ref,
                     double lambda, double t, double omega_R) {
    if (!(lambda > 0.0) || lambda > 1.0)
        throw ValidationError("second_order_term: lambda must lie in (0, 1]");
    if (!(t > 0.0)) throw ValidationError("second_order_term: t must be > 0");
    const double l2 = lambda * lambda;
    Cd acc{0.0, 0.0};
    if (channel == SlChannel::Rotating) {
        const double pref = t * t / l2;
        for (size_t k = 0; k < res.omega.size(); ++k) {
            const double theta = (res.omega[k] - omega_ref) * t / l2;
            acc += res.coupling2[k] * pref * kernel_f(theta);
        }
        return -acc;
    }
    // counter-rotating: the t1-only phase 2 omega_R / lambda^2 survives the
    // contraction, so the outer integral averages to O(lambda^2)
    const double b = 2.0 * omega_R / l2;
    for (size_t k = 0; k < res.omega.size(); ++k) {
        const double a = (res.omega[k] - omega_ref) / l2;
        Cd kcr;
        if (std::abs(a) * t < 1e-8 * std::max(1.0, std::abs(b) * t)) {
            kcr = phase_integral_dx(b, t) / kI;
        } else {
            kcr = (phase_integral(a + b, t) - phase_integral(b, t)) / (kI * a);
        }
        acc += res.coupling2[k] * kcr;
    }
    return -acc / l2;
}

ConvergenceTable convergence_report(const SpectralDensity& J, int M, double band_lo,
                                    double band_hi, const std::vector<double>& lambda_seq,
                                    double t, double omega_ref, double omega_R,
                                    const GammaOptions& gopt, double cr_strength) {
    for (size_t i = 1; i < lambda_seq.size(); ++i)
        if (!(lambda_seq[i] < lambda_seq[i - 1]))
            throw ValidationError("convergence_report: lambda sequence must be decreasing");

    const DiscreteReservoir res = discretize(J, M, band_lo, band_hi, omega_ref);
    const GammaCoefficient gamma = gamma_minus(J, LinearDetuning{1.0, omega_ref}, gopt);

    ConvergenceTable table;
    table.gamma = gamma.value;
    table.discretization_weight_defect =
        std::abs(res.total_weight() - J.total_weight_by_quadrature());
    table.rows.resize(lambda_seq.size());
    parallel_for(static_cast<long>(lambda_seq.size()), [&](long i) {
        const double lambda = lambda_seq[static_cast<size_t>(i)];
        ConvergenceRow row;
        row.lambda = lambda;
        const Cd I = second_order_term(SlChannel::Rotating, res, omega_ref, lambda, t);
        row.value_over_t = I / t;
        row.predicted = -gamma.value;
        row.abs_error = std::abs(row.value_over_t - row.predicted);
        row.counter_rotating_magnitude =
            cr_strength * std::abs(second_order_term(SlChannel::CounterRotating, res, omega_ref,
                                                     lambda, t, omega_R));
        table.rows[static_cast<size_t>(i)] = row;
    });
    for (size_t i = 1; i < table.rows.size(); ++i)
        if (table.rows[i].abs_error >= table.rows[i - 1].abs_error) table.error_monotone = false;
    return table;
}

double time_consecutive_check(const DiscreteReservoir& res, double omega_ref, double lambda,
                              double t, double t_prime) {
    if (!(lambda > 0.0)) throw ValidationError("time_consecutive_check: lambda must be > 0");
    if (t_prime < 0.0 || !(t > t_prime))
        throw OrderViolationError("time_consecutive_check requires t > t' >= 0");
    if (t_prime == 0.0) return 0.0;
    const double l2 = lambda * lambda;
    const double t0 = (t - t_prime) / l2;
    const double window = t_prime / l2;
    Cd acc{0.0, 0.0};
    for (size_t k = 0; k < res.omega.size(); ++k) {
        const double delta = res.omega[k] - omega_ref;
        // int_{t0}^{t0 + window} e^{i delta u} du
        acc += res.coupling2[k] * std::exp(kI * delta * t0) * phase_integral(delta, window);
    }
    return std::abs(acc);
}

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table) {
    os << "lambda,re_I_over_t,im_I_over_t,re_pred,im_pred,abs_err,cr_mag\n";
    for (const ConvergenceRow& r : table.rows) {
        os << format_g17(r.lambda) << "," << format_g17(r.value_over_t.real()) << ","
           << format_g17(r.value_over_t.imag()) << "," << format_g17(r.predicted.real()) << ","
           << format_g17(r.predicted.imag()) << "," << format_g17(r.abs_error) << ","
           << format_g17(r.counter_rotating_magnitude) << "\n";
    }
}

} // namespace slgen
