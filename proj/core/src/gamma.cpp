#include "slgen/gamma.hpp"

#include <cmath>
#include <numbers>

#include "slgen/parallel.hpp"
#include "slgen/quadrature.hpp"

namespace slgen {

namespace {

using Cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

GammaCoefficient zero_coefficient(const LinearDetuning& det) {
    GammaCoefficient c;
    c.resonance = det.root;
    c.resonance_in_support = false;
    return c;
}

} // namespace

std::vector<double> GammaOptions::effective_eps_seq() const {
    if (!eps_seq.empty()) return eps_seq;
    std::vector<double> seq;
    double e = 0.1;
    for (int i = 0; i <= 6; ++i, e *= 0.5) seq.push_back(e);
    return seq;
}

GammaCoefficient gamma_minus(const SpectralDensity& J, const LinearDetuning& detuning,
                             const GammaOptions& opt) {
    if (J.is_zero()) return zero_coefficient(detuning);

    const std::vector<double> eps = opt.effective_eps_seq();
    if (eps.size() < 3)
        throw ValidationError("gamma_minus: regulator sequence needs at least 3 entries");
    for (size_t i = 1; i < eps.size(); ++i)
        if (!(eps[i] > 0.0) || !(eps[i] < eps[i - 1]))
            throw ValidationError("gamma_minus: regulator sequence must be positive, decreasing");

    const double sign = opt.conjugate_convention ? -detuning.sign : detuning.sign;

    GammaCoefficient out;
    out.resonance = detuning.root;
    out.resonance_in_support =
        detuning.root >= J.support_lo() && detuning.root <= J.support_hi();
    out.eps_seq = eps;

    std::vector<double> breaks = J.breakpoints();
    if (out.resonance_in_support) breaks.push_back(detuning.root);

    QuadOptions qopt;
    qopt.abs_tol = opt.quad_abs_tol;
    qopt.rel_tol = opt.quad_rel_tol;
    qopt.max_intervals = opt.max_intervals;

    out.gamma_at_eps.reserve(eps.size());
    for (double e : eps) {
        auto integrand = [&](double w) -> Cd {
            const double delta = sign * (w - detuning.root);
            return J(w) / Cd(e, -delta);
        };
        out.gamma_at_eps.push_back(
            integrate_adaptive(integrand, J.support_lo(), J.support_hi(), breaks, qopt).value);
    }

    out.extrapolation_diagonal = extrapolate_to_zero(eps, out.gamma_at_eps);
    out.value = out.extrapolation_diagonal.back();
    const size_t m = out.extrapolation_diagonal.size();
    out.residual = std::abs(out.extrapolation_diagonal[m - 1] - out.extrapolation_diagonal[m - 2]);
    out.residual_ok = out.residual <= opt.residual_tolerance * std::max(1.0, std::abs(out.value));
    return out;
}

std::complex<double> gamma_flat_closed_form(double J0, double lo, double hi,
                                            const LinearDetuning& detuning) {
    if (hi <= lo) throw ValidationError("gamma_flat_closed_form: empty support");
    const double r = detuning.root;
    double re = 0.0;
    if (r > lo && r < hi) re = kPi * J0;
    else if (r == lo || r == hi) re = 0.5 * kPi * J0;
    // principal value of J0 / (w - r), then the detuning slope sign
    double pv;
    if (r > lo && r < hi) pv = J0 * std::log((hi - r) / (r - lo));
    else pv = J0 * std::log(std::abs((hi - r) / (lo - r)));
    return {re, detuning.sign * pv};
}

std::complex<double> gamma_lorentzian_closed_form(double J0, double center, double width,
                                                  double lo, double hi,
                                                  const LinearDetuning& detuning) {
    if (hi <= lo) throw ValidationError("gamma_lorentzian_closed_form: empty support");
    const double r = detuning.root;
    const double w2 = width * width;
    double re = 0.0;
    if (r >= lo && r <= hi) {
        const double x = r - center;
        re = kPi * J0 * w2 / (x * x + w2);
        if (r == lo || r == hi) re *= 0.5;
    }
    // PV of integral J0 w^2 / ((u^2 + w^2)(u - rho)) du with u = omega - center
    const double rho = r - center;
    const double C = 1.0 / (rho * rho + w2);
    const double A = -C;
    const double B = -C * rho;
    auto F = [&](double u) {
        return 0.5 * A * std::log(u * u + w2) + (B / width) * std::atan(u / width) +
               C * std::log(std::abs(u - rho));
    };
    const double pv = J0 * w2 * (F(hi - center) - F(lo - center));
    return {re, detuning.sign * pv};
}

GammaSet gamma_set_hl(const HLDensities& densities, double omega_R, double mu,
                      const GammaOptions& opt) {
    if (std::abs(omega_R - 2.0 * mu) > opt.resonance_tolerance * std::max(1.0, std::abs(omega_R)))
        throw ResonanceViolation(
            "gamma_set_hl: omega_R must equal 2*mu (the coupling term is stationary only "
            "on resonance); got omega_R=" + std::to_string(omega_R) +
            ", 2*mu=" + std::to_string(2.0 * mu));
    GammaSet set;
    set.model = GammaModel::HL;
    const long n = static_cast<long>(densities.g.size());
    set.radiation.resize(static_cast<size_t>(n));
    parallel_for(n + 2, [&](long i) {
        if (i < n)
            set.radiation[static_cast<size_t>(i)] =
                gamma_minus(densities.g[static_cast<size_t>(i)], LinearDetuning{1.0, omega_R}, opt);
        else if (i == n)
            set.h1 = gamma_minus(densities.h1, LinearDetuning{1.0, omega_R}, opt);
        else
            set.h2 = gamma_minus(densities.h2, LinearDetuning{1.0, -omega_R}, opt);
    });
    return set;
}

GammaSet gamma_set_dhl(const DHLDensities& densities, double omega_R, double mu,
                       const GammaOptions& opt) {
    if (std::abs(omega_R - 2.0 * mu) > opt.resonance_tolerance * std::max(1.0, std::abs(omega_R)))
        throw ResonanceViolation(
            "gamma_set_dhl: omega_R must equal 2*mu (the coupling term is stationary only "
            "on resonance); got omega_R=" + std::to_string(omega_R) +
            ", 2*mu=" + std::to_string(2.0 * mu));
    GammaSet set;
    set.model = GammaModel::DHL;
    const long n = static_cast<long>(densities.g.size());
    set.radiation.resize(static_cast<size_t>(n));
    parallel_for(n + 4, [&](long i) {
        if (i < n)
            set.radiation[static_cast<size_t>(i)] =
                gamma_minus(densities.g[static_cast<size_t>(i)], LinearDetuning{1.0, omega_R}, opt);
        else if (i == n)
            set.B_plus = gamma_minus(densities.B_plus, LinearDetuning{1.0, mu}, opt);
        else if (i == n + 1)
            set.B_minus = gamma_minus(densities.B_minus, LinearDetuning{1.0, -mu}, opt);
        else if (i == n + 2)
            set.C_plus = gamma_minus(densities.C_plus, LinearDetuning{-1.0, mu}, opt);
        else
            set.C_minus = gamma_minus(densities.C_minus, LinearDetuning{-1.0, -mu}, opt);
    });
    return set;
}

} // namespace slgen
