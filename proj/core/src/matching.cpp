#include "slgen/matching.hpp"

#include <cmath>
#include <ostream>

#include "slgen/textio.hpp"

namespace slgen {

MatchReport as_from_hl_gammas(const GammaSet& gammas, double tolerance) {
    if (gammas.model != GammaModel::HL)
        throw ParamMismatchError("as_from_hl_gammas needs an HL gamma set");
    const Complex h1 = gammas.h1.value;
    const Complex h2 = gammas.h2.value;

    MatchReport r;
    r.model = GammaModel::HL;
    r.tolerance = tolerance;
    r.gamma1 = (h1 + h2).real();
    r.epsilon = (h1 - h2).imag();
    r.gamma2 = 2.0 * r.gamma1;

    const double pump_scale = h1.real() + h2.real();
    if (pump_scale == 0.0)
        throw DegeneratePumpError("as_from_hl_gammas: Re h1 + Re h2 = 0, eta is undefined");
    r.eta = (h2.real() - h1.real()) / pump_scale;
    r.eta_in_range = r.eta >= -1.0 - tolerance && r.eta <= 1.0 + tolerance;

    r.omega.reserve(gammas.radiation.size());
    r.kappa.reserve(gammas.radiation.size());
    for (const GammaCoefficient& g : gammas.radiation) {
        r.omega.push_back(g.value.imag());
        r.kappa.push_back(g.value.real());
    }

    // consistency of the two pump-rate equations with the resolved gamma2, eta
    r.residuals["re_h1"] = std::abs(h1.real() - 0.25 * r.gamma2 * (1.0 - r.eta));
    r.residuals["re_h2"] = std::abs(h2.real() - 0.25 * r.gamma2 * (1.0 + r.eta));
    r.gamma2_eq_2gamma1_residual = std::abs(r.gamma2 - 2.0 * r.gamma1);

    r.feasible = r.eta_in_range && r.gamma1 > 0.0;
    for (const auto& [key, value] : r.residuals) {
        (void)key;
        if (value > tolerance) r.feasible = false;
    }
    return r;
}

GammaTargets hl_gamma_targets_from_as(const ASParams& p, double free_im_sum) {
    p.validate();
    GammaTargets t;
    t.free_im_sum = free_im_sum;

    // the limit construction always yields gamma2 = 2*gamma1; off the
    // constraint the nearest admissible point keeps gamma2, eta, epsilon and
    // the distance |gamma1 - gamma2/2| is reported
    t.residual = std::abs(p.gamma1 - 0.5 * p.gamma2);
    if (t.residual > 1e-12 * std::max(1.0, p.gamma1)) {
        t.exact = false;
    } else {
        t.residual = 0.0;
    }

    GammaSet set;
    set.model = GammaModel::HL;
    set.radiation.resize(p.omega.size());
    for (size_t j = 0; j < p.omega.size(); ++j) {
        set.radiation[j].value = Complex(p.kappa[j], p.omega[j]);
        set.radiation[j].resonance_in_support = true;
    }
    set.h1.value = Complex(0.25 * p.gamma2 * (1.0 - p.eta), 0.5 * (free_im_sum + p.epsilon));
    set.h2.value = Complex(0.25 * p.gamma2 * (1.0 + p.eta), 0.5 * (free_im_sum - p.epsilon));
    set.h1.resonance_in_support = set.h1.value.real() > 0.0;
    set.h2.resonance_in_support = set.h2.value.real() > 0.0;
    t.gammas = std::move(set);
    return t;
}

MatchReport dhl_match_check(const GammaSet& gammas, double tolerance) {
    if (gammas.model != GammaModel::DHL)
        throw ParamMismatchError("dhl_match_check needs a DHL gamma set");
    const Complex bp = gammas.B_plus.value, bm = gammas.B_minus.value;
    const Complex cp = gammas.C_plus.value, cm = gammas.C_minus.value;

    MatchReport r;
    r.model = GammaModel::DHL;
    r.tolerance = tolerance;
    r.gamma1 = (bp + bm + cp + cm).real();
    r.epsilon = (bp - bm - cp + cm).imag();

    const double up_rate = (bp + cp).real();   // relaxation rate of the upper occupation
    const double down_rate = (bm + cm).real(); // relaxation rate of the lower occupation
    r.dhl_balance_residual = std::abs(up_rate - down_rate);
    const bool balanced = r.dhl_balance_residual <= tolerance;

    r.gamma2 = 2.0 * up_rate;
    if (up_rate != 0.0) {
        r.eta = (cp.real() - cm.real()) / up_rate;
    } else {
        r.eta = 0.0;
        r.notes = "degenerate: Re(B+ + C+) = 0, eta set to 0";
    }
    r.eta_in_range = r.eta >= -1.0 - tolerance && r.eta <= 1.0 + tolerance;

    // balanced sets force equal rates: gamma1 == gamma2
    r.residuals["gamma1_eq_gamma2"] = std::abs(r.gamma1 - r.gamma2);

    r.feasible = balanced && r.eta_in_range && r.gamma1 > 0.0;
    if (!balanced && r.notes.empty())
        r.notes = "unbalanced: the inversion equation is not of the single-rate form";

    r.omega.reserve(gammas.radiation.size());
    r.kappa.reserve(gammas.radiation.size());
    for (const GammaCoefficient& g : gammas.radiation) {
        r.omega.push_back(g.value.imag());
        r.kappa.push_back(g.value.real());
    }
    return r;
}

void write_match_report(std::ostream& os, const MatchReport& report) {
    os << "model = " << (report.model == GammaModel::HL ? "HL" : "DHL") << "\n";
    os << "feasible = " << (report.feasible ? "true" : "false") << "\n";
    os << "gamma1 = " << format_g17(report.gamma1) << "\n";
    os << "gamma2 = " << format_g17(report.gamma2) << "\n";
    os << "epsilon = " << format_g17(report.epsilon) << "\n";
    os << "eta = " << format_g17(report.eta) << "\n";
    os << "eta_in_range = " << (report.eta_in_range ? "true" : "false") << "\n";
    for (size_t j = 0; j < report.omega.size(); ++j) {
        os << "omega_" << j << " = " << format_g17(report.omega[j]) << "\n";
        os << "kappa_" << j << " = " << format_g17(report.kappa[j]) << "\n";
    }
    if (report.model == GammaModel::HL)
        os << "residual_gamma2_eq_2gamma1 = " << format_g17(report.gamma2_eq_2gamma1_residual)
           << "\n";
    if (report.model == GammaModel::DHL)
        os << "residual_balance = " << format_g17(report.dhl_balance_residual) << "\n";
    for (const auto& [key, value] : report.residuals)
        os << "residual_" << key << " = " << format_g17(value) << "\n";
    if (!report.notes.empty()) os << "notes = " << report.notes << "\n";
}

} // namespace slgen
