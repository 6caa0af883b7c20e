// matching.hpp — parameter dictionaries between reservoir coefficients and
// the AS generator parameters, with the derived rate constraints
#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "slgen/gamma.hpp"
#include "slgen/models.hpp"

namespace slgen {

struct MatchReport {
    GammaModel model{GammaModel::HL};
    // resolved AS-side parameters
    double gamma1{0.0};
    double gamma2{0.0};
    double epsilon{0.0};
    double eta{0.0};
    std::vector<double> omega; // per mode, Im Gamma_j
    std::vector<double> kappa; // per mode, Re Gamma_j

    std::map<std::string, double> residuals;
    double gamma2_eq_2gamma1_residual{0.0};
    bool eta_in_range{true};
    double dhl_balance_residual{0.0}; // pump/damping balance between the two levels
    bool feasible{true};
    std::string notes;

    double tolerance{1e-10};
};

// Reads the AS parameters off an HL gamma set:
//   omega_j = Im G_j, kappa_j = Re G_j, gamma1 = Re(h1 + h2),
//   epsilon = Im(h1 - h2), gamma2 = 2*gamma1,
//   eta = (Re h2 - Re h1) / (Re h2 + Re h1).
// Throws DegeneratePump when Re h1 + Re h2 = 0.
MatchReport as_from_hl_gammas(const GammaSet& gammas, double tolerance = 1e-10);

struct GammaTargets {
    GammaSet gammas;
    bool exact{true};       // false when gamma2 != 2*gamma1 and a projection was used
    double residual{0.0};   // |gamma1 - gamma2/2| for the projected case
    double free_im_sum{0.0}; // Im h1 + Im h2, not fixed by the relations
};

// Inverts the relations for gamma2 = 2*gamma1. The sum of the matter
// imaginary parts is a free parameter (an overall shift that never enters
// the generator); it defaults to zero. For gamma2 != 2*gamma1 the nearest
// admissible point keeps gamma2, eta, epsilon and replaces gamma1 by
// gamma2/2, reporting the distance.
GammaTargets hl_gamma_targets_from_as(const ASParams& p, double free_im_sum = 0.0);

// Checks the DHL identifications:
//   gamma1 = Re(B+ + B- + C+ + C-), epsilon = Im(B+ - B- - C+ + C-),
//   balance residual |Re(B+ + C+) - Re(B- + C-)|;
// when balanced, gamma2 = 2 Re(B+ + C+) (so gamma1 = gamma2) and
//   eta = (Re C+ - Re C-) / Re(B+ + C+),
// obtained by matching the inhomogeneous terms of the two inversion equations.
MatchReport dhl_match_check(const GammaSet& gammas, double tolerance = 1e-10);

// key = value serialization consumed by the CLI match subcommand
void write_match_report(std::ostream& os, const MatchReport& report);

} // namespace slgen
