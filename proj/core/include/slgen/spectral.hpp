// spectral.hpp — effective reservoir densities J(omega) with the dispersion
// Jacobian and |form factor|^2 folded in
#pragma once

#include <string>
#include <vector>

#include "slgen/errors.hpp"

namespace slgen {

enum class DensityForm { Flat, Lorentzian, Gaussian, Tabulated, Zero };

// Nonnegative density on a closed support interval, zero outside it.
// Tabulated grids are strictly increasing and interpolated linearly.
class SpectralDensity {
public:
    SpectralDensity() = default; // the zero density
    static SpectralDensity zero();
    static SpectralDensity flat(double J0, double center, double half_width);
    // peak value J0 at the center, half width at half maximum = width
    static SpectralDensity lorentzian(double J0, double center, double width,
                                      double support_halfwidth = -1.0);
    static SpectralDensity gaussian(double J0, double center, double sigma,
                                    double support_halfwidth = -1.0);
    static SpectralDensity tabulated(std::vector<double> omega, std::vector<double> values);
    // two-column numeric text file (omega, J), strictly increasing omega
    static SpectralDensity tabulated_from_file(const std::string& path);

    DensityForm form() const { return form_; }
    double operator()(double omega) const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    bool is_zero() const { return form_ == DensityForm::Zero; }

    // breakpoints that matter for quadrature: support edges, tabulated knots
    std::vector<double> breakpoints() const;

    // closed-form integral of J over the support (used by discretization checks)
    double total_weight_by_quadrature() const;

    double param_J0() const { return J0_; }
    double param_center() const { return center_; }
    double param_width() const { return width_; }

private:
    DensityForm form_{DensityForm::Zero};
    double J0_{0.0}, center_{0.0}, width_{0.0};
    double lo_{0.0}, hi_{0.0};
    std::vector<double> grid_, values_;
};

} // namespace slgen
