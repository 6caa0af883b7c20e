#include "slgen/spectral.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "slgen/quadrature.hpp"

namespace slgen {

SpectralDensity SpectralDensity::zero() { return SpectralDensity(); }

SpectralDensity SpectralDensity::flat(double J0, double center, double half_width) {
    if (J0 < 0.0) throw ValidationError("flat density: J0 must be >= 0");
    if (half_width <= 0.0) throw ValidationError("flat density: half_width must be > 0");
    SpectralDensity d;
    d.form_ = DensityForm::Flat;
    d.J0_ = J0;
    d.center_ = center;
    d.width_ = half_width;
    d.lo_ = center - half_width;
    d.hi_ = center + half_width;
    return d;
}

SpectralDensity SpectralDensity::lorentzian(double J0, double center, double width,
                                            double support_halfwidth) {
    if (J0 < 0.0) throw ValidationError("lorentzian density: J0 must be >= 0");
    if (width <= 0.0) throw ValidationError("lorentzian density: width must be > 0");
    SpectralDensity d;
    d.form_ = DensityForm::Lorentzian;
    d.J0_ = J0;
    d.center_ = center;
    d.width_ = width;
    const double hw = support_halfwidth > 0.0 ? support_halfwidth : 50.0 * width;
    d.lo_ = center - hw;
    d.hi_ = center + hw;
    return d;
}

SpectralDensity SpectralDensity::gaussian(double J0, double center, double sigma,
                                          double support_halfwidth) {
    if (J0 < 0.0) throw ValidationError("gaussian density: J0 must be >= 0");
    if (sigma <= 0.0) throw ValidationError("gaussian density: sigma must be > 0");
    SpectralDensity d;
    d.form_ = DensityForm::Gaussian;
    d.J0_ = J0;
    d.center_ = center;
    d.width_ = sigma;
    const double hw = support_halfwidth > 0.0 ? support_halfwidth : 12.0 * sigma;
    d.lo_ = center - hw;
    d.hi_ = center + hw;
    return d;
}

SpectralDensity SpectralDensity::tabulated(std::vector<double> omega,
                                           std::vector<double> values) {
    if (omega.size() != values.size() || omega.size() < 2)
        throw ValidationError("tabulated density: need >= 2 matching (omega, J) rows");
    for (size_t i = 0; i < omega.size(); ++i) {
        if (i > 0 && !(omega[i] > omega[i - 1]))
            throw ValidationError("tabulated density: omega grid must be strictly increasing");
        if (values[i] < 0.0)
            throw ValidationError("tabulated density: J must be >= 0");
    }
    SpectralDensity d;
    d.form_ = DensityForm::Tabulated;
    d.lo_ = omega.front();
    d.hi_ = omega.back();
    d.grid_ = std::move(omega);
    d.values_ = std::move(values);
    return d;
}

SpectralDensity SpectralDensity::tabulated_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open tabulated density file: " + path);
    std::vector<double> omega, values;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        double w, j;
        if (!(ls >> w >> j))
            throw ValidationError("tabulated density file " + path + ": bad row at line " +
                                  std::to_string(lineno));
        omega.push_back(w);
        values.push_back(j);
    }
    return tabulated(std::move(omega), std::move(values));
}

double SpectralDensity::operator()(double omega) const {
    if (form_ == DensityForm::Zero) return 0.0;
    if (omega < lo_ || omega > hi_) return 0.0;
    switch (form_) {
        case DensityForm::Flat:
            return J0_;
        case DensityForm::Lorentzian: {
            const double x = omega - center_;
            return J0_ * width_ * width_ / (x * x + width_ * width_);
        }
        case DensityForm::Gaussian: {
            const double x = (omega - center_) / width_;
            return J0_ * std::exp(-0.5 * x * x);
        }
        case DensityForm::Tabulated: {
            auto hi = std::lower_bound(grid_.begin(), grid_.end(), omega);
            if (hi == grid_.begin()) return values_.front();
            if (hi == grid_.end()) return values_.back();
            const size_t i1 = static_cast<size_t>(hi - grid_.begin());
            const size_t i0 = i1 - 1;
            const double t = (omega - grid_[i0]) / (grid_[i1] - grid_[i0]);
            return values_[i0] + t * (values_[i1] - values_[i0]);
        }
        default:
            return 0.0;
    }
}

std::vector<double> SpectralDensity::breakpoints() const {
    if (form_ == DensityForm::Zero) return {};
    if (form_ == DensityForm::Tabulated) return grid_;
    return {lo_, hi_};
}

double SpectralDensity::total_weight_by_quadrature() const {
    if (form_ == DensityForm::Zero) return 0.0;
    auto f = [this](double w) { return std::complex<double>((*this)(w), 0.0); };
    return integrate_adaptive(f, lo_, hi_, breakpoints()).value.real();
}

} // namespace slgen
