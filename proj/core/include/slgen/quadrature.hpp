// quadrature.hpp — deterministic adaptive Gauss-Kronrod integration and
// polynomial extrapolation helpers
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace slgen {

struct QuadOptions {
    double abs_tol{1e-12};
    double rel_tol{1e-10};
    long max_intervals{20000};
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate{0.0};
    long intervals{0};
    bool converged{true};
};

// Adaptive (G7, K15) bisection over [a, b]. Deterministic: intervals are
// refined depth-first in a fixed order. Throws QuadratureDivergence when the
// interval budget is exhausted before the tolerance is met.
QuadResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                              double a, double b, const QuadOptions& opt = {});

// As above but with interior breakpoints that force initial subdivision
// (density corners, detuning roots).
QuadResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                              double a, double b, std::vector<double> breakpoints,
                              const QuadOptions& opt = {});

// Fixed composite Gauss-Legendre rule (16 nodes per panel), non-adaptive.
std::complex<double> integrate_gl16(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, long panels);

// Neville extrapolation of samples (x_i, y_i) to x = 0; the x_i must be
// positive and strictly decreasing. Returns the table diagonal; the last
// entry is the extrapolated value.
std::vector<std::complex<double>> extrapolate_to_zero(const std::vector<double>& x,
                                                      const std::vector<std::complex<double>>& y);

} // namespace slgen
