#include "slgen/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "slgen/errors.hpp"

namespace slgen {

namespace {

using Cd = std::complex<double>;

// (G7, K15) Gauss-Kronrod pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
    Cd kronrod;
    double error;
};

PanelEstimate gk15(const std::function<Cd(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Cd fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    Cd resk{0.0, 0.0};
    Cd resg{0.0, 0.0};
    for (int j = 0; j < 7; ++j) resk += kWgk[j] * (fv[j] + fv[14 - j]);
    resk += kWgk[7] * fv[7];
    for (int j = 0; j < 3; ++j) resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
    resg += kWg[3] * fv[7];
    PanelEstimate e;
    e.kronrod = resk * h;
    e.error = std::abs(resk - resg) * h;
    return e;
}

} // namespace

QuadResult integrate_adaptive(const std::function<Cd(double)>& f, double a, double b,
                              const QuadOptions& opt) {
    return integrate_adaptive(f, a, b, {}, opt);
}

QuadResult integrate_adaptive(const std::function<Cd(double)>& f, double a, double b,
                              std::vector<double> breakpoints, const QuadOptions& opt) {
    QuadResult out;
    if (a == b) return out;
    if (b < a) throw ValidationError("integrate_adaptive: b < a");

    breakpoints.erase(std::remove_if(breakpoints.begin(), breakpoints.end(),
                                     [&](double x) { return x <= a || x >= b; }),
                      breakpoints.end());
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    struct Seg {
        double a, b;
        double tol; // error budget for this segment, halved per split
    };
    std::vector<Seg> initial;
    double prev = a;
    for (double x : breakpoints) {
        initial.push_back({prev, x, 0.0});
        prev = x;
    }
    initial.push_back({prev, b, 0.0});

    // first pass sizes the global tolerance off a rough magnitude estimate
    const double span = b - a;
    double rough = 0.0;
    for (const Seg& s : initial) rough += std::abs(gk15(f, s.a, s.b).kronrod);
    const double global_tol = std::max(opt.abs_tol, opt.rel_tol * rough);
    for (Seg& s : initial) s.tol = global_tol * (s.b - s.a) / span;

    // depth-first, left to right; independent of error magnitudes
    std::vector<Seg> stack;
    for (auto it = initial.rbegin(); it != initial.rend(); ++it) stack.push_back(*it);

    Cd total{0.0, 0.0};
    double total_err = 0.0;
    long used = 0;

    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        ++used;
        if (used > opt.max_intervals)
            throw QuadratureDivergence("adaptive quadrature exceeded its interval budget (" +
                                       std::to_string(opt.max_intervals) + " intervals)");
        const PanelEstimate e = gk15(f, s.a, s.b);
        const double width = s.b - s.a;
        // the rounding floor keeps peaked integrands from demanding error
        // below what the panel rule can resolve
        const double floor = 64.0 * 2.2e-16 * std::abs(e.kronrod);
        if (e.error <= std::max(s.tol, floor) || width < 1e-14 * span) {
            total += e.kronrod;
            total_err += e.error;
        } else {
            const double m = 0.5 * (s.a + s.b);
            stack.push_back({m, s.b, 0.5 * s.tol});
            stack.push_back({s.a, m, 0.5 * s.tol});
        }
    }
    out.value = total;
    out.error_estimate = total_err;
    out.intervals = used;
    out.converged = true;
    return out;
}

std::complex<double> integrate_gl16(const std::function<Cd(double)>& f, double a, double b,
                                    long panels) {
    static const double x[8] = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
    static const double w[8] = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
    Cd total{0.0, 0.0};
    const double step = (b - a) / double(panels);
    for (long p = 0; p < panels; ++p) {
        const double pa = a + step * double(p);
        const double c = pa + 0.5 * step;
        const double h = 0.5 * step;
        Cd acc{0.0, 0.0};
        for (int j = 0; j < 8; ++j) acc += w[j] * (f(c - h * x[j]) + f(c + h * x[j]));
        total += acc * h;
    }
    return total;
}

std::vector<Cd> extrapolate_to_zero(const std::vector<double>& x, const std::vector<Cd>& y) {
    const size_t n = x.size();
    if (n != y.size() || n < 2)
        throw ValidationError("extrapolate_to_zero: need matching samples, at least 2");
    for (size_t i = 1; i < n; ++i)
        if (!(x[i] > 0.0) || !(x[i] < x[i - 1]))
            throw ValidationError("extrapolate_to_zero: x must be positive, strictly decreasing");

    // Neville table; P[i][j] interpolates samples i-j..i, evaluated at 0.
    std::vector<std::vector<Cd>> P(n);
    std::vector<Cd> diag;
    diag.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        P[i].resize(i + 1);
        P[i][0] = y[i];
        for (size_t j = 1; j <= i; ++j)
            P[i][j] = (P[i - 1][j - 1] * x[i] - P[i][j - 1] * x[i - j]) / (x[i] - x[i - j]);
        diag.push_back(P[i][i]);
    }
    return diag;
}

} // namespace slgen
