#include "slgen/dynamics.hpp"

#include <cmath>
#include <ostream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "slgen/textio.hpp"

namespace slgen {

namespace {

// Dormand-Prince 5(4) coefficients
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,     0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Monitors {
    double trace_dev{0.0};
    double herm_dev{0.0};
};

double trace_of_vec(const Eigen::VectorXcd& v, long d) {
    Complex t{0.0, 0.0};
    for (long r = 0; r < d; ++r) t += v(r * d + r);
    return std::abs(t - Complex(1.0, 0.0));
}

double herm_dev_of_vec(const Eigen::VectorXcd& v, long d) {
    double m = 0.0;
    for (long c = 0; c < d; ++c)
        for (long r = 0; r <= c; ++r)
            m = std::max(m, std::abs(v(c * d + r) - std::conj(v(r * d + c))));
    return m;
}

// Integrates dv/dt = M v from t0 to t1 with an accept callback per grid point.
class Rk54 {
public:
    Rk54(const SpMat& m, const EvolveOptions& opt, bool monitor_trace, long d)
        : m_(m), opt_(opt), monitor_trace_(monitor_trace), d_(d) {
        rtol_ = opt.rtol;
        atol_ = opt.atol;
    }

    void advance(Eigen::VectorXcd& y, double t0, double t1) {
        const double span = t1 - t0;
        if (span <= 0.0) return;
        double h = opt_.initial_step > 0 ? opt_.initial_step : span / 16.0;
        if (opt_.max_step > 0) h = std::min(h, opt_.max_step);
        if (opt_.fixed_step) h = opt_.max_step > 0 ? opt_.max_step : span / 64.0;
        double t = t0;
        const double hmin = 1e-14 * std::max(1.0, std::abs(t1));
        Eigen::VectorXcd k[7], ynew, yerr;
        while (t < t1 - 1e-15 * std::max(1.0, std::abs(t1))) {
            h = std::min(h, t1 - t);
            if (h < hmin)
                throw StepSizeUnderflow("evolve: step size underflow at t=" + std::to_string(t));
            if (++steps_ > opt_.max_steps)
                throw NumericalError("evolve: step budget exhausted");

            k[0] = m_ * y;
            for (int s = 1; s < 7; ++s) {
                Eigen::VectorXcd stage = y;
                for (int j = 0; j < s; ++j)
                    if (kA[s][j] != 0.0) stage += (h * kA[s][j]) * k[j];
                k[s] = m_ * stage;
            }
            ynew = y;
            yerr = Eigen::VectorXcd::Zero(y.size());
            for (int s = 0; s < 7; ++s) {
                if (kB5[s] != 0.0) ynew += (h * kB5[s]) * k[s];
                if (kB5[s] != kB4[s]) yerr += (h * (kB5[s] - kB4[s])) * k[s];
            }

            bool accept = true;
            if (!opt_.fixed_step) {
                double err = 0.0;
                for (long i = 0; i < y.size(); ++i) {
                    const double scale =
                        atol_ + rtol_ * std::max(std::abs(y(i)), std::abs(ynew(i)));
                    const double e = std::abs(yerr(i)) / scale;
                    err += e * e;
                }
                err = std::sqrt(err / double(y.size()));
                if (err > 1.0) accept = false;
                const double factor =
                    err > 0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
                if (accept) {
                    // monitor: reject a step that drifts the trace too far
                    if (monitor_trace_ && trace_of_vec(ynew, d_) > opt_.monitor_factor * rtol_) {
                        if (h <= 4.0 * hmin)
                            throw MonitorBreach(
                                "evolve: trace drift exceeds " +
                                std::to_string(opt_.monitor_factor) +
                                " times the tolerance and the step cannot shrink further");
                        accept = false;
                        h *= 0.25;
                    } else {
                        t += h;
                        y.swap(ynew);
                        h *= factor;
                    }
                } else {
                    h *= factor;
                }
                if (opt_.max_step > 0) h = std::min(h, opt_.max_step);
            } else {
                t += h;
                y.swap(ynew);
            }
        }
    }

private:
    const SpMat& m_;
    EvolveOptions opt_;
    bool monitor_trace_;
    long d_;
    double rtol_{1e-8}, atol_{1e-10};
    long steps_{0};
};

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.size() < 1) throw ValidationError("time grid must not be empty");
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw ValidationError("time grid must be strictly increasing");
}

} // namespace

Trajectory evolve(const Superoperator& schrodinger, const SparseOp& rho0,
                  const std::vector<double>& t_grid, double tol, const NamedOps& observables,
                  const EvolveOptions* opts) {
    if (schrodinger.picture != Picture::Schrodinger)
        throw PictureMismatchError("evolve expects a Schrodinger-picture generator");
    if (!schrodinger.space->same_as(*rho0.space()))
        throw SpaceMismatchError("evolve: state lives on a different space");
    check_grid(t_grid);
    const long d = schrodinger.dim();

    const Eigen::MatrixXcd rho_dense = rho0.dense();
    if ((rho_dense - rho_dense.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw ValidationError("evolve: initial state must be hermitian within 1e-12");
    if (std::abs(rho_dense.trace() - Complex(1.0, 0.0)) > 1e-12)
        throw ValidationError("evolve: initial state must have unit trace within 1e-12");
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_dense, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-12)
            throw ValidationError("evolve: initial state must be positive semidefinite");
    }
    for (const auto& [name, op] : observables) {
        (void)name;
        if (!op.space()->same_as(*rho0.space()))
            throw SpaceMismatchError("evolve: observable lives on a different space");
    }

    EvolveOptions opt = opts ? *opts : EvolveOptions::from_tol(tol);
    Rk54 stepper(schrodinger.matrix, opt, /*monitor_trace=*/true, d);

    Trajectory traj;
    traj.names.reserve(observables.size());
    for (const auto& [name, op] : observables) {
        (void)op;
        traj.names.push_back(name);
    }

    Eigen::VectorXcd y = vectorize(rho_dense);
    for (size_t i = 0; i < t_grid.size(); ++i) {
        if (i > 0) stepper.advance(y, t_grid[i - 1], t_grid[i]);
        traj.times.push_back(t_grid[i]);
        std::vector<Complex> row;
        row.reserve(observables.size());
        const Eigen::MatrixXcd rho_t = unvectorize(y, d);
        for (const auto& [name, op] : observables) {
            (void)name;
            row.push_back((op.dense() * rho_t).trace());
        }
        traj.values.push_back(std::move(row));
        traj.trace_dev.push_back(trace_of_vec(y, d));
        traj.herm_dev.push_back(herm_dev_of_vec(y, d));
        Eigen::MatrixXcd herm = 0.5 * (rho_t + rho_t.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
        traj.min_eig.push_back(es.eigenvalues().minCoeff());
    }
    return traj;
}

SparseOp steady_state(const Superoperator& schrodinger, double rank_tol) {
    if (schrodinger.picture != Picture::Schrodinger)
        throw PictureMismatchError("steady_state expects a Schrodinger-picture generator");
    const long d = schrodinger.dim();
    if (d > 64)
        throw ValidationError("steady_state: dense kernel computation limited to dimension 64");
    const Eigen::MatrixXcd m = schrodinger.dense();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double cut = rank_tol * std::max(smax, 1e-300);
    long kernel_dim = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) <= cut) ++kernel_dim;
    if (kernel_dim != 1)
        throw DegenerateKernelError("steady_state: kernel dimension is " +
                                    std::to_string(kernel_dim) + ", expected 1");
    Eigen::MatrixXcd rho = unvectorize(svd.matrixV().col(d * d - 1), d);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-10)
        throw DegenerateKernelError("steady_state: kernel element is traceless");
    rho /= tr;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw NumericalError("steady_state: kernel element is not positive semidefinite");
    return SparseOp(schrodinger.space, rho.sparseView());
}

Trajectory heisenberg_expectations(const Superoperator& heisenberg, const NamedOps& observables,
                                   const SparseOp& rho0, const std::vector<double>& t_grid,
                                   double tol, const EvolveOptions* opts) {
    if (heisenberg.picture != Picture::Heisenberg)
        throw PictureMismatchError("heisenberg_expectations expects a Heisenberg generator");
    if (!heisenberg.space->same_as(*rho0.space()))
        throw SpaceMismatchError("heisenberg_expectations: state lives on a different space");
    check_grid(t_grid);
    const long d = heisenberg.dim();

    EvolveOptions opt = opts ? *opts : EvolveOptions::from_tol(tol);

    const Eigen::MatrixXcd rho_dense = rho0.dense();
    if ((rho_dense - rho_dense.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw ValidationError("heisenberg_expectations: state must be hermitian within 1e-12");
    for (const auto& [name, op] : observables) {
        (void)name;
        if (!op.space()->same_as(*rho0.space()))
            throw SpaceMismatchError(
                "heisenberg_expectations: observable lives on a different space");
    }
    const Eigen::VectorXcd rho_vec = vectorize(rho_dense);

    // one stepper per observable plus the identity drift monitor
    std::vector<Eigen::VectorXcd> ys;
    std::vector<bool> hermitian_input;
    ys.reserve(observables.size() + 1);
    for (const auto& [name, op] : observables) {
        (void)name;
        ys.push_back(vectorize(op.dense()));
        hermitian_input.push_back(max_abs_diff(op, op.adjoint()) == 0.0);
    }
    ys.push_back(vectorize(Eigen::MatrixXcd::Identity(d, d).eval()));

    Trajectory traj;
    for (const auto& [name, op] : observables) {
        (void)op;
        traj.names.push_back(name);
    }

    std::vector<Rk54> steppers;
    steppers.reserve(ys.size());
    for (size_t i = 0; i < ys.size(); ++i)
        steppers.emplace_back(heisenberg.matrix, opt, /*monitor_trace=*/false, d);

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho0.dense(),
                                                             Eigen::EigenvaluesOnly);
    const double rho_min_eig = es.eigenvalues().minCoeff();

    for (size_t i = 0; i < t_grid.size(); ++i) {
        std::vector<Complex> row;
        row.reserve(observables.size());
        double herm_dev = 0.0;
        for (size_t j = 0; j < ys.size(); ++j) {
            if (i > 0) steppers[j].advance(ys[j], t_grid[i - 1], t_grid[i]);
            if (j < observables.size()) {
                row.push_back(rho_vec.dot(ys[j])); // tr(rho X) for hermitian rho
                if (hermitian_input[j]) herm_dev = std::max(herm_dev, herm_dev_of_vec(ys[j], d));
            }
        }
        traj.times.push_back(t_grid[i]);
        traj.values.push_back(std::move(row));
        const Complex id_expect = rho_vec.dot(ys.back());
        traj.trace_dev.push_back(std::abs(id_expect - Complex(1.0, 0.0)));
        traj.herm_dev.push_back(herm_dev);
        traj.min_eig.push_back(rho_min_eig);
    }
    return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
    os << "t";
    for (const std::string& n : t.names) os << "," << n << ".re," << n << ".im";
    os << ",trace_dev,herm_dev,min_eig\n";
    for (size_t i = 0; i < t.times.size(); ++i) {
        os << format_g17(t.times[i]);
        for (size_t j = 0; j < t.names.size(); ++j)
            os << "," << format_g17(t.values[i][j].real()) << ","
               << format_g17(t.values[i][j].imag());
        os << "," << format_g17(t.trace_dev[i]) << "," << format_g17(t.herm_dev[i]) << ","
           << format_g17(t.min_eig[i]) << "\n";
    }
}

SparseOp preset_initial_state(const std::string& name, const SpacePtr& space) {
    const long d = space->dim();
    if (name == "maximally_mixed") {
        SpMat m(d, d);
        m.setIdentity();
        return SparseOp(space, SpMat(m * Complex(1.0 / double(d), 0.0)), true);
    }
    if (name != "all_down_vacuum" && name != "all_up_vacuum")
        throw ValidationError("unknown initial state preset: " + name);
    const bool up = name == "all_up_vacuum";
    // product basis state: spins up/down, fermion pairs in the one-electron
    // upper/lower level, boson modes in the vacuum
    long index = 0;
    for (int s = 0; s < space->site_count(); ++s) {
        long local = 0;
        switch (space->site(s).kind) {
            case SiteKind::Spin: local = up ? 0 : 1; break;        // |0> is spin up
            case SiteKind::FermionPair: local = up ? 2 : 1; break; // (empty, lower, upper, both)
            case SiteKind::BosonMode: local = 0; break;
        }
        index += local * space->stride(s);
    }
    std::vector<Triplet> trip{{static_cast<int>(index), static_cast<int>(index), 1.0}};
    SpMat m(d, d);
    m.setFromTriplets(trip.begin(), trip.end());
    return SparseOp(space, std::move(m), true);
}

} // namespace slgen
