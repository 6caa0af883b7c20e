// dynamics.hpp — adaptive time evolution of states and observables under a
// built generator, with conservation monitors
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "slgen/superop.hpp"

namespace slgen {

struct EvolveOptions {
    double rtol{1e-8};
    double atol{1e-10};
    double max_step{0.0};     // 0 = unlimited
    double initial_step{0.0}; // 0 = automatic
    double monitor_factor{100.0};
    long max_steps{2000000};
    bool fixed_step{false};   // step exactly max_step, no error control

    static EvolveOptions from_tol(double tol) {
        EvolveOptions o;
        o.rtol = tol;
        o.atol = tol * 1e-2;
        return o;
    }
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::string> names;
    std::vector<std::vector<Complex>> values; // values[time][observable]
    std::vector<double> trace_dev;
    std::vector<double> herm_dev;
    std::vector<double> min_eig;
};

using NamedOps = std::vector<std::pair<std::string, SparseOp>>;

// Integrates d/dt rho = L*(rho) (Schrodinger picture) through the output grid
// with an embedded Runge-Kutta 5(4) pair. The state must be hermitian, unit
// trace and positive semidefinite within 1e-12. Steps whose trace drift
// exceeds monitor_factor * rtol are rejected; if the step size underflows the
// run aborts.
Trajectory evolve(const Superoperator& schrodinger, const SparseOp& rho0,
                  const std::vector<double>& t_grid, double tol, const NamedOps& observables,
                  const EvolveOptions* opts = nullptr);

// Normalized hermitian positive kernel element of L*. Requires a
// one-dimensional kernel (within the rank tolerance), otherwise throws.
SparseOp steady_state(const Superoperator& schrodinger, double rank_tol = 1e-9);

// Evolves the observables in the Heisenberg picture and contracts with rho0.
// The identity is evolved alongside as a drift monitor: trace_dev records
// |<I(t)> - 1| and herm_dev the worst hermiticity loss across observables.
Trajectory heisenberg_expectations(const Superoperator& heisenberg, const NamedOps& observables,
                                   const SparseOp& rho0, const std::vector<double>& t_grid,
                                   double tol, const EvolveOptions* opts = nullptr);

// CSV layout: t,<name>.re,<name>.im,...,trace_dev,herm_dev,min_eig with fixed
// 17-significant-digit formatting.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);

// named initial states: "all_down_vacuum", "all_up_vacuum", "maximally_mixed"
SparseOp preset_initial_state(const std::string& name, const SpacePtr& space);

} // namespace slgen
