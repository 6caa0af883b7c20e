#include <doctest.h>

#include <random>
#include <sstream>

#include "slgen/dynamics.hpp"
#include "slgen/models.hpp"

using namespace slgen;

namespace {

ASParams atom_params() {
    ASParams p;
    p.N = 0;
    p.n = 0;
    p.epsilon = 0.5;
    p.gamma1 = 1.0;
    p.gamma2 = 2.0;
    p.eta = 0.5;
    return p;
}

std::vector<double> uniform_grid(double t_max, int samples) {
    std::vector<double> g;
    for (int i = 0; i < samples; ++i) g.push_back(t_max * double(i) / double(samples - 1));
    return g;
}

SparseOp plus_state(const SpacePtr& space) {
    // (|0> + |1>)/sqrt(2) projector: nonzero coherence to probe sigma_+
    Eigen::MatrixXcd rho(2, 2);
    rho << 0.5, 0.5, 0.5, 0.5;
    return SparseOp(space, rho.sparseView(), true);
}

} // namespace

TEST_CASE("single-atom closed forms") {
    const ASParams p = atom_params();
    SpacePtr space = build_space(p.space_spec(1));
    const Superoperator heis = build_as_generator(p, space);
    const Superoperator sch = to_schrodinger(heis);

    NamedOps obs{{"sz", pauli(PauliKind::Z, 0, space)},
                 {"sp", pauli(PauliKind::Plus, 0, space)}};
    const std::vector<double> grid = uniform_grid(3.0, 31);

    const SparseOp rho0 = plus_state(space);
    const Complex sz0 = trace(obs[0].second * rho0);
    const Complex sp0 = trace(obs[1].second * rho0);

    const Trajectory traj = evolve(sch, rho0, grid, 1e-10, obs);
    double err_z = 0.0, err_p = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const Complex sz_exact = p.eta + (sz0 - p.eta) * std::exp(-p.gamma2 * t);
        const Complex sp_exact = sp0 * std::exp(Complex(-p.gamma1, p.epsilon) * t);
        err_z = std::max(err_z, std::abs(traj.values[i][0] - sz_exact));
        err_p = std::max(err_p, std::abs(traj.values[i][1] - sp_exact));
        CHECK(traj.trace_dev[i] <= 1e-10);
        CHECK(traj.herm_dev[i] <= 1e-12);
        CHECK(traj.min_eig[i] >= -1e-8);
    }
    CHECK(err_z < 1e-8);
    CHECK(err_p < 1e-8);
}

TEST_CASE("zero generator freezes the state") {
    SpacePtr space = build_space(HilbertSpec{{Site::spin()}});
    Superoperator zero;
    zero.space = space;
    zero.picture = Picture::Schrodinger;
    zero.matrix = SpMat(4, 4);
    NamedOps obs{{"sz", pauli(PauliKind::Z, 0, space)}};
    const SparseOp rho0 = plus_state(space);
    const Trajectory traj = evolve(zero, rho0, uniform_grid(2.0, 9), 1e-10, obs);
    for (const auto& row : traj.values) CHECK(std::abs(row[0] - traj.values[0][0]) == 0.0);
}

TEST_CASE("steady states") {
    SUBCASE("damped mode relaxes to the vacuum") {
        ASParams p;
        p.N = 0;
        p.n = 1;
        p.epsilon = 1.0;
        p.gamma1 = 0.5;
        p.gamma2 = 1.0;
        p.eta = -1.0; // atom decays too, keeping the kernel one-dimensional
        p.omega = {3.0};
        p.kappa = {0.4};
        p.lambda = {0.0};
        SpacePtr space = build_space(p.space_spec(3));
        const SparseOp rho = steady_state(to_schrodinger(build_as_generator(p, space)));
        // expected: atom down tensor vacuum projector
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(8, 8);
        expected(4, 4) = 1.0; // |down> x |0>
        CHECK((rho.dense() - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("atom pump balance sets the inversion") {
        const ASParams p = atom_params();
        SpacePtr space = build_space(p.space_spec(1));
        const SparseOp rho = steady_state(to_schrodinger(build_as_generator(p, space)));
        const Complex sz = trace(pauli(PauliKind::Z, 0, space) * rho);
        CHECK(std::abs(sz - Complex(p.eta, 0.0)) < 1e-10);
    }
    SUBCASE("dephasing-only generator has a degenerate kernel") {
        SpacePtr space = build_space(HilbertSpec{{Site::spin()}});
        Superoperator heis;
        heis.space = space;
        heis.picture = Picture::Heisenberg;
        heis.matrix = sl_dissipator(Complex(0.5, 0.0), pauli_local(PauliKind::Z).sparseView());
        CHECK_THROWS_AS(steady_state(to_schrodinger(heis)), DegenerateKernelError);
    }
}

TEST_CASE("heisenberg and schrodinger expectations agree") {
    ASParams p = atom_params();
    p.n = 1;
    p.omega = {2.5};
    p.kappa = {0.3};
    p.lambda = {0.2};
    SpacePtr space = build_space(p.space_spec(2));
    const Superoperator heis = build_as_generator(p, space);
    const Superoperator sch = to_schrodinger(heis);

    NamedOps obs{{"sz", pauli(PauliKind::Z, 0, space)},
                 {"n", boson(BosonKind::Number, 1, space)},
                 {"sp", pauli(PauliKind::Plus, 0, space)}};
    const std::vector<double> grid = uniform_grid(2.0, 11);
    const double tol = 1e-9;
    const SparseOp rho0 = preset_initial_state("all_up_vacuum", space);

    const Trajectory a = evolve(sch, rho0, grid, tol, obs);
    const Trajectory b = heisenberg_expectations(heis, obs, rho0, grid, tol);
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t j = 0; j < obs.size(); ++j)
            CHECK(std::abs(a.values[i][j] - b.values[i][j]) < 10.0 * tol);
        CHECK(b.trace_dev[i] < 10.0 * tol); // identity drift monitor
    }
}

TEST_CASE("fixed-step error scales at the integrator order") {
    const ASParams p = atom_params();
    SpacePtr space = build_space(p.space_spec(1));
    const Superoperator sch = to_schrodinger(build_as_generator(p, space));
    NamedOps obs{{"sz", pauli(PauliKind::Z, 0, space)}};
    const SparseOp rho0 = plus_state(space);
    const Complex sz0 = trace(obs[0].second * rho0);

    auto run = [&](double h) {
        EvolveOptions opt;
        opt.fixed_step = true;
        opt.max_step = h;
        const std::vector<double> grid{0.0, 1.0};
        const Trajectory t = evolve(sch, rho0, grid, 0.0, obs, &opt);
        const Complex exact = p.eta + (sz0 - p.eta) * std::exp(-p.gamma2 * 1.0);
        return std::abs(t.values[1][0] - exact);
    };
    const double e1 = run(0.05);
    const double e2 = run(0.025);
    CHECK(e1 / e2 >= 16.0); // at least the embedded pair's lower order
}

TEST_CASE("tightening the tolerance reduces the trajectory error") {
    const ASParams p = atom_params();
    SpacePtr space = build_space(p.space_spec(1));
    const Superoperator sch = to_schrodinger(build_as_generator(p, space));
    NamedOps obs{{"sp", pauli(PauliKind::Plus, 0, space)}};
    const SparseOp rho0 = plus_state(space);
    const Complex sp0 = trace(obs[0].second * rho0);

    auto worst = [&](double tol) {
        const std::vector<double> grid = uniform_grid(4.0, 17);
        const Trajectory t = evolve(sch, rho0, grid, tol, obs);
        double w = 0.0;
        for (size_t i = 0; i < grid.size(); ++i) {
            const Complex exact = sp0 * std::exp(Complex(-p.gamma1, p.epsilon) * grid[i]);
            w = std::max(w, std::abs(t.values[i][0] - exact));
        }
        return w;
    };
    const double loose = worst(1e-6);
    const double tight = worst(1e-10);
    CHECK(tight < loose);
    CHECK(tight < 1e-8);
}

TEST_CASE("state validation") {
    SpacePtr space = build_space(HilbertSpec{{Site::spin()}});
    Superoperator zero;
    zero.space = space;
    zero.picture = Picture::Schrodinger;
    zero.matrix = SpMat(4, 4);
    NamedOps obs;
    const std::vector<double> grid{0.0, 1.0};

    Eigen::MatrixXcd nonherm(2, 2);
    nonherm << 0.5, 0.2, 0.1, 0.5;
    CHECK_THROWS_AS(evolve(zero, SparseOp(space, nonherm.sparseView()), grid, 1e-8, obs),
                    ValidationError);

    Eigen::MatrixXcd badtrace(2, 2);
    badtrace << 0.7, 0.0, 0.0, 0.5;
    CHECK_THROWS_AS(evolve(zero, SparseOp(space, badtrace.sparseView()), grid, 1e-8, obs),
                    ValidationError);

    Eigen::MatrixXcd negative(2, 2);
    negative << 1.2, 0.0, 0.0, -0.2;
    CHECK_THROWS_AS(evolve(zero, SparseOp(space, negative.sparseView()), grid, 1e-8, obs),
                    ValidationError);

    Superoperator heis = zero;
    heis.picture = Picture::Heisenberg;
    CHECK_THROWS_AS(evolve(heis, plus_state(space), grid, 1e-8, obs), PictureMismatchError);
}

TEST_CASE("monitor breach aborts on a trace-violating map") {
    SpacePtr space = build_space(HilbertSpec{{Site::spin()}});
    Superoperator grow;
    grow.space = space;
    grow.picture = Picture::Schrodinger;
    SpMat m(4, 4);
    m.setIdentity(); // d rho / dt = rho inflates the trace
    grow.matrix = m;
    NamedOps obs;
    CHECK_THROWS_AS(evolve(grow, plus_state(space), {0.0, 5.0}, 1e-10, obs), MonitorBreach);
}

TEST_CASE("step underflow on a degenerate grid spacing") {
    const ASParams p = atom_params();
    SpacePtr space = build_space(p.space_spec(1));
    const Superoperator sch = to_schrodinger(build_as_generator(p, space));
    NamedOps obs;
    CHECK_THROWS_AS(evolve(sch, plus_state(space), {1.0, 1.0 + 1e-13}, 1e-8, obs),
                    StepSizeUnderflow);
}

TEST_CASE("trajectory csv layout") {
    Trajectory t;
    t.names = {"sz"};
    t.times = {0.0, 0.5};
    t.values = {{Complex(1.0, 0.0)}, {Complex(0.25, -0.125)}};
    t.trace_dev = {0.0, 1e-12};
    t.herm_dev = {0.0, 0.0};
    t.min_eig = {0.0, -1e-16};
    std::ostringstream os;
    write_trajectory_csv(os, t);
    const std::string text = os.str();
    CHECK(text.rfind("t,sz.re,sz.im,trace_dev,herm_dev,min_eig\n", 0) == 0);
    CHECK(text.find("\n0.5,0.25,-0.125,") != std::string::npos);
}

TEST_CASE("preset initial states") {
    SpacePtr space =
        build_space(HilbertSpec{{Site::spin(), Site::fermion_pair(), Site::boson_mode(2)}});
    const SparseOp down = preset_initial_state("all_down_vacuum", space);
    CHECK(std::abs(trace(down) - Complex(1.0, 0.0)) == 0.0);
    // spin down, one electron in the lower level, vacuum
    const long expected_index = 1 * space->stride(0) + 1 * space->stride(1);
    CHECK(down.dense()(expected_index, expected_index) == Complex(1.0, 0.0));

    const SparseOp up = preset_initial_state("all_up_vacuum", space);
    const long up_index = 0 * space->stride(0) + 2 * space->stride(1);
    CHECK(up.dense()(up_index, up_index) == Complex(1.0, 0.0));

    const SparseOp mixed = preset_initial_state("maximally_mixed", space);
    CHECK(std::abs(trace(mixed) - Complex(1.0, 0.0)) < 1e-14);
    CHECK_THROWS_AS(preset_initial_state("bogus", space), ValidationError);
}
