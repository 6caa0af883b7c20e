// slgen_cli.cpp — command-line front end: gamma sets, generator builds,
// matching reports, model comparison, time evolution and stochastic-limit
// convergence tables
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slgen/dynamics.hpp"
#include "slgen/matching.hpp"
#include "slgen/parallel.hpp"
#include "slgen/runconfig.hpp"
#include "slgen/textio.hpp"

namespace {

using namespace slgen;

struct CommonArgs {
    std::string config_path;
    std::string output_path;
    bool verbose{false};
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "run configuration file")->required();
    cmd->add_option("--output", args.output_path, "output file path")->required();
    cmd->add_flag("--verbose", args.verbose, "print a short summary to stdout");
}

std::ofstream open_output(const std::string& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw ValidationError("cannot open output file: " + path);
    return out;
}

void write_coefficient_row(std::ostream& os, const std::string& name,
                           const GammaCoefficient& c) {
    os << name << "," << format_g17(c.value.real()) << "," << format_g17(c.value.imag()) << ","
       << format_g17(c.resonance) << "," << (c.resonance_in_support ? 1 : 0) << ","
       << format_g17(c.residual) << "," << (c.residual_ok ? 1 : 0) << "\n";
}

int run_gamma(const CommonArgs& args) {
    const Config cfg = Config::parse_file(args.config_path);
    parse_units(cfg);
    const GammaOptions gopt = parse_gamma_options(cfg);
    const std::string model = cfg.get_string_or("gamma.model", "hl");

    std::ofstream out = open_output(args.output_path);
    out << "# gamma coefficients\n";
    out << "model = " << model << "\n";
    out << "coefficient,re,im,resonance,in_support,residual,residual_ok\n";
    if (model == "hl") {
        const GammaSet set = parse_hl_gamma_set(cfg, gopt);
        for (size_t j = 0; j < set.radiation.size(); ++j)
            write_coefficient_row(out, "g" + std::to_string(j), set.radiation[j]);
        write_coefficient_row(out, "h1", set.h1);
        write_coefficient_row(out, "h2", set.h2);
    } else if (model == "dhl") {
        const GammaSet set = parse_dhl_gamma_set(cfg, gopt);
        for (size_t j = 0; j < set.radiation.size(); ++j)
            write_coefficient_row(out, "g" + std::to_string(j), set.radiation[j]);
        write_coefficient_row(out, "B_plus", set.B_plus);
        write_coefficient_row(out, "B_minus", set.B_minus);
        write_coefficient_row(out, "C_plus", set.C_plus);
        write_coefficient_row(out, "C_minus", set.C_minus);
    } else {
        throw ValidationError("gamma.model must be 'hl' or 'dhl'");
    }
    if (args.verbose) std::cout << "gamma set written to " << args.output_path << "\n";
    return 0;
}

int run_build(const CommonArgs& args) {
    const Config cfg = Config::parse_file(args.config_path);
    parse_units(cfg);
    const ModelKind kind = model_kind_from_string(cfg.get_string("build.model"));
    const Superoperator sop = build_model_from_config(cfg, kind);
    const std::string emit = cfg.get_string_or("build.emit", "summary");

    if (emit == "matrix") {
        std::ofstream out = open_output(args.output_path, /*binary=*/true);
        write_superoperator(out, sop);
    } else if (emit == "summary") {
        std::ofstream out = open_output(args.output_path);
        out << "model = " << cfg.get_string("build.model") << "\n";
        out << "space = " << sop.space->describe() << "\n";
        out << "picture = heisenberg\n";
        out << "frobenius_norm = " << format_g17(sop.norm()) << "\n";
        out << "identity_kernel_defect = " << format_g17(identity_kernel_defect(sop)) << "\n";
        out << "hermiticity_preservation_defect = "
            << format_g17(hermiticity_preservation_defect(sop)) << "\n";
        for (const auto& [name, block] : sop.blocks)
            out << "block_norm." << name << " = " << format_g17(block.norm()) << "\n";
        if (sop.dim() <= 16) {
            const Eigen::MatrixXcd dense = sop.dense();
            Eigen::BDCSVD<Eigen::MatrixXcd> svd(dense);
            const Eigen::VectorXd sv = svd.singularValues();
            long kernel_dim = 0;
            for (long i = 0; i < sv.size(); ++i)
                if (sv(i) <= 1e-10 * std::max(sv(0), 1e-300)) ++kernel_dim;
            out << "kernel_dim = " << kernel_dim << "\n";
        } else {
            out << "kernel_dim = n/a (dimension too large)\n";
        }
        if (sop.dim() <= 32) {
            const KossakowskiReport cp = kossakowski_check(sop);
            out << "cp_min_eigenvalue = " << format_g17(cp.min_eigenvalue) << "\n";
            out << "completely_positive = " << (cp.completely_positive() ? "true" : "false")
                << "\n";
        } else {
            out << "cp_min_eigenvalue = n/a (dimension too large)\n";
        }
    } else {
        throw ValidationError("build.emit must be 'summary' or 'matrix'");
    }
    if (args.verbose)
        std::cout << "built " << cfg.get_string("build.model") << " on "
                  << sop.space->describe() << "\n";
    return 0;
}

int run_match(const CommonArgs& args) {
    const Config cfg = Config::parse_file(args.config_path);
    parse_units(cfg);
    const GammaOptions gopt = parse_gamma_options(cfg);
    const std::string direction = cfg.get_string_or("match.direction", "from_gammas");
    std::ofstream out = open_output(args.output_path);

    if (direction == "targets_from_as") {
        const SpaceConfig space = parse_space(cfg);
        const ASParams p = parse_as_params(cfg, space);
        const GammaTargets t =
            hl_gamma_targets_from_as(p, cfg.get_double_or("match.free_im_sum", 0.0));
        out << "direction = targets_from_as\n";
        out << "exact = " << (t.exact ? "true" : "false") << "\n";
        out << "residual = " << format_g17(t.residual) << "\n";
        out << "free_im_sum = " << format_g17(t.free_im_sum) << "\n";
        out << "h1 = " << format_g17(t.gammas.h1.value) << "\n";
        out << "h2 = " << format_g17(t.gammas.h2.value) << "\n";
        for (size_t j = 0; j < t.gammas.radiation.size(); ++j)
            out << "g" << j << " = " << format_g17(t.gammas.radiation[j].value) << "\n";
    } else if (direction == "from_gammas") {
        const std::string model = cfg.get_string_or("match.model", "hl");
        MatchReport report;
        if (model == "hl")
            report = as_from_hl_gammas(parse_hl_gamma_set(cfg, gopt));
        else if (model == "dhl")
            report = dhl_match_check(parse_dhl_gamma_set(cfg, gopt));
        else
            throw ValidationError("match.model must be 'hl' or 'dhl'");
        write_match_report(out, report);
    } else {
        throw ValidationError("match.direction must be 'from_gammas' or 'targets_from_as'");
    }
    if (args.verbose) std::cout << "match report written to " << args.output_path << "\n";
    return 0;
}

int run_compare(const CommonArgs& args) {
    const Config cfg = Config::parse_file(args.config_path);
    parse_units(cfg);
    const std::string left_name = cfg.get_string("compare.left");
    const std::string right_name = cfg.get_string("compare.right");
    const Superoperator left = build_model_from_config(cfg, model_kind_from_string(left_name));
    const Superoperator right = build_model_from_config(cfg, model_kind_from_string(right_name));
    if (left.dim() != right.dim())
        throw ValidationError("compare: models live on different spaces (" +
                              left.space->describe() + " vs " + right.space->describe() + ")");

    const double norm_left = left.norm();
    const double abs_diff = SpMat(left.matrix - right.matrix).norm();
    const double rel_diff = abs_diff / std::max(norm_left, 1e-300);

    std::ofstream out = open_output(args.output_path);
    out << "left = " << left_name << "\n";
    out << "right = " << right_name << "\n";
    out << "dim = " << left.dim() << "\n";
    out << "norm_left = " << format_g17(norm_left) << "\n";
    out << "norm_right = " << format_g17(right.norm()) << "\n";
    out << "abs_diff = " << format_g17(abs_diff) << "\n";
    out << "rel_diff = " << format_g17(rel_diff) << "\n";
    out << "block,abs_diff,rel_diff\n";
    for (const auto& [name, lblock] : left.blocks) {
        for (const auto& [rname, rblock] : right.blocks) {
            if (rname != name) continue;
            const double bdiff = SpMat(lblock - rblock).norm();
            const double bnorm = std::max(lblock.norm(), 1e-300);
            out << name << "," << format_g17(bdiff) << "," << format_g17(bdiff / bnorm) << "\n";
        }
    }
    if (args.verbose)
        std::cout << "compare " << left_name << " vs " << right_name
                  << ": rel_diff = " << rel_diff << "\n";
    return 0;
}

int run_evolve(const CommonArgs& args) {
    const Config cfg = Config::parse_file(args.config_path);
    parse_units(cfg);
    const ModelKind kind = model_kind_from_string(cfg.get_string_or("evolve.model", "as"));
    const Superoperator heis = build_model_from_config(cfg, kind);

    const double t_max = cfg.get_double("evolve.t_max");
    const long samples = cfg.get_long_or("evolve.samples", 101);
    if (!(t_max > 0.0) || samples < 2)
        throw ValidationError("evolve needs t_max > 0 and samples >= 2");
    const double tol = cfg.get_double_or("evolve.tol", 1e-10);
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(samples));
    for (long i = 0; i < samples; ++i)
        grid.push_back(t_max * double(i) / double(samples - 1));

    NamedOps observables;
    for (const std::string& spec : cfg.get_string_list("evolve.observables"))
        observables.emplace_back(spec, parse_observable(spec, heis.space));

    const SparseOp rho0 =
        preset_initial_state(cfg.get_string_or("evolve.initial", "all_down_vacuum"), heis.space);

    const std::string picture = cfg.get_string_or("evolve.picture", "schrodinger");
    Trajectory traj;
    if (picture == "schrodinger") {
        traj = evolve(to_schrodinger(heis), rho0, grid, tol, observables);
    } else if (picture == "heisenberg") {
        traj = heisenberg_expectations(heis, observables, rho0, grid, tol);
    } else {
        throw ValidationError("evolve.picture must be 'schrodinger' or 'heisenberg'");
    }

    std::ofstream out = open_output(args.output_path);
    write_trajectory_csv(out, traj);
    if (args.verbose)
        std::cout << "trajectory with " << traj.times.size() << " samples written to "
                  << args.output_path << "\n";
    return 0;
}

int run_sl_check(const CommonArgs& args) {
    const Config cfg = Config::parse_file(args.config_path);
    parse_units(cfg);
    const GammaOptions gopt = parse_gamma_options(cfg);
    const SpectralDensity J = parse_density(cfg, cfg.get_string("sl_check.density"));
    const std::vector<double> band = cfg.get_double_list("sl_check.band");
    if (band.size() != 2) throw ValidationError("sl_check.band must be [lo, hi]");
    // the counter-rotating column scales with the counter-rotating coupling
    const double cr_strength =
        cfg.get_double_or("sl_check.cr_strength", cfg.get_double_or("hl.beta", 1.0));
    const ConvergenceTable table = convergence_report(
        J, static_cast<int>(cfg.get_long("sl_check.M")), band[0], band[1],
        cfg.get_double_list("sl_check.lambdas"), cfg.get_double("sl_check.t"),
        cfg.get_double("sl_check.omega_ref"), cfg.get_double("sl_check.omega_R"), gopt,
        cr_strength);
    std::ofstream out = open_output(args.output_path);
    write_convergence_csv(out, table);
    if (args.verbose)
        std::cout << "convergence table (" << table.rows.size() << " rows) written to "
                  << args.output_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dissipative laser generators and stochastic-limit checks"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("SLGEN_THREADS")) {
        try {
            slgen::set_thread_count(std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring bad SLGEN_THREADS value\n";
        }
    }

    CommonArgs args;
    int (*handler)(const CommonArgs&) = nullptr;

    auto* gamma_cmd = app.add_subcommand("gamma", "compute reservoir coefficients");
    add_common(gamma_cmd, args);
    gamma_cmd->callback([&] { handler = run_gamma; });

    auto* build_cmd = app.add_subcommand("build", "build a generator and summarize or export it");
    add_common(build_cmd, args);
    build_cmd->callback([&] { handler = run_build; });

    auto* match_cmd = app.add_subcommand("match", "parameter matching report");
    add_common(match_cmd, args);
    match_cmd->callback([&] { handler = run_match; });

    auto* compare_cmd = app.add_subcommand("compare", "norm table between two built models");
    add_common(compare_cmd, args);
    compare_cmd->callback([&] { handler = run_compare; });

    auto* evolve_cmd = app.add_subcommand("evolve", "integrate a trajectory");
    add_common(evolve_cmd, args);
    evolve_cmd->callback([&] { handler = run_evolve; });

    auto* sl_cmd = app.add_subcommand("sl-check", "stochastic-limit convergence table");
    add_common(sl_cmd, args);
    sl_cmd->callback([&] { handler = run_sl_check; });

    CLI11_PARSE(app, argc, argv);

    try {
        return handler ? handler(args) : 1;
    } catch (const slgen::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const slgen::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
