#include "slgen/runconfig.hpp"

namespace slgen {

namespace {

std::vector<SpectralDensity> parse_density_list(const Config& cfg, const std::string& key) {
    std::vector<SpectralDensity> out;
    if (!cfg.has(key)) return out; // no radiation modes
    for (const std::string& name : cfg.get_string_list(key))
        out.push_back(parse_density(cfg, name));
    return out;
}

GammaCoefficient direct_coefficient(const Config& cfg, const std::string& prefix) {
    GammaCoefficient c;
    c.value = Complex(cfg.get_double(prefix + "_re"), cfg.get_double_or(prefix + "_im", 0.0));
    c.resonance_in_support = c.value.real() != 0.0;
    return c;
}

std::vector<GammaCoefficient> direct_radiation(const Config& cfg, const std::string& section) {
    if (!cfg.has(section + ".g_re")) return {};
    const std::vector<double> re = cfg.get_double_list(section + ".g_re");
    std::vector<double> im(re.size(), 0.0);
    if (cfg.has(section + ".g_im")) im = cfg.get_double_list(section + ".g_im");
    if (im.size() != re.size())
        throw ValidationError(section + ": g_re and g_im must have the same length");
    std::vector<GammaCoefficient> out(re.size());
    for (size_t j = 0; j < re.size(); ++j) {
        out[j].value = Complex(re[j], im[j]);
        out[j].resonance_in_support = re[j] != 0.0;
    }
    return out;
}

} // namespace

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "as" || name == "AS") return ModelKind::AS;
    if (name == "hlsl" || name == "hl" || name == "HL") return ModelKind::HLSL;
    if (name == "dhlsl" || name == "dhl" || name == "DHL") return ModelKind::DHLSL;
    throw ValidationError("unknown model '" + name + "' (expected as, hlsl or dhlsl)");
}

std::string parse_units(const Config& cfg) {
    if (!cfg.has("units.reference"))
        throw ValidationError(cfg.origin() +
                              ": missing [units] reference — declare the rate that sets the "
                              "time unit, e.g. reference = \"gamma1\"");
    return cfg.get_string("units.reference");
}

SpaceConfig parse_space(const Config& cfg) {
    SpaceConfig s;
    s.N = static_cast<int>(cfg.get_long_or("space.N", 0));
    s.modes = static_cast<int>(cfg.get_long_or("space.modes", 0));
    s.boson_cutoff = static_cast<int>(cfg.get_long_or("space.boson_cutoff", 1));
    s.dimension_cap = cfg.get_long_or("space.dimension_cap", 4096);
    if (s.N < 0) throw ValidationError("space.N must be >= 0");
    if (s.modes < 0) throw ValidationError("space.modes must be >= 0");
    if (s.modes > 0 && s.boson_cutoff < 1)
        throw ValidationError("space.boson_cutoff must be >= 1");
    return s;
}

ASParams parse_as_params(const Config& cfg, const SpaceConfig& space) {
    ASParams p;
    p.N = space.N;
    p.n = space.modes;
    p.epsilon = cfg.get_double("as.epsilon");
    p.gamma1 = cfg.get_double("as.gamma1");
    p.gamma2 = cfg.get_double("as.gamma2");
    p.eta = cfg.get_double("as.eta");
    if (p.n > 0) {
        p.omega = cfg.get_double_list("as.omega");
        p.kappa = cfg.get_double_list("as.kappa");
        p.lambda = cfg.get_double_list("as.lambda");
    }
    p.validate();
    return p;
}

GammaOptions parse_gamma_options(const Config& cfg) {
    GammaOptions opt;
    if (cfg.has("gamma_options.eps_seq")) {
        opt.eps_seq = cfg.get_double_list("gamma_options.eps_seq");
    } else if (cfg.has("gamma_options.eps_start") || cfg.has("gamma_options.eps_count")) {
        const double start = cfg.get_double_or("gamma_options.eps_start", 0.1);
        const long count = cfg.get_long_or("gamma_options.eps_count", 7);
        double e = start;
        for (long i = 0; i < count; ++i, e *= 0.5) opt.eps_seq.push_back(e);
    }
    opt.residual_tolerance = cfg.get_double_or("gamma_options.residual_tolerance", 1e-6);
    opt.conjugate_convention = cfg.get_bool_or("gamma_options.conjugate_convention", false);
    opt.max_intervals = cfg.get_long_or("gamma_options.max_intervals", 20000);
    return opt;
}

SpectralDensity parse_density(const Config& cfg, const std::string& name) {
    const std::string base = "density." + name;
    if (!cfg.has(base + ".form"))
        throw ValidationError(cfg.origin() + ": density '" + name + "' is not defined (missing [" +
                              base + "] form)");
    const std::string form = cfg.get_string(base + ".form");
    if (form == "zero") return SpectralDensity::zero();
    if (form == "flat")
        return SpectralDensity::flat(cfg.get_double(base + ".J0"), cfg.get_double(base + ".center"),
                                     cfg.get_double(base + ".half_width"));
    if (form == "lorentzian")
        return SpectralDensity::lorentzian(
            cfg.get_double(base + ".J0"), cfg.get_double(base + ".center"),
            cfg.get_double(base + ".width"), cfg.get_double_or(base + ".support_halfwidth", -1.0));
    if (form == "gaussian")
        return SpectralDensity::gaussian(
            cfg.get_double(base + ".J0"), cfg.get_double(base + ".center"),
            cfg.get_double(base + ".sigma"), cfg.get_double_or(base + ".support_halfwidth", -1.0));
    if (form == "tabulated")
        return SpectralDensity::tabulated_from_file(cfg.get_string(base + ".file"));
    throw ValidationError(cfg.origin() + ": density '" + name + "' has unknown form '" + form +
                          "'");
}

GammaSet parse_hl_gamma_set(const Config& cfg, const GammaOptions& gopt) {
    const std::string source = cfg.get_string_or("hl.gamma_source", "densities");
    if (source == "direct") {
        GammaSet set;
        set.model = GammaModel::HL;
        set.radiation = direct_radiation(cfg, "hl.gammas");
        set.h1 = direct_coefficient(cfg, "hl.gammas.h1");
        set.h2 = direct_coefficient(cfg, "hl.gammas.h2");
        return set;
    }
    if (source == "match_as") {
        const SpaceConfig space = parse_space(cfg);
        const ASParams p = parse_as_params(cfg, space);
        return hl_gamma_targets_from_as(p, cfg.get_double_or("hl.free_im_sum", 0.0)).gammas;
    }
    if (source == "densities") {
        HLParams p;
        p.omega_R = cfg.get_double("hl.omega_R");
        p.mu = cfg.get_double("hl.mu");
        p.alpha = cfg.get_double_or("hl.alpha", 1.0);
        p.beta = cfg.get_double_or("hl.beta", 0.0);
        p.validate();
        HLDensities d;
        d.g = parse_density_list(cfg, "hl.g_densities");
        d.h1 = parse_density(cfg, cfg.get_string("hl.h1_density"));
        d.h2 = parse_density(cfg, cfg.get_string("hl.h2_density"));
        return gamma_set_hl(d, p.omega_R, p.mu, gopt);
    }
    throw ValidationError("hl.gamma_source must be 'densities', 'direct' or 'match_as'");
}

GammaSet parse_dhl_gamma_set(const Config& cfg, const GammaOptions& gopt) {
    const std::string source = cfg.get_string_or("dhl.gamma_source", "densities");
    if (source == "direct") {
        GammaSet set;
        set.model = GammaModel::DHL;
        set.radiation = direct_radiation(cfg, "dhl.gammas");
        set.B_plus = direct_coefficient(cfg, "dhl.gammas.B_plus");
        set.B_minus = direct_coefficient(cfg, "dhl.gammas.B_minus");
        set.C_plus = direct_coefficient(cfg, "dhl.gammas.C_plus");
        set.C_minus = direct_coefficient(cfg, "dhl.gammas.C_minus");
        return set;
    }
    if (source == "densities") {
        DHLParams p;
        p.omega_R = cfg.get_double("dhl.omega_R");
        p.mu = cfg.get_double("dhl.mu");
        p.validate();
        DHLDensities d;
        d.g = parse_density_list(cfg, "dhl.g_densities");
        d.B_plus = parse_density(cfg, cfg.get_string("dhl.B_plus_density"));
        d.B_minus = parse_density(cfg, cfg.get_string("dhl.B_minus_density"));
        d.C_plus = parse_density(cfg, cfg.get_string("dhl.C_plus_density"));
        d.C_minus = parse_density(cfg, cfg.get_string("dhl.C_minus_density"));
        return gamma_set_dhl(d, p.omega_R, p.mu, gopt);
    }
    throw ValidationError("dhl.gamma_source must be 'densities' or 'direct'");
}

Superoperator build_model_from_config(const Config& cfg, ModelKind kind) {
    const SpaceConfig sc = parse_space(cfg);
    const GammaOptions gopt = parse_gamma_options(cfg);
    if (kind == ModelKind::AS) {
        const ASParams p = parse_as_params(cfg, sc);
        SpacePtr space = build_space([&] {
            HilbertSpec spec = p.space_spec(sc.boson_cutoff);
            spec.dimension_cap = sc.dimension_cap;
            return spec;
        }());
        return build_as_generator(p, space);
    }
    std::vector<double> lambdas;
    if (sc.modes > 0) {
        const std::string lk = kind == ModelKind::HLSL ? "hl.lambda" : "dhl.lambda";
        lambdas = cfg.has(lk) ? cfg.get_double_list(lk) : cfg.get_double_list("as.lambda");
    }
    if (kind == ModelKind::HLSL) {
        const GammaSet set = parse_hl_gamma_set(cfg, gopt);
        if (static_cast<int>(set.radiation.size()) != sc.modes)
            throw ValidationError("hl gamma set has " + std::to_string(set.radiation.size()) +
                                  " radiation coefficients but space.modes = " +
                                  std::to_string(sc.modes));
        SpacePtr space = build_space([&] {
            HilbertSpec spec = HilbertSpec::spin_lattice(sc.N, sc.modes, sc.boson_cutoff);
            spec.dimension_cap = sc.dimension_cap;
            return spec;
        }());
        return build_hlsl_generator(set, lambdas, space);
    }
    const GammaSet set = parse_dhl_gamma_set(cfg, gopt);
    if (static_cast<int>(set.radiation.size()) != sc.modes)
        throw ValidationError("dhl gamma set has " + std::to_string(set.radiation.size()) +
                              " radiation coefficients but space.modes = " +
                              std::to_string(sc.modes));
    SpacePtr space = build_space([&] {
        HilbertSpec spec = HilbertSpec::fermion_lattice(sc.N, sc.modes, sc.boson_cutoff);
        spec.dimension_cap = sc.dimension_cap;
        return spec;
    }());
    return build_dhlsl_generator(set, lambdas, space);
}

SparseOp parse_observable(const std::string& spec, const SpacePtr& space) {
    const auto at = spec.find('@');
    if (at == std::string::npos || at == 0 || at + 1 >= spec.size())
        throw ValidationError("observable '" + spec + "' must have the form kind@site");
    const std::string kind = spec.substr(0, at);
    int site = 0;
    try {
        site = std::stoi(spec.substr(at + 1));
    } catch (const std::exception&) {
        throw ValidationError("observable '" + spec + "' has a bad site index");
    }
    if (kind == "sigma_x") return pauli(PauliKind::X, site, space);
    if (kind == "sigma_y") return pauli(PauliKind::Y, site, space);
    if (kind == "sigma_z") return pauli(PauliKind::Z, site, space);
    if (kind == "sigma_plus") return pauli(PauliKind::Plus, site, space);
    if (kind == "sigma_minus") return pauli(PauliKind::Minus, site, space);
    if (kind == "num") return boson(BosonKind::Number, site, space);
    if (kind == "a") return boson(BosonKind::Annihilate, site, space);
    if (kind == "n_plus") {
        const SparseOp b = fermion(FermiLevel::Plus, FermiKind::Annihilate, site, space);
        return b.adjoint() * b;
    }
    if (kind == "n_minus") {
        const SparseOp b = fermion(FermiLevel::Minus, FermiKind::Annihilate, site, space);
        return b.adjoint() * b;
    }
    if (kind == "fsigma_z") return spin_from_fermions(site, space).z;
    if (kind == "fsigma_plus") return spin_from_fermions(site, space).plus;
    if (kind == "fsigma_minus") return spin_from_fermions(site, space).minus;
    throw ValidationError("unknown observable kind '" + kind + "'");
}

} // namespace slgen
