#include <doctest.h>

#include "slgen/runconfig.hpp"

using namespace slgen;

namespace {

const char* kBaseConfig = R"(# sample run configuration
[units]
reference = "gamma1"

[space]
N = 0
modes = 1
boson_cutoff = 3

[as]
epsilon = 0.5
gamma1 = 1.0
gamma2 = 2.0
eta = 0.5
omega = [5.0]
kappa = [0.3]
lambda = [0.25]
)";

} // namespace

TEST_CASE("config parsing") {
    const Config cfg = Config::parse(R"(
# comment
top = 1.5
[section]
flag = true
name = "hello world"
list = [1, 2.5, -3e-1]
words = ["a", "b"]
[section.sub]
k = 2
)");
    CHECK(cfg.get_double("top") == 1.5);
    CHECK(cfg.get_bool("section.flag"));
    CHECK(cfg.get_string("section.name") == "hello world");
    const std::vector<double> list = cfg.get_double_list("section.list");
    REQUIRE(list.size() == 3);
    CHECK(list[2] == doctest::Approx(-0.3));
    CHECK(cfg.get_string_list("section.words") == std::vector<std::string>{"a", "b"});
    CHECK(cfg.get_long("section.sub.k") == 2);
    CHECK(cfg.get_double_or("missing", 7.0) == 7.0);
    CHECK_FALSE(cfg.has("nope"));
    CHECK_THROWS_AS(cfg.get_double("nope"), ValidationError);
    CHECK_THROWS_AS(cfg.get_double("section.name"), ConfigParseError);
    CHECK_THROWS_AS(cfg.get_long("top"), ValidationError); // 1.5 is not integral
}

TEST_CASE("config syntax errors") {
    CHECK_THROWS_AS(Config::parse("[unterminated\nk = 1\n"), ConfigParseError);
    CHECK_THROWS_AS(Config::parse("just a line\n"), ConfigParseError);
    CHECK_THROWS_AS(Config::parse("k = \n"), ConfigParseError);
    CHECK_THROWS_AS(Config::parse("k = [1, 2\n"), ConfigParseError);
    CHECK_THROWS_AS(Config::parse("k = \"open\n"), ConfigParseError);
    CHECK_THROWS_AS(Config::parse("k = 1\nk = 2\n"), ConfigParseError);
    CHECK_THROWS_AS(Config::parse("2bad = 1\n"), ConfigParseError);
}

TEST_CASE("units declaration is required") {
    const Config cfg = Config::parse("[space]\nN = 0\n");
    CHECK_THROWS_AS(parse_units(cfg), ValidationError);
    const Config ok = Config::parse(kBaseConfig);
    CHECK(parse_units(ok) == "gamma1");
}

TEST_CASE("as params from config") {
    const Config cfg = Config::parse(kBaseConfig);
    const SpaceConfig sc = parse_space(cfg);
    CHECK(sc.N == 0);
    CHECK(sc.modes == 1);
    CHECK(sc.boson_cutoff == 3);
    const ASParams p = parse_as_params(cfg, sc);
    CHECK(p.gamma2 == 2.0);
    CHECK(p.lambda == std::vector<double>{0.25});
}

TEST_CASE("densities from config") {
    const Config cfg = Config::parse(R"(
[density.g0]
form = "flat"
J0 = 1.0
center = 10.0
half_width = 1.0
[density.l]
form = "lorentzian"
J0 = 0.5
center = 4.0
width = 0.2
support_halfwidth = 10.0
[density.none]
form = "zero"
)");
    const SpectralDensity g0 = parse_density(cfg, "g0");
    CHECK(g0(10.0) == 1.0);
    CHECK(g0(11.5) == 0.0);
    const SpectralDensity l = parse_density(cfg, "l");
    CHECK(l(4.0) == doctest::Approx(0.5));
    CHECK(parse_density(cfg, "none").is_zero());
    CHECK_THROWS_AS(parse_density(cfg, "missing"), ValidationError);
}

TEST_CASE("direct gamma sets and model building") {
    const std::string text = std::string(kBaseConfig) + R"(
[hl]
gamma_source = "match_as"
)";
    const Config cfg = Config::parse(text);
    const Superoperator las = build_model_from_config(cfg, ModelKind::AS);
    const Superoperator lhl = build_model_from_config(cfg, ModelKind::HLSL);
    CHECK(las.dim() == 8);
    const double rel = SpMat(las.matrix - lhl.matrix).norm() / las.matrix.norm();
    CHECK(rel < 1e-12);
}

TEST_CASE("direct dhl gamma set") {
    const Config cfg = Config::parse(R"(
[units]
reference = "gamma1"
[space]
N = 0
modes = 0
[dhl]
gamma_source = "direct"
[dhl.gammas]
B_plus_re = 0.3
B_minus_re = 0.3
C_plus_re = 0.2
C_plus_im = 0.1
C_minus_re = 0.2
)");
    const GammaSet set = parse_dhl_gamma_set(cfg, GammaOptions{});
    CHECK(set.model == GammaModel::DHL);
    CHECK(set.C_plus.value == Complex(0.2, 0.1));
    const Superoperator l = build_model_from_config(cfg, ModelKind::DHLSL);
    CHECK(l.dim() == 4);
}

TEST_CASE("dhl gamma set from densities") {
    const Config cfg = Config::parse(R"(
[units]
reference = "gamma1"
[dhl]
omega_R = 10.0
mu = 5.0
gamma_source = "densities"
B_plus_density = "bp"
B_minus_density = "bm"
C_plus_density = "none"
C_minus_density = "none"
[density.bp]
form = "flat"
J0 = 0.5
center = 5.0
half_width = 1.0
[density.bm]
form = "flat"
J0 = 0.5
center = -5.0
half_width = 1.0
[density.none]
form = "zero"
)");
    const GammaSet set = parse_dhl_gamma_set(cfg, GammaOptions{});
    CHECK(set.B_plus.value.real() == doctest::Approx(0.5 * 3.14159265358979).epsilon(1e-6));
    CHECK(set.B_minus.value.real() == doctest::Approx(0.5 * 3.14159265358979).epsilon(1e-6));
    CHECK(set.C_plus.value == Complex(0.0, 0.0));
}

TEST_CASE("observable parsing") {
    SpacePtr space =
        build_space(HilbertSpec{{Site::spin(), Site::fermion_pair(), Site::boson_mode(2)}});
    CHECK(max_abs_diff(parse_observable("sigma_z@0", space), pauli(PauliKind::Z, 0, space)) ==
          0.0);
    CHECK(max_abs_diff(parse_observable("num@2", space), boson(BosonKind::Number, 2, space)) ==
          0.0);
    // two of four local states occupy the upper level; the embedding
    // multiplies by the dimension of the remaining factors
    const SparseOp np = parse_observable("n_plus@1", space);
    CHECK(std::abs(trace(np) - Complex(12.0, 0.0)) == 0.0);
    CHECK_THROWS_AS(parse_observable("sigma_z@2", space), SiteMismatchError);
    CHECK_THROWS_AS(parse_observable("sigma_z", space), ValidationError);
    CHECK_THROWS_AS(parse_observable("mystery@0", space), ValidationError);
}
