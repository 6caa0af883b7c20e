// runconfig.hpp — typed assembly of models, densities and run options from a
// parsed config file
#pragma once

#include <optional>
#include <string>

#include "slgen/config.hpp"
#include "slgen/dynamics.hpp"
#include "slgen/matching.hpp"
#include "slgen/models.hpp"
#include "slgen/sl_oracle.hpp"

namespace slgen {

enum class ModelKind { AS, HLSL, DHLSL };

ModelKind model_kind_from_string(const std::string& name);

struct SpaceConfig {
    int N{0};
    int modes{0};
    int boson_cutoff{1};
    long dimension_cap{4096};
};

// Every run declares the rate that sets the time unit; all other quantities
// are dimensionless multiples of it.
std::string parse_units(const Config& cfg);

SpaceConfig parse_space(const Config& cfg);
ASParams parse_as_params(const Config& cfg, const SpaceConfig& space);
GammaOptions parse_gamma_options(const Config& cfg);
SpectralDensity parse_density(const Config& cfg, const std::string& name);

// Gamma sets for hl/dhl sections; source is "densities", "direct" or
// "match_as" (HL only: targets derived from the [as] parameters).
GammaSet parse_hl_gamma_set(const Config& cfg, const GammaOptions& gopt);
GammaSet parse_dhl_gamma_set(const Config& cfg, const GammaOptions& gopt);

// Builds the named model ("as", "hlsl", "dhlsl") on its lattice space.
Superoperator build_model_from_config(const Config& cfg, ModelKind kind);

// "sigma_z@0", "num@1", "n_plus@0", ... -> named operator on the space
SparseOp parse_observable(const std::string& spec, const SpacePtr& space);

} // namespace slgen
