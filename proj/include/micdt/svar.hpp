#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "micdt/ica.hpp"
#include "micdt/lingam.hpp"
#include "micdt/series.hpp"
#include "micdt/var.hpp"

namespace micdt {

struct SvarFitMeta {
    std::string method = "ols";
    std::uint64_t seed = 0;
    double prune_threshold = 0.05;
    std::int64_t samples = 0;  // input sample count N
    std::vector<std::string> warnings;
};

// Full SVAR parameter set: y_t = S0 y_t + sum_d S^d y_{t-d} + e_t.
// Coefficients are expressed in standardized units when preprocessing was
// applied; preprocessing_{means,stds} carry the affine map back to raw units.
struct SvarModel {
    std::vector<std::string> channels;
    int order = 0;
    StructuralMatrix s0;
    std::vector<Eigen::MatrixXd> lagged;              // S^1..S^D (corrected)
    std::vector<Eigen::MatrixXd> uncorrected_lagged;  // M^1..M^D
    Eigen::VectorXd noise_variances;                  // per-channel var of e_t
    Eigen::VectorXd preprocessing_means;
    Eigen::VectorXd preprocessing_stds;
    SvarFitMeta fit_meta;

    // Channel clamps installed by interventions; in-memory only, not part of
    // the model file schema.
    std::map<int, double> clamps;

    Eigen::Index channel_count() const { return static_cast<Eigen::Index>(channels.size()); }
    Eigen::Index channel_index(const std::string& label) const;
};

struct SvarConfig {
    enum class VarMethod { Ols, Kalman };

    VarMethod var_method = VarMethod::Ols;
    KalmanConfig kalman;
    IcaConfig ica;
    double prune_threshold = 0.05;
    bool standardize = true;
};

// The estimation pipeline: optional standardization, reduced-form VAR fit,
// residual extraction, ICA + LiNGAM on the residuals, DAG pruning, and the
// correction S^d = (I - S0) M^d. A near-Gaussian residual diagnostic (all
// |excess kurtosis| < 0.1) lands in fit_meta.warnings instead of raising.
SvarModel fit_svar(const MultichannelSeries& series, int order, const SvarConfig& config = {});

// (I - s0) * m.
Eigen::MatrixXd corrected_lagged(const StructuralMatrix& s0, const Eigen::MatrixXd& m);

struct CausalFactors {
    Eigen::MatrixXd structural;
    std::vector<Eigen::MatrixXd> granger_corrected;    // diagonals zeroed
    std::vector<Eigen::MatrixXd> granger_uncorrected;  // diagonals zeroed
};

// Reporting view: structural factors from s0, Granger factors from the lag
// matrices with diagonals masked (self-lags are AR terms, not cross-channel
// causality). Masking happens here only; the model keeps raw diagonals.
CausalFactors causal_factors(const SvarModel& model);

// Re-expresses a factor matrix in raw sensor units:
// raw[i][j] = standardized[i][j] * std_i / std_j.
Eigen::MatrixXd to_raw_units(const SvarModel& model, const Eigen::MatrixXd& standardized_factor);

// Model JSON, schema_version "1". Deterministic output; floats survive the
// round trip bit-exactly. Clamps are echoed into fit_meta warnings when
// present but are not restored by load.
std::string model_to_json(const SvarModel& model);
SvarModel model_from_json(const std::string& text);

void save_model(const SvarModel& model, const std::string& path);
SvarModel load_model(const std::string& path);

}  // namespace micdt
