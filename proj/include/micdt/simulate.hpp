#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "micdt/rng.hpp"
#include "micdt/series.hpp"
#include "micdt/svar.hpp"

namespace micdt {

struct NoiseSpec {
    NoiseFamily family = NoiseFamily::Laplace;
    Eigen::VectorXd scale;  // per-channel standard deviation; empty means all ones
    std::uint64_t seed = 0;
};

enum class StructuralSolver {
    Auto,                 // forward substitution when s0 is pruned, else linear solve
    ForwardSubstitution,  // requires strict triangularity in causal_order
    LinearSolve,          // explicit (I - S0) solve
};

// Iterates y_t = (I - S0)^{-1} (sum_d S^d y_{t-d} + e_t) from zero initial
// conditions, discards burn_in samples, and returns n_samples mapped through
// the model's preprocessing affine back to raw units. All C noise variates
// are drawn every step in channel order, clamped channels included, so two
// runs with the same NoiseSpec consume identical streams (common random
// numbers). Appends an instability note to *warnings when the companion
// spectral radius is >= 1; simulation proceeds regardless.
MultichannelSeries simulate_svar(const SvarModel& model, std::int64_t n_samples,
                                 const NoiseSpec& noise, std::int64_t burn_in = 1000,
                                 std::vector<std::string>* warnings = nullptr,
                                 StructuralSolver solver = StructuralSolver::Auto);

// Spectral radius of the companion matrix of the reduced form
// A_d = (I - S0)^{-1} S^d; >= 1 means the simulated system diverges.
double companion_spectral_radius(const SvarModel& model);

struct Intervention {
    enum class Kind { ZeroStructuralEdge, ZeroGrangerEdge, SetEdge, ClampChannel };

    Kind kind = Kind::ZeroStructuralEdge;
    std::string source;  // cause channel (edges); unused for clamps
    std::string target;  // effect channel, or the clamped channel
    int lag = 0;         // 0 = structural, 1..D = lagged
    double value = 0.0;  // SetEdge weight or clamp level
};

// Edit grammar: "structural:SRC->DST=V", "lagK:SRC->DST=V" (V == 0 removes
// the edge), "clamp:CH=V". Throws ParseError with a grammar hint.
Intervention parse_edit(const std::string& text);
std::string format_edit(const Intervention& intervention);

// Returns an edited copy; the original is untouched. Edits act on s0 and the
// corrected lag matrices directly, so the corrected/uncorrected consistency
// invariant is intentionally relaxed and the edit is recorded in
// fit_meta.warnings. Structural diagonal edits are refused.
SvarModel apply_intervention(const SvarModel& model, const Intervention& intervention);

struct ScenarioMetrics {
    Eigen::VectorXd variances;   // per channel
    Eigen::VectorXd autocorr1;   // lag-1 autocorrelation per channel
    Eigen::MatrixXd granger_f;   // [i][j] = F(channel j -> channel i), zero diagonal
};

struct CounterfactualScenario {
    std::vector<Intervention> interventions;
    ScenarioMetrics metrics;
    ScenarioMetrics deltas;  // scenario - baseline
};

struct CounterfactualReport {
    std::vector<std::string> channels;
    ScenarioMetrics baseline;
    std::vector<CounterfactualScenario> scenarios;
};

// Simulates the baseline and each scenario (a list of interventions applied
// together) under common random numbers and reports variances, lag-1
// autocorrelations, and in-sample pairwise Granger F values plus deltas.
CounterfactualReport counterfactual_report(const SvarModel& model,
                                           const std::vector<std::vector<Intervention>>& scenarios,
                                           std::int64_t n_samples, const NoiseSpec& noise,
                                           std::int64_t burn_in = 1000);

std::string report_to_json(const CounterfactualReport& report);

}  // namespace micdt
