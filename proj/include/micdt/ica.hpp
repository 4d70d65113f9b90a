#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace micdt {

struct WhitenResult {
    Eigen::MatrixXd whitened;          // C x T, identity sample covariance
    Eigen::MatrixXd whitening_matrix;  // C x C, inverse principal square root of cov
    Eigen::VectorXd mean;              // per-row mean removed before whitening
};

// Symmetric (ZCA) whitening: K = cov^{-1/2} via eigendecomposition, so
// already-white data maps through a near-identity K rather than an arbitrary
// rotation. Throws RankDeficientError when the covariance is numerically
// singular.
WhitenResult whiten(const Eigen::MatrixXd& data);

struct IcaConfig {
    enum class Contrast { LogCosh, Cube };
    enum class Strategy { Symmetric, Deflation };

    Contrast contrast = Contrast::LogCosh;
    int max_iter = 500;
    double tol = 1e-7;
    std::uint64_t seed = 0;
    Strategy strategy = Strategy::Symmetric;
};

struct IcaConvergence {
    int iterations = 0;
    double final_delta = 0.0;
};

struct IcaResult {
    // Unmixing in the original (unwhitened) data space: components = unmixing * (data - mean).
    Eigen::MatrixXd unmixing;    // C x C
    Eigen::MatrixXd components;  // C x T, unit sample variance, mutually uncorrelated
    IcaConvergence convergence;
};

// FastICA fixed-point iteration on internally whitened data. Deterministic
// given the seed: the initial unmixing guess is drawn from a seeded generator
// and every downstream step is deterministic, including the sign convention
// (largest-magnitude entry of each unmixing row made positive).
// Throws NoConvergenceError (carrying iterations and final delta) when the
// fixed point is not reached within max_iter; Gaussian inputs typically end
// here because their rotation is not identifiable.
IcaResult fastica(const Eigen::MatrixXd& data, const IcaConfig& config = {});

}  // namespace micdt
