#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "micdt/errors.hpp"

namespace micdt {

// Channel-major storage: row c is channel c's full sample history, contiguous
// in memory so per-channel passes stream linearly.
using SeriesMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct MultichannelSeries {
    std::vector<std::string> channels;
    SeriesMatrix data;  // C x N
    std::int64_t sample_index_origin = 0;

    Eigen::Index channel_count() const { return data.rows(); }
    Eigen::Index sample_count() const { return data.cols(); }

    // Throws UnknownChannelError.
    Eigen::Index channel_index(const std::string& label) const;

    // Enforces the type invariants: C >= 1, N >= 1, all values finite,
    // labels unique and nonempty, label count matching the row count.
    void validate() const;
};

// Builds a series from raw parts, running validate().
MultichannelSeries make_series(std::vector<std::string> channels, SeriesMatrix data,
                               std::int64_t sample_index_origin = 0);

struct ChannelAffine {
    double mean = 0.0;
    double std = 1.0;
};

struct StandardizeResult {
    MultichannelSeries series;
    std::vector<ChannelAffine> params;
};

// Maps each channel to zero mean and unit standard deviation (population 1/N
// convention) and returns the affine parameters for the inverse mapping.
// Throws ConstantChannelError when a channel has zero variance.
StandardizeResult standardize(const MultichannelSeries& series);

struct AutocorrelationLags {
    std::string channel;
    std::vector<double> rho;  // rho_1..rho_L; rho_0 == 1 is implicit
    int lag_count = 0;
};

// Biased (1/N) sample autocorrelation of one channel up to max_lag. The biased
// estimator keeps the implied Toeplitz correlation matrix positive
// semidefinite, which downstream Yule-Walker use relies on.
AutocorrelationLags autocorrelation(const MultichannelSeries& series, const std::string& channel,
                                    int max_lag);

}  // namespace micdt
