#include "micdt/series.hpp"

#include <cmath>
#include <unordered_set>

namespace micdt {

Eigen::Index MultichannelSeries::channel_index(const std::string& label) const {
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (channels[i] == label) return static_cast<Eigen::Index>(i);
    }
    throw UnknownChannelError(label);
}

void MultichannelSeries::validate() const {
    if (data.rows() < 1 || data.cols() < 1) {
        throw EmptyInputError("series must have at least one channel and one sample");
    }
    if (static_cast<Eigen::Index>(channels.size()) != data.rows()) {
        throw DimensionMismatchError("label count " + std::to_string(channels.size()) +
                                     " != channel count " + std::to_string(data.rows()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : channels) {
        if (label.empty()) throw DuplicateLabelError("(empty)");
        if (!seen.insert(label).second) throw DuplicateLabelError(label);
    }
    if (!data.allFinite()) {
        throw ParseError("series contains non-finite values");
    }
}

MultichannelSeries make_series(std::vector<std::string> channels, SeriesMatrix data,
                               std::int64_t sample_index_origin) {
    MultichannelSeries series{std::move(channels), std::move(data), sample_index_origin};
    series.validate();
    return series;
}

StandardizeResult standardize(const MultichannelSeries& series) {
    series.validate();
    const Eigen::Index c = series.channel_count();
    const Eigen::Index n = series.sample_count();

    StandardizeResult out;
    out.series.channels = series.channels;
    out.series.sample_index_origin = series.sample_index_origin;
    out.series.data.resize(c, n);
    out.params.resize(static_cast<std::size_t>(c));

    for (Eigen::Index i = 0; i < c; ++i) {
        const auto row = series.data.row(i);
        const double mean = row.mean();
        const double var = (row.array() - mean).square().sum() / static_cast<double>(n);
        const double std = std::sqrt(var);
        if (std == 0.0) throw ConstantChannelError(series.channels[static_cast<std::size_t>(i)]);
        out.series.data.row(i) = (row.array() - mean) / std;
        out.params[static_cast<std::size_t>(i)] = ChannelAffine{mean, std};
    }
    return out;
}

AutocorrelationLags autocorrelation(const MultichannelSeries& series, const std::string& channel,
                                    int max_lag) {
    const Eigen::Index idx = series.channel_index(channel);
    const Eigen::Index n = series.sample_count();
    if (max_lag < 1 || max_lag >= n) throw LagTooLargeError(max_lag, n);

    const auto row = series.data.row(idx);
    const double mean = row.mean();
    const Eigen::ArrayXd centered = row.array() - mean;
    const double denom = centered.square().sum();
    if (denom == 0.0) throw ConstantChannelError(channel);

    AutocorrelationLags out;
    out.channel = channel;
    out.lag_count = max_lag;
    out.rho.resize(static_cast<std::size_t>(max_lag));
    for (int k = 1; k <= max_lag; ++k) {
        // Biased estimator: the 1/N factors cancel against the lag-0 term.
        const double num = (centered.segment(k, n - k) * centered.segment(0, n - k)).sum();
        out.rho[static_cast<std::size_t>(k - 1)] = num / denom;
    }
    return out;
}

}  // namespace micdt
