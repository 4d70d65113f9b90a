#include "micdt/var.hpp"

#include <cmath>
#include <string>

namespace micdt {

namespace {

constexpr double kGramConditionLimit = 1e12;

// Design matrix rows t = D..N-1 with regressor [y_{t-1}; ...; y_{t-D}].
// The channel block for lag d starts at column (d-1)*C.
Eigen::MatrixXd design_matrix(const SeriesMatrix& data, int order) {
    const Eigen::Index c = data.rows();
    const Eigen::Index n = data.cols();
    const Eigen::Index t_rows = n - order;
    Eigen::MatrixXd x(t_rows, c * order);
    for (Eigen::Index t = 0; t < t_rows; ++t) {
        for (int d = 1; d <= order; ++d) {
            x.block(t, (d - 1) * c, 1, c) = data.col(t + order - d).transpose();
        }
    }
    return x;
}

Eigen::MatrixXd target_matrix(const SeriesMatrix& data, int order) {
    const Eigen::Index n = data.cols();
    return data.rightCols(n - order).transpose();  // (N-D) x C
}

void check_gram_condition(const Eigen::MatrixXd& gram) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (lo <= 0.0 || hi / lo > kGramConditionLimit) {
        throw SingularRegressorsError(lo <= 0.0 ? std::numeric_limits<double>::infinity() : hi / lo);
    }
}

std::vector<Eigen::MatrixXd> unstack_coefficients(const Eigen::MatrixXd& beta, Eigen::Index c,
                                                  int order) {
    // beta is K x C: column i holds channel i's regression weights.
    std::vector<Eigen::MatrixXd> lags;
    lags.reserve(static_cast<std::size_t>(order));
    for (int d = 1; d <= order; ++d) {
        Eigen::MatrixXd m(c, c);
        for (Eigen::Index i = 0; i < c; ++i) {
            m.row(i) = beta.block((d - 1) * c, i, c, 1).transpose();
        }
        lags.push_back(std::move(m));
    }
    return lags;
}

void check_fit_preconditions(const MultichannelSeries& series, int order) {
    series.validate();
    if (order < 1) throw InsufficientDataError("order must be >= 1");
    const Eigen::Index c = series.channel_count();
    const Eigen::Index n = series.sample_count();
    if (n <= c * order + 1) {
        throw InsufficientDataError("N = " + std::to_string(n) + " samples for C*D + 1 = " +
                                    std::to_string(c * order + 1));
    }
}

// Population-convention covariance of the rows of E (T x C), no demeaning:
// residuals of an intercept-free fit are treated as zero-mean innovations.
Eigen::MatrixXd innovation_covariance(const Eigen::MatrixXd& e) {
    Eigen::MatrixXd cov = (e.transpose() * e) / static_cast<double>(e.rows());
    cov = ((cov + cov.transpose()) / 2.0).eval();  // exact symmetry
    return cov;
}

double column_rss(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    const Eigen::MatrixXd gram = x.transpose() * x;
    const Eigen::VectorXd beta = gram.ldlt().solve(x.transpose() * y);
    return (y - x * beta).squaredNorm();
}

}  // namespace

VarModel fit_var_ols(const MultichannelSeries& series, int order) {
    check_fit_preconditions(series, order);
    const Eigen::Index c = series.channel_count();

    const Eigen::MatrixXd x = design_matrix(series.data, order);
    const Eigen::MatrixXd y = target_matrix(series.data, order);
    const Eigen::MatrixXd gram = x.transpose() * x;
    check_gram_condition(gram);

    const Eigen::MatrixXd beta = gram.ldlt().solve(x.transpose() * y);
    const Eigen::MatrixXd resid = y - x * beta;

    VarModel model;
    model.order = order;
    model.lag_matrices = unstack_coefficients(beta, c, order);
    model.innovation_covariance = innovation_covariance(resid);
    model.fit_meta = VarFitMeta{"ols", x.rows()};
    return model;
}

VarModel fit_var_kalman(const MultichannelSeries& series, int order, const KalmanConfig& config) {
    check_fit_preconditions(series, order);
    if (config.process_noise < 0.0 || config.observation_noise <= 0.0 ||
        config.initial_covariance <= 0.0) {
        throw InsufficientDataError("kalman config requires q >= 0, r > 0, p0 > 0");
    }
    const Eigen::Index c = series.channel_count();
    const Eigen::Index k = c * order;

    const Eigen::MatrixXd x = design_matrix(series.data, order);
    const Eigen::MatrixXd y = target_matrix(series.data, order);
    check_gram_condition(x.transpose() * x);

    // Every output channel sees the same regressor and the same scalar
    // observation noise, so one covariance recursion serves all C states.
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(k, k) * config.initial_covariance;
    Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(k, c);

    for (Eigen::Index t = 0; t < x.rows(); ++t) {
        if (config.process_noise > 0.0) p.diagonal().array() += config.process_noise;
        const Eigen::VectorXd xt = x.row(t).transpose();
        const Eigen::VectorXd px = p * xt;
        const double denom = xt.dot(px) + config.observation_noise;
        if (!(denom > 0.0) || !std::isfinite(denom)) {
            throw NumericalDivergenceError("state covariance lost positive definiteness at step " +
                                           std::to_string(t));
        }
        const Eigen::VectorXd gain = px / denom;
        const Eigen::RowVectorXd innovation = y.row(t) - x.row(t) * theta;
        theta.noalias() += gain * innovation;
        p.noalias() -= gain * px.transpose();
        p = ((p + p.transpose()) / 2.0).eval();
        if (!p.allFinite() || p.diagonal().minCoeff() <= 0.0) {
            throw NumericalDivergenceError("state covariance lost positive definiteness at step " +
                                           std::to_string(t));
        }
    }

    VarModel model;
    model.order = order;
    model.lag_matrices = unstack_coefficients(theta, c, order);
    model.innovation_covariance = innovation_covariance(y - x * theta);
    model.fit_meta = VarFitMeta{"kalman", x.rows()};
    return model;
}

Residuals residuals(const MultichannelSeries& series, const VarModel& model) {
    series.validate();
    const Eigen::Index c = series.channel_count();
    const Eigen::Index n = series.sample_count();
    const int d_max = model.order;
    if (static_cast<int>(model.lag_matrices.size()) != d_max) {
        throw DimensionMismatchError("model holds " + std::to_string(model.lag_matrices.size()) +
                                     " lag matrices for order " + std::to_string(d_max));
    }
    for (const auto& m : model.lag_matrices) {
        if (m.rows() != c || m.cols() != c) {
            throw DimensionMismatchError("lag matrix is " + std::to_string(m.rows()) + "x" +
                                         std::to_string(m.cols()) + ", series has " +
                                         std::to_string(c) + " channels");
        }
    }
    if (d_max < 1 || d_max >= n) throw InsufficientDataError("model order must be < N");

    Residuals out;
    out.start_index = d_max;
    out.data.resize(c, n - d_max);
    for (Eigen::Index t = d_max; t < n; ++t) {
        Eigen::VectorXd pred = Eigen::VectorXd::Zero(c);
        for (int d = 1; d <= d_max; ++d) {
            pred.noalias() += model.lag_matrices[static_cast<std::size_t>(d - 1)] * series.data.col(t - d);
        }
        out.data.col(t - d_max) = series.data.col(t) - pred;
    }
    return out;
}

GrangerResult pairwise_granger(const MultichannelSeries& series, const std::string& source,
                               const std::string& target, int order) {
    series.validate();
    if (source == target) throw SelfPairError(source);
    const Eigen::Index src = series.channel_index(source);
    const Eigen::Index tgt = series.channel_index(target);
    if (order < 1) throw InsufficientDataError("order must be >= 1");
    const Eigen::Index n = series.sample_count();
    if (n <= 2 * order + 1) {
        throw InsufficientDataError("N = " + std::to_string(n) + " samples for 2D + 1 = " +
                                    std::to_string(2 * order + 1));
    }

    // Centering stands in for an intercept; the restricted and full designs
    // then share rows t = D..N-1, keeping the fits nested.
    const Eigen::RowVectorXd y_tgt = series.data.row(tgt).array() - series.data.row(tgt).mean();
    const Eigen::RowVectorXd y_src = series.data.row(src).array() - series.data.row(src).mean();

    const Eigen::Index t_rows = n - order;
    Eigen::MatrixXd x_full(t_rows, 2 * order);
    Eigen::VectorXd y(t_rows);
    for (Eigen::Index t = 0; t < t_rows; ++t) {
        y(t) = y_tgt(t + order);
        for (int d = 1; d <= order; ++d) {
            x_full(t, d - 1) = y_tgt(t + order - d);
            x_full(t, order + d - 1) = y_src(t + order - d);
        }
    }

    const double samples = static_cast<double>(t_rows);
    GrangerResult result;
    result.source = source;
    result.target = target;
    result.lags = order;
    result.var_restricted = column_rss(x_full.leftCols(order), y) / samples;
    result.var_full = column_rss(x_full, y) / samples;
    result.f_value = std::log(result.var_restricted / result.var_full);
    return result;
}

Ar2Coefficients yule_walker_ar2(double rho1, double rho2) {
    if (std::abs(rho1) >= 1.0) throw DegenerateCorrelationError(rho1);
    const double denom = 1.0 - rho1 * rho1;
    return Ar2Coefficients{rho1 * (1.0 - rho2) / denom, (rho2 - rho1 * rho1) / denom};
}

}  // namespace micdt
