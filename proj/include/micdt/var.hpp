#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "micdt/series.hpp"

namespace micdt {

struct VarFitMeta {
    std::string method;              // "ols" | "kalman"
    Eigen::Index samples_used = 0;   // regression rows, N - D
};

// Reduced-form VAR: y_t = sum_d M^d y_{t-d} + n_t (no intercept; inputs are
// expected to be zero-mean, normally via standardize()).
struct VarModel {
    int order = 0;
    std::vector<Eigen::MatrixXd> lag_matrices;  // M^1..M^D, each C x C
    Eigen::MatrixXd innovation_covariance;      // C x C, population convention
    VarFitMeta fit_meta;
};

// Batch least squares over t = D..N-1. Throws InsufficientDataError when
// N <= C*D + 1 and SingularRegressorsError when the regressor Gram matrix has
// condition number above 1e12.
VarModel fit_var_ols(const MultichannelSeries& series, int order);

struct KalmanConfig {
    double process_noise = 0.0;       // q: 0 for a constant-coefficient state
    double observation_noise = 1.0;   // r
    double initial_covariance = 1e6;  // p0: large == diffuse prior, approaches OLS
};

// Recursive tracker with the stacked VAR coefficients as state, observed
// through the regression equation one time step at a time. All channels share
// the regressor vector and observation noise, so a single covariance recursion
// serves every output channel. q > 0 lets the coefficients drift.
VarModel fit_var_kalman(const MultichannelSeries& series, int order, const KalmanConfig& config = {});

struct Residuals {
    SeriesMatrix data;    // C x (N - D)
    int start_index = 0;  // first residual corresponds to sample index D
};

// n_t = y_t - sum_d M^d y_{t-d}, evaluated exactly under the given model.
Residuals residuals(const MultichannelSeries& series, const VarModel& model);

struct GrangerResult {
    std::string source;
    std::string target;
    double var_restricted = 0.0;  // var[e], target on its own lags
    double var_full = 0.0;        // var[eps], target on own + source lags
    double f_value = 0.0;         // ln(var_restricted / var_full)
    int lags = 0;
};

// Classical two-channel Granger statistic. Both channels are centered
// internally, then fitted without intercept; variances use the population
// convention over the shared t = D..N-1 rows, so the fits are nested and
// f_value >= 0 up to roundoff.
GrangerResult pairwise_granger(const MultichannelSeries& series, const std::string& source,
                               const std::string& target, int order);

struct Ar2Coefficients {
    double s1 = 0.0;
    double s2 = 0.0;
};

// Closed-form AR(2) solution of the Yule-Walker equations:
//   s1 = rho1 (1 - rho2) / (1 - rho1^2),  s2 = (rho2 - rho1^2) / (1 - rho1^2).
// Throws DegenerateCorrelationError when |rho1| >= 1.
Ar2Coefficients yule_walker_ar2(double rho1, double rho2);

}  // namespace micdt
