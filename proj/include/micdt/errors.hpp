#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace micdt {

// Validation errors are caller mistakes (bad files, bad labels, bad shapes);
// Numerical errors are estimation failures on data that passed validation.
// The CLI maps Validation -> exit 1 and Numerical -> exit 2.
enum class ErrorKind { Validation, Numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class FileNotFoundError : public Error {
public:
    explicit FileNotFoundError(const std::string& path)
        : Error(ErrorKind::Validation, "file not found: " + path) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::int64_t row = 0, std::int64_t column = 0)
        : Error(ErrorKind::Validation, message), row(row), column(column) {}

    std::int64_t row;     // 1-based data row, 0 when not cell-addressable
    std::int64_t column;  // 1-based column, 0 when not cell-addressable
};

class EmptyInputError : public Error {
public:
    explicit EmptyInputError(const std::string& what)
        : Error(ErrorKind::Validation, "empty input: " + what) {}
};

class DuplicateLabelError : public Error {
public:
    explicit DuplicateLabelError(const std::string& label)
        : Error(ErrorKind::Validation, "duplicate channel label: " + label) {}
};

class ConstantChannelError : public Error {
public:
    explicit ConstantChannelError(const std::string& label)
        : Error(ErrorKind::Validation, "channel has zero variance: " + label) {}
};

class LagTooLargeError : public Error {
public:
    LagTooLargeError(std::int64_t lag, std::int64_t n_samples)
        : Error(ErrorKind::Validation,
                "lag " + std::to_string(lag) + " too large for " + std::to_string(n_samples) + " samples") {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& message)
        : Error(ErrorKind::Validation, "insufficient data: " + message) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& message)
        : Error(ErrorKind::Validation, "dimension mismatch: " + message) {}
};

class UnknownChannelError : public Error {
public:
    explicit UnknownChannelError(const std::string& label)
        : Error(ErrorKind::Validation, "unknown channel: " + label) {}
};

class SelfPairError : public Error {
public:
    explicit SelfPairError(const std::string& label)
        : Error(ErrorKind::Validation, "source and target are the same channel: " + label) {}
};

class DegenerateCorrelationError : public Error {
public:
    explicit DegenerateCorrelationError(double rho1)
        : Error(ErrorKind::Validation,
                "|rho1| >= 1 leaves the Yule-Walker system degenerate (rho1 = " + std::to_string(rho1) + ")") {}
};

class SchemaVersionMismatchError : public Error {
public:
    explicit SchemaVersionMismatchError(const std::string& found)
        : Error(ErrorKind::Validation, "unsupported model schema_version: " + found) {}
};

class UnknownEdgeError : public Error {
public:
    explicit UnknownEdgeError(const std::string& message)
        : Error(ErrorKind::Validation, "unknown edge: " + message) {}
};

class SelfEdgeStructuralError : public Error {
public:
    explicit SelfEdgeStructuralError(const std::string& label)
        : Error(ErrorKind::Validation, "structural self-edge refused (diagonal of S0 is zero): " + label) {}
};

class SingularRegressorsError : public Error {
public:
    explicit SingularRegressorsError(double condition)
        : Error(ErrorKind::Numerical,
                "regressor Gram matrix is ill-conditioned (cond = " + std::to_string(condition) +
                "); channels are likely collinear") {}
};

class NumericalDivergenceError : public Error {
public:
    explicit NumericalDivergenceError(const std::string& message)
        : Error(ErrorKind::Numerical, "numerical divergence: " + message) {}
};

class RankDeficientError : public Error {
public:
    explicit RankDeficientError(const std::string& message)
        : Error(ErrorKind::Numerical, "rank deficient: " + message) {}
};

class NoConvergenceError : public Error {
public:
    NoConvergenceError(int iterations, double final_delta)
        : Error(ErrorKind::Numerical,
                "ICA did not converge after " + std::to_string(iterations) +
                " iterations (final delta " + std::to_string(final_delta) + "); retry with another seed"),
          iterations(iterations),
          final_delta(final_delta) {}

    int iterations;
    double final_delta;
};

class PermutationDegenerateError : public Error {
public:
    explicit PermutationDegenerateError(double best_diagonal)
        : Error(ErrorKind::Numerical,
                "every row permutation leaves a near-zero unmixing diagonal (best |w_ii| = " +
                std::to_string(best_diagonal) + ")") {}
};

class SingularStructureError : public Error {
public:
    SingularStructureError()
        : Error(ErrorKind::Numerical, "(I - S0) is numerically singular; cannot solve the structural system") {}
};

}  // namespace micdt
