#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <utility>

namespace oscar {

/// Vector lengths or matrix shapes do not line up.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition on the input values was violated.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A parameter is outside its admissible range (negative lambda, mu <= 0, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Problem size outside a hard limit.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A text file could not be parsed; `line` is 1-based.
class FileFormatError : public std::runtime_error {
  public:
    FileFormatError(const std::string& what, long line)
        : std::runtime_error(what), line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

/// A solver produced a non-finite iterate.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(const std::string& what, int iteration, Eigen::VectorXd last_iterate)
        : std::runtime_error(what), iteration_(iteration), last_iterate_(std::move(last_iterate)) {}
    int iteration() const { return iteration_; }
    const Eigen::VectorXd& last_iterate() const { return last_iterate_; }

  private:
    int iteration_;
    Eigen::VectorXd last_iterate_;
};

/// SpaRSA exhausted its step-size safeguard without an objective decrease.
class StagnationError : public std::runtime_error {
  public:
    StagnationError(const std::string& what, int iteration, Eigen::VectorXd last_iterate)
        : std::runtime_error(what), iteration_(iteration), last_iterate_(std::move(last_iterate)) {}
    int iteration() const { return iteration_; }
    const Eigen::VectorXd& last_iterate() const { return last_iterate_; }

  private:
    int iteration_;
    Eigen::VectorXd last_iterate_;
};

}  // namespace oscar
