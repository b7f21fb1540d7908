#ifndef RESONEST_ERROR_HPP
#define RESONEST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace resonest {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument or configuration was violated.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// The excitation spectrum is too weak somewhere in the requested band.
/// Carries the offending frequencies.
class InsufficientExcitation : public InvalidArgument
{
public:
    InsufficientExcitation(const std::string& what, std::vector<double> frequencies)
        : InvalidArgument(what), frequencies_(std::move(frequencies))
    {
    }

    const std::vector<double>& frequencies() const noexcept { return frequencies_; }

private:
    std::vector<double> frequencies_;
};

/// The signal subspace could not be separated from the noise subspace.
/// Carries the full eigenvalue spectrum (descending) for diagnostics.
class IllConditioned : public Error
{
public:
    IllConditioned(const std::string& what, std::vector<double> eigenvalues)
        : Error(what), eigenvalues_(std::move(eigenvalues))
    {
    }

    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

private:
    std::vector<double> eigenvalues_;
};

/// A mode found by the estimator, reported in failure diagnostics.
struct ModeSummary
{
    double frequency = 0.0;
    double damping = 0.0;
};

/// Frequency estimation ran but did not produce the required modes.
class EstimationFailure : public Error
{
public:
    EstimationFailure(const std::string& what, std::vector<ModeSummary> modes)
        : Error(what), modes_(std::move(modes))
    {
    }

    const std::vector<ModeSummary>& modes() const noexcept { return modes_; }

private:
    std::vector<ModeSummary> modes_;
};

/// A lookup target lies outside the sampled range of a curve.
class OutOfRange : public Error
{
public:
    OutOfRange(const std::string& what, double nearest_x, double nearest_y)
        : Error(what), nearest_x_(nearest_x), nearest_y_(nearest_y)
    {
    }

    double nearest_x() const noexcept { return nearest_x_; }
    double nearest_y() const noexcept { return nearest_y_; }

private:
    double nearest_x_;
    double nearest_y_;
};

namespace detail {

[[noreturn]] void throw_invalid(const std::string& what);

inline void require(bool condition, const char* what)
{
    if (!condition)
        throw_invalid(what);
}

} // namespace detail
} // namespace resonest

#endif // RESONEST_ERROR_HPP
