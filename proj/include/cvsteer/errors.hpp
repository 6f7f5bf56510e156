// errors.hpp: exception types shared by every cvsteer module

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvsteer {

/// Bad caller input: negative rates, non-finite parameters, unphysical matrices.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A quantity is undefined for the given state, e.g. a zero conditioning variance.
class DegenerateInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An oracle grid cannot resolve the distribution it was asked to tabulate.
class GridResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine produced an inconsistent result (unpaired eigenvalues,
/// contradictory verdicts, negative density cells).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root search found more than one sign change; every bracket is kept.
class MultiRootError : public std::runtime_error {
public:
    MultiRootError(const std::string& what, std::vector<std::pair<double, double>> brackets)
        : std::runtime_error(what), brackets_(std::move(brackets)) {}

    const std::vector<std::pair<double, double>>& brackets() const noexcept { return brackets_; }

private:
    std::vector<std::pair<double, double>> brackets_;
};

} // namespace cvsteer
