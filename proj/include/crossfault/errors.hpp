#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossfault {

/// Malformed call: dimension mismatch, out-of-bounds index, negative current.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Value outside the physical domain (e.g. nonpositive cell resistance).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// Nodal analysis could not produce a solution (floating node, singular matrix).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Integration step too coarse for the requested trajectory.
class AccuracyError : public std::runtime_error {
public:
    explicit AccuracyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Regression or calibration input cannot determine the fitted parameters.
class DegenerateDesignError : public std::runtime_error {
public:
    explicit DegenerateDesignError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scan step so large that footprints cannot cover the region.
class CoverageGapError : public std::runtime_error {
public:
    explicit CoverageGapError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Extraction system is rank deficient; carries the cells that cannot be resolved.
class IdentifiabilityError : public std::runtime_error {
public:
    IdentifiabilityError(const std::string& msg, std::vector<std::pair<int, int>> cells)
        : std::runtime_error(msg), unresolved_(std::move(cells)) {}

    const std::vector<std::pair<int, int>>& unresolved_cells() const { return unresolved_; }

private:
    std::vector<std::pair<int, int>> unresolved_;
};

/// Experiment config rejected; message is path-qualified ("beam.diameter_um: ...").
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace crossfault
