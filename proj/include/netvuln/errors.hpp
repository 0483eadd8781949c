#pragma once

#include <stdexcept>
#include <string>

namespace netvuln {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (edge lists, graph construction).
class InputError : public Error {
public:
    using Error::Error;
};

/// A parameter or configuration value outside its valid range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A metric that is not defined for the given graph, e.g. the average
/// edge betweenness of a graph with no edges.
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

/// The log-log regression had fewer than two usable points.
class FitError : public Error {
public:
    using Error::Error;
};

} // namespace netvuln
