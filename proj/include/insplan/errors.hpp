#pragma once

#include <stdexcept>
#include <string>

namespace insplan {

/// Process exit codes shared by the CLI and the pipeline error mapping.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int input = 2;
inline constexpr int coverage = 3;
inline constexpr int subdivision = 4;
inline constexpr int remote = 5;
}  // namespace exit_code

/// Base of all planner failures; what() carries "<stage>: <message>".
class PlannerError : public std::runtime_error {
public:
    PlannerError(std::string stage, const std::string& msg)
        : std::runtime_error(stage + ": " + msg), stage_(std::move(stage)) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

/// Malformed input file; message names the file and line/offset.
class ParseError : public PlannerError {
public:
    ParseError(const std::string& file, long line, const std::string& msg)
        : PlannerError("parse", file + ":" + std::to_string(line) + ": " + msg) {}
};

class InputError : public PlannerError {
public:
    explicit InputError(const std::string& msg) : PlannerError("input", msg) {}
};

/// Occupancy grid would exceed the memory cap at the requested resolution.
class ResolutionError : public PlannerError {
public:
    explicit ResolutionError(const std::string& msg) : PlannerError("occupancy", msg) {}
};

class SamplingError : public PlannerError {
public:
    explicit SamplingError(const std::string& msg) : PlannerError("sampling", msg) {}
};

class ConnectivityError : public PlannerError {
public:
    explicit ConnectivityError(const std::string& msg) : PlannerError("prm", msg) {}
};

/// No PRM node observes the named POI.
class CoverageError : public PlannerError {
public:
    explicit CoverageError(const std::string& poi)
        : PlannerError("oracle", "no valid observation node for POI \"" + poi + "\""),
          poi_(poi) {}

    const std::string& poi() const { return poi_; }

private:
    std::string poi_;
};

class InstanceSizeError : public PlannerError {
public:
    explicit InstanceSizeError(const std::string& msg) : PlannerError("routing", msg) {}
};

class SubdivisionError : public PlannerError {
public:
    SubdivisionError(const std::string& msg, double worst_t)
        : PlannerError("spline", msg), worst_t_(worst_t) {}

    double worst_parameter() const { return worst_t_; }

private:
    double worst_t_;
};

class ConditioningError : public PlannerError {
public:
    ConditioningError(const std::string& msg, double pivot)
        : PlannerError("spline", msg), pivot_(pivot) {}

    double smallest_pivot() const { return pivot_; }

private:
    double pivot_;
};

class OrientationError : public PlannerError {
public:
    explicit OrientationError(const std::string& msg) : PlannerError("orientation", msg) {}
};

class SingularityError : public PlannerError {
public:
    explicit SingularityError(const std::string& msg) : PlannerError("metrics", msg) {}
};

class MetricError : public PlannerError {
public:
    explicit MetricError(const std::string& msg) : PlannerError("metrics", msg) {}
};

class DomainError : public PlannerError {
public:
    explicit DomainError(const std::string& msg) : PlannerError("spline", msg) {}
};

/// Remote oracle replied with a response violating the wire contract.
class ProtocolError : public PlannerError {
public:
    explicit ProtocolError(const std::string& msg) : PlannerError("remote-oracle", msg) {}
};

/// Remote oracle unreachable after retries.
class TransportError : public PlannerError {
public:
    explicit TransportError(const std::string& msg) : PlannerError("remote-oracle", msg) {}
};

/// Maps a planner failure to the CLI exit code contract.
int exit_code_for(const std::exception& e);

}  // namespace insplan
