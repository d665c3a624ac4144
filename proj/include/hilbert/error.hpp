#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

// Every failure mode a public operation can report. The string form of the
// kind is the first token of what(), so callers (and the CLI) can name the
// violated precondition without parsing free text.
enum class ErrorKind {
    NotConvex,
    Degenerate,
    TooFewVertices,
    PointNotInterior,
    ZeroVector,
    CoincidentPoints,
    ToleranceNotReached,
    OutOfDomain,
    DegenerateBasis,
    OriginNotInterior,
    NearDegenerateTriangle,
    SaturationOverflow,
    OnFanRay,
    BadConfig,
    ParallelLines,
    BadAlpha,
    HypothesisViolated,
    Collinear,
    ParallelConfig,
    PreconditionUnmet,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::PointNotInterior: return "PointNotInterior";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::ToleranceNotReached: return "ToleranceNotReached";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::DegenerateBasis: return "DegenerateBasis";
        case ErrorKind::OriginNotInterior: return "OriginNotInterior";
        case ErrorKind::NearDegenerateTriangle: return "NearDegenerateTriangle";
        case ErrorKind::SaturationOverflow: return "SaturationOverflow";
        case ErrorKind::OnFanRay: return "OnFanRay";
        case ErrorKind::BadConfig: return "BadConfig";
        case ErrorKind::ParallelLines: return "ParallelLines";
        case ErrorKind::BadAlpha: return "BadAlpha";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::Collinear: return "Collinear";
        case ErrorKind::ParallelConfig: return "ParallelConfig";
        case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hilbert
