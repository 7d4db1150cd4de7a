#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

enum class ErrorCode {
    NonElliptic,
    ZeroRadius,
    CoincidentPoints,
    ZeroMatrix,
    SingularMap,
    SameCycle,
    PointNotOnCycle,
    NotDisjoint,
    NotInPencil,
    Infeasible,
    CoincidentVertices,
    SidesDontMeet,
    NotProper,
    CollinearCycles,
    OutsidePlane,
    ProportionalArguments,
    DegenerateCevian,
    ZeroCoordinate,
    NotHyperbolicTriangle,
    DegenerateFrame,
    UndefinedOnFrameAxes,
    NotUpperHalfPlane,
    NotVirtualReal,
    NotModelPencil,
    NotHyperbolicLines,
    PreconditionViolated,
    EmptyViewport,
    SchemaError,
};

// Stable kebab-case tag used in JSON error documents.
const char* error_tag(ErrorCode code);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* tag() const noexcept { return error_tag(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw GeometryError(code, what);
}

}  // namespace moebius
