#include "moebius/error.hpp"

namespace moebius {

const char* error_tag(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonElliptic: return "non-elliptic";
        case ErrorCode::ZeroRadius: return "zero-radius";
        case ErrorCode::CoincidentPoints: return "coincident-points";
        case ErrorCode::ZeroMatrix: return "zero-matrix";
        case ErrorCode::SingularMap: return "singular-map";
        case ErrorCode::SameCycle: return "same-cycle";
        case ErrorCode::PointNotOnCycle: return "point-not-on-cycle";
        case ErrorCode::NotDisjoint: return "not-disjoint";
        case ErrorCode::NotInPencil: return "not-in-pencil";
        case ErrorCode::Infeasible: return "infeasible";
        case ErrorCode::CoincidentVertices: return "coincident-vertices";
        case ErrorCode::SidesDontMeet: return "sides-dont-meet";
        case ErrorCode::NotProper: return "not-proper";
        case ErrorCode::CollinearCycles: return "collinear-cycles";
        case ErrorCode::OutsidePlane: return "outside-plane";
        case ErrorCode::ProportionalArguments: return "proportional-arguments";
        case ErrorCode::DegenerateCevian: return "degenerate-cevian";
        case ErrorCode::ZeroCoordinate: return "zero-coordinate";
        case ErrorCode::NotHyperbolicTriangle: return "not-hyperbolic-triangle";
        case ErrorCode::DegenerateFrame: return "degenerate-frame";
        case ErrorCode::UndefinedOnFrameAxes: return "undefined-on-frame-axes";
        case ErrorCode::NotUpperHalfPlane: return "not-upper-half-plane";
        case ErrorCode::NotVirtualReal: return "not-virtual-real";
        case ErrorCode::NotModelPencil: return "not-model-pencil";
        case ErrorCode::NotHyperbolicLines: return "not-hyperbolic-lines";
        case ErrorCode::PreconditionViolated: return "precondition-violated";
        case ErrorCode::EmptyViewport: return "empty-viewport";
        case ErrorCode::SchemaError: return "schema-error";
    }
    return "unknown";
}

}  // namespace moebius
