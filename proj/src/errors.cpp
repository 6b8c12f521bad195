#include "polyid/errors.hpp"

namespace polyid {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::Disconnected: return "Disconnected";
        case Errc::RaggedGrid: return "RaggedGrid";
        case Errc::InconsistentQ: return "InconsistentQ";
        case Errc::InfeasibleDims: return "InfeasibleDims";
        case Errc::NotConvex: return "NotConvex";
        case Errc::BoundaryTouch: return "BoundaryTouch";
        case Errc::OutOfScope: return "OutOfScope";
        case Errc::ResourceLimit: return "ResourceLimit";
        case Errc::Overflow: return "Overflow";
        case Errc::NotAnInnerInterval: return "NotAnInnerInterval";
        case Errc::VerticesNotInSupport: return "VerticesNotInSupport";
        case Errc::DegreeTooLow: return "DegreeTooLow";
        case Errc::NotInKernel: return "NotInKernel";
        case Errc::IoFailure: return "IoFailure";
        case Errc::BadArgument: return "BadArgument";
    }
    return "UnknownError";
}

}  // namespace polyid
