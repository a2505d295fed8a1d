#include "error.hpp"

namespace prism {

const char* errc_name(Errc e) noexcept
{
    switch (e) {
    case Errc::Ok: return "Ok";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "ParseError";
    case Errc::Io: return "IoError";
    case Errc::CuspTypeInvalid: return "CuspTypeInvalid";
    case Errc::VertexNotSpherical: return "VertexNotSpherical";
    case Errc::FamilyParameterOutOfRange: return "FamilyParameterOutOfRange";
    case Errc::UnknownName: return "UnknownName";
    case Errc::RelatorViolation: return "RelatorViolation";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::DegreeNotDivisible: return "DegreeNotDivisible";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::InvalidRep: return "InvalidRep";
    case Errc::DisconnectedSpine: return "DisconnectedSpine";
    case Errc::NotAManifold: return "NotAManifold";
    case Errc::NoPositiveRoot: return "NoPositiveRoot";
    case Errc::UnsupportedA3: return "UnsupportedA3";
    case Errc::CuspVolumeUnsupported: return "CuspVolumeUnsupported";
    case Errc::UnsupportedSignature: return "UnsupportedSignature";
    case Errc::QuadratureNonconvergent: return "QuadratureNonconvergent";
    case Errc::NotA236Cusp: return "NotA236Cusp";
    case Errc::IndexTooLarge: return "IndexTooLarge";
    }
    return "Unknown";
}

} // namespace prism
