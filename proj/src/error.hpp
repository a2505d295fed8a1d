#pragma once

#include <stdexcept>
#include <string>

namespace prism {

enum class Errc {
    Ok = 0,
    InvalidArgument,
    Parse,
    Io,
    CuspTypeInvalid,
    VertexNotSpherical,
    FamilyParameterOutOfRange,
    UnknownName,
    RelatorViolation,
    NotTransitive,
    DegreeNotDivisible,
    SignatureMismatch,
    DegreeMismatch,
    InvalidRep,
    DisconnectedSpine,
    NotAManifold,
    NoPositiveRoot,
    UnsupportedA3,
    CuspVolumeUnsupported,
    UnsupportedSignature,
    QuadratureNonconvergent,
    NotA236Cusp,
    IndexTooLarge,
};

const char* errc_name(Errc e) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace prism
