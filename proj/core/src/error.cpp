#include "kronreal/error.hpp"

namespace kronreal {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension_mismatch";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::NonUnitVector: return "non_unit_vector";
        case ErrorKind::PreconditionViolation: return "precondition_violation";
        case ErrorKind::NoAdmissiblePair: return "no_admissible_pair";
        case ErrorKind::RepeatedEigenvalue: return "repeated_eigenvalue";
        case ErrorKind::NotScalar: return "not_scalar";
        case ErrorKind::NonFinite: return "non_finite";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace kronreal
