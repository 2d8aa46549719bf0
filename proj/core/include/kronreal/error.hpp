#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kronreal {

enum class ErrorKind {
    DimensionMismatch,
    Singular,
    Pole,
    NonUnitVector,
    PreconditionViolation,
    NoAdmissiblePair,
    RepeatedEigenvalue,
    NotScalar,
    NonFinite,
    Parse,
};

/// Stable lowercase identifier used in the CLI's error JSON.
std::string_view to_string(ErrorKind kind) noexcept;

/**
 * Every failure signalled by the library. Carries a machine-readable kind and,
 * for tolerance-gated failures, the residual that tripped the check.
 */
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what, std::optional<double> residual = std::nullopt)
        : std::runtime_error(what), kind_(kind), residual_(residual) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<double> residual() const noexcept { return residual_; }

   private:
    ErrorKind kind_;
    std::optional<double> residual_;
};

}  // namespace kronreal
