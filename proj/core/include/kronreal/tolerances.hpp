#pragma once

namespace kronreal::tol {

// Construction identities (pure assembly, no solves).
inline constexpr double kConstruction = 1e-12;
// Projection algebra and subspace conditions: target, and acceptance ceiling.
inline constexpr double kProjection = 1e-9;
inline constexpr double kProjectionAccept = 1e-8;
// End-to-end evaluation residuals after a factorization.
inline constexpr double kEndToEnd = 1e-7;

inline constexpr double kSolveResidual = 1e-10;
// Pivot magnitudes below this multiple of max|M_ij| are treated as singular.
inline constexpr double kPivot = 1e-13;
inline constexpr double kRank = 1e-9;
inline constexpr double kUnitNorm = 1e-12;
inline constexpr double kIdentityFeedthrough = 1e-10;
inline constexpr double kScalarFeedthrough = 1e-10;
inline constexpr double kEigenGap = 1e-6;
inline constexpr double kMaxBasisCondition = 1e8;

}  // namespace kronreal::tol
