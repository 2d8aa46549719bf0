#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kronreal/cmatrix.hpp"
#include "kronreal/realization.hpp"

namespace kronreal {

/// Complementary idempotents: P_alpha + P_beta = I, P_alpha P_beta = 0.
struct SupportingProjectionPair {
    CMatrix alpha_projection;
    CMatrix beta_projection;
    std::size_t alpha = 0;
    std::size_t beta = 0;
};

/// Largest of the three pair residuals: idempotency, mutual annihilation, and
/// sum-to-identity (all Frobenius).
struct ProjectionPairResiduals {
    double idempotency = 0.0;
    double annihilation = 0.0;
    double completeness = 0.0;

    double max() const;
};

ProjectionPairResiduals projection_pair_residuals(const SupportingProjectionPair& pair);

/**
 * State and I/O dimensions of the two square factors F_l (m_l x m_l, n_l
 * states) and F_r (m_r x m_r, n_r states) sought for F = F_l (x) F_r.
 */
struct FactorDims {
    std::size_t n_l = 1;
    std::size_t m_l = 1;
    std::size_t n_r = 1;
    std::size_t m_r = 1;

    std::size_t alpha() const noexcept { return n_l * m_r; }
    std::size_t beta() const noexcept { return m_l * n_r; }
    std::size_t state_dim() const noexcept { return alpha() + beta(); }
    std::size_t io_dim() const noexcept { return m_l * m_r; }

    friend bool operator==(const FactorDims&, const FactorDims&) = default;
};

struct FactorizationProblem {
    Realization f;          // realization of F, D = I
    Realization f_inverse;  // realization of F^{-1}, D = I
    FactorDims dims;
    CMatrix u;  // unit column in C^{m_r}
    CMatrix v;  // unit column in C^{m_l}
    std::optional<CMatrix> transform;  // the coordinate change T, when known
};

struct FactorizationResult {
    Realization left;
    Realization right;
    std::vector<Complex> sample_points;
    /// relative_residual(F_l(z) (x) F_r(z), F(z)) at each sample point.
    std::vector<double> residuals;

    double max_residual() const;
};

struct HatProjections {
    CMatrix left;
    CMatrix right;
};

struct SubspaceResiduals {
    double alpha = 0.0;  // ||A P_a - P_a A P_a||_F
    double beta = 0.0;   // ||A^x P_b - P_b A^x P_b||_F

    double max() const { return alpha > beta ? alpha : beta; }
};

/// P_alpha = T^{-1} diag(I_alpha, 0) T, P_beta = T^{-1} diag(0, I_beta) T.
SupportingProjectionPair projections_from_T(const CMatrix& t, std::size_t alpha, std::size_t beta);

/**
 * Rank-compressed projections
 *
 *     left  = T^{-1} diag(I_{n_l} (x) u u^*, 0_{m_l n_r}) T
 *     right = T^{-1} diag(0_{n_l m_r}, v v^* (x) I_{n_r}) T
 *
 * The beta block uses I_{n_r} in the second slot so that it matches the
 * I_{m_l} (x) A_r structure of the right factor's inflated state block.
 */
HatProjections hat_projections(const CMatrix& t, const CMatrix& u, const CMatrix& v, const FactorDims& dims);

SubspaceResiduals subspace_condition_residual(const CMatrix& a, const CMatrix& a_times,
                                              const SupportingProjectionPair& pair);

/**
 * Extracts F_l and F_r from a realization of F = F_l (x) F_r with D = I,
 * given the supporting projections and their rank-compressed versions:
 *
 *   F_l(z) = I + (I_{m_l} (x) u^*) C P^_l (zI - A)^{-1} P^_l B (I_{m_l} (x) u)
 *   F_r(z) = I + (v^* (x) I_{m_r}) C P^_r (zI - A)^{-1} P^_r B (v (x) I_{m_r})
 *
 * The returned factors keep the full state dimension of F. Preconditions are
 * checked and reported as ErrorKind::PreconditionViolation carrying the
 * offending residual. Residuals of the reconstruction are computed at
 * `sample_points` (if empty, at default_sample_points(f.A())).
 */
FactorizationResult tensor_factorize(const FactorizationProblem& problem, const SupportingProjectionPair& pair,
                                     const HatProjections& hats, std::span<const Complex> sample_points = {});

/// Given-T mode: builds both projection pairs from problem.transform.
FactorizationResult tensor_factorize(const FactorizationProblem& problem,
                                     std::span<const Complex> sample_points = {});

/// A pair found by spectral search together with the coordinate change whose
/// inverse has the two invariant-subspace bases as its column blocks.
struct ProjectionSearchResult {
    SupportingProjectionPair projections;
    CMatrix transform;
    std::vector<std::size_t> alpha_eigen_indices;
    std::vector<std::size_t> beta_eigen_indices;
};

/**
 * Exhaustive search for an alpha-dimensional A-invariant subspace M and a
 * beta-dimensional A^x-invariant subspace M^x with M (+) M^x the whole space.
 * Subspaces are spanned by eigenvector subsets; pairs are tried in
 * lexicographic order (alpha subset major) and the first whose concatenated
 * basis has 1-norm condition number <= tol::kMaxBasisCondition and whose
 * projections satisfy the subspace conditions to tol::kProjectionAccept wins.
 *
 * Throws RepeatedEigenvalue if either matrix has eigenvalues closer than
 * tol::kEigenGap, NoAdmissiblePair if no subset pair qualifies.
 */
ProjectionSearchResult search_supporting_projections(const CMatrix& a, const CMatrix& a_times, std::size_t alpha,
                                                     std::size_t beta);

SupportingProjectionPair find_supporting_projections(const CMatrix& a, const CMatrix& a_times, std::size_t alpha,
                                                     std::size_t beta);

/// Search mode: find the projections, then factorize with the reconstructed T.
FactorizationResult tensor_factorize_search(const FactorizationProblem& problem,
                                            std::span<const Complex> sample_points = {});

struct ScaledRealization {
    Realization realization;  // (1/c) F, with D = I
    Complex scale;            // c
};

/// Divides F by the scalar c where D = c I. Throws NotScalar otherwise.
ScaledRealization scaling_normalize(const Realization& r);

}  // namespace kronreal
