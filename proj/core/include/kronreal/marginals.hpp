#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "kronreal/cmatrix.hpp"
#include "kronreal/realization.hpp"

namespace kronreal {

enum class MarginalSide { A, B };

/// How an N1*N2-dimensional function is split. Side A keeps the first factor
/// (N1 x N1 result), side B keeps the second (N2 x N2 result).
struct MarginalSpec {
    std::size_t n1 = 1;
    std::size_t n2 = 1;
    MarginalSide side = MarginalSide::A;

    std::size_t total() const noexcept { return n1 * n2; }
    std::size_t kept() const noexcept { return side == MarginalSide::A ? n1 : n2; }
    std::size_t traced() const noexcept { return side == MarginalSide::A ? n2 : n1; }
};

/**
 * Partial trace of a square N1*N2 matrix:
 *   A: sum_k (I_N1 (x) f_k^*) M (I_N1 (x) f_k)
 *   B: sum_k (e_k^* (x) I_N2) M (e_k (x) I_N2)
 * The traced-out basis is the standard one unless `basis` (a unitary whose
 * columns are the basis vectors) is supplied.
 */
CMatrix partial_trace(const CMatrix& m, const MarginalSpec& spec, const std::optional<CMatrix>& basis = std::nullopt);

/// partial_trace(evaluate(r, z), spec, basis).
CMatrix marginal_eval(const Realization& r, const MarginalSpec& spec, Complex z,
                      const std::optional<CMatrix>& basis = std::nullopt);

/**
 * Realization of the marginal with one copy of A per traced basis vector:
 * state dimension n * traced(), A' = I (x) A, B' stacks B (I (x) f_k), C'
 * concatenates (I (x) f_k^*) C, and D' is the partial trace of D.
 */
Realization marginal_realization(const Realization& r, const MarginalSpec& spec);

/// max_z || marginal_A(R1 (x) R2)(z) - R1(z) tr R2(z) ||_F.
double trace_relation_residual(const Realization& r1, const Realization& r2, std::span<const Complex> samples);

/**
 * max_z || R_A(z) (x) R_B(z) / tr R(z) - R(z) ||_F / max(1, ||R(z)||_F).
 * Zero for exact tensor products; generically large otherwise.
 */
double marginal_reconstruction_residual(const Realization& r, std::size_t n1, std::size_t n2,
                                        std::span<const Complex> samples);

}  // namespace kronreal
