#pragma once

#include "kronreal/factorization.hpp"
#include "kronreal/random.hpp"
#include "kronreal/realization.hpp"

namespace kronreal {

/// A tensor-factorization problem with known answer.
struct FactorizationInstance {
    Realization left;   // F_l with D = I
    Realization right;  // F_r with D = I
    FactorizationProblem problem;
};

/**
 * Draws F_l, F_r with identity feedthrough, a coordinate change T with
 * condition_number_1(T) <= max_condition and unit vectors u, v, then builds
 * F = T-conjugate of tensor_realization(F_l, F_r) and F^{-1} as the same
 * conjugate of tensor_inverse_realization(F_l, F_r). T is kept in the problem.
 */
FactorizationInstance make_factorization_instance(SplitMix64& rng, const FactorDims& dims,
                                                  double max_condition = 1e4);

}  // namespace kronreal
