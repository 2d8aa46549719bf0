#include "kronreal/instances.hpp"

#include "kronreal/tensor.hpp"

namespace kronreal {

FactorizationInstance make_factorization_instance(SplitMix64& rng, const FactorDims& dims, double max_condition) {
    Realization left = random_realization(rng, dims.n_l, dims.m_l, dims.m_l, true);
    Realization right = random_realization(rng, dims.n_r, dims.m_r, dims.m_r, true);
    CMatrix t = random_invertible(rng, dims.state_dim(), max_condition);
    CMatrix u = random_unit_vector(rng, dims.m_r);
    CMatrix v = random_unit_vector(rng, dims.m_l);

    Realization f = conjugate(tensor_realization(left, right), t);
    Realization f_inv = conjugate(tensor_inverse_realization(left, right), t);
    FactorizationProblem problem{std::move(f), std::move(f_inv), dims, std::move(u), std::move(v), std::move(t)};
    return {std::move(left), std::move(right), std::move(problem)};
}

}  // namespace kronreal
