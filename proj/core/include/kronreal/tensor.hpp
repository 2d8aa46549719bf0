#pragma once

#include <cstddef>
#include <span>

#include "kronreal/cmatrix.hpp"
#include "kronreal/realization.hpp"

namespace kronreal {

enum class Side { Left, Right };

/**
 * Which way a realization is inflated. Left means M -> M (x) I_k and is used
 * for the left factor of a tensor product (k = output dimension of the right
 * factor); Right means M -> I_k (x) M, used for the right factor (k = input
 * dimension of the left factor).
 */
struct InflationSide {
    Side side = Side::Left;
    std::size_t factor_dim = 1;

    static InflationSide left(std::size_t k) { return {Side::Left, k}; }
    static InflationSide right(std::size_t k) { return {Side::Right, k}; }
};

/// Applies the inflation to a single matrix.
CMatrix inflate(const CMatrix& m, InflationSide s);
/// Applies the inflation to each of A, B, C, D.
Realization inflate(const Realization& r, InflationSide s);

/**
 * Realization of z -> F_l(z) (x) F_r(z), assembled directly from Kronecker
 * blocks:
 *
 *     A = [[A_l (x) I_pr,  B_l (x) C_r ],
 *          [0,             I_ml (x) A_r]]
 *     B = [B_l (x) D_r;  I_ml (x) B_r]
 *     C = [C_l (x) I_pr,  D_l (x) C_r]
 *     D = D_l (x) D_r
 *
 * State dimension n_l p_r + m_l n_r. Any factor dimensions are accepted.
 */
Realization tensor_realization(const Realization& left, const Realization& right);

/// F_l(z_l) (x) F_r(z_r), evaluated through the tensor realization with the
/// first n_l p_r states shifted by z_l and the remaining m_l n_r by z_r.
CMatrix evaluate_tensor_two_var(const Realization& left, const Realization& right, Complex z_left,
                                Complex z_right);

/// Max entrywise difference between tensor_realization(l, r) and the ordinary
/// cascade of the inflated factors.
double proposition_residual(const Realization& left, const Realization& right);

/**
 * Realization of (F_l (x) F_r)^{-1}, assembled from Kronecker blocks of the
 * factor inverses:
 *
 *     A = [[A_l^x (x) I_mr,    0               ],
 *          [C_l^x (x) B_r^x,   I_ml (x) A_r^x  ]]
 *     B = [B_l^x (x) I_mr;  D_l^{-1} (x) B_r^x]
 *     C = [C_l^x (x) D_r^{-1},  I_ml (x) C_r^x]
 *     D = D_l^{-1} (x) D_r^{-1}
 *
 * Both feedthrough matrices must be square and nonsingular.
 */
Realization tensor_inverse_realization(const Realization& left, const Realization& right);

/**
 * Assembles the two extended arrays whose product is the system array of the
 * tensor realization (inverted = false) or of its inverse (inverted = true),
 * built from the inflated factor matrices, and returns the max entrywise
 * difference between that product and the directly assembled system array.
 */
double factored_array_residual(const Realization& left, const Realization& right, bool inverted);

/**
 * Compression of an inflated matrix with a unit vector w of length
 * s.factor_dim:
 *   Left:  (I_s (x) w^*) M (I_q (x) w)
 *   Right: (w^* (x) I_s) M (w (x) I_q)
 * For M of the form inflate(X, s) this recovers X. Throws NonUnitVector when
 * | ||w||_2 - 1 | > tol::kUnitNorm and DimensionMismatch when M's dimensions
 * are not multiples of the factor dimension.
 */
CMatrix deflate(const CMatrix& m, InflationSide s, const CMatrix& w);

/// deflate applied to each of A, B, C, D. Left inverse of inflate for any unit w.
Realization deflate_realization(const Realization& r, InflationSide s, const CMatrix& w);

/// Same, with w the first standard basis vector.
Realization deflate_realization(const Realization& r, InflationSide s);

/// Left fold of tensor_realization; a single factor is returned unchanged.
Realization multi_tensor(std::span<const Realization> factors);

}  // namespace kronreal
