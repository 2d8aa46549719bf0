#pragma once

#include <cstddef>
#include <span>

#include "kronreal/cmatrix.hpp"

namespace kronreal {

/**
 * State-space realization (A, B, C, D) of the rational function
 *
 *     F(z) = D + C (zI - A)^{-1} B,
 *
 * with A n x n, B n x m_in, C m_out x n and D m_out x m_in. A state dimension of
 * zero is valid and represents the constant function D.
 *
 * Instances are immutable; the constructor validates shapes and finiteness.
 */
class Realization {
   public:
    Realization(CMatrix a, CMatrix b, CMatrix c, CMatrix d);

    /// The constant function d (empty state space).
    static Realization constant(CMatrix d);

    const CMatrix& A() const noexcept { return a_; }
    const CMatrix& B() const noexcept { return b_; }
    const CMatrix& C() const noexcept { return c_; }
    const CMatrix& D() const noexcept { return d_; }

    std::size_t states() const noexcept { return a_.rows(); }
    std::size_t inputs() const noexcept { return d_.cols(); }
    std::size_t outputs() const noexcept { return d_.rows(); }
    bool is_constant() const noexcept { return a_.rows() == 0; }

    friend bool operator==(const Realization&, const Realization&) = default;

   private:
    CMatrix a_, b_, c_, d_;
};

/// The (n + m_out) x (n + m_in) system array [[A, B], [C, D]].
CMatrix system_array(const Realization& r);

/// D + C (zI - A)^{-1} B. Throws ErrorKind::Pole when zI - A is singular.
CMatrix evaluate(const Realization& r, Complex z);

/**
 * D + C (diag(shifts) - A)^{-1} B with one shift per state coordinate. This is
 * the multi-variable evaluation used for cascades whose factors carry
 * independent variables.
 */
CMatrix evaluate_shifted(const Realization& r, std::span<const Complex> shifts);

/// Cascade realization of z -> F_l(z) F_r(z); state dimension n_l + n_r.
Realization series_product(const Realization& left, const Realization& right);

/// F_l(z_l) F_r(z_r) through the cascade with a block-diagonal resolvent.
CMatrix evaluate_two_var(const Realization& left, const Realization& right, Complex z_left, Complex z_right);

/**
 * Realization of F^{-1}: (A - B D^{-1} C, -B D^{-1}, D^{-1} C, D^{-1}).
 * Requires D square and nonsingular (ErrorKind::Singular otherwise).
 */
Realization inverse_realization(const Realization& r);

/**
 * Realization of (F_l F_r)^{-1} with the left factor's states first:
 *
 *     [[A_l^x,             0,      B_l^x          ],
 *      [B_r^x C_l^x,       A_r^x,  B_r^x D_l^{-1}  ],
 *      [D_r^{-1} C_l^x,    C_r^x,  D_r^{-1} D_l^{-1}]]
 *
 * Both feedthrough matrices must be square and nonsingular.
 */
Realization inverse_product_realization(const Realization& left, const Realization& right);

/// State-coordinate change (T^{-1} A T, T^{-1} B, C T, D).
Realization conjugate(const Realization& r, const CMatrix& t);

/// min(rank [B, AB, ..., A^{n-1}B], rank [C; CA; ...; CA^{n-1}]).
std::size_t degree_probe(const Realization& r);

}  // namespace kronreal
