#include "kronreal/realization.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kronreal/error.hpp"
#include "kronreal/tolerances.hpp"

namespace kronreal {

namespace {

std::string shape(const CMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

CMatrix resolvent_times(const CMatrix& a, std::span<const Complex> shifts, const CMatrix& rhs) {
    CMatrix m = -a;
    for (std::size_t i = 0; i < shifts.size(); ++i) m(i, i) += shifts[i];
    try {
        return LuFactorization(m).solve(rhs);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular) {
            throw Error(ErrorKind::Pole, "evaluation point is a pole: resolvent is singular", e.residual());
        }
        throw;
    }
}

/// Inverse of a feedthrough matrix, re-signalled as a singular-D failure.
CMatrix feedthrough_inverse(const CMatrix& d, const char* who) {
    if (!d.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(who) + ": feedthrough " + shape(d) + " is not square");
    }
    try {
        return inverse(d);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular) {
            throw Error(ErrorKind::Singular, std::string(who) + ": feedthrough D is singular", e.residual());
        }
        throw;
    }
}

}  // namespace

Realization::Realization(CMatrix a, CMatrix b, CMatrix c, CMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (!a_.is_square() || b_.rows() != a_.rows() || c_.cols() != a_.rows() || d_.rows() != c_.rows() ||
        d_.cols() != b_.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "Realization: inconsistent shapes A " + shape(a_) + ", B " +
                                                      shape(b_) + ", C " + shape(c_) + ", D " + shape(d_));
    }
    if (!all_finite(a_) || !all_finite(b_) || !all_finite(c_) || !all_finite(d_)) {
        throw Error(ErrorKind::NonFinite, "Realization: non-finite entry");
    }
}

Realization Realization::constant(CMatrix d) {
    const std::size_t p = d.rows(), m = d.cols();
    return Realization(CMatrix(0, 0), CMatrix(0, m), CMatrix(p, 0), std::move(d));
}

CMatrix system_array(const Realization& r) { return block2x2(r.A(), r.B(), r.C(), r.D()); }

CMatrix evaluate_shifted(const Realization& r, std::span<const Complex> shifts) {
    if (shifts.size() != r.states()) {
        throw Error(ErrorKind::DimensionMismatch, "evaluate_shifted: expected one shift per state");
    }
    if (r.is_constant()) return r.D();
    return r.D() + r.C() * resolvent_times(r.A(), shifts, r.B());
}

CMatrix evaluate(const Realization& r, Complex z) {
    const std::vector<Complex> shifts(r.states(), z);
    return evaluate_shifted(r, shifts);
}

Realization series_product(const Realization& left, const Realization& right) {
    if (left.inputs() != right.outputs()) {
        throw Error(ErrorKind::DimensionMismatch, "series_product: left has " + std::to_string(left.inputs()) +
                                                      " inputs, right has " + std::to_string(right.outputs()) +
                                                      " outputs");
    }
    const CMatrix a = block2x2(left.A(), left.B() * right.C(), CMatrix(right.states(), left.states()), right.A());
    const CMatrix b = vstack(left.B() * right.D(), right.B());
    const CMatrix c = hstack(left.C(), left.D() * right.C());
    return Realization(a, b, c, left.D() * right.D());
}

CMatrix evaluate_two_var(const Realization& left, const Realization& right, Complex z_left, Complex z_right) {
    const Realization cascade = series_product(left, right);
    std::vector<Complex> shifts(cascade.states(), z_right);
    std::fill_n(shifts.begin(), left.states(), z_left);
    return evaluate_shifted(cascade, shifts);
}

Realization inverse_realization(const Realization& r) {
    const CMatrix d_inv = feedthrough_inverse(r.D(), "inverse_realization");
    const CMatrix b_dinv = r.B() * d_inv;
    return Realization(r.A() - b_dinv * r.C(), -b_dinv, d_inv * r.C(), d_inv);
}

Realization inverse_product_realization(const Realization& left, const Realization& right) {
    if (left.inputs() != right.outputs() || left.outputs() != right.inputs()) {
        throw Error(ErrorKind::DimensionMismatch, "inverse_product_realization: factors are not square-conformable");
    }
    const Realization li = inverse_realization(left);
    const Realization ri = inverse_realization(right);
    const CMatrix& dl_inv = li.D();
    const CMatrix& dr_inv = ri.D();

    const CMatrix a = block2x2(li.A(), CMatrix(left.states(), right.states()), ri.B() * li.C(), ri.A());
    const CMatrix b = vstack(li.B(), ri.B() * dl_inv);
    const CMatrix c = hstack(dr_inv * li.C(), ri.C());
    return Realization(a, b, c, dr_inv * dl_inv);
}

Realization conjugate(const Realization& r, const CMatrix& t) {
    if (!t.is_square() || t.rows() != r.states()) {
        throw Error(ErrorKind::DimensionMismatch, "conjugate: T " + shape(t) + " does not match state dimension " +
                                                      std::to_string(r.states()));
    }
    const LuFactorization lu(t);
    return Realization(lu.solve(r.A() * t), lu.solve(r.B()), r.C() * t, r.D());
}

std::size_t degree_probe(const Realization& r) {
    const std::size_t n = r.states();
    if (n == 0) return 0;

    CMatrix krylov = r.B();
    CMatrix block = r.B();
    CMatrix observ = r.C();
    CMatrix row = r.C();
    for (std::size_t k = 1; k < n; ++k) {
        block = r.A() * block;
        row = row * r.A();
        krylov = hstack(krylov, block);
        observ = vstack(observ, row);
    }
    return std::min(numerical_rank(krylov, tol::kRank), numerical_rank(observ, tol::kRank));
}

}  // namespace kronreal
