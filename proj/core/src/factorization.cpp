#include "kronreal/factorization.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "kronreal/error.hpp"
#include "kronreal/sampling.hpp"
#include "kronreal/tensor.hpp"
#include "kronreal/tolerances.hpp"

namespace kronreal {

namespace {

[[noreturn]] void violated(const std::string& what, double residual) {
    throw Error(ErrorKind::PreconditionViolation, what, residual);
}

void require_unit_column(const CMatrix& w, std::size_t len, const char* name) {
    if (w.cols() != 1 || w.rows() != len) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(name) + " must be a column vector of length " + std::to_string(len));
    }
    const double dev = std::abs(frobenius_norm(w) - 1.0);
    if (dev > tol::kUnitNorm) throw Error(ErrorKind::NonUnitVector, std::string(name) + " is not unit-norm", dev);
}

/// T^{-1} X T for T given by its LU factors.
CMatrix similarity(const LuFactorization& lu, const CMatrix& x, const CMatrix& t) { return lu.solve(x * t); }

void check_problem(const FactorizationProblem& p) {
    const FactorDims& d = p.dims;
    if (d.m_l == 0 || d.m_r == 0) throw Error(ErrorKind::DimensionMismatch, "factor I/O dimensions must be positive");
    for (const Realization* r : {&p.f, &p.f_inverse}) {
        if (r->states() != d.state_dim() || r->inputs() != d.io_dim() || r->outputs() != d.io_dim()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "realization shape does not match n_l*m_r + m_l*n_r states and m_l*m_r inputs/outputs");
        }
    }
    const CMatrix id = CMatrix::identity(d.io_dim());
    if (const double r = max_abs_diff(p.f.D(), id); r > tol::kIdentityFeedthrough) {
        violated("F must have D = I", r);
    }
    if (const double r = max_abs_diff(p.f_inverse.D(), id); r > tol::kIdentityFeedthrough) {
        violated("F^{-1} must have D = I", r);
    }
    require_unit_column(p.u, d.m_r, "u");
    require_unit_column(p.v, d.m_l, "v");
}

std::vector<Complex> default_points(const Realization& f) { return verification_grid({&f.A()}); }

/// Eigenpairs sorted by (real, imag) so enumeration order does not depend on
/// the eigensolver's internal ordering.
struct Eigenpairs {
    std::vector<Complex> values;
    CMatrix vectors;  // unit-norm columns
};

Eigenpairs sorted_eigenpairs(const CMatrix& m, const char* name) {
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXcd em(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) em(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, true);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::Singular, std::string("eigensolver failed for ") + name);
    }

    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto& vals = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Complex x = vals(static_cast<Eigen::Index>(a)), y = vals(static_cast<Eigen::Index>(b));
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });

    Eigenpairs out{{}, CMatrix(m.rows(), m.rows())};
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto src = static_cast<Eigen::Index>(order[k]);
        out.values.push_back(vals(src));
        const double norm = solver.eigenvectors().col(src).norm();
        for (Eigen::Index i = 0; i < n; ++i) {
            out.vectors(static_cast<std::size_t>(i), k) = solver.eigenvectors()(i, src) / norm;
        }
    }

    for (std::size_t i = 0; i < out.values.size(); ++i)
        for (std::size_t j = i + 1; j < out.values.size(); ++j) {
            const double gap = std::abs(out.values[i] - out.values[j]);
            if (gap <= tol::kEigenGap) {
                throw Error(ErrorKind::RepeatedEigenvalue, std::string(name) + " has (nearly) repeated eigenvalues",
                            gap);
            }
        }
    return out;
}

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (k > n) return false;
    for (;;) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

double ProjectionPairResiduals::max() const { return std::max({idempotency, annihilation, completeness}); }

ProjectionPairResiduals projection_pair_residuals(const SupportingProjectionPair& pair) {
    const CMatrix& pa = pair.alpha_projection;
    const CMatrix& pb = pair.beta_projection;
    ProjectionPairResiduals r;
    r.idempotency = std::max(frobenius_norm(pa * pa - pa), frobenius_norm(pb * pb - pb));
    r.annihilation = std::max(frobenius_norm(pa * pb), frobenius_norm(pb * pa));
    r.completeness = frobenius_norm(pa + pb - CMatrix::identity(pa.rows()));
    return r;
}

double FactorizationResult::max_residual() const {
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

SupportingProjectionPair projections_from_T(const CMatrix& t, std::size_t alpha, std::size_t beta) {
    if (!t.is_square() || t.rows() != alpha + beta) {
        throw Error(ErrorKind::DimensionMismatch, "projections_from_T: T must be (alpha+beta) square");
    }
    const LuFactorization lu(t);
    CMatrix head(alpha + beta, alpha + beta);
    head.set_block(0, 0, t.block(0, 0, alpha, alpha + beta));
    CMatrix pa = lu.solve(head);
    CMatrix pb = CMatrix::identity(alpha + beta) - pa;
    return {std::move(pa), std::move(pb), alpha, beta};
}

HatProjections hat_projections(const CMatrix& t, const CMatrix& u, const CMatrix& v, const FactorDims& dims) {
    if (!t.is_square() || t.rows() != dims.state_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "hat_projections: T must be (n_l m_r + m_l n_r) square");
    }
    require_unit_column(u, dims.m_r, "u");
    require_unit_column(v, dims.m_l, "v");
    const LuFactorization lu(t);
    const std::size_t n = dims.state_dim();

    CMatrix left_core(n, n);
    left_core.set_block(0, 0, kron(CMatrix::identity(dims.n_l), u * u.adjoint()));
    CMatrix right_core(n, n);
    right_core.set_block(dims.alpha(), dims.alpha(), kron(v * v.adjoint(), CMatrix::identity(dims.n_r)));
    return {similarity(lu, left_core, t), similarity(lu, right_core, t)};
}

SubspaceResiduals subspace_condition_residual(const CMatrix& a, const CMatrix& a_times,
                                              const SupportingProjectionPair& pair) {
    const CMatrix& pa = pair.alpha_projection;
    const CMatrix& pb = pair.beta_projection;
    if (!a.is_square() || a.rows() != pa.rows() || a_times.rows() != pa.rows() || !a_times.is_square() ||
        pb.rows() != pa.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "subspace_condition_residual: sizes differ");
    }
    return {frobenius_norm(a * pa - pa * a * pa), frobenius_norm(a_times * pb - pb * a_times * pb)};
}

FactorizationResult tensor_factorize(const FactorizationProblem& problem, const SupportingProjectionPair& pair,
                                     const HatProjections& hats, std::span<const Complex> sample_points) {
    check_problem(problem);
    const FactorDims& d = problem.dims;
    const std::size_t n = d.state_dim();
    if (pair.alpha != d.alpha() || pair.beta != d.beta() || pair.alpha_projection.rows() != n ||
        hats.left.rows() != n || hats.right.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch, "tensor_factorize: projections do not match the factor dimensions");
    }

    if (const double r = projection_pair_residuals(pair).max(); r > tol::kProjectionAccept) {
        violated("supporting projections are not a complementary idempotent pair", r);
    }
    if (const double r = subspace_condition_residual(problem.f.A(), problem.f_inverse.A(), pair).max();
        r > tol::kProjectionAccept) {
        violated("subspace condition fails for the supplied projections", r);
    }
    const auto absorbs = [](const CMatrix& hat, const CMatrix& p) {
        return std::max(frobenius_norm(hat * p - hat), frobenius_norm(p * hat - hat));
    };
    if (const double r = std::max(absorbs(hats.left, pair.alpha_projection), absorbs(hats.right, pair.beta_projection));
        r > tol::kProjectionAccept) {
        violated("hat projections are not absorbed by the supporting projections", r);
    }

    const Realization& f = problem.f;
    const CMatrix id_ml = CMatrix::identity(d.m_l);
    const CMatrix id_mr = CMatrix::identity(d.m_r);

    Realization left(f.A(), hats.left * f.B() * kron(id_ml, problem.u), kron(id_ml, problem.u.adjoint()) * f.C() * hats.left,
                     id_ml);
    Realization right(f.A(), hats.right * f.B() * kron(problem.v, id_mr),
                      kron(problem.v.adjoint(), id_mr) * f.C() * hats.right, id_mr);

    FactorizationResult result{std::move(left), std::move(right), {}, {}};
    if (sample_points.empty()) {
        result.sample_points = default_points(f);
    } else {
        result.sample_points.assign(sample_points.begin(), sample_points.end());
    }
    for (const Complex z : result.sample_points) {
        const CMatrix rebuilt = kron(evaluate(result.left, z), evaluate(result.right, z));
        result.residuals.push_back(relative_residual(rebuilt, evaluate(f, z)));
    }
    return result;
}

FactorizationResult tensor_factorize(const FactorizationProblem& problem, std::span<const Complex> sample_points) {
    if (!problem.transform) {
        throw Error(ErrorKind::PreconditionViolation, "given-T factorization requires the coordinate transform T");
    }
    const CMatrix& t = *problem.transform;
    const SupportingProjectionPair pair = projections_from_T(t, problem.dims.alpha(), problem.dims.beta());
    return tensor_factorize(problem, pair, hat_projections(t, problem.u, problem.v, problem.dims), sample_points);
}

ProjectionSearchResult search_supporting_projections(const CMatrix& a, const CMatrix& a_times, std::size_t alpha,
                                                     std::size_t beta) {
    const std::size_t n = alpha + beta;
    if (!a.is_square() || !a_times.is_square() || a.rows() != n || a_times.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch, "find_supporting_projections: matrices must be (alpha+beta) square");
    }
    const Eigenpairs ea = sorted_eigenpairs(a, "A");
    const Eigenpairs ex = sorted_eigenpairs(a_times, "A^x");

    std::optional<ProjectionSearchResult> found;
    CMatrix basis(n, n);
    for_each_subset(n, alpha, [&](const std::vector<std::size_t>& sa) {
        for (std::size_t k = 0; k < alpha; ++k) basis.set_block(0, k, ea.vectors.block(0, sa[k], n, 1));
        return for_each_subset(n, beta, [&](const std::vector<std::size_t>& sb) {
            for (std::size_t k = 0; k < beta; ++k) basis.set_block(0, alpha + k, ex.vectors.block(0, sb[k], n, 1));
            try {
                if (condition_number_1(basis) > tol::kMaxBasisCondition) return false;
                CMatrix t = inverse(basis);
                SupportingProjectionPair pair = projections_from_T(t, alpha, beta);
                if (subspace_condition_residual(a, a_times, pair).max() > tol::kProjectionAccept) return false;
                found = ProjectionSearchResult{std::move(pair), std::move(t), sa, sb};
                return true;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Singular) return false;
                throw;
            }
        });
    });
    if (!found) {
        throw Error(ErrorKind::NoAdmissiblePair,
                    "no eigenvector-subset pair spans complementary invariant subspaces within the conditioning bound");
    }
    return std::move(*found);
}

SupportingProjectionPair find_supporting_projections(const CMatrix& a, const CMatrix& a_times, std::size_t alpha,
                                                     std::size_t beta) {
    return search_supporting_projections(a, a_times, alpha, beta).projections;
}

FactorizationResult tensor_factorize_search(const FactorizationProblem& problem,
                                            std::span<const Complex> sample_points) {
    check_problem(problem);
    const ProjectionSearchResult found =
        search_supporting_projections(problem.f.A(), problem.f_inverse.A(), problem.dims.alpha(), problem.dims.beta());
    return tensor_factorize(problem, found.projections,
                            hat_projections(found.transform, problem.u, problem.v, problem.dims), sample_points);
}

ScaledRealization scaling_normalize(const Realization& r) {
    const CMatrix& d = r.D();
    if (!d.is_square() || d.rows() == 0) throw Error(ErrorKind::NotScalar, "scaling_normalize: D must be square");
    const Complex c = d(0, 0);
    double off = 0.0;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) off = std::max(off, std::abs(d(i, j) - (i == j ? c : Complex{})));
    if (off > tol::kScalarFeedthrough) throw Error(ErrorKind::NotScalar, "scaling_normalize: D is not c*I", off);
    if (c == Complex{}) throw Error(ErrorKind::Singular, "scaling_normalize: D is zero");
    return {Realization(r.A(), r.B(), (1.0 / c) * r.C(), CMatrix::identity(d.rows())), c};
}

}  // namespace kronreal
