#include <gtest/gtest.h>

#include <functional>

#include "kronreal/error.hpp"
#include "kronreal/factorization.hpp"
#include "kronreal/instances.hpp"
#include "kronreal/random.hpp"
#include "kronreal/sampling.hpp"
#include "kronreal/tensor.hpp"
#include "test_support.hpp"

namespace kronreal {
namespace {

using oracle::naive_kron;
using oracle::naive_mul;

// T^{-1} diag(I_alpha, 0) T computed with an explicit inverse.
CMatrix oracle_alpha_projection(const CMatrix& t, std::size_t alpha) {
    CMatrix d = CMatrix::zeros(t.rows(), t.rows());
    for (std::size_t i = 0; i < alpha; ++i) d(i, i) = 1.0;
    return naive_mul(naive_mul(inverse(t), d), t);
}

double max_eval_diff(const Realization& x, const Realization& y, std::span<const Complex> zs) {
    double worst = 0.0;
    for (const Complex z : zs) worst = std::max(worst, relative_residual(evaluate(x, z), evaluate(y, z)));
    return worst;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Parse;
}

TEST(ProjectionsFromT, IdentityTransform) {
    const SupportingProjectionPair p = projections_from_T(CMatrix::identity(5), 2, 3);
    EXPECT_EQ(p.alpha_projection, block_diag(CMatrix::identity(2), CMatrix::zeros(3, 3)));
    EXPECT_EQ(p.beta_projection, block_diag(CMatrix::zeros(2, 2), CMatrix::identity(3)));
}

TEST(ProjectionsFromT, RandomTransformInvariants) {
    SplitMix64 rng(61);
    for (std::size_t s = 0; s < 20; ++s) {
        const std::size_t alpha = 1 + s % 4, beta = 1 + (s / 4) % 4;
        const CMatrix t = random_invertible(rng, alpha + beta, 1e4);
        const SupportingProjectionPair p = projections_from_T(t, alpha, beta);
        const CMatrix& pa = p.alpha_projection;
        const CMatrix& pb = p.beta_projection;
        EXPECT_LE(frobenius_norm(naive_mul(pa, pa) - pa), 1e-9);
        EXPECT_LE(frobenius_norm(naive_mul(pb, pb) - pb), 1e-9);
        EXPECT_LE(frobenius_norm(naive_mul(pa, pb)), 1e-9);
        EXPECT_LE(frobenius_norm(naive_mul(pb, pa)), 1e-9);
        EXPECT_LE(frobenius_norm(pa + pb - CMatrix::identity(alpha + beta)), 1e-12);
        EXPECT_LE(relative_residual(pa, oracle_alpha_projection(t, alpha)), 1e-9);
        EXPECT_EQ(numerical_rank(pa, 1e-9), alpha);
    }
}

TEST(ProjectionsFromT, SingularTransform) {
    EXPECT_EQ(kind_of([] { (void)projections_from_T(CMatrix::zeros(2, 2), 1, 1); }), ErrorKind::Singular);
    EXPECT_EQ(kind_of([] { (void)projections_from_T(CMatrix::identity(3), 1, 1); }), ErrorKind::DimensionMismatch);
}

TEST(HatProjections, StandardVectorsIdentityTransform) {
    const FactorDims dims{2, 2, 1, 3};  // alpha = 6, beta = 2
    const HatProjections h =
        hat_projections(CMatrix::identity(8), CMatrix::unit_vector(3, 0), CMatrix::unit_vector(2, 0), dims);
    CMatrix left = CMatrix::zeros(8, 8), right = CMatrix::zeros(8, 8);
    left(0, 0) = left(3, 3) = 1.0;
    right(6, 6) = 1.0;
    EXPECT_EQ(h.left, left);
    EXPECT_EQ(h.right, right);
}

TEST(HatProjections, FootnoteAbsorptionAndIdempotency) {
    SplitMix64 rng(62);
    for (std::size_t s = 0; s < 20; ++s) {
        const FactorDims dims{1 + s % 3, 1 + (s / 3) % 3, 1 + (s / 9) % 3, 1 + s % 2};
        const CMatrix t = random_invertible(rng, dims.state_dim(), 1e4);
        const CMatrix u = random_unit_vector(rng, dims.m_r), v = random_unit_vector(rng, dims.m_l);
        const HatProjections h = hat_projections(t, u, v, dims);
        const SupportingProjectionPair p = projections_from_T(t, dims.alpha(), dims.beta());
        for (const auto& [hat, proj] : {std::pair{&h.left, &p.alpha_projection}, std::pair{&h.right, &p.beta_projection}}) {
            EXPECT_LE(frobenius_norm(naive_mul(*hat, *proj) - *hat), 1e-9);
            EXPECT_LE(frobenius_norm(naive_mul(*proj, *hat) - *hat), 1e-9);
            EXPECT_LE(frobenius_norm(naive_mul(*hat, *hat) - *hat), 1e-9);
        }
    }
}

TEST(HatProjections, RejectsNonUnitVectors) {
    const FactorDims dims{1, 1, 1, 2};
    EXPECT_EQ(kind_of([&] {
                  (void)hat_projections(CMatrix::identity(3), CMatrix{{1.0}, {1.0}}, CMatrix{{1.0}}, dims);
              }),
              ErrorKind::NonUnitVector);
}

TEST(SubspaceCondition, BlockTriangularExactlyZero) {
    SplitMix64 rng(63);
    CMatrix a = random_matrix(rng, 5, 5);
    for (std::size_t i = 2; i < 5; ++i)
        for (std::size_t j = 0; j < 2; ++j) a(i, j) = 0.0;
    const SupportingProjectionPair p = projections_from_T(CMatrix::identity(5), 2, 3);
    EXPECT_EQ(subspace_condition_residual(a, a, p).alpha, 0.0);
}

TEST(SubspaceCondition, SyntheticInstanceSatisfiesBoth) {
    SplitMix64 rng(64);
    for (std::size_t s = 0; s < 20; ++s) {
        const FactorDims dims{1 + s % 3, 1 + (s / 3) % 3, 1 + (s / 9) % 3, 1 + (s / 2) % 3};
        const FactorizationInstance inst = make_factorization_instance(rng, dims);
        const SupportingProjectionPair p = projections_from_T(*inst.problem.transform, dims.alpha(), dims.beta());
        EXPECT_LE(subspace_condition_residual(inst.problem.f.A(), inst.problem.f_inverse.A(), p).max(), 1e-9);
    }
}

TEST(SubspaceCondition, UnrelatedMatricesFail) {
    SplitMix64 rng(65);
    const CMatrix a = random_matrix(rng, 4, 4), ax = random_matrix(rng, 4, 4);
    const SupportingProjectionPair p = projections_from_T(random_invertible(rng, 4, 1e4), 2, 2);
    EXPECT_GT(subspace_condition_residual(a, ax, p).alpha, 1e-3);
}

TEST(SubspaceCondition, TamperedProjectionDetected) {
    SplitMix64 rng(66);
    for (std::size_t s = 0; s < 10; ++s) {
        const FactorDims dims{1 + s % 3, 1 + s % 2, 1 + (s + 1) % 3, 1 + (s / 2) % 2};
        const FactorizationInstance inst = make_factorization_instance(rng, dims);
        SupportingProjectionPair p = projections_from_T(*inst.problem.transform, dims.alpha(), dims.beta());
        p.alpha_projection(0, 0) += 1e-2;
        EXPECT_GT(subspace_condition_residual(inst.problem.f.A(), inst.problem.f_inverse.A(), p).alpha, 1e-4);
    }
}

TEST(TensorFactorize, IdentityConstantDegenerate) {
    const FactorDims dims{0, 2, 0, 3};
    const Realization id = Realization::constant(CMatrix::identity(6));
    FactorizationProblem problem{id, id, dims, CMatrix::unit_vector(3, 0), CMatrix::unit_vector(2, 1), CMatrix(0, 0)};
    const FactorizationResult r = tensor_factorize(problem);
    EXPECT_EQ(r.left, Realization::constant(CMatrix::identity(2)));
    EXPECT_EQ(r.right, Realization::constant(CMatrix::identity(3)));
    EXPECT_EQ(r.max_residual(), 0.0);
}

TEST(TensorFactorize, GivenTRoundTripAllDimensions) {
    for (std::uint64_t c = 0; c < 81; ++c) {
        const FactorDims dims{1 + c / 27, 1 + (c / 9) % 3, 1 + (c / 3) % 3, 1 + c % 3};
        SplitMix64 rng(1000 + c);
        const FactorizationInstance inst = make_factorization_instance(rng, dims);
        const FactorizationResult r = tensor_factorize(inst.problem);
        ASSERT_EQ(r.sample_points.size(), 20u);
        EXPECT_EQ(r.left.D(), CMatrix::identity(dims.m_l));
        EXPECT_EQ(r.right.D(), CMatrix::identity(dims.m_r));
        double worst = 0.0;
        for (const Complex z : r.sample_points) {
            const CMatrix expected = naive_kron(evaluate(inst.left, z), evaluate(inst.right, z));
            worst = std::max(worst, relative_residual(naive_kron(evaluate(r.left, z), evaluate(r.right, z)), expected));
        }
        EXPECT_LE(worst, 1e-7) << "combo " << c;
        EXPECT_LE(r.max_residual(), 1e-7) << "combo " << c;
        EXPECT_LE(max_eval_diff(r.left, inst.left, r.sample_points), 1e-7) << "combo " << c;
        EXPECT_LE(max_eval_diff(r.right, inst.right, r.sample_points), 1e-7) << "combo " << c;
    }
}

TEST(TensorFactorize, AgreesWithDeflationOfInflatedFactor) {
    SplitMix64 rng(67);
    const FactorDims dims{2, 2, 1, 3};
    const FactorizationInstance inst = make_factorization_instance(rng, dims);
    const FactorizationResult r = tensor_factorize(inst.problem);
    const InflationSide ls = InflationSide::left(dims.m_r);
    const InflationSide rs = InflationSide::right(dims.m_l);
    const Realization left_ref = deflate_realization(inflate(inst.left, ls), ls, inst.problem.u);
    const Realization right_ref = deflate_realization(inflate(inst.right, rs), rs, inst.problem.v);
    EXPECT_LE(max_eval_diff(r.left, left_ref, r.sample_points), 1e-9);
    EXPECT_LE(max_eval_diff(r.right, right_ref, r.sample_points), 1e-9);
}

TEST(TensorFactorize, ExplicitSamplePoints) {
    SplitMix64 rng(68);
    const FactorizationInstance inst = make_factorization_instance(rng, {1, 2, 2, 1});
    const auto zs = annulus_points(rng, 7, {&inst.problem.f.A()});
    const FactorizationResult r = tensor_factorize(inst.problem, zs);
    EXPECT_EQ(r.sample_points, zs);
    EXPECT_EQ(r.residuals.size(), 7u);
}

TEST(TensorFactorize, NonIdentityFeedthroughRejected) {
    SplitMix64 rng(69);
    FactorizationInstance inst = make_factorization_instance(rng, {1, 1, 1, 2});
    const Realization& f = inst.problem.f;
    inst.problem.f = Realization(f.A(), f.B(), f.C(), 2.0 * f.D());
    try {
        (void)tensor_factorize(inst.problem);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolation);
        ASSERT_TRUE(e.residual().has_value());
        EXPECT_GT(*e.residual(), 0.5);
    }
}

TEST(TensorFactorize, WrongTransformFailsSubspaceCheck) {
    SplitMix64 rng(70);
    FactorizationInstance inst = make_factorization_instance(rng, {2, 1, 2, 1});
    inst.problem.transform = random_invertible(rng, 4, 1e4);
    try {
        (void)tensor_factorize(inst.problem);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolation);
        ASSERT_TRUE(e.residual().has_value());
        EXPECT_GT(*e.residual(), 1e-8);
    }
}

TEST(TensorFactorize, MissingTransformAndBadVectors) {
    SplitMix64 rng(71);
    FactorizationInstance inst = make_factorization_instance(rng, {1, 2, 1, 2});
    FactorizationProblem no_t = inst.problem;
    no_t.transform.reset();
    EXPECT_EQ(kind_of([&] { (void)tensor_factorize(no_t); }), ErrorKind::PreconditionViolation);
    FactorizationProblem bad_u = inst.problem;
    bad_u.u = 2.0 * bad_u.u;
    EXPECT_EQ(kind_of([&] { (void)tensor_factorize(bad_u); }), ErrorKind::NonUnitVector);
    FactorizationProblem bad_dims = inst.problem;
    bad_dims.dims.n_l = 2;
    EXPECT_EQ(kind_of([&] { (void)tensor_factorize(bad_dims); }), ErrorKind::DimensionMismatch);
}

TEST(FindSupportingProjections, DecoupledBlocks) {
    const CMatrix a = block_diag(CMatrix{{1.0, 0.5}, {0.0, 2.0}}, CMatrix{{Complex(0, 3)}});
    const SupportingProjectionPair p = find_supporting_projections(a, a, 2, 1);
    EXPECT_LE(projection_pair_residuals(p).max(), 1e-8);
    EXPECT_LE(subspace_condition_residual(a, a, p).max(), 1e-8);
}

TEST(FindSupportingProjections, SyntheticInstances) {
    SplitMix64 rng(72);
    for (std::size_t s = 0; s < 10; ++s) {
        const FactorDims dims{1 + s % 4, 1, 1 + (s / 2) % 4, 1};
        const FactorizationInstance inst = make_factorization_instance(rng, dims);
        const ProjectionSearchResult found = search_supporting_projections(
            inst.problem.f.A(), inst.problem.f_inverse.A(), dims.alpha(), dims.beta());
        EXPECT_LE(projection_pair_residuals(found.projections).max(), 1e-8);
        EXPECT_LE(subspace_condition_residual(inst.problem.f.A(), inst.problem.f_inverse.A(), found.projections).max(),
                  1e-8);
        const FactorizationResult r = tensor_factorize_search(inst.problem);
        EXPECT_LE(r.max_residual(), 1e-7);
        // With scalar factors the split must reproduce F itself.
        for (const Complex z : r.sample_points) {
            EXPECT_LE(relative_residual(naive_mul(evaluate(r.left, z), evaluate(r.right, z)),
                                        naive_mul(evaluate(inst.left, z), evaluate(inst.right, z))),
                      1e-7);
        }
    }
}

TEST(FindSupportingProjections, DeterministicSelection) {
    SplitMix64 rng(73);
    const FactorizationInstance inst = make_factorization_instance(rng, {3, 1, 2, 1});
    const auto a = search_supporting_projections(inst.problem.f.A(), inst.problem.f_inverse.A(), 3, 2);
    const auto b = search_supporting_projections(inst.problem.f.A(), inst.problem.f_inverse.A(), 3, 2);
    EXPECT_EQ(a.alpha_eigen_indices, b.alpha_eigen_indices);
    EXPECT_EQ(a.beta_eigen_indices, b.beta_eigen_indices);
    EXPECT_EQ(a.projections.alpha_projection, b.projections.alpha_projection);
}

TEST(FindSupportingProjections, NoAdmissiblePair) {
    // Both matrices share two nearly parallel eigenvectors, so every subset
    // pair is either singular or too badly conditioned to split the space.
    const double k = 1e4, delta = 1e-5;
    const CMatrix a{{1.0, k}, {0.0, 1.0 + delta}};
    const CMatrix ax{{3.0, k}, {0.0, 3.0 + delta}};
    EXPECT_EQ(kind_of([&] { (void)find_supporting_projections(a, ax, 1, 1); }), ErrorKind::NoAdmissiblePair);
}

TEST(FindSupportingProjections, RepeatedEigenvalue) {
    const CMatrix a = CMatrix::identity(2);
    const CMatrix ax{{1.0, 0.0}, {0.0, 2.0}};
    EXPECT_EQ(kind_of([&] { (void)find_supporting_projections(a, ax, 1, 1); }), ErrorKind::RepeatedEigenvalue);
}

TEST(ScalingNormalize, IdentityUnchanged) {
    SplitMix64 rng(74);
    const Realization r = random_realization(rng, 2, 2, 2, true);
    const ScaledRealization s = scaling_normalize(r);
    EXPECT_EQ(s.realization, r);
    EXPECT_EQ(s.scale, Complex(1.0));
}

TEST(ScalingNormalize, TwoTimesIdentity) {
    SplitMix64 rng(75);
    const Realization base = random_realization(rng, 3, 2, 2, true);
    const Realization r(base.A(), base.B(), base.C(), 2.0 * base.D());
    const ScaledRealization s = scaling_normalize(r);
    EXPECT_EQ(s.scale, Complex(2.0));
    EXPECT_EQ(s.realization.D(), CMatrix::identity(2));
    EXPECT_EQ(s.realization.C(), 0.5 * r.C());
    for (const Complex z : annulus_points(rng, 5, {&r.A()})) {
        EXPECT_LE(max_abs_diff(evaluate(r, z), 2.0 * evaluate(s.realization, z)), 1e-14);
    }
}

TEST(ScalingNormalize, NotScalar) {
    EXPECT_EQ(kind_of([] { (void)scaling_normalize(Realization::constant(CMatrix{{1.0, 0.1}, {0.0, 1.0}})); }),
              ErrorKind::NotScalar);
    EXPECT_EQ(kind_of([] { (void)scaling_normalize(Realization::constant(CMatrix{{1.0, 0.0}, {0.0, 2.0}})); }),
              ErrorKind::NotScalar);
}

TEST(ScalingNormalize, RoundTripWithScaledFactors) {
    SplitMix64 rng(76);
    const FactorDims dims{2, 2, 1, 2};
    const Realization gl = random_realization(rng, dims.n_l, dims.m_l, dims.m_l, true);
    const Realization gr = random_realization(rng, dims.n_r, dims.m_r, dims.m_r, true);
    const Realization fl(gl.A(), gl.B(), gl.C(), 3.0 * gl.D());
    const Realization fr(gr.A(), gr.B(), gr.C(), (1.0 / 3.0) * gr.D());
    const CMatrix t = random_invertible(rng, dims.state_dim(), 1e4);
    const FactorizationProblem problem{conjugate(tensor_realization(fl, fr), t),
                                       conjugate(tensor_inverse_realization(fl, fr), t),
                                       dims,
                                       random_unit_vector(rng, dims.m_r),
                                       random_unit_vector(rng, dims.m_l),
                                       t};
    const FactorizationResult r = tensor_factorize(problem);
    EXPECT_LE(r.max_residual(), 1e-7);
    EXPECT_LE(max_eval_diff(r.left, scaling_normalize(fl).realization, r.sample_points), 1e-7);
    EXPECT_LE(max_eval_diff(r.right, scaling_normalize(fr).realization, r.sample_points), 1e-7);
}

}  // namespace
}  // namespace kronreal
