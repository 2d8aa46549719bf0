#include "kronreal/marginals.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kronreal/error.hpp"
#include "kronreal/tensor.hpp"

namespace kronreal {

namespace {

void check_basis(const std::optional<CMatrix>& basis, std::size_t n) {
    if (basis && (basis->rows() != n || basis->cols() != n)) {
        throw Error(ErrorKind::DimensionMismatch, "marginal basis must be " + std::to_string(n) + " square");
    }
}

/// Isometric embedding of the kept factor paired with traced basis vector k.
CMatrix embedding(const MarginalSpec& spec, const std::optional<CMatrix>& basis, std::size_t k) {
    const std::size_t t = spec.traced();
    const CMatrix f = basis ? basis->block(0, k, t, 1) : CMatrix::unit_vector(t, k);
    const CMatrix id = CMatrix::identity(spec.kept());
    return spec.side == MarginalSide::A ? kron(id, f) : kron(f, id);
}

void check_spec(const MarginalSpec& spec, std::size_t rows, std::size_t cols) {
    if (spec.n1 == 0 || spec.n2 == 0 || rows != spec.total() || cols != spec.total()) {
        throw Error(ErrorKind::DimensionMismatch, "marginal: function must be square of size N1*N2 = " +
                                                      std::to_string(spec.total()));
    }
}

}  // namespace

CMatrix partial_trace(const CMatrix& m, const MarginalSpec& spec, const std::optional<CMatrix>& basis) {
    check_spec(spec, m.rows(), m.cols());
    check_basis(basis, spec.traced());
    CMatrix out(spec.kept(), spec.kept());
    for (std::size_t k = 0; k < spec.traced(); ++k) {
        const CMatrix e = embedding(spec, basis, k);
        out += e.adjoint() * m * e;
    }
    return out;
}

CMatrix marginal_eval(const Realization& r, const MarginalSpec& spec, Complex z, const std::optional<CMatrix>& basis) {
    check_spec(spec, r.outputs(), r.inputs());
    return partial_trace(evaluate(r, z), spec, basis);
}

Realization marginal_realization(const Realization& r, const MarginalSpec& spec) {
    check_spec(spec, r.outputs(), r.inputs());
    const std::size_t copies = spec.traced();
    const std::size_t n = r.states();
    const std::size_t kept = spec.kept();

    CMatrix b(n * copies, kept);
    CMatrix c(kept, n * copies);
    for (std::size_t k = 0; k < copies; ++k) {
        const CMatrix e = embedding(spec, std::nullopt, k);
        b.set_block(k * n, 0, r.B() * e);
        c.set_block(0, k * n, e.adjoint() * r.C());
    }
    return Realization(kron(CMatrix::identity(copies), r.A()), std::move(b), std::move(c), partial_trace(r.D(), spec));
}

double trace_relation_residual(const Realization& r1, const Realization& r2, std::span<const Complex> samples) {
    if (r1.inputs() != r1.outputs() || r2.inputs() != r2.outputs()) {
        throw Error(ErrorKind::DimensionMismatch, "trace_relation_residual: factors must be square");
    }
    const Realization t = tensor_realization(r1, r2);
    const MarginalSpec spec{r1.outputs(), r2.outputs(), MarginalSide::A};
    double worst = 0.0;
    for (const Complex z : samples) {
        const CMatrix expected = trace(evaluate(r2, z)) * evaluate(r1, z);
        worst = std::max(worst, frobenius_norm(marginal_eval(t, spec, z) - expected));
    }
    return worst;
}

double marginal_reconstruction_residual(const Realization& r, std::size_t n1, std::size_t n2,
                                        std::span<const Complex> samples) {
    const MarginalSpec a{n1, n2, MarginalSide::A};
    const MarginalSpec b{n1, n2, MarginalSide::B};
    check_spec(a, r.outputs(), r.inputs());
    double worst = 0.0;
    for (const Complex z : samples) {
        const CMatrix m = evaluate(r, z);
        const Complex tr = trace(m);
        if (tr == Complex{}) return std::numeric_limits<double>::infinity();
        const CMatrix rebuilt = (1.0 / tr) * kron(partial_trace(m, a), partial_trace(m, b));
        worst = std::max(worst, relative_residual(rebuilt, m));
    }
    return worst;
}

}  // namespace kronreal
