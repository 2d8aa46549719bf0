#include "kronreal/tensor.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "kronreal/error.hpp"
#include "kronreal/tolerances.hpp"

namespace kronreal {

namespace {

/// Places a 3x3 grid of blocks; empty entries in `blocks` are zero blocks.
CMatrix assemble3x3(const std::size_t (&row_sizes)[3], const std::size_t (&col_sizes)[3],
                    const CMatrix* const (&blocks)[3][3]) {
    std::size_t total_rows = 0, total_cols = 0;
    for (auto r : row_sizes) total_rows += r;
    for (auto c : col_sizes) total_cols += c;
    CMatrix out(total_rows, total_cols);
    std::size_t r0 = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t c0 = 0;
        for (int j = 0; j < 3; ++j) {
            if (const CMatrix* b = blocks[i][j]) {
                if (b->rows() != row_sizes[i] || b->cols() != col_sizes[j]) {
                    throw Error(ErrorKind::DimensionMismatch, "assemble3x3: block does not match partition");
                }
                out.set_block(r0, c0, *b);
            }
            c0 += col_sizes[j];
        }
        r0 += row_sizes[i];
    }
    return out;
}

void check_unit(const CMatrix& w, std::size_t expected_len) {
    if (w.cols() != 1 || w.rows() != expected_len) {
        throw Error(ErrorKind::DimensionMismatch, "deflate: vector must be a column of length " +
                                                      std::to_string(expected_len));
    }
    const double dev = std::abs(frobenius_norm(w) - 1.0);
    if (dev > tol::kUnitNorm) {
        throw Error(ErrorKind::NonUnitVector, "deflate: vector is not unit-norm", dev);
    }
}

}  // namespace

CMatrix inflate(const CMatrix& m, InflationSide s) {
    const CMatrix id = CMatrix::identity(s.factor_dim);
    return s.side == Side::Left ? kron(m, id) : kron(id, m);
}

Realization inflate(const Realization& r, InflationSide s) {
    if (s.factor_dim == 0) throw Error(ErrorKind::DimensionMismatch, "inflate: factor dimension must be positive");
    return Realization(inflate(r.A(), s), inflate(r.B(), s), inflate(r.C(), s), inflate(r.D(), s));
}

Realization tensor_realization(const Realization& left, const Realization& right) {
    const std::size_t pr = right.outputs();
    const std::size_t ml = left.inputs();
    const CMatrix id_pr = CMatrix::identity(pr);
    const CMatrix id_ml = CMatrix::identity(ml);

    const CMatrix a = block2x2(kron(left.A(), id_pr), kron(left.B(), right.C()),
                               CMatrix(ml * right.states(), left.states() * pr), kron(id_ml, right.A()));
    const CMatrix b = vstack(kron(left.B(), right.D()), kron(id_ml, right.B()));
    const CMatrix c = hstack(kron(left.C(), id_pr), kron(left.D(), right.C()));
    return Realization(a, b, c, kron(left.D(), right.D()));
}

CMatrix evaluate_tensor_two_var(const Realization& left, const Realization& right, Complex z_left,
                                Complex z_right) {
    const Realization t = tensor_realization(left, right);
    std::vector<Complex> shifts(t.states(), z_right);
    std::fill_n(shifts.begin(), left.states() * right.outputs(), z_left);
    return evaluate_shifted(t, shifts);
}

double proposition_residual(const Realization& left, const Realization& right) {
    const Realization direct = tensor_realization(left, right);
    const Realization cascade = series_product(inflate(left, InflationSide::left(right.outputs())),
                                               inflate(right, InflationSide::right(left.inputs())));
    return max_abs_diff(system_array(direct), system_array(cascade));
}

Realization tensor_inverse_realization(const Realization& left, const Realization& right) {
    const Realization li = inverse_realization(left);
    const Realization ri = inverse_realization(right);
    const CMatrix id_mr = CMatrix::identity(right.outputs());
    const CMatrix id_ml = CMatrix::identity(left.inputs());

    const CMatrix a = block2x2(kron(li.A(), id_mr), CMatrix(left.states() * right.outputs(), left.inputs() * right.states()),
                               kron(li.C(), ri.B()), kron(id_ml, ri.A()));
    const CMatrix b = vstack(kron(li.B(), id_mr), kron(li.D(), ri.B()));
    const CMatrix c = hstack(kron(li.C(), ri.D()), kron(id_ml, ri.C()));
    return Realization(a, b, c, kron(li.D(), ri.D()));
}

double factored_array_residual(const Realization& left, const Realization& right, bool inverted) {
    const auto lside = InflationSide::left(right.outputs());
    const auto rside = InflationSide::right(left.inputs());
    const std::size_t alpha = left.states() * right.outputs();
    const std::size_t beta = left.inputs() * right.states();
    const CMatrix id_alpha = CMatrix::identity(alpha);
    const CMatrix id_beta = CMatrix::identity(beta);

    if (!inverted) {
        const Realization lb = inflate(left, lside);
        const Realization rb = inflate(right, rside);
        const CMatrix* const first_blocks[3][3] = {{&lb.A(), nullptr, &lb.B()},
                                                   {nullptr, &id_beta, nullptr},
                                                   {&lb.C(), nullptr, &lb.D()}};
        const CMatrix first = assemble3x3({alpha, beta, lb.outputs()}, {alpha, beta, lb.inputs()}, first_blocks);
        const CMatrix* const second_blocks[3][3] = {{&id_alpha, nullptr, nullptr},
                                                    {nullptr, &rb.A(), &rb.B()},
                                                    {nullptr, &rb.C(), &rb.D()}};
        const CMatrix second = assemble3x3({alpha, beta, rb.outputs()}, {alpha, beta, rb.inputs()}, second_blocks);
        return max_abs_diff(first * second, system_array(tensor_realization(left, right)));
    }

    const Realization lb = inflate(inverse_realization(left), lside);
    const Realization rb = inflate(inverse_realization(right), rside);
    const CMatrix* const first_blocks[3][3] = {{&id_alpha, nullptr, nullptr},
                                               {nullptr, &rb.A(), &rb.B()},
                                               {nullptr, &rb.C(), &rb.D()}};
    const CMatrix first = assemble3x3({alpha, beta, rb.outputs()}, {alpha, beta, rb.inputs()}, first_blocks);
    const CMatrix* const second_blocks[3][3] = {{&lb.A(), nullptr, &lb.B()},
                                                {nullptr, &id_beta, nullptr},
                                                {&lb.C(), nullptr, &lb.D()}};
    const CMatrix second = assemble3x3({alpha, beta, lb.outputs()}, {alpha, beta, lb.inputs()}, second_blocks);
    return max_abs_diff(first * second, system_array(tensor_inverse_realization(left, right)));
}

CMatrix deflate(const CMatrix& m, InflationSide s, const CMatrix& w) {
    const std::size_t k = s.factor_dim;
    if (k == 0) throw Error(ErrorKind::DimensionMismatch, "deflate: factor dimension must be positive");
    check_unit(w, k);
    if (m.rows() % k != 0 || m.cols() % k != 0) {
        throw Error(ErrorKind::DimensionMismatch, "deflate: matrix dimensions are not multiples of " +
                                                      std::to_string(k));
    }
    const std::size_t rows = m.rows() / k, cols = m.cols() / k;
    CMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Complex acc{};
            for (std::size_t a = 0; a < k; ++a) {
                const Complex wa = std::conj(w(a, 0));
                for (std::size_t b = 0; b < k; ++b) {
                    const Complex entry = s.side == Side::Left ? m(i * k + a, j * k + b) : m(a * rows + i, b * cols + j);
                    acc += wa * entry * w(b, 0);
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

Realization deflate_realization(const Realization& r, InflationSide s, const CMatrix& w) {
    return Realization(deflate(r.A(), s, w), deflate(r.B(), s, w), deflate(r.C(), s, w), deflate(r.D(), s, w));
}

Realization deflate_realization(const Realization& r, InflationSide s) {
    return deflate_realization(r, s, CMatrix::unit_vector(s.factor_dim, 0));
}

Realization multi_tensor(std::span<const Realization> factors) {
    if (factors.empty()) throw Error(ErrorKind::DimensionMismatch, "multi_tensor: at least one factor is required");
    Realization acc = factors.front();
    for (const auto& f : factors.subspan(1)) acc = tensor_realization(acc, f);
    return acc;
}

}  // namespace kronreal
