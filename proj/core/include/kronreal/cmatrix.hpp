#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace kronreal {

using Complex = std::complex<double>;

/**
 * Dense row-major complex matrix.
 *
 * Zero-sized dimensions are allowed so that realizations with an empty state
 * space (constant functions) need no special casing: a 0x0 state matrix, an
 * 0xm input matrix and a px0 output matrix all compose through the ordinary
 * operations below.
 */
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
    static CMatrix diagonal(std::span<const Complex> diag);
    static CMatrix column(std::span<const Complex> values);
    /// Column vector with a one in position k.
    static CMatrix unit_vector(std::size_t n, std::size_t k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    CMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const CMatrix& src);

    /// Conjugate transpose.
    CMatrix adjoint() const;

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex s);

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix m);
CMatrix operator*(Complex s, CMatrix m);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

CMatrix mat_mul(const CMatrix& x, const CMatrix& y);

/// Kronecker product: block (i,j) of the result is x(i,j) * y.
CMatrix kron(const CMatrix& x, const CMatrix& y);

CMatrix hstack(const CMatrix& left, const CMatrix& right);
CMatrix vstack(const CMatrix& top, const CMatrix& bottom);
CMatrix block2x2(const CMatrix& m11, const CMatrix& m12, const CMatrix& m21, const CMatrix& m22);
CMatrix block_diag(const CMatrix& m1, const CMatrix& m2);

double frobenius_norm(const CMatrix& m);
double max_abs(const CMatrix& m);
/// max_ij |x_ij - y_ij|; dimensions must agree.
double max_abs_diff(const CMatrix& x, const CMatrix& y);
/// ||x - y||_F / max(1, ||y||_F).
double relative_residual(const CMatrix& x, const CMatrix& y);
Complex trace(const CMatrix& m);
bool all_finite(const CMatrix& m);

/**
 * LU factorization with partial pivoting. Construction throws
 * ErrorKind::Singular when a pivot falls below tol::kPivot * max|M_ij|.
 */
class LuFactorization {
   public:
    explicit LuFactorization(const CMatrix& m);

    std::size_t dim() const noexcept { return lu_.rows(); }
    CMatrix solve(const CMatrix& rhs) const;
    double smallest_pivot() const noexcept { return smallest_pivot_; }

   private:
    CMatrix lu_;
    std::vector<std::size_t> perm_;
    double smallest_pivot_ = 0.0;
};

CMatrix solve(const CMatrix& m, const CMatrix& rhs);
CMatrix inverse(const CMatrix& m);

bool is_idempotent(const CMatrix& p, double tol);

/// Rank by Gaussian elimination with complete pivoting; entries below
/// rel_tol * ||M||_F are treated as zero.
std::size_t numerical_rank(const CMatrix& m, double rel_tol);

/// ||M||_1 * ||M^{-1}||_1. Throws ErrorKind::Singular if M is singular.
double condition_number_1(const CMatrix& m);

}  // namespace kronreal
