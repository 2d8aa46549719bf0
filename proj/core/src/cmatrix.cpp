#include "kronreal/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "kronreal/error.hpp"
#include "kronreal/tolerances.hpp"

namespace kronreal {

namespace {

std::string dims(const CMatrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

[[noreturn]] void mismatch(const char* op, const CMatrix& a, const CMatrix& b) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " + dims(a) + " vs " + dims(b));
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "CMatrix: entry count does not match rows*cols");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "CMatrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::column(std::span<const Complex> values) {
    return CMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

CMatrix CMatrix::unit_vector(std::size_t n, std::size_t k) {
    CMatrix m(n, 1);
    m(k, 0) = 1.0;
    return m;
}

CMatrix CMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) {
        throw Error(ErrorKind::DimensionMismatch, "block: window exceeds " + dims(*this));
    }
    CMatrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        std::copy_n(&data_[(row0 + i) * cols_ + col0], ncols, &out.data_[i * ncols]);
    }
    return out;
}

void CMatrix::set_block(std::size_t row0, std::size_t col0, const CMatrix& src) {
    if (row0 + src.rows_ > rows_ || col0 + src.cols_ > cols_) {
        throw Error(ErrorKind::DimensionMismatch, "set_block: " + dims(src) + " does not fit in " + dims(*this));
    }
    for (std::size_t i = 0; i < src.rows_; ++i) {
        std::copy_n(&src.data_[i * src.cols_], src.cols_, &data_[(row0 + i) * cols_ + col0]);
    }
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) mismatch("operator+", *this, rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) mismatch("operator-", *this, rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator-(CMatrix m) { return m *= -1.0; }
CMatrix operator*(Complex s, CMatrix m) { return m *= s; }
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) { return mat_mul(lhs, rhs); }

CMatrix mat_mul(const CMatrix& x, const CMatrix& y) {
    if (x.cols() != y.rows()) mismatch("mat_mul", x, y);
    CMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Complex a = x(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += a * y(k, j);
        }
    }
    return out;
}

CMatrix kron(const CMatrix& x, const CMatrix& y) {
    const std::size_t yr = y.rows(), yc = y.cols();
    CMatrix out(x.rows() * yr, x.cols() * yc);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const Complex a = x(i, j);
            for (std::size_t k = 0; k < yr; ++k)
                for (std::size_t l = 0; l < yc; ++l) out(i * yr + k, j * yc + l) = a * y(k, l);
        }
    return out;
}

CMatrix hstack(const CMatrix& left, const CMatrix& right) {
    if (left.rows() != right.rows()) mismatch("hstack", left, right);
    CMatrix out(left.rows(), left.cols() + right.cols());
    out.set_block(0, 0, left);
    out.set_block(0, left.cols(), right);
    return out;
}

CMatrix vstack(const CMatrix& top, const CMatrix& bottom) {
    if (top.cols() != bottom.cols()) mismatch("vstack", top, bottom);
    CMatrix out(top.rows() + bottom.rows(), top.cols());
    out.set_block(0, 0, top);
    out.set_block(top.rows(), 0, bottom);
    return out;
}

CMatrix block2x2(const CMatrix& m11, const CMatrix& m12, const CMatrix& m21, const CMatrix& m22) {
    if (m11.rows() != m12.rows() || m21.rows() != m22.rows() || m11.cols() != m21.cols() ||
        m12.cols() != m22.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "block2x2: blocks " + dims(m11) + ", " + dims(m12) + ", " +
                                                      dims(m21) + ", " + dims(m22) + " are not conformable");
    }
    CMatrix out(m11.rows() + m21.rows(), m11.cols() + m12.cols());
    out.set_block(0, 0, m11);
    out.set_block(0, m11.cols(), m12);
    out.set_block(m11.rows(), 0, m21);
    out.set_block(m11.rows(), m11.cols(), m22);
    return out;
}

CMatrix block_diag(const CMatrix& m1, const CMatrix& m2) {
    return block2x2(m1, CMatrix(m1.rows(), m2.cols()), CMatrix(m2.rows(), m1.cols()), m2);
}

double frobenius_norm(const CMatrix& m) {
    double s = 0.0;
    for (const auto& x : m.entries()) s += std::norm(x);
    return std::sqrt(s);
}

double max_abs(const CMatrix& m) {
    double best = 0.0;
    for (const auto& x : m.entries()) best = std::max(best, std::abs(x));
    return best;
}

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) mismatch("max_abs_diff", x, y);
    double best = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) best = std::max(best, std::abs(x.entries()[k] - y.entries()[k]));
    return best;
}

double relative_residual(const CMatrix& x, const CMatrix& y) {
    return frobenius_norm(x - y) / std::max(1.0, frobenius_norm(y));
}

Complex trace(const CMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "trace: " + dims(m) + " is not square");
    Complex t{};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

bool all_finite(const CMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [](const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

LuFactorization::LuFactorization(const CMatrix& m) : lu_(m), perm_(m.rows()) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "LU: " + dims(m) + " is not square");
    const std::size_t n = m.rows();
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    const double threshold = tol::kPivot * max_abs(m);
    smallest_pivot_ = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        smallest_pivot_ = std::min(smallest_pivot_, best);
        if (best <= threshold || best == 0.0) {
            throw Error(ErrorKind::Singular, "LU: matrix is singular to working precision", best);
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
            std::swap(perm_[k], perm_[piv]);
        }
        const Complex pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu_(i, k) / pivot;
            lu_(i, k) = f;
            if (f == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
        }
    }
}

CMatrix LuFactorization::solve(const CMatrix& rhs) const {
    const std::size_t n = lu_.rows();
    if (rhs.rows() != n) mismatch("solve", lu_, rhs);
    const std::size_t k = rhs.cols();
    CMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) x(i, j) = rhs(perm_[i], j);
    // Forward substitution with the unit lower factor.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < i; ++p) {
            const Complex l = lu_(i, p);
            if (l == Complex{}) continue;
            for (std::size_t j = 0; j < k; ++j) x(i, j) -= l * x(p, j);
        }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t p = ii + 1; p < n; ++p) {
            const Complex u = lu_(ii, p);
            if (u == Complex{}) continue;
            for (std::size_t j = 0; j < k; ++j) x(ii, j) -= u * x(p, j);
        }
        const Complex d = lu_(ii, ii);
        for (std::size_t j = 0; j < k; ++j) x(ii, j) /= d;
    }
    return x;
}

CMatrix solve(const CMatrix& m, const CMatrix& rhs) {
    if (!m.is_square() || rhs.rows() != m.rows()) mismatch("solve", m, rhs);
    return LuFactorization(m).solve(rhs);
}

CMatrix inverse(const CMatrix& m) { return solve(m, CMatrix::identity(m.rows())); }

bool is_idempotent(const CMatrix& p, double tol) {
    if (!p.is_square()) throw Error(ErrorKind::DimensionMismatch, "is_idempotent: " + dims(p) + " is not square");
    return frobenius_norm(p * p - p) <= tol;
}

std::size_t numerical_rank(const CMatrix& m, double rel_tol) {
    CMatrix w = m;
    const double threshold = rel_tol * frobenius_norm(m);
    const std::size_t r = w.rows(), c = w.cols();
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(r, c); ++k) {
        std::size_t pi = k, pj = k;
        double best = 0.0;
        for (std::size_t i = k; i < r; ++i)
            for (std::size_t j = k; j < c; ++j)
                if (std::abs(w(i, j)) > best) {
                    best = std::abs(w(i, j));
                    pi = i;
                    pj = j;
                }
        if (best <= threshold || best == 0.0) break;
        for (std::size_t j = 0; j < c; ++j) std::swap(w(k, j), w(pi, j));
        for (std::size_t i = 0; i < r; ++i) std::swap(w(i, k), w(i, pj));
        for (std::size_t i = k + 1; i < r; ++i) {
            const Complex f = w(i, k) / w(k, k);
            for (std::size_t j = k; j < c; ++j) w(i, j) -= f * w(k, j);
        }
        ++rank;
    }
    return rank;
}

double condition_number_1(const CMatrix& m) {
    const auto norm1 = [](const CMatrix& a) {
        double best = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
            best = std::max(best, s);
        }
        return best;
    };
    return norm1(m) * norm1(inverse(m));
}

}  // namespace kronreal
