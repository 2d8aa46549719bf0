#include "kronreal/random.hpp"

#include "kronreal/error.hpp"
#include "kronreal/sampling.hpp"

namespace kronreal {

CMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.unit_square();
    return m;
}

Realization random_realization(SplitMix64& rng, std::size_t n, std::size_t m_in, std::size_t m_out,
                               bool identity_feedthrough) {
    if (identity_feedthrough && m_in != m_out) {
        throw Error(ErrorKind::DimensionMismatch, "random_realization: identity feedthrough needs m_in == m_out");
    }
    CMatrix a = random_matrix(rng, n, n);
    CMatrix b = random_matrix(rng, n, m_in);
    CMatrix c = random_matrix(rng, m_out, n);
    CMatrix d = identity_feedthrough ? CMatrix::identity(m_in) : random_matrix(rng, m_out, m_in);
    return Realization(std::move(a), std::move(b), std::move(c), std::move(d));
}

CMatrix random_unit_vector(SplitMix64& rng, std::size_t n) {
    for (;;) {
        CMatrix w = random_matrix(rng, n, 1);
        const double norm = frobenius_norm(w);
        if (norm > 1e-3) return (1.0 / norm) * w;
    }
}

CMatrix random_invertible(SplitMix64& rng, std::size_t n, double max_condition) {
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        CMatrix t = random_matrix(rng, n, n);
        try {
            if (condition_number_1(t) <= max_condition) return t;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Singular) throw;
        }
    }
    throw Error(ErrorKind::Singular, "random_invertible: no draw met the condition bound");
}

}  // namespace kronreal
