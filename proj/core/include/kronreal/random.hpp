#pragma once

#include <cstddef>
#include <cstdint>

#include "kronreal/cmatrix.hpp"
#include "kronreal/realization.hpp"

namespace kronreal {

/**
 * SplitMix64 generator. The output sequence is fixed so that instances
 * generated from a seed are reproducible in any language:
 *
 *     state += 0x9e3779b97f4a7c15
 *     z = state
 *     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
 *     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
 *     return z ^ (z >> 31)
 *
 * uniform01() maps the top 53 bits to [0, 1).
 */
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

    /// Real part first, then imaginary part, each uniform on [-1, 1).
    Complex unit_square() noexcept {
        const double re = uniform(-1.0, 1.0);
        const double im = uniform(-1.0, 1.0);
        return {re, im};
    }

   private:
    std::uint64_t state_;
};

/// Entries drawn row-major with SplitMix64::unit_square.
CMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols);

/**
 * Draws A, B, C and then D, in that order, with random_matrix. With
 * identity_feedthrough the D draw is skipped and D = I (m_in must equal m_out).
 */
Realization random_realization(SplitMix64& rng, std::size_t n, std::size_t m_in, std::size_t m_out,
                               bool identity_feedthrough);

/// Random complex column of unit 2-norm.
CMatrix random_unit_vector(SplitMix64& rng, std::size_t n);

/// Random square matrix, redrawn until condition_number_1 <= max_condition.
CMatrix random_invertible(SplitMix64& rng, std::size_t n, double max_condition);

}  // namespace kronreal
