#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kronreal/cmatrix.hpp"
#include "kronreal/random.hpp"

namespace kronreal {

/// Sample points whose resolvent (zI - A) has 1-norm condition above this for
/// any of the supplied state matrices count as pole collisions.
inline constexpr double kSampleResolventCondition = 1e6;
inline constexpr int kMaxRedraws = 100;

/// True when z is a usable evaluation point for every matrix in `state_matrices`.
bool clear_of_poles(Complex z, std::initializer_list<const CMatrix*> state_matrices);

/**
 * Deterministic grid z_j = 1.5 exp(2 pi i j / count) + 0.1 j for j < count.
 * A point that collides with a pole is replaced by
 * z_j (1 + 0.1 k) + 0.05 k i for the first k = 1..kMaxRedraws that clears.
 * Throws ErrorKind::Pole if no replacement clears.
 */
std::vector<Complex> verification_grid(std::initializer_list<const CMatrix*> state_matrices,
                                       std::size_t count = 20);

/**
 * Random points with modulus uniform in [1, 10] and uniform argument, redrawn
 * (up to kMaxRedraws times per point) on pole collision.
 */
std::vector<Complex> annulus_points(SplitMix64& rng, std::size_t count,
                                    std::initializer_list<const CMatrix*> state_matrices);

}  // namespace kronreal
