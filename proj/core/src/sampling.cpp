#include "kronreal/sampling.hpp"

#include <cmath>
#include <numbers>

#include "kronreal/error.hpp"

namespace kronreal {

bool clear_of_poles(Complex z, std::initializer_list<const CMatrix*> state_matrices) {
    for (const CMatrix* a : state_matrices) {
        if (a->rows() == 0) continue;
        CMatrix m = -*a;
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += z;
        try {
            if (condition_number_1(m) > kSampleResolventCondition) return false;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Singular) return false;
            throw;
        }
    }
    return true;
}

std::vector<Complex> verification_grid(std::initializer_list<const CMatrix*> state_matrices, std::size_t count) {
    std::vector<Complex> points;
    points.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
        const Complex base = 1.5 * std::polar(1.0, angle) + 0.1 * static_cast<double>(j);
        Complex z = base;
        int k = 0;
        while (!clear_of_poles(z, state_matrices)) {
            if (++k > kMaxRedraws) throw Error(ErrorKind::Pole, "verification_grid: no pole-free replacement point");
            z = base * (1.0 + 0.1 * k) + Complex(0.0, 0.05 * k);
        }
        points.push_back(z);
    }
    return points;
}

std::vector<Complex> annulus_points(SplitMix64& rng, std::size_t count,
                                    std::initializer_list<const CMatrix*> state_matrices) {
    std::vector<Complex> points;
    points.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        for (int k = 0;; ++k) {
            if (k > kMaxRedraws) throw Error(ErrorKind::Pole, "annulus_points: too many pole collisions");
            const double radius = rng.uniform(1.0, 10.0);
            const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const Complex z = std::polar(radius, angle);
            if (clear_of_poles(z, state_matrices)) {
                points.push_back(z);
                break;
            }
        }
    }
    return points;
}

}  // namespace kronreal
