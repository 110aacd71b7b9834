#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "nroots/complex_matrix.hpp"

// Seeded generators for test corpora and falsification campaigns.
// Deterministic for a given seed on a given standard library.

namespace nroots {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    double gaussian() { return normal_(engine_); }
    Complex complex_gaussian() { return {gaussian(), gaussian()}; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Seed for trial `index` of a campaign started from `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Independent standard complex Gaussian entries.
ComplexMatrix random_matrix(std::size_t dim, Rng& rng);

/// (G + G*) / 2 for a Gaussian G.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Orthonormalized Gaussian matrix (modified Gram-Schmidt, applied twice).
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// U diag(values) U* for a random unitary U.
ComplexMatrix random_with_spectrum(std::span<const Complex> values, Rng& rng);
ComplexMatrix random_with_spectrum(std::span<const double> values, Rng& rng);

/// Normal matrix whose eigenvalues are drawn from `draw`.
ComplexMatrix random_normal(std::size_t dim, Rng& rng, const std::function<Complex(Rng&)>& draw);

}  // namespace nroots
