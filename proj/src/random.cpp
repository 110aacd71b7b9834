#include "nroots/random.hpp"

#include <cmath>

namespace nroots {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over base + index so neighbouring shards decorrelate.
    std::uint64_t z = base + index * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

ComplexMatrix random_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix m(dim);
    for (Complex& z : m.data()) {
        z = rng.complex_gaussian();
    }
    return m;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    return (g + g.adjoint()) * 0.5;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
    ComplexMatrix q = random_matrix(dim, rng);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex dot{};
                for (std::size_t i = 0; i < dim; ++i) {
                    dot += std::conj(q(i, k)) * q(i, j);
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    q(i, j) -= dot * q(i, k);
                }
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                norm += std::norm(q(i, j));
            }
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < dim; ++i) {
                q(i, j) /= norm;
            }
        }
    }
    return q;
}

ComplexMatrix random_with_spectrum(std::span<const Complex> values, Rng& rng) {
    return spectral_synthesis(random_unitary(values.size(), rng), values);
}

ComplexMatrix random_with_spectrum(std::span<const double> values, Rng& rng) {
    ComplexMatrix m = spectral_synthesis(random_unitary(values.size(), rng), values);
    return (m + m.adjoint()) * 0.5;
}

ComplexMatrix random_normal(std::size_t dim, Rng& rng, const std::function<Complex(Rng&)>& draw) {
    std::vector<Complex> values(dim);
    for (Complex& v : values) {
        v = draw(rng);
    }
    return random_with_spectrum(values, rng);
}

}  // namespace nroots
