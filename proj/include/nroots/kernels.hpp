#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Data-parallel inner loops. Each kernel has a straightforward serial version,
// kept as the reference the tests compare against, and an OpenMP version used
// by the library. Both operate on row-major dim x dim storage.

namespace nroots::kernels {

using Complex = std::complex<double>;

/// One Jacobi rotation that annihilates the (p, q) entry of a Hermitian matrix:
/// G = [[c, s], [-s conj(w), c conj(w)]] acting on columns p and q.
struct Rotation {
    std::size_t p = 0;
    std::size_t q = 0;
    double c = 1.0;
    double s = 0.0;
    Complex w{1.0, 0.0};
};

/// Rotation zeroing h(p, q), or nullopt-equivalent (c = 1, s = 0, w = 1) when
/// the entry is already below `skip_below`.
Rotation make_rotation(std::span<const Complex> h, std::size_t dim, std::size_t p, std::size_t q,
                       double skip_below);

/// Frobenius norm of the strictly off-diagonal part.
double off_diagonal_norm(std::span<const Complex> h, std::size_t dim);

/// Round-robin (tournament) ordering: dim - 1 rounds (dim rounded up to even)
/// of disjoint index pairs; every pair p < q appears exactly once.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tournament_rounds(std::size_t dim);

namespace serial {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim);

/// One cyclic-by-row Jacobi sweep over H in place, accumulating V <- V G.
/// An empty `v` skips the accumulation.
void jacobi_sweep(std::span<Complex> h, std::span<Complex> v, std::size_t dim, double skip_below);

/// Solves A x = b by Gaussian elimination with partial pivoting. `a` is n x n
/// row-major and is destroyed. Returns the smallest pivot magnitude seen.
double solve_in_place(std::span<Complex> a, std::span<Complex> b, std::size_t n);

}  // namespace serial

namespace parallel {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim);

/// One Jacobi sweep in tournament order: each round applies its disjoint
/// rotations concurrently.
void jacobi_sweep(std::span<Complex> h, std::span<Complex> v, std::size_t dim, double skip_below);

double solve_in_place(std::span<Complex> a, std::span<Complex> b, std::size_t n);

}  // namespace parallel

}  // namespace nroots::kernels
