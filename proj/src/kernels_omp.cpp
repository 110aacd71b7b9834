#include <algorithm>
#include <cmath>

#include "kernels_detail.hpp"

namespace nroots::kernels::parallel {

namespace {

// Below this size thread start-up costs more than the loop.
constexpr std::size_t kMinParallelDim = 48;

// Column update M <- M G for one rotation.
struct Coefficients {
    std::size_t p;
    std::size_t q;
    double c;
    double s;
    Complex a;
    Complex b;
};

}  // namespace

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim) {
    const auto n = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static) if (dim >= kMinParallelDim)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        Complex* row = &out[static_cast<std::size_t>(i) * dim];
        std::fill(row, row + dim, Complex{});
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex aik = a[static_cast<std::size_t>(i) * dim + k];
            if (aik == Complex{}) {
                continue;
            }
            const Complex* brow = &b[k * dim];
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] += aik * brow[j];
            }
        }
    }
}

void jacobi_sweep(std::span<Complex> h, std::span<Complex> v, std::size_t dim, double skip_below) {
    const auto rounds = tournament_rounds(dim);
    std::vector<Rotation> active;
    active.reserve(dim / 2 + 1);
    const auto n = static_cast<std::ptrdiff_t>(dim);
    const bool threaded = dim >= kMinParallelDim;
    const bool with_vectors = !v.empty();
    std::vector<Coefficients> coefficients;
    coefficients.reserve(dim / 2 + 1);

    for (const auto& round : rounds) {
        active.clear();
        for (const auto& [p, q] : round) {
            Rotation r = make_rotation(h, dim, p, q, skip_below);
            if (!detail::is_identity(r)) {
                active.push_back(r);
            }
        }
        if (active.empty()) {
            continue;
        }
        const auto count = static_cast<std::ptrdiff_t>(active.size());
        coefficients.clear();
        for (const Rotation& r : active) {
            const Complex cw = std::conj(r.w);
            coefficients.push_back({r.p, r.q, r.c, r.s, -r.s * cw, r.c * cw});
        }

        // The round's rotations touch disjoint index pairs, so G is block
        // diagonal up to permutation and G* H G can be applied pair by pair.
#pragma omp parallel if (threaded)
        {
#pragma omp for schedule(static)
            for (std::ptrdiff_t k = 0; k < n; ++k) {
                const auto row = static_cast<std::size_t>(k) * dim;
                for (const Coefficients& f : coefficients) {
                    detail::rotate_pair(h[row + f.p], h[row + f.q], f.c, f.s, f.a, f.b);
                    if (with_vectors) {
                        detail::rotate_pair(v[row + f.p], v[row + f.q], f.c, f.s, f.a, f.b);
                    }
                }
            }
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                const Rotation& r = active[static_cast<std::size_t>(i)];
                detail::rotate_rows(h, dim, r);
                detail::clean_pair(h, dim, r);
            }
        }
    }
}

double solve_in_place(std::span<Complex> a, std::span<Complex> b, std::size_t n) {
    if (n == 0) {
        return 0.0;
    }
    double min_pivot = std::abs(a[0]);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(a[col * n + col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double mag = std::abs(a[row * n + col]);
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        min_pivot = col == 0 ? best : std::min(min_pivot, best);
        if (best == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            std::swap_ranges(a.begin() + col * n, a.begin() + (col + 1) * n, a.begin() + pivot * n);
            std::swap(b[col], b[pivot]);
        }
        const Complex diag = a[col * n + col];
        const auto first = static_cast<std::ptrdiff_t>(col + 1);
        const auto last = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n - col >= kMinParallelDim)
        for (std::ptrdiff_t r = first; r < last; ++r) {
            const auto row = static_cast<std::size_t>(r);
            const Complex factor = a[row * n + col] / diag;
            if (factor == Complex{}) {
                continue;
            }
            for (std::size_t k = col; k < n; ++k) {
                a[row * n + k] -= factor * a[col * n + k];
            }
            b[row] -= factor * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            acc -= a[i * n + k] * b[k];
        }
        b[i] = acc / a[i * n + i];
    }
    return min_pivot;
}

}  // namespace nroots::kernels::parallel
