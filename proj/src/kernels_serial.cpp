#include "kernels_detail.hpp"

#include <algorithm>
#include <cmath>

namespace nroots::kernels {

Rotation make_rotation(std::span<const Complex> h, std::size_t dim, std::size_t p, std::size_t q,
                       double skip_below) {
    Rotation r;
    r.p = p;
    r.q = q;
    const Complex hpq = h[p * dim + q];
    const double apq = std::abs(hpq);
    if (apq <= skip_below) {
        return r;
    }
    r.w = hpq / apq;
    const double app = h[p * dim + p].real();
    const double aqq = h[q * dim + q].real();
    const double theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t^2 + 2 theta t - 1 = 0 keeps the rotation angle <= pi/4.
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    r.c = 1.0 / std::sqrt(t * t + 1.0);
    r.s = t * r.c;
    return r;
}

double off_diagonal_norm(std::span<const Complex> h, std::size_t dim) {
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (i != j) {
                sum += std::norm(h[i * dim + j]);
            }
        }
    }
    return std::sqrt(sum);
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tournament_rounds(std::size_t dim) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
    if (dim < 2) {
        return rounds;
    }
    const std::size_t players = dim + (dim % 2);
    // Circle method: player 0 fixed, the rest rotate.
    std::vector<std::size_t> ring(players);
    for (std::size_t i = 0; i < players; ++i) {
        ring[i] = i;
    }
    for (std::size_t round = 0; round + 1 < players; ++round) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < players / 2; ++i) {
            std::size_t a = ring[i];
            std::size_t b = ring[players - 1 - i];
            if (a >= dim || b >= dim) {
                continue;  // bye
            }
            if (a > b) {
                std::swap(a, b);
            }
            pairs.emplace_back(a, b);
        }
        rounds.push_back(std::move(pairs));
        std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
    }
    return rounds;
}

namespace detail {

void rotate_columns(std::span<Complex> m, std::size_t dim, const Rotation& r) {
    const Complex cw = std::conj(r.w);
    const Complex a = -r.s * cw;
    const Complex b = r.c * cw;
    for (std::size_t k = 0; k < dim; ++k) {
        rotate_pair(m[k * dim + r.p], m[k * dim + r.q], r.c, r.s, a, b);
    }
}

void rotate_rows(std::span<Complex> m, std::size_t dim, const Rotation& r) {
    Complex* row_p = &m[r.p * dim];
    Complex* row_q = &m[r.q * dim];
    const Complex a = -r.s * r.w;
    const Complex b = r.c * r.w;
    for (std::size_t k = 0; k < dim; ++k) {
        rotate_pair(row_p[k], row_q[k], r.c, r.s, a, b);
    }
}

void clean_pair(std::span<Complex> h, std::size_t dim, const Rotation& r) {
    h[r.p * dim + r.q] = 0.0;
    h[r.q * dim + r.p] = 0.0;
    h[r.p * dim + r.p] = h[r.p * dim + r.p].real();
    h[r.q * dim + r.q] = h[r.q * dim + r.q].real();
}

}  // namespace detail

namespace serial {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim) {
    std::fill(out.begin(), out.end(), Complex{});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex aik = a[i * dim + k];
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
}

void jacobi_sweep(std::span<Complex> h, std::span<Complex> v, std::size_t dim, double skip_below) {
    for (std::size_t p = 0; p + 1 < dim; ++p) {
        for (std::size_t q = p + 1; q < dim; ++q) {
            const Rotation r = make_rotation(h, dim, p, q, skip_below);
            if (detail::is_identity(r)) {
                continue;
            }
            detail::rotate_columns(h, dim, r);
            detail::rotate_rows(h, dim, r);
            if (!v.empty()) {
                detail::rotate_columns(v, dim, r);
            }
            detail::clean_pair(h, dim, r);
        }
    }
}

double solve_in_place(std::span<Complex> a, std::span<Complex> b, std::size_t n) {
    double min_pivot = n == 0 ? 0.0 : std::abs(a[0]);
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
        for (std::size_t row = col + 1; row < n; ++row) {
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

}  // namespace serial

}  // namespace nroots::kernels
