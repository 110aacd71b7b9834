#include <algorithm>
#include <cmath>
#include <numbers>

#include "nroots/lab.hpp"

namespace nroots::lab {

namespace {

using Vector = std::vector<Complex>;

struct BoundaryPoint {
    double margin;  // λ_min(Re(e^{iθ} M))
    Vector vector;  // its eigenvector
};

Vector column(const ComplexMatrix& m, std::size_t j) {
    Vector v(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        v[i] = m(i, j);
    }
    return v;
}

Complex quadratic_form(const ComplexMatrix& m, std::span<const Complex> x, std::span<const Complex> y) {
    // x* M y
    Complex sum{};
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex row{};
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row += m(i, j) * y[j];
        }
        sum += std::conj(x[i]) * row;
    }
    return sum;
}

void normalize(Vector& v) {
    double norm = 0.0;
    for (const Complex& z : v) {
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (Complex& z : v) {
            z /= norm;
        }
    }
}

BoundaryPoint support(const ComplexMatrix& m, double theta, const Tolerances& tol) {
    const ComplexMatrix rotated = hermitian_part(m * std::polar(1.0, theta));
    const auto eig = hermitian_eigen(rotated, tol);
    return {eig.eigenvalues.front(), column(eig.vectors, 0)};
}

/**
 * Unit z in span{u, v} with ⟨Mz, z⟩ = target, where target lies on the
 * segment between ⟨Mu, u⟩ and ⟨Mv, v⟩ (u, v unit).
 *
 * With ψ the direction of the segment, split X = e^{-iψ}(M - target) into
 * Hermitian parts H + iK. Then u*Ku = v*Kv = 0, u*Hu <= 0 <= v*Hv, and for
 * z = u + τ e^{iφ} v the phase φ removes the cross term of z*Kz while z*Hz
 * becomes a real quadratic in τ with a nonnegative root.
 */
Vector steer(const ComplexMatrix& m, const Vector& u, const Vector& v, Complex target) {
    const Complex wu = rayleigh(m, u);
    const Complex wv = rayleigh(m, v);
    const Complex along = wv - wu;
    if (std::abs(along) <= 1e-300 || std::abs(wu - target) <= 1e-300) {
        return u;
    }
    if (std::abs(wv - target) <= 1e-300) {
        return v;
    }
    const Complex rot = std::polar(1.0, -std::arg(along));
    ComplexMatrix x = (m - ComplexMatrix::scalar(m.dim(), target)) * rot;
    const ComplexMatrix xa = x.adjoint();
    const ComplexMatrix h = (x + xa) * 0.5;
    const ComplexMatrix k = (x - xa) * Complex(0.0, -0.5);

    const Complex beta = quadratic_form(k, u, v);
    const double phi = std::abs(beta) > 0.0 ? std::numbers::pi / 2.0 - std::arg(beta) : 0.0;
    const Complex phase = std::polar(1.0, phi);

    const double hu = quadratic_form(h, u, u).real();
    const double hv = quadratic_form(h, v, v).real();
    const double cross = 2.0 * (phase * quadratic_form(h, u, v)).real();
    if (hv <= 0.0) {
        return v;
    }
    const double disc = std::max(cross * cross - 4.0 * hv * hu, 0.0);
    const double tau = (-cross + std::sqrt(disc)) / (2.0 * hv);

    Vector z(u.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = u[i] + tau * phase * v[i];
    }
    normalize(z);
    return z;
}

/// Fan-triangulates the boundary polygon and steers into the triangle that
/// contains 0: first onto the far edge, then along the segment to p0.
std::optional<Vector> witness_from_boundary(const ComplexMatrix& m, const std::vector<BoundaryPoint>& boundary) {
    std::vector<Complex> points(boundary.size());
    for (std::size_t j = 0; j < boundary.size(); ++j) {
        points[j] = rayleigh(m, boundary[j].vector);
    }
    const double slack = 1e-12;
    for (std::size_t j = 1; j + 1 < points.size(); ++j) {
        const Complex p0 = points[0];
        const Complex e1 = points[j] - p0;
        const Complex e2 = points[j + 1] - p0;
        const double det = e1.real() * e2.imag() - e1.imag() * e2.real();
        if (std::abs(det) <= 1e-14 * (std::norm(e1) + std::norm(e2))) {
            continue;
        }
        // Solve b e1 + c e2 = -p0.
        const Complex r = -p0;
        const double b = (r.real() * e2.imag() - r.imag() * e2.real()) / det;
        const double c = (e1.real() * r.imag() - e1.imag() * r.real()) / det;
        const double a = 1.0 - b - c;
        if (a < -slack || b < -slack || c < -slack) {
            continue;
        }
        if (b + c <= slack) {
            return boundary[0].vector;
        }
        const Complex q = (b * points[j] + c * points[j + 1]) / (b + c);
        const Vector on_edge = steer(m, boundary[j].vector, boundary[j + 1].vector, q);
        return steer(m, boundary[0].vector, on_edge, 0.0);
    }
    // Degenerate polygon (W is a segment): look for a chord through 0.
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t k = j + 1; k < points.size(); ++k) {
            const Complex d = points[k] - points[j];
            const double len2 = std::norm(d);
            if (len2 == 0.0) {
                continue;
            }
            const double t = -(std::conj(d) * points[j]).real() / len2;
            if (t < 0.0 || t > 1.0) {
                continue;
            }
            const Complex foot = points[j] + t * d;
            if (std::abs(foot) <= 1e-12 * (1.0 + std::sqrt(len2))) {
                return steer(m, boundary[j].vector, boundary[k].vector, foot);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Complex rayleigh(const ComplexMatrix& m, std::span<const Complex> x) {
    double norm = 0.0;
    for (const Complex& z : x) {
        norm += std::norm(z);
    }
    return quadratic_form(m, x, x) / norm;
}

RangeCertificate numerical_range_contains_zero(const ComplexMatrix& m, const Tolerances& tol, RangeOptions options) {
    RangeCertificate cert;
    // Margins within 10 band of zero are indeterminate.
    const double band = tol.structural * (1.0 + m.frobenius_norm());
    if (m.empty()) {
        cert.indeterminate = true;
        return cert;
    }

    if (is_hermitian(m, tol)) {
        // W(M) = [λ_min, λ_max].
        const auto eig = hermitian_eigen(m, tol);
        const double lo = eig.eigenvalues.front();
        const double hi = eig.eigenvalues.back();
        cert.margin = std::max(lo, -hi);
        cert.indeterminate = std::abs(cert.margin) <= 10.0 * band;
        if (cert.margin > band) {
            cert.angle = lo > 0.0 ? 0.0 : std::numbers::pi;
            return cert;
        }
        cert.contains_zero = true;
        Vector x = steer(m, column(eig.vectors, 0), column(eig.vectors, m.dim() - 1), 0.0);
        cert.witness_value = std::abs(rayleigh(m, x));
        cert.witness = std::move(x);
        return cert;
    }

    const int grid = std::max(options.grid, 8);
    std::vector<BoundaryPoint> boundary;
    boundary.reserve(static_cast<std::size_t>(grid));
    std::size_t best = 0;
    for (int j = 0; j < grid; ++j) {
        boundary.push_back(support(m, 2.0 * std::numbers::pi * j / grid, tol));
        if (boundary.back().margin > boundary[best].margin) {
            best = boundary.size() - 1;
        }
    }

    // Golden-section refinement of the best grid angle.
    const double step = 2.0 * std::numbers::pi / grid;
    double lo = 2.0 * std::numbers::pi * static_cast<double>(best) / grid - step;
    double hi = lo + 2.0 * step;
    double best_angle = lo + step;
    double best_margin = boundary[best].margin;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < options.refinements; ++it) {
        const double x1 = hi - ratio * (hi - lo);
        const double x2 = lo + ratio * (hi - lo);
        const double f1 = support(m, x1, tol).margin;
        const double f2 = support(m, x2, tol).margin;
        if (f1 > best_margin) {
            best_margin = f1;
            best_angle = x1;
        }
        if (f2 > best_margin) {
            best_margin = f2;
            best_angle = x2;
        }
        if (f1 >= f2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    cert.margin = best_margin;
    cert.indeterminate = std::abs(best_margin) <= 10.0 * band;

    if (best_margin > band) {
        cert.angle = std::remainder(best_angle, 2.0 * std::numbers::pi);
        return cert;
    }
    cert.contains_zero = true;
    if (auto x = witness_from_boundary(m, boundary)) {
        cert.witness_value = std::abs(rayleigh(m, *x));
        cert.witness = std::move(x);
        if (cert.witness_value > band) {
            cert.indeterminate = true;
        }
    } else {
        cert.indeterminate = true;
    }
    return cert;
}

}  // namespace nroots::lab
