#include "nroots/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "nroots/errors.hpp"
#include "nroots/kernels.hpp"

namespace nroots {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Two Re N eigenvalues share a cluster when their gap is at most this
// fraction of (1 + spread).
constexpr double kClusterFactor = 1e-8;

void require_finite(const ComplexMatrix& m, const char* context) {
    if (!m.all_finite()) {
        throw PreconditionError(std::string(context) + ": matrix has non-finite entries");
    }
}

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol, const char* context) {
    require_finite(m, context);
    if (!is_hermitian(m, tol)) {
        throw PreconditionError(std::string(context) + ": matrix is not Hermitian (defect " +
                                sci(hermitian_defect(m)) + ")");
    }
}

void require_normal(const ComplexMatrix& m, const Tolerances& tol, const char* context) {
    require_finite(m, context);
    if (!is_normal(m, tol)) {
        throw PreconditionError(std::string(context) + ": matrix is not normal (defect " +
                                sci(normality_defect(m)) + ")");
    }
}

}  // namespace

void Tolerances::validate() const {
    for (const double v : {structural, residual, sweep_threshold}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw PreconditionError("tolerances must be strictly positive and finite");
        }
    }
}

double principal_arg(Complex z) {
    const double a = std::arg(z);
    return a == -std::numbers::pi ? std::numbers::pi : a;
}

Complex principal_sqrt(Complex z) { return std::polar(std::sqrt(std::abs(z)), principal_arg(z) / 2.0); }

double hermitian_defect(const ComplexMatrix& m) { return distance(m, m.adjoint()); }

double normality_defect(const ComplexMatrix& m) {
    const ComplexMatrix ma = m.adjoint();
    return distance(ma * m, m * ma);
}

double unitarity_defect(const ComplexMatrix& m) { return distance(m.adjoint() * m, ComplexMatrix::identity(m.dim())); }

bool is_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
    return hermitian_defect(m) <= tol.structural * (1.0 + m.frobenius_norm());
}

bool is_normal(const ComplexMatrix& m, const Tolerances& tol) {
    const double norm = m.frobenius_norm();
    return normality_defect(m) <= tol.structural * (1.0 + norm * norm);
}

bool is_unitary(const ComplexMatrix& m, const Tolerances& tol) {
    return unitarity_defect(m) <= tol.structural * static_cast<double>(std::max<std::size_t>(1, m.dim()));
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return (m + m.adjoint()) * 0.5; }

CartesianPair cartesian_parts(const ComplexMatrix& t) {
    require_finite(t, "cartesian_parts");
    const ComplexMatrix ta = t.adjoint();
    return {(t + ta) * 0.5, (t - ta) * Complex(0.0, -0.5)};
}

ComplexMatrix recompose(const CartesianPair& parts, const Tolerances& tol) {
    require_same_dim(parts.re, parts.im, "recompose");
    require_hermitian(parts.re, tol, "recompose (real part)");
    require_hermitian(parts.im, tol, "recompose (imaginary part)");
    return parts.re + parts.im * Complex(0.0, 1.0);
}

namespace {

// Runs Jacobi sweeps to convergence and returns the diagonal in solver order.
// `vectors`, when given, receives the accumulated rotations.
std::vector<double> diagonalize(const ComplexMatrix& h, const Tolerances& tol, Kernel kernel, ComplexMatrix* vectors) {
    require_hermitian(h, tol, "hermitian_eigen");
    const std::size_t n = h.dim();

    ComplexMatrix work = hermitian_part(h);
    std::span<Complex> v;
    if (vectors != nullptr) {
        *vectors = ComplexMatrix::identity(n);
        v = vectors->data();
    }
    const double norm = work.frobenius_norm();
    const double stop = tol.sweep_threshold * norm;
    // Entries this small cannot move the off-diagonal norm above `stop`.
    const double skip = stop / (4.0 * static_cast<double>(std::max<std::size_t>(n, 1)));

    int sweep = 0;
    while (kernels::off_diagonal_norm(work.data(), n) > stop) {
        if (sweep++ == kMaxSweeps) {
            throw ConvergenceError("hermitian_eigen: no convergence after " + std::to_string(kMaxSweeps) + " sweeps");
        }
        if (kernel == Kernel::serial) {
            kernels::serial::jacobi_sweep(work.data(), v, n, skip);
        } else {
            kernels::parallel::jacobi_sweep(work.data(), v, n, skip);
        }
    }

    std::vector<double> diagonal(n);
    for (std::size_t i = 0; i < n; ++i) {
        diagonal[i] = work(i, i).real();
    }
    return diagonal;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h, const Tolerances& tol, Kernel kernel) {
    ComplexMatrix vectors;
    const std::vector<double> diagonal = diagonalize(h, tol, kernel, &vectors);
    const std::size_t n = diagonal.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diagonal[a] < diagonal[b]; });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = diagonal[order[j]];
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, j) = vectors(i, order[j]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const Tolerances& tol, Kernel kernel) {
    std::vector<double> values = diagonalize(h, tol, kernel, nullptr);
    std::sort(values.begin(), values.end());
    return values;
}

double min_eigenvalue(const ComplexMatrix& h, const Tolerances& tol) {
    const auto values = hermitian_eigenvalues(h, tol);
    return values.empty() ? 0.0 : values.front();
}

double max_eigenvalue(const ComplexMatrix& h, const Tolerances& tol) {
    const auto values = hermitian_eigenvalues(h, tol);
    return values.empty() ? 0.0 : values.back();
}

ComplexMatrix psd_root(const ComplexMatrix& p, unsigned n, const Tolerances& tol) { return psd_root(p, n, tol, 0.0); }

ComplexMatrix psd_root(const ComplexMatrix& p, unsigned n, const Tolerances& tol, double zero_below) {
    if (n == 0) {
        throw PreconditionError("psd_root: order must be positive");
    }
    const auto eig = hermitian_eigen(p, tol);
    if (eig.eigenvalues.empty()) {
        return p;
    }
    const double scale = 1.0 + p.frobenius_norm();
    if (eig.eigenvalues.front() < -tol.structural * scale) {
        throw PreconditionError("psd_root: matrix is indefinite (smallest eigenvalue " +
                                sci(eig.eigenvalues.front()) + ")");
    }
    const double largest = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    const double noise = std::max(zero_below, 8.0 * static_cast<double>(p.dim()) * kEps * largest);
    std::vector<double> roots(eig.eigenvalues.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double lambda = eig.eigenvalues[i];
        roots[i] = lambda <= noise ? 0.0 : std::pow(lambda, 1.0 / static_cast<double>(n));
    }
    return hermitian_part(spectral_synthesis(eig.vectors, roots));
}

ComplexMatrix abs_op(const ComplexMatrix& t, const Tolerances& tol) {
    require_finite(t, "abs_op");
    return psd_root(hermitian_part(t.adjoint() * t), 2, tol);
}

NormalEigen normal_eigen(const ComplexMatrix& n, const Tolerances& tol) {
    require_normal(n, tol, "normal_eigen");
    const std::size_t dim = n.dim();
    const auto [re, im] = cartesian_parts(n);

    auto eig = hermitian_eigen(re, tol);
    ComplexMatrix& v = eig.vectors;
    const auto& lambda = eig.eigenvalues;

    if (dim > 1) {
        const double spread = lambda.back() - lambda.front();
        const double gap_limit = kClusterFactor * (1.0 + spread);
        const ComplexMatrix im_rotated = v.adjoint() * im * v;

        std::size_t start = 0;
        while (start < dim) {
            std::size_t end = start + 1;
            while (end < dim && lambda[end] - lambda[end - 1] <= gap_limit) {
                ++end;
            }
            const std::size_t size = end - start;
            if (size > 1) {
                ComplexMatrix block(size);
                for (std::size_t i = 0; i < size; ++i) {
                    for (std::size_t j = 0; j < size; ++j) {
                        block(i, j) = im_rotated(start + i, start + j);
                    }
                }
                const auto inner = hermitian_eigen(hermitian_part(block), tol);
                ComplexMatrix rotated(dim);
                for (std::size_t r = 0; r < dim; ++r) {
                    for (std::size_t j = 0; j < size; ++j) {
                        Complex acc{};
                        for (std::size_t k = 0; k < size; ++k) {
                            acc += v(r, start + k) * inner.vectors(k, j);
                        }
                        rotated(r, j) = acc;
                    }
                }
                for (std::size_t r = 0; r < dim; ++r) {
                    for (std::size_t j = 0; j < size; ++j) {
                        v(r, start + j) = rotated(r, j);
                    }
                }
            }
            start = end;
        }
    }

    // Rayleigh quotients; imaginary parts at rounding level are dropped so
    // real eigenvalues sit exactly on the real axis.
    const ComplexMatrix nv = n * v;
    const double snap = 64.0 * kEps * (1.0 + n.frobenius_norm());
    NormalEigen out{std::vector<Complex>(dim), v};
    for (std::size_t j = 0; j < dim; ++j) {
        Complex mu{};
        for (std::size_t i = 0; i < dim; ++i) {
            mu += std::conj(v(i, j)) * nv(i, j);
        }
        if (std::abs(mu.imag()) <= snap) {
            mu = {mu.real(), 0.0};
        }
        out.eigenvalues[j] = mu;
    }

    const double residual = distance(spectral_synthesis(out.vectors, out.eigenvalues), n);
    if (residual > tol.residual * (1.0 + n.frobenius_norm())) {
        throw ConvergenceError("normal_eigen: reconstruction residual " + sci(residual) +
                               " exceeds tolerance (nearly clustered spectrum?)");
    }
    return out;
}

ComplexMatrix expi(const ComplexMatrix& a, const Tolerances& tol) {
    const auto eig = hermitian_eigen(a, tol);
    std::vector<Complex> phases(eig.eigenvalues.size());
    std::transform(eig.eigenvalues.begin(), eig.eigenvalues.end(), phases.begin(),
                   [](double lambda) { return std::polar(1.0, lambda); });
    return spectral_synthesis(eig.vectors, phases);
}

ComplexMatrix unitary_log(const ComplexMatrix& u, const Tolerances& tol) {
    require_finite(u, "unitary_log");
    if (!is_unitary(u, tol)) {
        throw PreconditionError("unitary_log: matrix is not unitary (defect " + sci(unitarity_defect(u)) +
                                ")");
    }
    const auto eig = normal_eigen(u, tol);
    std::vector<double> angles(eig.eigenvalues.size());
    std::transform(eig.eigenvalues.begin(), eig.eigenvalues.end(), angles.begin(),
                   [](Complex mu) { return principal_arg(mu); });
    ComplexMatrix a = hermitian_part(spectral_synthesis(eig.vectors, angles));

    const double residual = distance(expi(a, tol), u);
    if (residual > tol.residual * static_cast<double>(std::max<std::size_t>(1, u.dim()))) {
        throw ConvergenceError("unitary_log: e^{iA} misses U by " + sci(residual));
    }
    return a;
}

PolarForm polar_normal(const ComplexMatrix& n, const Tolerances& tol) {
    const auto eig = normal_eigen(n, tol);
    const double scale = 1.0 + n.frobenius_norm();
    const double zero = tol.structural * scale;
    std::vector<Complex> phases(eig.eigenvalues.size());
    std::transform(eig.eigenvalues.begin(), eig.eigenvalues.end(), phases.begin(), [zero](Complex mu) {
        const double r = std::abs(mu);
        return r <= zero ? Complex(1.0, 0.0) : mu / r;
    });
    PolarForm out{spectral_synthesis(eig.vectors, phases), abs_op(n, tol)};

    const double residual = distance(out.unitary * out.positive, n);
    if (residual > tol.residual * scale) {
        throw ConvergenceError("polar_normal: UP misses N by " + sci(residual));
    }
    return out;
}

double operator_norm(const ComplexMatrix& m, const Tolerances& tol) {
    require_finite(m, "operator_norm");
    if (m.empty()) {
        return 0.0;
    }
    const double top = max_eigenvalue(hermitian_part(m.adjoint() * m), tol);
    return std::sqrt(std::max(top, 0.0));
}

MatrixFlags classify(const ComplexMatrix& m, const Tolerances& tol) {
    require_finite(m, "classify");
    MatrixFlags flags;
    const double norm = m.frobenius_norm();
    flags.zero = norm <= tol.structural;
    flags.hermitian = is_hermitian(m, tol);
    flags.normal = is_normal(m, tol);
    flags.unitary = is_unitary(m, tol);
    if (flags.hermitian) {
        const auto eig = hermitian_eigen(m, tol);
        const double band = tol.structural * (1.0 + norm);
        if (!eig.eigenvalues.empty()) {
            flags.psd = eig.eigenvalues.front() >= -band;
            flags.nsd = eig.eigenvalues.back() <= band;
        }
    }
    return flags;
}

}  // namespace nroots
