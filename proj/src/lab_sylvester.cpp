#include <cmath>
#include <limits>
#include <string>

#include "nroots/errors.hpp"
#include "nroots/kernels.hpp"
#include "nroots/lab.hpp"

namespace nroots::lab {

const char* to_string(Check c) {
    switch (c) {
        case Check::holds:
            return "holds";
        case Check::fails:
            return "fails";
        case Check::indeterminate:
            return "indeterminate";
    }
    return "?";
}

SpectralGap spectra_disjoint(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol) {
    const auto ea = hermitian_eigen(a, tol);
    const auto eb = hermitian_eigen(b, tol);
    SpectralGap out;
    out.threshold = tol.structural * (1.0 + a.frobenius_norm() + b.frobenius_norm());
    if (ea.eigenvalues.empty() || eb.eigenvalues.empty()) {
        // Empty spectra never meet; report the threshold band as gap so it stays finite.
        out.disjoint = true;
        out.gap = 10.0 * out.threshold;
        return out;
    }
    double gap = std::numeric_limits<double>::infinity();
    for (const double x : ea.eigenvalues) {
        for (const double y : eb.eigenvalues) {
            gap = std::min(gap, std::abs(x - y));
        }
    }
    out.gap = gap;
    out.disjoint = gap > 10.0 * out.threshold;
    out.indeterminate = !out.disjoint && gap > out.threshold;
    return out;
}

ComplexMatrix sylvester_solve(const SylvesterProblem& problem, const Tolerances& tol, Kernel kernel) {
    const auto& [a, b, s] = problem;
    require_same_dim(a, b, "sylvester_solve");
    require_same_dim(a, s, "sylvester_solve");
    const std::size_t n = a.dim();
    if (n > kMaxSylvesterDim) {
        throw PreconditionError("sylvester_solve: dimension " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxSylvesterDim));
    }
    if (!a.all_finite() || !b.all_finite() || !s.all_finite()) {
        throw PreconditionError("sylvester_solve: non-finite input");
    }
    if (is_hermitian(a, tol) && is_hermitian(b, tol)) {
        const SpectralGap gap = spectra_disjoint(a, b, tol);
        if (!gap.disjoint && !gap.indeterminate) {
            throw SingularSystemError("sylvester_solve: spectra of A and B intersect (gap " + sci(gap.gap) +
                                      ")");
        }
    }

    // vec X stacks columns: X(i, j) sits at i + j n.
    const std::size_t m = n * n;
    std::vector<Complex> system(m * m);
    std::vector<Complex> rhs(m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t row = i + j * n;
            rhs[row] = s(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                system[row * m + (k + j * n)] += a(i, k);
                system[row * m + (i + k * n)] -= b(k, j);
            }
        }
    }

    const double pivot = kernel == Kernel::serial ? kernels::serial::solve_in_place(system, rhs, m)
                                                  : kernels::parallel::solve_in_place(system, rhs, m);
    const double singular = tol.structural * (1.0 + a.frobenius_norm() + b.frobenius_norm());
    if (m > 0 && !(pivot > singular)) {
        throw SingularSystemError("sylvester_solve: vectorized system is singular (pivot " + sci(pivot) +
                                  "); the spectra of A and B intersect");
    }

    ComplexMatrix x(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            x(i, j) = rhs[i + j * n];
        }
    }
    const double residual = distance(a * x - x * b, s);
    if (!(residual <= tol.residual * (1.0 + s.frobenius_norm()))) {
        throw SingularSystemError("sylvester_solve: residual " + sci(residual) +
                                  " too large; system is numerically singular");
    }
    return x;
}

}  // namespace nroots::lab
