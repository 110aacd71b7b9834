#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nroots/complex_matrix.hpp"
#include "nroots/linalg.hpp"

// Normal square roots, 2^n-th roots and n-th roots of normal matrices.

namespace nroots {

/// Definiteness of Im N that selects the square-root formula.
enum class SignCase { nonneg, nonpos };

const char* to_string(SignCase s);

/**
 * A computed root together with the metrics that certify it.
 *
 * power_residual   = ‖root^order - target‖_F / (1 + ‖target‖_F)
 * normality_defect = ‖root* root - root root*‖_F / (1 + ‖root‖_F^2)
 * factor_commutator is the scaled commutator of the two factors the root was
 * built from (A, B for square roots; P^{1/n}, e^{i(A+2kπ)/n} for n-th roots),
 * zero when not applicable.
 */
struct RootCertificate {
    ComplexMatrix root;
    unsigned order = 1;
    std::int64_t branch = 0;
    double power_residual = 0.0;
    double normality_defect = 0.0;
    double factor_commutator = 0.0;
    std::optional<SignCase> sign_case;

    /// True when the residual and the normality defect are within `tol`.
    bool certified(const Tolerances& tol = {}) const;
};

/// Recomputes the certificate metrics for an externally supplied root. Never
/// throws on out-of-tolerance values.
RootCertificate verify_root(const ComplexMatrix& root, const ComplexMatrix& target, unsigned order);

/// Definiteness of Im N, nonneg tested first. Throws PreconditionError when
/// Im N is indefinite.
SignCase imaginary_sign_case(const ComplexMatrix& n, const Tolerances& tol = {});

/**
 * Normal square root of a normal N = C + iD whose imaginary part is
 * semidefinite:
 *
 *     root = ((|N| + C)/2)^{1/2} ± i ((|N| - C)/2)^{1/2}
 *
 * with + when D ⪰ 0 and - when D ⪯ 0. Throws PreconditionError when N is not
 * normal or D is indefinite, ConvergenceError if the result misses the
 * residual tolerance.
 */
RootCertificate sqrt_signdef(const ComplexMatrix& n, const Tolerances& tol = {});

/// Root of order 2^levels by repeated sqrt_signdef. Every intermediate root
/// has semidefinite imaginary part; if one does not, TheoremViolationError.
RootCertificate root_pow2n(const ComplexMatrix& n, unsigned levels, const Tolerances& tol = {});

/// Normal n-th root |N|^{1/n} e^{i(A + 2kπI)/n} where N = e^{iA}|N| is the
/// polar form with A = unitary_log(U).
RootCertificate nth_root(const ComplexMatrix& n, unsigned order, std::int64_t branch = 0,
                         const Tolerances& tol = {});

/// nth_root for k = 0..order-1, sharing one polar decomposition.
std::vector<RootCertificate> nth_root_branches(const ComplexMatrix& n, unsigned order, const Tolerances& tol = {});

/// V diag(principal_sqrt(μ)) V* from the normal eigen-decomposition.
RootCertificate spectral_sqrt(const ComplexMatrix& n, const Tolerances& tol = {});

}  // namespace nroots
