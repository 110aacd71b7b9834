#include "nroots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>

#include "nroots/errors.hpp"

namespace nroots {

namespace {

const Complex kI{0.0, 1.0};

double scaled_commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
    const double scale = 1.0 + x.frobenius_norm() * y.frobenius_norm();
    return commutator(x, y).frobenius_norm() / scale;
}

void require_certified(const RootCertificate& cert, const Tolerances& tol, const char* context) {
    if (!cert.certified(tol)) {
        throw ConvergenceError(std::string(context) + ": accuracy lost (power residual " +
                               sci(cert.power_residual) + ", normality defect " +
                               sci(cert.normality_defect) + ")");
    }
}

struct PolarLog {
    ComplexMatrix positive_root;  // P^{1/n}
    ComplexMatrix angle;          // A with U = e^{iA}
};

PolarLog polar_log(const ComplexMatrix& n, unsigned order, const Tolerances& tol) {
    if (order == 0) {
        throw PreconditionError("nth_root: order must be positive");
    }
    const PolarForm polar = polar_normal(n, tol);
    return {psd_root(polar.positive, order, tol), unitary_log(polar.unitary, tol)};
}

RootCertificate branch_root(const ComplexMatrix& n, const PolarLog& pl, unsigned order, std::int64_t branch,
                            const Tolerances& tol) {
    const double shift = 2.0 * std::numbers::pi * static_cast<double>(branch);
    const ComplexMatrix exponent =
        (pl.angle + ComplexMatrix::scalar(n.dim(), shift)) * (1.0 / static_cast<double>(order));
    const ComplexMatrix rotation = expi(exponent, tol);

    RootCertificate cert = verify_root(pl.positive_root * rotation, n, order);
    cert.branch = branch;
    cert.factor_commutator = scaled_commutator(pl.positive_root, rotation);
    require_certified(cert, tol, "nth_root");
    return cert;
}

}  // namespace

const char* to_string(SignCase s) { return s == SignCase::nonneg ? "nonneg" : "nonpos"; }

bool RootCertificate::certified(const Tolerances& tol) const {
    return power_residual <= tol.residual && normality_defect <= tol.structural;
}

RootCertificate verify_root(const ComplexMatrix& root, const ComplexMatrix& target, unsigned order) {
    require_same_dim(root, target, "verify_root");
    RootCertificate cert;
    cert.root = root;
    cert.order = order;
    cert.power_residual = distance(power(root, order), target) / (1.0 + target.frobenius_norm());
    const double norm = root.frobenius_norm();
    cert.normality_defect = normality_defect(root) / (1.0 + norm * norm);
    return cert;
}

SignCase imaginary_sign_case(const ComplexMatrix& n, const Tolerances& tol) {
    const ComplexMatrix d = cartesian_parts(n).im;
    const auto eig = hermitian_eigen(d, tol);
    if (eig.eigenvalues.empty()) {
        return SignCase::nonneg;
    }
    const double band = tol.structural * (1.0 + d.frobenius_norm());
    if (eig.eigenvalues.front() >= -band) {
        return SignCase::nonneg;
    }
    if (eig.eigenvalues.back() <= band) {
        return SignCase::nonpos;
    }
    throw PreconditionError("sqrt_signdef: imaginary part is indefinite (eigenvalues span [" +
                            sci(eig.eigenvalues.front()) + ", " + sci(eig.eigenvalues.back()) +
                            "])");
}

RootCertificate sqrt_signdef(const ComplexMatrix& n, const Tolerances& tol) {
    if (!n.all_finite() || !is_normal(n, tol)) {
        throw PreconditionError("sqrt_signdef: matrix is not normal (defect " + sci(normality_defect(n)) +
                                ")");
    }
    const SignCase sign = imaginary_sign_case(n, tol);
    const ComplexMatrix c = cartesian_parts(n).re;
    const ComplexMatrix modulus = abs_op(n, tol);

    // (|N| ± C)/2 inherit rounding at the scale of N, not their own; an exact
    // zero eigenvalue left as noise would come back as its square root.
    const double floor = 32.0 * static_cast<double>(n.dim()) * std::numeric_limits<double>::epsilon() *
                         (1.0 + n.frobenius_norm());
    ComplexMatrix a = psd_root((modulus + c) * 0.5, 2, tol, floor);
    ComplexMatrix b = psd_root((modulus - c) * 0.5, 2, tol, floor);

    // Near the real axis one of (|N| ± C)/2 has eigenvalues far below |N|, and
    // its square root magnifies their absolute error. Since AB = |D|/2 and
    // A² + B² = |N| (all commuting), A = |N|⁺(B|D|/2 + A³) and likewise for B;
    // there the inaccurate factor only enters weighted by its own small size.
    const ComplexMatrix half_d = cartesian_parts(n).im * (sign == SignCase::nonneg ? 0.5 : -0.5);
    const auto eig = hermitian_eigen(modulus, tol);
    std::vector<double> inverse(eig.eigenvalues.size());
    for (std::size_t i = 0; i < inverse.size(); ++i) {
        inverse[i] = eig.eigenvalues[i] > floor ? 1.0 / eig.eigenvalues[i] : 0.0;
    }
    const ComplexMatrix pinv = spectral_synthesis(eig.vectors, inverse);
    const ComplexMatrix a_refined = hermitian_part(pinv * (b * half_d + a * a * a));
    b = hermitian_part(pinv * (a * half_d + b * b * b));
    a = a_refined;

    const Complex direction = sign == SignCase::nonneg ? kI : -kI;
    RootCertificate cert = verify_root(a + b * direction, n, 2);
    cert.sign_case = sign;
    cert.factor_commutator = scaled_commutator(a, b);
    require_certified(cert, tol, "sqrt_signdef");
    return cert;
}

RootCertificate root_pow2n(const ComplexMatrix& n, unsigned levels, const Tolerances& tol) {
    if (levels == 0 || levels > 30) {
        throw PreconditionError("root_pow2n: levels must be in 1..30");
    }
    RootCertificate stage = sqrt_signdef(n, tol);
    const SignCase first = *stage.sign_case;
    for (unsigned level = 2; level <= levels; ++level) {
        try {
            stage = sqrt_signdef(stage.root, tol);
        } catch (const PreconditionError& e) {
            throw TheoremViolationError("root_pow2n: intermediate root at level " + std::to_string(level - 1) +
                                        " lost its semidefinite imaginary part: " + e.what());
        }
    }
    RootCertificate cert = verify_root(stage.root, n, 1U << levels);
    cert.sign_case = first;
    cert.factor_commutator = stage.factor_commutator;
    require_certified(cert, tol, "root_pow2n");
    return cert;
}

RootCertificate nth_root(const ComplexMatrix& n, unsigned order, std::int64_t branch, const Tolerances& tol) {
    return branch_root(n, polar_log(n, order, tol), order, branch, tol);
}

std::vector<RootCertificate> nth_root_branches(const ComplexMatrix& n, unsigned order, const Tolerances& tol) {
    const PolarLog pl = polar_log(n, order, tol);
    std::vector<RootCertificate> out(order);
    const auto count = static_cast<std::ptrdiff_t>(order);
    // Branches are independent; collect the first failure and rethrow after the loop.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            out[static_cast<std::size_t>(k)] = branch_root(n, pl, order, k, tol);
        } catch (...) {
#pragma omp critical(nroots_branch_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

RootCertificate spectral_sqrt(const ComplexMatrix& n, const Tolerances& tol) {
    const NormalEigen eig = normal_eigen(n, tol);
    std::vector<Complex> roots(eig.eigenvalues.size());
    std::transform(eig.eigenvalues.begin(), eig.eigenvalues.end(), roots.begin(), principal_sqrt);
    RootCertificate cert = verify_root(spectral_synthesis(eig.vectors, roots), n, 2);
    require_certified(cert, tol, "spectral_sqrt");
    return cert;
}

}  // namespace nroots
