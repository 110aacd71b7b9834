#pragma once

#include <cstddef>
#include <vector>

#include "nroots/complex_matrix.hpp"

// Spectral primitives: Hermitian eigensolver, positive roots, Cartesian and
// polar decompositions, exp(iA) and its inverse on unitaries.

namespace nroots {

/// Thresholds shared by every structural test. All must be strictly positive.
struct Tolerances {
    /// Scaled Frobenius tests: Hermitian, normal, psd, unitary, commuting.
    double structural = 1e-10;
    /// Power residuals and reconstruction errors.
    double residual = 1e-9;
    /// Jacobi stops once ‖offdiag(H)‖_F <= sweep_threshold * ‖H‖_F.
    double sweep_threshold = 1e-13;

    /// Throws PreconditionError if any field is not strictly positive and finite.
    void validate() const;
};

/// Jacobi sweep implementation. `parallel` is the default; `serial` is the
/// cyclic-by-row reference.
enum class Kernel { serial, parallel };

struct HermitianEigen {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix vectors;            // column j belongs to eigenvalues[j]
};

struct NormalEigen {
    std::vector<Complex> eigenvalues;
    ComplexMatrix vectors;
};

/// T = re + i im with both parts Hermitian.
struct CartesianPair {
    ComplexMatrix re;
    ComplexMatrix im;
};

/// N = UP = PU with U unitary and P = |N|.
struct PolarForm {
    ComplexMatrix unitary;
    ComplexMatrix positive;
};

struct MatrixFlags {
    bool hermitian = false;
    bool normal = false;
    bool psd = false;
    bool nsd = false;
    bool unitary = false;
    bool zero = false;

    friend bool operator==(const MatrixFlags&, const MatrixFlags&) = default;
};

// Scalar helpers.

/// Argument in (-pi, pi]; arg(-1) = pi even for a negative-zero imaginary part.
double principal_arg(Complex z);
/// Square root with argument in (-pi/2, pi/2].
Complex principal_sqrt(Complex z);

// Raw defects (unscaled Frobenius norms).

double hermitian_defect(const ComplexMatrix& m);  // ‖M - M*‖_F
double normality_defect(const ComplexMatrix& m);  // ‖M*M - MM*‖_F
double unitarity_defect(const ComplexMatrix& m);  // ‖M*M - I‖_F

// Scaled structural predicates, as used throughout the library.

bool is_hermitian(const ComplexMatrix& m, const Tolerances& tol = {});
bool is_normal(const ComplexMatrix& m, const Tolerances& tol = {});
bool is_unitary(const ComplexMatrix& m, const Tolerances& tol = {});

/// (M + M*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

CartesianPair cartesian_parts(const ComplexMatrix& t);

/// re + i im. Throws PreconditionError if either part is not Hermitian.
ComplexMatrix recompose(const CartesianPair& parts, const Tolerances& tol = {});

/// Eigen-decomposition of a Hermitian matrix by complex Jacobi rotations.
/// Throws PreconditionError for non-Hermitian input and ConvergenceError when
/// the sweep limit is reached.
HermitianEigen hermitian_eigen(const ComplexMatrix& h, const Tolerances& tol = {}, Kernel kernel = Kernel::parallel);

/// Eigenvalues only (ascending); skips accumulating the eigenvectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const Tolerances& tol = {},
                                          Kernel kernel = Kernel::parallel);

double min_eigenvalue(const ComplexMatrix& h, const Tolerances& tol = {});
double max_eigenvalue(const ComplexMatrix& h, const Tolerances& tol = {});

/// Unique positive n-th root of a positive semidefinite matrix.
///
/// Eigenvalues in [-structural * (1 + ‖P‖_F), 0) are clamped to zero, as are
/// positive eigenvalues indistinguishable from zero at working precision.
/// More negative eigenvalues raise PreconditionError.
ComplexMatrix psd_root(const ComplexMatrix& p, unsigned n, const Tolerances& tol = {});

/// As above, with eigenvalues at or below `zero_below` also treated as zero.
/// Callers that built P from a larger operand pass that operand's rounding level.
ComplexMatrix psd_root(const ComplexMatrix& p, unsigned n, const Tolerances& tol, double zero_below);

/// |T| = (T*T)^{1/2}
ComplexMatrix abs_op(const ComplexMatrix& t, const Tolerances& tol = {});

/// Unitary diagonalization of a normal matrix: diagonalizes Re N, then Im N
/// inside each cluster of numerically equal Re N eigenvalues. Eigenvalues are
/// Rayleigh quotients of N on the final basis.
NormalEigen normal_eigen(const ComplexMatrix& n, const Tolerances& tol = {});

/// e^{iA} for Hermitian A.
ComplexMatrix expi(const ComplexMatrix& a, const Tolerances& tol = {});

/// Hermitian A with eigenvalues in (-pi, pi] and e^{iA} = U.
ComplexMatrix unitary_log(const ComplexMatrix& u, const Tolerances& tol = {});

/// Commuting polar factors of a normal matrix. On ker N the unitary factor
/// is the identity.
PolarForm polar_normal(const ComplexMatrix& n, const Tolerances& tol = {});

/// Largest singular value.
double operator_norm(const ComplexMatrix& m, const Tolerances& tol = {});

MatrixFlags classify(const ComplexMatrix& m, const Tolerances& tol = {});

}  // namespace nroots
