#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nroots/complex_matrix.hpp"
#include "nroots/linalg.hpp"

// Executable checks for the structural results on roots of self-adjoint
// matrices, nilpotents of order two, and squares of general matrices.
//
// Checks never throw on a failed conclusion. A hypothesis that holds while
// its conclusion fails is reported through `theorem_violation`; callers treat
// that as a falsification, not a crash.

namespace nroots::lab {

/// Outcome of a floating-point test that has an indeterminate band around
/// its threshold.
enum class Check { holds, fails, indeterminate };

const char* to_string(Check c);

// ---------------------------------------------------------------------------
// Sylvester equations

struct SylvesterProblem {
    ComplexMatrix a;
    ComplexMatrix b;
    ComplexMatrix s;
};

/// Largest dimension accepted by sylvester_solve (the vectorized system is dim^2 x dim^2).
inline constexpr std::size_t kMaxSylvesterDim = 32;

struct SpectralGap {
    bool disjoint = false;
    bool indeterminate = false;
    double gap = 0.0;        // min |λ_i(a) - λ_j(b)|
    double threshold = 0.0;  // gaps at or below this count as a shared eigenvalue
};

/// Disjointness of the spectra of two Hermitian matrices. Gaps in
/// (threshold, 10 threshold] are indeterminate.
SpectralGap spectra_disjoint(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol = {});

/// Unique X with AX - XB = S, by Gaussian elimination on the vectorized
/// system (I ⊗ A - Bᵀ ⊗ I) vec X = vec S. Throws SingularSystemError when the
/// spectra intersect (checked up front for Hermitian A, B, otherwise detected
/// through the pivots).
ComplexMatrix sylvester_solve(const SylvesterProblem& problem, const Tolerances& tol = {},
                              Kernel kernel = Kernel::parallel);

// ---------------------------------------------------------------------------
// Numerical range

struct RangeCertificate {
    bool contains_zero = false;
    bool indeterminate = false;
    /// max over θ of λ_min(Re(e^{iθ} M)); positive iff 0 ∉ W(M).
    double margin = 0.0;
    /// Separating angle when 0 ∉ W(M).
    std::optional<double> angle;
    /// Unit vector x with ⟨Mx, x⟩ ≈ 0 when 0 ∈ W(M).
    std::optional<std::vector<Complex>> witness;
    double witness_value = 0.0;  // |⟨Mx, x⟩| for the witness
};

struct RangeOptions {
    int grid = 720;
    int refinements = 30;
};

RangeCertificate numerical_range_contains_zero(const ComplexMatrix& m, const Tolerances& tol = {},
                                               RangeOptions options = {});

/// ⟨Mx, x⟩ / ⟨x, x⟩
Complex rayleigh(const ComplexMatrix& m, std::span<const Complex> x);

// ---------------------------------------------------------------------------
// Roots of self-adjoint matrices

enum class Verdict { selfadjoint_invertible, skew_invertible, inconclusive };
enum class Evidence { spectra_disjoint_re, spectra_disjoint_im, numerical_range_re, numerical_range_im, none };

const char* to_string(Verdict v);
const char* to_string(Evidence e);

struct ClassificationVerdict {
    Verdict verdict = Verdict::inconclusive;
    Evidence evidence = Evidence::none;
    /// ‖Im T‖_F for selfadjoint_invertible, ‖Re T‖_F for skew_invertible.
    double residual = 0.0;
    /// Largest residual compatible with the conclusion: ‖AB + BA‖_F / gap plus rounding.
    double residual_bound = 0.0;
    double gap = 0.0;
    /// λ_min(|T|)
    double min_singular_value = 0.0;
    /// ‖T² - C‖_F
    double square_residual = 0.0;
    /// ‖A² - B² - C‖_F and ‖AB + BA‖_F
    double real_system_residual = 0.0;
    double anticommutator = 0.0;
    bool theorem_violation = false;
    std::string detail;
};

/// Given T with T² = C Hermitian, decides whether T is forced to be
/// self-adjoint or skew-adjoint (and invertible) by the spectra or numerical
/// ranges of its Cartesian parts. Throws PreconditionError when C is not
/// Hermitian or T² misses C.
ClassificationVerdict classify_root_of_selfadjoint(const ComplexMatrix& t, const ComplexMatrix& c,
                                                   const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Nilpotents of order two

struct SignHypothesis {
    /// λ_min for "⪰ 0", -λ_max for "⪯ 0"; the hypothesis holds when margin >= 0.
    double margin = 0.0;
    Check status = Check::fails;
};

struct ZeroSquareReport {
    double norm = 0.0;         // ‖T‖_F
    double square_norm = 0.0;  // ‖T²‖_F
    /// ‖A² - B²‖_F and ‖AB + BA‖_F for A = Re T, B = Im T
    double square_difference = 0.0;
    double anticommutator = 0.0;
    SignHypothesis re_psd, re_nsd, im_psd, im_nsd;
    double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
    /// ‖T‖_F above this is "nonzero"; accounts for the square-root sensitivity
    /// of T to perturbations of T².
    double zero_bound = 0.0;
    bool any_hypothesis = false;
    bool is_zero = false;
    /// For nonzero T: Re T and Im T each have eigenvalues beyond the band on both sides.
    bool both_parts_indefinite = false;
    bool theorem_violation = false;
    std::string detail;
};

/// Throws PreconditionError unless ‖T²‖_F <= residual (1 + ‖T‖_F²).
ZeroSquareReport check_zero_square(const ComplexMatrix& t, const Tolerances& tol = {});

/// Q [[0, M], [0, 0]] Q* with a ⌈dim/2⌉ x ⌊dim/2⌋ Gaussian block M and random
/// unitary Q. In canonical mode Q = I and M has ones on its diagonal, so
/// dim 2 gives [[0, 1], [0, 0]].
ComplexMatrix sample_nilpotent(std::size_t dim, std::uint64_t seed, bool canonical = false);

struct NilpotentCampaign {
    std::size_t trials = 0;
    std::size_t nonzero = 0;
    std::size_t indefinite = 0;  // nonzero samples with both parts indefinite
    std::size_t violations = 0;
    std::size_t invalid_samples = 0;  // sampler output failed ‖T²‖ ≈ 0
    std::size_t hypothesis_held = 0;
    /// Smallest and largest of min(-λ_min, λ_max) over Re T and Im T, relative to ‖T‖_F.
    double min_relative_margin = 0.0;
    double max_relative_margin = 0.0;
    double max_square_ratio = 0.0;  // ‖T²‖_F / ‖T‖_F²
    std::vector<std::string> violation_details;
};

/// Runs check_zero_square on `trials` samples with dimensions cycling through
/// [dim_lo, dim_hi]. Trial i uses seed derive_seed(seed, i); trials run in
/// parallel and merge in index order.
NilpotentCampaign nilpotent_search(std::size_t trials, std::size_t dim_lo, std::size_t dim_hi, std::uint64_t seed,
                                   const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Identities for T² = S

/// T = A + iB, T² = C + iD.
///
/// The first identity is usually written [B, C] = [A, D]. Expanding with
/// C = A² - B² and D = AB + BA gives [B, C] = BA² - A²B = -[A, D], so
/// `bc_ad` is nonzero in general and `bc_plus_ad` is the residual that
/// vanishes. Both are reported.
struct CommutatorResiduals {
    double bc_ad = 0.0;       // ‖[B, C] - [A, D]‖_F
    double bc_plus_ad = 0.0;  // ‖[B, C] + [A, D]‖_F
    double ac_bd = 0.0;       // ‖[A, C] - [B, D]‖_F
    double ad_norm = 0.0;     // ‖[A, D]‖_F
    double scale = 1.0;       // 1 + ‖T‖_F³
};

CommutatorResiduals commutator_identities(const ComplexMatrix& t);

struct NormalityEquivalence {
    bool applicable = false;
    /// "re" when Re T is semidefinite, "im" when only Im T is.
    std::string part;
    double normality_defect = 0.0;  // scaled by 1 + ‖T‖_F²
    double commutator = 0.0;        // ‖[part, D]‖_F scaled by 1 + ‖T‖_F³
    Check normal = Check::indeterminate;
    Check commutes = Check::indeterminate;
    bool agree = true;
    /// Im T² vanishes, so T must be normal.
    bool selfadjoint_square = false;
    bool theorem_violation = false;
    std::string detail;
};

/// With A = Re T ⪰ 0 or ⪯ 0: T normal ⟺ AD = DA, D = Im T². Falls back to
/// B = Im T (T normal ⟺ BD = DB) when only B is semidefinite.
NormalityEquivalence normality_equivalence(const ComplexMatrix& t, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Volterra operator and periodicity of e^{iA}

/// Discretized (Vf)(x) = ∫_0^x f: 1/n below the diagonal, 1/(2n) on it.
ComplexMatrix volterra_matrix(std::size_t n);

/// max |m_ii| when M is exactly triangular, nullopt otherwise.
std::optional<double> triangular_spectral_radius(const ComplexMatrix& m);

struct VolterraReport {
    std::size_t n = 0;
    double norm = 0.0;
    double spectral_radius = 0.0;
    double re_min_eigenvalue = 0.0;
    double re_max_eigenvalue = 0.0;
};

VolterraReport volterra_report(std::size_t n, const Tolerances& tol = {});

/// ‖e^{i(A + 2kπI)} - e^{iA}‖_F
double exp_periodicity_residual(const ComplexMatrix& a, std::int64_t k, const Tolerances& tol = {});

}  // namespace nroots::lab
