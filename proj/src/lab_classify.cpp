#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nroots/errors.hpp"
#include "nroots/lab.hpp"

namespace nroots::lab {

namespace {

/// min |λ_i + λ_j|: the gap between σ(H) and σ(-H).
double reflection_gap(const ComplexMatrix& h, const Tolerances& tol) {
    const auto eig = hermitian_eigen(h, tol);
    double gap = std::numeric_limits<double>::infinity();
    for (const double x : eig.eigenvalues) {
        for (const double y : eig.eigenvalues) {
            gap = std::min(gap, std::abs(x + y));
        }
    }
    return eig.eigenvalues.empty() ? 0.0 : gap;
}

/// Applies the conclusion checks once a hypothesis has fired. `vanishing` is
/// the part that must be zero; the Sylvester bound ‖X‖_F <= ‖HX + XH‖_F / gap
/// holds in the eigenbasis of the Hermitian part H whose spectrum avoids its
/// own reflection.
void conclude(ClassificationVerdict& v, const ComplexMatrix& t, const ComplexMatrix& vanishing, double gap,
              const Tolerances& tol) {
    const double rounding = tol.structural * (1.0 + t.frobenius_norm());
    v.gap = gap;
    v.residual = vanishing.frobenius_norm();
    v.residual_bound = (gap > 0.0 ? v.anticommutator / gap : std::numeric_limits<double>::max()) + rounding;
    v.min_singular_value = std::max(min_eigenvalue(abs_op(t, tol), tol), 0.0);

    std::ostringstream why;
    if (v.residual > v.residual_bound) {
        v.theorem_violation = true;
        why << "hypothesis holds but the other Cartesian part has norm " << v.residual << " > " << v.residual_bound
            << "; ";
    }
    if (!(v.min_singular_value > rounding)) {
        v.theorem_violation = true;
        why << "hypothesis holds but T is singular (min singular value " << v.min_singular_value << ")";
    }
    v.detail = why.str();
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::selfadjoint_invertible:
            return "selfadjoint_invertible";
        case Verdict::skew_invertible:
            return "skew_invertible";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "?";
}

const char* to_string(Evidence e) {
    switch (e) {
        case Evidence::spectra_disjoint_re:
            return "spectra_disjoint_re";
        case Evidence::spectra_disjoint_im:
            return "spectra_disjoint_im";
        case Evidence::numerical_range_re:
            return "numerical_range_re";
        case Evidence::numerical_range_im:
            return "numerical_range_im";
        case Evidence::none:
            return "none";
    }
    return "?";
}

ClassificationVerdict classify_root_of_selfadjoint(const ComplexMatrix& t, const ComplexMatrix& c,
                                                   const Tolerances& tol) {
    require_same_dim(t, c, "classify_root_of_selfadjoint");
    if (!t.all_finite() || !c.all_finite()) {
        throw PreconditionError("classify_root_of_selfadjoint: non-finite input");
    }
    if (!is_hermitian(c, tol)) {
        throw PreconditionError("classify_root_of_selfadjoint: C is not Hermitian");
    }
    ClassificationVerdict v;
    const ComplexMatrix square = t * t;
    v.square_residual = distance(square, c);
    const double square_tol = tol.residual * (1.0 + c.frobenius_norm());
    if (v.square_residual > square_tol) {
        throw PreconditionError("classify_root_of_selfadjoint: ‖T² - C‖_F = " + sci(v.square_residual) +
                                " exceeds " + sci(square_tol));
    }

    const auto [a, b] = cartesian_parts(t);
    v.real_system_residual = distance(a * a - b * b, c);
    v.anticommutator = (a * b + b * a).frobenius_norm();
    // A² - B² - C and AB + BA are the Cartesian parts of T² - C.
    const double system_tol = square_tol + tol.structural * (1.0 + t.frobenius_norm() * t.frobenius_norm());
    if (v.real_system_residual > system_tol || v.anticommutator > system_tol) {
        v.theorem_violation = true;
        v.detail = "A² - B² = C, AB + BA = 0 does not follow from T² = C";
        return v;
    }

    if (const SpectralGap g = spectra_disjoint(a, -a, tol); g.disjoint) {
        v.verdict = Verdict::selfadjoint_invertible;
        v.evidence = Evidence::spectra_disjoint_re;
        conclude(v, t, b, g.gap, tol);
        return v;
    }
    if (const SpectralGap g = spectra_disjoint(b, -b, tol); g.disjoint) {
        v.verdict = Verdict::skew_invertible;
        v.evidence = Evidence::spectra_disjoint_im;
        conclude(v, t, a, g.gap, tol);
        return v;
    }
    if (const RangeCertificate w = numerical_range_contains_zero(a, tol); !w.contains_zero && !w.indeterminate) {
        v.verdict = Verdict::selfadjoint_invertible;
        v.evidence = Evidence::numerical_range_re;
        conclude(v, t, b, reflection_gap(a, tol), tol);
        return v;
    }
    if (const RangeCertificate w = numerical_range_contains_zero(b, tol); !w.contains_zero && !w.indeterminate) {
        // T = iB here: skew-adjoint, not self-adjoint.
        v.verdict = Verdict::skew_invertible;
        v.evidence = Evidence::numerical_range_im;
        conclude(v, t, a, reflection_gap(b, tol), tol);
        return v;
    }
    return v;
}

}  // namespace nroots::lab
