#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nroots/errors.hpp"
#include "nroots/lab.hpp"

namespace nroots::lab {

namespace {

Check vanishes(double value, double tol) {
    if (value <= tol) {
        return Check::holds;
    }
    if (value > 10.0 * tol) {
        return Check::fails;
    }
    return Check::indeterminate;
}

}  // namespace

CommutatorResiduals commutator_identities(const ComplexMatrix& t) {
    const auto [a, b] = cartesian_parts(t);
    const auto [c, d] = cartesian_parts(t * t);
    CommutatorResiduals r;
    const ComplexMatrix bc = commutator(b, c);
    const ComplexMatrix ad = commutator(a, d);
    r.bc_ad = distance(bc, ad);
    r.bc_plus_ad = (bc + ad).frobenius_norm();
    r.ad_norm = ad.frobenius_norm();
    r.ac_bd = distance(commutator(a, c), commutator(b, d));
    const double norm = t.frobenius_norm();
    r.scale = 1.0 + norm * norm * norm;
    return r;
}

NormalityEquivalence normality_equivalence(const ComplexMatrix& t, const Tolerances& tol) {
    NormalityEquivalence r;
    const auto [a, b] = cartesian_parts(t);
    const ComplexMatrix d = cartesian_parts(t * t).im;
    const double norm = t.frobenius_norm();

    const auto semidefinite = [&](const ComplexMatrix& h) {
        const auto eig = hermitian_eigen(h, tol);
        if (eig.eigenvalues.empty()) {
            return true;
        }
        const double band = tol.structural * (1.0 + h.frobenius_norm());
        return eig.eigenvalues.front() >= -band || eig.eigenvalues.back() <= band;
    };

    const ComplexMatrix* part = nullptr;
    if (semidefinite(a)) {
        part = &a;
        r.part = "re";
    } else if (semidefinite(b)) {
        part = &b;
        r.part = "im";
    } else {
        return r;
    }
    r.applicable = true;

    r.normality_defect = normality_defect(t) / (1.0 + norm * norm);
    r.commutator = commutator(*part, d).frobenius_norm() / (1.0 + norm * norm * norm);
    r.normal = vanishes(r.normality_defect, tol.structural);
    r.commutes = vanishes(r.commutator, tol.structural);
    r.agree = !((r.normal == Check::holds && r.commutes == Check::fails) ||
                (r.normal == Check::fails && r.commutes == Check::holds));
    r.selfadjoint_square = d.frobenius_norm() / (1.0 + norm * norm) <= tol.structural;

    std::ostringstream why;
    if (!r.agree) {
        r.theorem_violation = true;
        why << "normality (" << to_string(r.normal) << ", defect " << r.normality_defect << ") disagrees with ["
            << r.part << " T, Im T²] = 0 (" << to_string(r.commutes) << ", " << r.commutator << "); ";
    }
    if (r.selfadjoint_square && r.normal == Check::fails) {
        r.theorem_violation = true;
        why << "T² is self-adjoint and a Cartesian part is semidefinite, yet T is not normal; ";
    }
    r.detail = why.str();
    return r;
}

ComplexMatrix volterra_matrix(std::size_t n) {
    ComplexMatrix v(n);
    const double h = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            v(i, j) = h;
        }
        v(i, i) = h / 2.0;
    }
    return v;
}

std::optional<double> triangular_spectral_radius(const ComplexMatrix& m) {
    bool lower = true;
    bool upper = true;
    double radius = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        radius = std::max(radius, std::abs(m(i, i)));
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > i && m(i, j) != Complex{}) {
                lower = false;
            }
            if (j < i && m(i, j) != Complex{}) {
                upper = false;
            }
        }
    }
    if (!lower && !upper) {
        return std::nullopt;
    }
    return radius;
}

VolterraReport volterra_report(std::size_t n, const Tolerances& tol) {
    if (n == 0) {
        throw PreconditionError("volterra: n must be positive");
    }
    const ComplexMatrix v = volterra_matrix(n);
    VolterraReport r;
    r.n = n;
    r.norm = operator_norm(v, tol);
    r.spectral_radius = *triangular_spectral_radius(v);
    const auto values = hermitian_eigenvalues(cartesian_parts(v).re, tol);
    r.re_min_eigenvalue = values.front();
    r.re_max_eigenvalue = values.back();
    return r;
}

double exp_periodicity_residual(const ComplexMatrix& a, std::int64_t k, const Tolerances& tol) {
    const double shift = 2.0 * std::numbers::pi * static_cast<double>(k);
    return distance(expi(a + ComplexMatrix::scalar(a.dim(), shift), tol), expi(a, tol));
}

}  // namespace nroots::lab
