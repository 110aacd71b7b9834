#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "nroots/errors.hpp"
#include "nroots/lab.hpp"
#include "nroots/random.hpp"

namespace nroots::lab {

namespace {

SignHypothesis sign_hypothesis(double margin, double band) {
    SignHypothesis h;
    h.margin = margin;
    if (margin >= -band) {
        h.status = Check::holds;
    } else if (margin < -10.0 * band) {
        h.status = Check::fails;
    } else {
        h.status = Check::indeterminate;
    }
    return h;
}

}  // namespace

ZeroSquareReport check_zero_square(const ComplexMatrix& t, const Tolerances& tol) {
    if (!t.all_finite()) {
        throw PreconditionError("check_zero_square: non-finite input");
    }
    ZeroSquareReport r;
    r.norm = t.frobenius_norm();
    r.square_norm = (t * t).frobenius_norm();
    const double square_tol = tol.residual * (1.0 + r.norm * r.norm);
    if (r.square_norm > square_tol) {
        throw PreconditionError("check_zero_square: ‖T²‖_F = " + sci(r.square_norm) + " exceeds " +
                                sci(square_tol));
    }

    const auto [a, b] = cartesian_parts(t);
    r.square_difference = distance(a * a, b * b);
    r.anticommutator = (a * b + b * a).frobenius_norm();

    const auto ea = hermitian_eigen(a, tol);
    const auto eb = hermitian_eigen(b, tol);
    if (!ea.eigenvalues.empty()) {
        r.re_min = ea.eigenvalues.front();
        r.re_max = ea.eigenvalues.back();
        r.im_min = eb.eigenvalues.front();
        r.im_max = eb.eigenvalues.back();
    }
    const double band = tol.structural * (1.0 + r.norm);
    r.re_psd = sign_hypothesis(r.re_min, band);
    r.re_nsd = sign_hypothesis(-r.re_max, band);
    r.im_psd = sign_hypothesis(r.im_min, band);
    r.im_nsd = sign_hypothesis(-r.im_max, band);

    // T is Lipschitz in T² only to within a square root.
    r.zero_bound = 10.0 * std::sqrt(r.square_norm + tol.structural * (1.0 + r.norm * r.norm));
    r.is_zero = r.norm <= r.zero_bound;
    r.any_hypothesis = std::ranges::any_of(std::array{r.re_psd, r.re_nsd, r.im_psd, r.im_nsd},
                                           [](const SignHypothesis& h) { return h.status == Check::holds; });

    const double wide = 10.0 * band;
    r.both_parts_indefinite = r.re_min < -wide && r.re_max > wide && r.im_min < -wide && r.im_max > wide;

    std::ostringstream why;
    const double proof_tol = square_tol + band * (1.0 + r.norm);
    if (r.square_difference > proof_tol || r.anticommutator > proof_tol) {
        r.theorem_violation = true;
        why << "A² = B², AB = -BA does not follow from T² = 0; ";
    }
    if (r.any_hypothesis && !r.is_zero) {
        r.theorem_violation = true;
        why << "a Cartesian part is semidefinite but ‖T‖_F = " << r.norm << " > " << r.zero_bound << "; ";
    }
    if (!r.is_zero && !r.both_parts_indefinite && !r.any_hypothesis) {
        // Only reachable through the indeterminate band: not a violation, but worth saying.
        why << "sign of a Cartesian part is indeterminate; ";
    }
    r.detail = why.str();
    return r;
}

ComplexMatrix sample_nilpotent(std::size_t dim, std::uint64_t seed, bool canonical) {
    const std::size_t rows = (dim + 1) / 2;
    const std::size_t cols = dim / 2;
    ComplexMatrix block(dim);
    Rng rng(seed);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            block(i, rows + j) = canonical ? Complex(i == j ? 1.0 : 0.0) : rng.complex_gaussian();
        }
    }
    if (canonical || dim < 2) {
        return block;
    }
    const ComplexMatrix q = random_unitary(dim, rng);
    return q * block * q.adjoint();
}

NilpotentCampaign nilpotent_search(std::size_t trials, std::size_t dim_lo, std::size_t dim_hi, std::uint64_t seed,
                                   const Tolerances& tol) {
    if (dim_lo == 0 || dim_hi < dim_lo) {
        throw PreconditionError("nilpotent_search: need 1 <= dim_lo <= dim_hi");
    }
    std::vector<ZeroSquareReport> reports(trials);
    std::vector<std::string> errors(trials);
    const auto count = static_cast<std::ptrdiff_t>(trials);
    const std::size_t span = dim_hi - dim_lo + 1;

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const std::size_t dim = dim_lo + idx % span;
        try {
            reports[idx] = check_zero_square(sample_nilpotent(dim, derive_seed(seed, idx)), tol);
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    }

    NilpotentCampaign out;
    out.trials = trials;
    out.min_relative_margin = std::numeric_limits<double>::infinity();
    out.max_relative_margin = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        if (!errors[i].empty()) {
            ++out.invalid_samples;
            out.violation_details.push_back("trial " + std::to_string(i) + ": invalid sample: " + errors[i]);
            continue;
        }
        const ZeroSquareReport& r = reports[i];
        if (r.norm > 0.0) {
            out.max_square_ratio = std::max(out.max_square_ratio, r.square_norm / (r.norm * r.norm));
        }
        if (r.any_hypothesis) {
            ++out.hypothesis_held;
        }
        if (r.theorem_violation) {
            ++out.violations;
            out.violation_details.push_back("trial " + std::to_string(i) + ": " + r.detail);
        }
        if (r.is_zero) {
            continue;
        }
        ++out.nonzero;
        if (r.both_parts_indefinite) {
            ++out.indefinite;
        }
        const double margin = std::min({-r.re_min, r.re_max, -r.im_min, r.im_max}) / r.norm;
        out.min_relative_margin = std::min(out.min_relative_margin, margin);
        out.max_relative_margin = std::max(out.max_relative_margin, margin);
    }
    if (out.nonzero == 0) {
        out.min_relative_margin = 0.0;
    }
    return out;
}

}  // namespace nroots::lab
