#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nroots/errors.hpp"
#include "nroots/linalg.hpp"
#include "test_support.hpp"

using namespace nroots;
using nroots::testing::scale_of;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

ComplexMatrix diag(std::vector<Complex> values) { return ComplexMatrix::diagonal(values); }

const ComplexMatrix kJordan{{0.0, 1.0}, {0.0, 0.0}};

ComplexMatrix random_psd(std::size_t dim, Rng& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    return hermitian_part(g.adjoint() * g);
}

}  // namespace

// cartesian_parts / recompose

TEST(Cartesian, IdentityIsPurelyReal) {
    const auto [re, im] = cartesian_parts(ComplexMatrix::identity(3));
    EXPECT_EQ(re, ComplexMatrix::identity(3));
    EXPECT_EQ(im, ComplexMatrix::zero(3));
}

TEST(Cartesian, JordanBlockParts) {
    const auto [re, im] = cartesian_parts(kJordan);
    EXPECT_MATRIX_NEAR(re, (ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}}), 0.0);
    EXPECT_MATRIX_NEAR(im, (ComplexMatrix{{0.0, Complex(0, -0.5)}, {Complex(0, 0.5), 0.0}}), 0.0);
}

TEST(Cartesian, ImaginaryMultipleOfHermitian) {
    Rng rng(1);
    const ComplexMatrix h = random_hermitian(4, rng);
    const auto [re, im] = cartesian_parts(kI * h);
    EXPECT_MATRIX_NEAR(re, ComplexMatrix::zero(4), 1e-15);
    EXPECT_MATRIX_NEAR(im, h, 1e-15);
}

TEST(Cartesian, RecomposeSimplePairs) {
    EXPECT_EQ(recompose({ComplexMatrix::identity(2), ComplexMatrix::zero(2)}), ComplexMatrix::identity(2));
    EXPECT_EQ(recompose({ComplexMatrix::zero(2), ComplexMatrix::identity(2)}), ComplexMatrix::scalar(2, kI));
}

TEST(Cartesian, RecomposeRejectsNonHermitianPart) {
    EXPECT_THROW(recompose({kJordan, ComplexMatrix::zero(2)}), PreconditionError);
    EXPECT_THROW(recompose({ComplexMatrix::zero(2), kJordan}), PreconditionError);
}

TEST(Cartesian, RoundTripProperty) {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix t = random_matrix(static_cast<std::size_t>(rng.uniform_int(1, 9)), rng) *
                                Complex(std::pow(10.0, rng.uniform(-3, 3)));
        EXPECT_MATRIX_NEAR(recompose(cartesian_parts(t)), t, 1e-14 * scale_of(t));
    }
}

// hermitian_eigen

TEST(HermitianEigen, DiagonalInputSortsAscending) {
    const auto eig = hermitian_eigen(diag({3.0, 1.0}));
    ASSERT_EQ(eig.eigenvalues.size(), 2u);
    EXPECT_EQ(eig.eigenvalues[0], 1.0);
    EXPECT_EQ(eig.eigenvalues[1], 3.0);
    // A permutation of the identity.
    EXPECT_EQ(std::abs(eig.vectors(1, 0)), 1.0);
    EXPECT_EQ(std::abs(eig.vectors(0, 1)), 1.0);
}

TEST(HermitianEigen, TwoByTwoCharacteristicPolynomial) {
    // λ² - 4λ + 3 = (λ - 1)(λ - 3)
    const auto eig = hermitian_eigen(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}});
    EXPECT_NEAR(eig.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(eig.eigenvalues[1], 3.0, 1e-15);
}

TEST(HermitianEigen, ComplexOffDiagonal) {
    // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
    const auto eig = hermitian_eigen(ComplexMatrix{{1.0, kI}, {-kI, 1.0}});
    EXPECT_NEAR(eig.eigenvalues[0], 0.0, 1e-15);
    EXPECT_NEAR(eig.eigenvalues[1], 2.0, 1e-15);
}

TEST(HermitianEigen, RandomDimSixResidual) {
    Rng rng(3);
    const ComplexMatrix h = random_hermitian(6, rng);
    const auto eig = hermitian_eigen(h);
    EXPECT_LE(distance(spectral_synthesis(eig.vectors, eig.eigenvalues), h), 1e-12 * h.frobenius_norm());
}

TEST(HermitianEigen, ResidualAndUnitarityProperty) {
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 16));
        ComplexMatrix h = random_hermitian(dim, rng);
        if (trial % 4 == 0) {
            // Repeated eigenvalues.
            std::vector<double> values(dim);
            for (auto& v : values) {
                v = static_cast<double>(rng.uniform_int(-2, 2));
            }
            h = hermitian_part(random_with_spectrum(std::span<const double>(values), rng));
        }
        const auto eig = hermitian_eigen(h);
        EXPECT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
        EXPECT_LE(distance(spectral_synthesis(eig.vectors, eig.eigenvalues), h), 1e-11 * scale_of(h));
        EXPECT_LE(unitarity_defect(eig.vectors), 1e-12 * static_cast<double>(dim));
    }
}

TEST(HermitianEigen, EigenvaluesOnlyMatchesFullDecomposition) {
    Rng rng(5);
    const ComplexMatrix h = random_hermitian(12, rng);
    const auto full = hermitian_eigen(h);
    const auto values = hermitian_eigenvalues(h);
    ASSERT_EQ(values.size(), full.eigenvalues.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        EXPECT_NEAR(values[i], full.eigenvalues[i], 1e-13 * scale_of(h));
    }
}

TEST(HermitianEigen, RejectsNonHermitian) { EXPECT_THROW(hermitian_eigen(kJordan), PreconditionError); }

// psd_root / abs_op

TEST(PsdRoot, DiagonalSquareRoot) {
    EXPECT_MATRIX_NEAR(psd_root(diag({4.0, 9.0}), 2), diag({2.0, 3.0}), 1e-15);
}

TEST(PsdRoot, ZeroMatrix) {
    for (unsigned n : {1u, 2u, 5u}) {
        EXPECT_EQ(psd_root(ComplexMatrix::zero(3), n), ComplexMatrix::zero(3));
    }
}

TEST(PsdRoot, TwoByTwoClosedForm) {
    // V = [[1, 1], [-1, 1]]/√2 diagonalizes [[2,1],[1,2]] with eigenvalues 1, 3.
    const double r3 = std::sqrt(3.0);
    const ComplexMatrix expected = ComplexMatrix{{1.0 + r3, r3 - 1.0}, {r3 - 1.0, 1.0 + r3}} * Complex(0.5);
    EXPECT_MATRIX_NEAR(psd_root(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}}, 2), expected, 1e-14);
}

TEST(PsdRoot, RejectsIndefiniteAndClampsRounding) {
    EXPECT_THROW(psd_root(diag({1.0, -1e-3}), 2), PreconditionError);
    const ComplexMatrix root = psd_root(diag({1.0, -1e-14}), 2);
    EXPECT_EQ(root(1, 1), Complex(0.0));
}

TEST(PsdRoot, PowerLawProperty) {
    Rng rng(6);
    for (unsigned n : {2u, 3u, 4u, 5u, 7u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 8));
            ComplexMatrix p = random_psd(dim, rng);
            if (trial % 5 == 0 && dim > 1) {
                // Rank deficient.
                std::vector<double> values(dim, 0.0);
                values[0] = rng.uniform(0.5, 3.0);
                p = hermitian_part(random_with_spectrum(std::span<const double>(values), rng));
            }
            const ComplexMatrix r = psd_root(p, n);
            EXPECT_LE(distance(power(r, n), p), 1e-9 * scale_of(p)) << "n=" << n << " trial " << trial;
            EXPECT_GE(min_eigenvalue(r), -1e-12 * scale_of(r));
            EXPECT_LE(commutator(r, p).frobenius_norm(), 1e-10 * scale_of(p) * scale_of(r));
        }
    }
}

TEST(PsdRoot, MonotoneSquareRoot) {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 8));
        const ComplexMatrix a = random_psd(dim, rng);
        const ComplexMatrix b = a + random_psd(dim, rng) * Complex(rng.uniform(0.0, 1.0));
        EXPECT_GE(min_eigenvalue(hermitian_part(psd_root(b, 2) - psd_root(a, 2))), -1e-9 * scale_of(b));
    }
}

TEST(AbsOp, ReferenceCases) {
    EXPECT_MATRIX_NEAR(abs_op(kJordan), diag({0.0, 1.0}), 1e-15);
    Rng rng(8);
    EXPECT_MATRIX_NEAR(abs_op(random_unitary(5, rng)), ComplexMatrix::identity(5), 1e-13);
    EXPECT_MATRIX_NEAR(abs_op(diag({-2.0, Complex(0, 3)})), diag({2.0, 3.0}), 1e-15);
}

TEST(AbsOp, AbsoluteValueBound) {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 8));
        const ComplexMatrix a = random_hermitian(dim, rng);
        const ComplexMatrix b = abs_op(a) + random_psd(dim, rng) * Complex(rng.uniform(0.0, 0.5));
        const double scale = scale_of(b);
        EXPECT_GE(min_eigenvalue(hermitian_part(b - a)), -1e-9 * scale);
        EXPECT_GE(min_eigenvalue(hermitian_part(b + a)), -1e-9 * scale);
    }
}

// normal_eigen

TEST(NormalEigen, DiagonalInput) {
    const ComplexMatrix n = diag({Complex(1, 1), Complex(-2, 0.5), 3.0});
    const auto eig = normal_eigen(n);
    EXPECT_MATRIX_NEAR(spectral_synthesis(eig.vectors, eig.eigenvalues), n, 1e-15);
    std::vector<Complex> got = eig.eigenvalues;
    for (const Complex& mu : {Complex(1, 1), Complex(-2, 0.5), Complex(3.0)}) {
        EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](Complex z) { return std::abs(z - mu) < 1e-15; }));
    }
    // Each eigenvector is a phase multiple of a standard basis vector.
    for (std::size_t j = 0; j < 3; ++j) {
        double largest = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            largest = std::max(largest, std::abs(eig.vectors(i, j)));
        }
        EXPECT_NEAR(largest, 1.0, 1e-15);
    }
}

TEST(NormalEigen, RotationGenerator) {
    // μ² + 1 = 0
    const auto eig = normal_eigen(ComplexMatrix{{0.0, 1.0}, {-1.0, 0.0}});
    std::vector<Complex> mu = eig.eigenvalues;
    std::sort(mu.begin(), mu.end(), [](Complex a, Complex b) { return a.imag() < b.imag(); });
    EXPECT_NEAR(std::abs(mu[0] + kI), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(mu[1] - kI), 0.0, 1e-15);
}

TEST(NormalEigen, RecoversConstructedSpectrum) {
    Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 8));
        std::vector<Complex> spectrum(dim);
        for (auto& mu : spectrum) {
            mu = nroots::testing::generic_eigenvalue(rng);
        }
        if (trial % 3 == 0 && dim > 2) {
            // Repeated real parts with distinct imaginary parts.
            spectrum[1] = {spectrum[0].real(), spectrum[0].imag() + 0.5};
            spectrum[2] = spectrum[0];
        }
        const ComplexMatrix n = random_with_spectrum(std::span<const Complex>(spectrum), rng);
        const auto eig = normal_eigen(n);
        std::vector<bool> used(dim, false);
        for (const Complex& mu : spectrum) {
            bool matched = false;
            for (std::size_t j = 0; j < dim && !matched; ++j) {
                if (!used[j] && std::abs(eig.eigenvalues[j] - mu) <= 1e-10) {
                    used[j] = matched = true;
                }
            }
            EXPECT_TRUE(matched) << "eigenvalue " << mu << " not recovered (trial " << trial << ")";
        }
        EXPECT_LE(unitarity_defect(eig.vectors), 1e-12 * static_cast<double>(dim));
    }
}

TEST(NormalEigen, RejectsNonNormal) { EXPECT_THROW(normal_eigen(kJordan), PreconditionError); }

// expi / unitary_log

TEST(Expi, ReferenceCases) {
    EXPECT_MATRIX_NEAR(expi(ComplexMatrix::zero(3)), ComplexMatrix::identity(3), 0.0);
    EXPECT_MATRIX_NEAR(expi(ComplexMatrix::scalar(3, kPi)), ComplexMatrix::scalar(3, -1.0), 1e-15);
    Rng rng(11);
    for (std::size_t dim : {1u, 4u, 9u}) {
        const ComplexMatrix u = expi(random_hermitian(dim, rng) * Complex(3.0));
        EXPECT_LE(unitarity_defect(u), 1e-12 * static_cast<double>(dim));
    }
    EXPECT_THROW(expi(kJordan), PreconditionError);
}

TEST(UnitaryLog, ReferenceCases) {
    EXPECT_MATRIX_NEAR(unitary_log(ComplexMatrix::identity(2)), ComplexMatrix::zero(2), 1e-15);
    const ComplexMatrix u = diag({std::polar(1.0, kPi / 2), std::polar(1.0, -kPi / 3)});
    EXPECT_MATRIX_NEAR(unitary_log(u), diag({kPi / 2, -kPi / 3}), 1e-15);
    EXPECT_MATRIX_NEAR(unitary_log(ComplexMatrix::scalar(3, -1.0)), ComplexMatrix::scalar(3, kPi), 1e-15);
}

TEST(UnitaryLog, BranchCutWithNegativeZero) {
    EXPECT_EQ(principal_arg(Complex(-1.0, -0.0)), kPi);
    EXPECT_EQ(principal_arg(Complex(-1.0, 0.0)), kPi);
    EXPECT_NEAR(std::abs(principal_sqrt(Complex(-4.0, -0.0)) - Complex(0.0, 2.0)), 0.0, 1e-15);
}

TEST(UnitaryLog, RejectsNonUnitary) { EXPECT_THROW(unitary_log(ComplexMatrix::scalar(2, 2.0)), PreconditionError); }

TEST(UnitaryLog, InversionProperty) {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 10));
        const ComplexMatrix u = random_unitary(dim, rng);
        const ComplexMatrix a = unitary_log(u);
        EXPECT_LE(hermitian_defect(a), 1e-12 * scale_of(a));
        EXPECT_LE(max_eigenvalue(a), kPi + 1e-12);
        EXPECT_GT(min_eigenvalue(a), -kPi - 1e-12);
        EXPECT_LE(distance(expi(a), u), 1e-10 * static_cast<double>(dim));
    }
}

// polar_normal

TEST(PolarNormal, ReferenceCases) {
    const auto p = polar_normal(diag({Complex(0, 2)}));
    EXPECT_MATRIX_NEAR(p.unitary, diag({kI}), 1e-15);
    EXPECT_MATRIX_NEAR(p.positive, diag({2.0}), 1e-15);

    const auto z = polar_normal(ComplexMatrix::zero(3));
    EXPECT_EQ(z.unitary, ComplexMatrix::identity(3));
    EXPECT_EQ(z.positive, ComplexMatrix::zero(3));
}

TEST(PolarNormal, RandomNormalInvariants) {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 8));
        ComplexMatrix n = random_normal(dim, rng, nroots::testing::generic_eigenvalue);
        if (trial % 4 == 0 && dim > 1) {
            std::vector<Complex> spectrum(dim, Complex{});
            spectrum[0] = nroots::testing::generic_eigenvalue(rng);
            n = random_with_spectrum(std::span<const Complex>(spectrum), rng);
        }
        const auto [u, p] = polar_normal(n);
        const double scale = scale_of(n);
        EXPECT_LE(distance(u * p, n), 1e-10 * scale);
        EXPECT_LE(unitarity_defect(u), 1e-12 * static_cast<double>(dim));
        EXPECT_GE(min_eigenvalue(p), -1e-12 * scale);
        EXPECT_LE(commutator(u, p).frobenius_norm(), 1e-10 * scale_of(p));
    }
}

// operator_norm

TEST(OperatorNorm, ReferenceCases) {
    EXPECT_NEAR(operator_norm(diag({1.0, -3.0})), 3.0, 1e-15);
    EXPECT_NEAR(operator_norm(kJordan), 1.0, 1e-15);
}

TEST(OperatorNorm, AgreesWithLargestSingularValueOfDiagonalTimesUnitary) {
    Rng rng(14);
    const ComplexMatrix u = random_unitary(6, rng);
    const ComplexMatrix w = random_unitary(6, rng);
    const ComplexMatrix m = u * diag({0.1, 0.5, 2.5, 1.0, 0.0, 1.7}) * w;
    EXPECT_NEAR(operator_norm(m), 2.5, 1e-12);
}

// classify

TEST(Classify, ReferenceCases) {
    MatrixFlags identity{.hermitian = true, .normal = true, .psd = true, .nsd = false, .unitary = true, .zero = false};
    EXPECT_EQ(classify(ComplexMatrix::identity(3)), identity);
    EXPECT_EQ(classify(kJordan), MatrixFlags{});

    Rng rng(15);
    const ComplexMatrix u = random_unitary(4, rng);
    const ComplexMatrix a = u * diag({1.0, -2.0, 0.5, 3.0}) * u.adjoint();
    const ComplexMatrix b = u * diag({0.3, 0.3, -1.0, 2.0}) * u.adjoint();
    const MatrixFlags flags = classify(hermitian_part(a) + hermitian_part(b) * kI);
    EXPECT_TRUE(flags.normal);
    EXPECT_FALSE(flags.hermitian);
}

TEST(Classify, ZeroAndNegativeSemidefinite) {
    const MatrixFlags zero = classify(ComplexMatrix::zero(2));
    EXPECT_TRUE(zero.zero && zero.psd && zero.nsd && zero.hermitian && zero.normal);
    EXPECT_FALSE(zero.unitary);
    const MatrixFlags neg = classify(diag({-1.0, -2.0}));
    EXPECT_TRUE(neg.nsd);
    EXPECT_FALSE(neg.psd);
}

TEST(Tolerances, ValidateRejectsNonPositive) {
    EXPECT_NO_THROW(Tolerances{}.validate());
    EXPECT_THROW((Tolerances{0.0, 1e-9, 1e-13}.validate()), PreconditionError);
    EXPECT_THROW((Tolerances{1e-10, -1.0, 1e-13}.validate()), PreconditionError);
    EXPECT_THROW((Tolerances{1e-10, 1e-9, std::nan("")}.validate()), PreconditionError);
}
