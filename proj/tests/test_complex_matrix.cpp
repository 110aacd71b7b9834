#include <gtest/gtest.h>

#include "nroots/complex_matrix.hpp"
#include "nroots/errors.hpp"
#include "test_support.hpp"

using namespace nroots;

TEST(ComplexMatrix, InitializerListAndAccess) {
    const ComplexMatrix m{{1.0, Complex(0.0, 2.0)}, {3.0, 4.0}};
    EXPECT_EQ(m.dim(), 2u);
    EXPECT_EQ(m(0, 1), Complex(0.0, 2.0));
    EXPECT_EQ(m(1, 0), Complex(3.0, 0.0));
}

TEST(ComplexMatrix, RaggedInitializerThrows) {
    EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), PreconditionError);
}

TEST(ComplexMatrix, AdjointConjugatesAndTransposes) {
    const ComplexMatrix m{{Complex(1, 1), Complex(2, -1)}, {Complex(0, 3), 4.0}};
    const ComplexMatrix a = m.adjoint();
    EXPECT_EQ(a(0, 1), Complex(0, -3));
    EXPECT_EQ(a(1, 0), Complex(2, 1));
    EXPECT_EQ(a(0, 0), Complex(1, -1));
}

TEST(ComplexMatrix, ProductMatchesHandComputation) {
    const ComplexMatrix a{{1.0, Complex(0, 1)}, {0.0, 2.0}};
    const ComplexMatrix b{{2.0, 0.0}, {Complex(0, 1), 1.0}};
    // [[2 + i*i, i], [2i, 2]]
    const ComplexMatrix expected{{1.0, Complex(0, 1)}, {Complex(0, 2), 2.0}};
    EXPECT_EQ(a * b, expected);
}

TEST(ComplexMatrix, DimensionMismatchThrows) {
    EXPECT_THROW(ComplexMatrix(2) + ComplexMatrix(3), PreconditionError);
    EXPECT_THROW(ComplexMatrix(2) * ComplexMatrix(3), PreconditionError);
}

TEST(ComplexMatrix, PowerBySquaringMatchesRepeatedProduct) {
    Rng rng(7);
    const ComplexMatrix m = random_matrix(5, rng) * 0.5;
    ComplexMatrix naive = ComplexMatrix::identity(5);
    for (unsigned p = 0; p <= 9; ++p) {
        EXPECT_MATRIX_NEAR(power(m, p), naive, 1e-12 * (1.0 + naive.frobenius_norm()));
        naive = naive * m;
    }
}

TEST(ComplexMatrix, FrobeniusNormSurvivesExtremeScales) {
    ComplexMatrix big(2);
    big(0, 0) = 1e200;
    big(1, 1) = 1e200;
    EXPECT_NEAR(big.frobenius_norm() / 1e200, std::sqrt(2.0), 1e-15);
    ComplexMatrix tiny(1);
    tiny(0, 0) = Complex(3e-200, 4e-200);
    EXPECT_NEAR(tiny.frobenius_norm() / 1e-200, 5.0, 1e-14);
}

TEST(ComplexMatrix, FiniteCheck) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    EXPECT_TRUE(m.all_finite());
    m(0, 1) = Complex(0.0, std::nan(""));
    EXPECT_FALSE(m.all_finite());
}

TEST(ComplexMatrix, SpectralSynthesisWithIdentityIsDiagonal) {
    const std::vector<Complex> values{Complex(1, 2), Complex(-3, 0)};
    EXPECT_EQ(spectral_synthesis(ComplexMatrix::identity(2), values), ComplexMatrix::diagonal(values));
}
