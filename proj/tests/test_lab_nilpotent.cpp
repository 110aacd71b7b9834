#include <gtest/gtest.h>

#include "nroots/errors.hpp"
#include "nroots/lab.hpp"
#include "test_support.hpp"

using namespace nroots;
using namespace nroots::lab;

TEST(ZeroSquare, ZeroMatrixSatisfiesEveryHypothesis) {
    const ZeroSquareReport r = check_zero_square(ComplexMatrix::zero(3));
    EXPECT_EQ(r.re_psd.status, Check::holds);
    EXPECT_EQ(r.re_nsd.status, Check::holds);
    EXPECT_EQ(r.im_psd.status, Check::holds);
    EXPECT_EQ(r.im_nsd.status, Check::holds);
    EXPECT_TRUE(r.any_hypothesis);
    EXPECT_TRUE(r.is_zero);
    EXPECT_FALSE(r.theorem_violation);
}

TEST(ZeroSquare, JordanBlockIsIndefinite) {
    const ZeroSquareReport r = check_zero_square(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
    EXPECT_NEAR(r.re_min, -0.5, 1e-15);
    EXPECT_NEAR(r.re_max, 0.5, 1e-15);
    EXPECT_NEAR(r.im_min, -0.5, 1e-15);
    EXPECT_NEAR(r.im_max, 0.5, 1e-15);
    EXPECT_FALSE(r.any_hypothesis);
    EXPECT_FALSE(r.is_zero);
    EXPECT_TRUE(r.both_parts_indefinite);
    EXPECT_FALSE(r.theorem_violation);
    EXPECT_EQ(r.square_difference, 0.0);
    EXPECT_EQ(r.anticommutator, 0.0);
}

TEST(ZeroSquare, RejectsNonNilpotent) {
    EXPECT_THROW(check_zero_square(ComplexMatrix::identity(2)), PreconditionError);
}

TEST(SampleNilpotent, CanonicalAndScalar) {
    EXPECT_EQ(sample_nilpotent(2, 0, true), (ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}));
    EXPECT_EQ(sample_nilpotent(1, 17), ComplexMatrix::zero(1));
}

TEST(SampleNilpotent, SquareVanishesAndSeedIsDeterministic) {
    const ComplexMatrix t = sample_nilpotent(4, 42);
    const double norm = t.frobenius_norm();
    EXPECT_GT(norm, 0.0);
    EXPECT_LE((t * t).frobenius_norm() / (norm * norm), 1e-13);
    EXPECT_EQ(t, sample_nilpotent(4, 42));
    EXPECT_NE(t, sample_nilpotent(4, 43));
    for (std::size_t dim = 2; dim <= 9; ++dim) {
        const ComplexMatrix s = sample_nilpotent(dim, dim);
        EXPECT_LE((s * s).frobenius_norm(), 1e-13 * (1.0 + s.frobenius_norm() * s.frobenius_norm()));
    }
}

TEST(NilpotentSearch, DimensionFourCampaign) {
    const NilpotentCampaign c = nilpotent_search(1000, 4, 4, 7);
    EXPECT_EQ(c.trials, 1000u);
    EXPECT_EQ(c.violations, 0u);
    EXPECT_EQ(c.invalid_samples, 0u);
    EXPECT_EQ(c.nonzero, 1000u);
    EXPECT_EQ(c.indefinite, c.nonzero);
    EXPECT_EQ(c.hypothesis_held, 0u);
    EXPECT_GT(c.min_relative_margin, 0.0);
    EXPECT_LE(c.max_square_ratio, 1e-13);
}

TEST(NilpotentSearch, MergedResultIsIndependentOfThreadCount) {
    const NilpotentCampaign a = nilpotent_search(64, 2, 6, 99);
    const NilpotentCampaign b = nilpotent_search(64, 2, 6, 99);
    EXPECT_EQ(a.nonzero, b.nonzero);
    EXPECT_EQ(a.min_relative_margin, b.min_relative_margin);
    EXPECT_EQ(a.max_relative_margin, b.max_relative_margin);
    EXPECT_EQ(a.max_square_ratio, b.max_square_ratio);
}

TEST(NilpotentSearch, DimensionOneSamplesAreZero) {
    const NilpotentCampaign c = nilpotent_search(10, 1, 1, 3);
    EXPECT_EQ(c.nonzero, 0u);
    EXPECT_EQ(c.hypothesis_held, 10u);
    EXPECT_EQ(c.violations, 0u);
}

TEST(NilpotentSearch, RejectsBadRange) {
    EXPECT_THROW(nilpotent_search(1, 0, 3, 1), PreconditionError);
    EXPECT_THROW(nilpotent_search(1, 4, 3, 1), PreconditionError);
}
