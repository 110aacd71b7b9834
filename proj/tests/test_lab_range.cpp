#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nroots/lab.hpp"
#include "test_support.hpp"

using namespace nroots;
using namespace nroots::lab;
using nroots::testing::scale_of;

namespace {

ComplexMatrix diag(std::vector<Complex> values) { return ComplexMatrix::diagonal(values); }

double band_of(const ComplexMatrix& m) { return Tolerances{}.structural * scale_of(m); }

/// Independent check of a separating angle.
double margin_at(const ComplexMatrix& m, double theta) {
    return min_eigenvalue(hermitian_part(m * std::polar(1.0, theta)));
}

void expect_certificate_valid(const ComplexMatrix& m, const RangeCertificate& cert) {
    if (cert.contains_zero) {
        ASSERT_TRUE(cert.witness.has_value());
        double norm = 0.0;
        for (const Complex& z : *cert.witness) {
            norm += std::norm(z);
        }
        EXPECT_NEAR(norm, 1.0, 1e-12);
        EXPECT_NEAR(std::abs(rayleigh(m, *cert.witness)), cert.witness_value, 1e-15);
        if (!cert.indeterminate) {
            EXPECT_LE(cert.witness_value, band_of(m));
        }
    } else {
        ASSERT_TRUE(cert.angle.has_value());
        EXPECT_GT(margin_at(m, *cert.angle), 0.0);
    }
}

}  // namespace

TEST(NumericalRange, HermitianDefinite) {
    const RangeCertificate cert = numerical_range_contains_zero(diag({1.0, 2.0}));
    EXPECT_FALSE(cert.contains_zero);
    EXPECT_FALSE(cert.indeterminate);
    ASSERT_TRUE(cert.angle.has_value());
    EXPECT_EQ(*cert.angle, 0.0);
    EXPECT_DOUBLE_EQ(cert.margin, 1.0);
}

TEST(NumericalRange, HermitianIndefinite) {
    const ComplexMatrix m = diag({-1.0, 1.0});
    const RangeCertificate cert = numerical_range_contains_zero(m);
    EXPECT_TRUE(cert.contains_zero);
    EXPECT_FALSE(cert.indeterminate);
    expect_certificate_valid(m, cert);
}

TEST(NumericalRange, NegativeDefiniteSeparatesAtPi) {
    const ComplexMatrix m = diag({-3.0, -1.0});
    const RangeCertificate cert = numerical_range_contains_zero(m);
    EXPECT_FALSE(cert.contains_zero);
    expect_certificate_valid(m, cert);
}

TEST(NumericalRange, JordanBlockDisk) {
    // W is the closed disk of radius 1/2 about 0.
    const ComplexMatrix j{{0.0, 1.0}, {0.0, 0.0}};
    const RangeCertificate cert = numerical_range_contains_zero(j);
    EXPECT_TRUE(cert.contains_zero);
    EXPECT_FALSE(cert.indeterminate);
    EXPECT_NEAR(cert.margin, -0.5, 1e-12);
    expect_certificate_valid(j, cert);

    // Oracle: random unit vectors never leave the disk, and its edge is attained.
    Rng rng(41);
    double largest = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Complex> x{rng.complex_gaussian(), rng.complex_gaussian()};
        const double r = std::abs(rayleigh(j, x));
        EXPECT_LE(r, 0.5 + 1e-15);
        largest = std::max(largest, r);
    }
    EXPECT_GT(largest, 0.49);
}

TEST(NumericalRange, ShiftedJordanBlockExcludesZero) {
    const ComplexMatrix m = ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}} + ComplexMatrix::scalar(2, std::polar(0.7, 2.0));
    const RangeCertificate cert = numerical_range_contains_zero(m);
    EXPECT_FALSE(cert.contains_zero);
    EXPECT_NEAR(cert.margin, 0.2, 1e-10);
    expect_certificate_valid(m, cert);
}

TEST(NumericalRange, RotatedHermitianMatchesIntervalTest) {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, 6));
        std::vector<double> spectrum(dim);
        const double shift = rng.uniform(-2.0, 2.0);
        for (auto& v : spectrum) {
            v = shift + rng.uniform(-1.0, 1.0);
        }
        const ComplexMatrix h = hermitian_part(random_with_spectrum(std::span<const double>(spectrum), rng));
        const RangeCertificate interval = numerical_range_contains_zero(h);
        const double lo = *std::min_element(spectrum.begin(), spectrum.end());
        const double hi = *std::max_element(spectrum.begin(), spectrum.end());
        if (std::min(std::abs(lo), std::abs(hi)) < 1e-6) {
            continue;
        }
        EXPECT_EQ(interval.contains_zero, lo < 0.0 && hi > 0.0);
        expect_certificate_valid(h, interval);

        // W(e^{iφ} H) = e^{iφ} W(H) goes through the angular sweep.
        const ComplexMatrix rotated = h * std::polar(1.0, rng.uniform(0.1, 3.0));
        const RangeCertificate sweep = numerical_range_contains_zero(rotated);
        EXPECT_EQ(sweep.contains_zero, interval.contains_zero) << "trial " << trial;
        expect_certificate_valid(rotated, sweep);
    }
}

TEST(NumericalRange, RandomMatricesCarryValidCertificates) {
    Rng rng(43);
    int containing = 0;
    int excluding = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 6));
        ComplexMatrix m = random_matrix(dim, rng);
        if (trial % 2 == 0) {
            m += ComplexMatrix::scalar(dim, std::polar(rng.uniform(3.0, 6.0), rng.uniform(-3.0, 3.0)));
        }
        const RangeCertificate cert = numerical_range_contains_zero(m);
        (cert.contains_zero ? containing : excluding)++;
        expect_certificate_valid(m, cert);
        // Every eigenvalue-sized probe respects the support bound at the reported margin.
        for (int probe = 0; probe < 20; ++probe) {
            std::vector<Complex> x(dim);
            for (auto& z : x) {
                z = rng.complex_gaussian();
            }
            const Complex w = rayleigh(m, x);
            if (cert.angle) {
                EXPECT_GE((w * std::polar(1.0, *cert.angle)).real(), cert.margin - 1e-9);
            }
        }
    }
    EXPECT_GT(containing, 5);
    EXPECT_GT(excluding, 5);
}

TEST(NumericalRange, ZeroMatrixIsIndeterminateOrContains) {
    const RangeCertificate cert = numerical_range_contains_zero(ComplexMatrix::zero(3));
    EXPECT_TRUE(cert.contains_zero);
    EXPECT_TRUE(cert.indeterminate);
}
