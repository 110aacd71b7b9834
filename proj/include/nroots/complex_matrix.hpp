#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nroots {

using Complex = std::complex<double>;

/**
 * Dense square matrix of complex doubles, row-major.
 *
 * Every operation in the library takes and returns this type. Arithmetic
 * operators check dimensions and throw PreconditionError on mismatch.
 * Products go through the kernels in kernels.hpp.
 */
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix diagonal(std::span<const Complex> values);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix scalar(std::size_t dim, Complex value);

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    /// Conjugate transpose.
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    double frobenius_norm() const;
    double max_abs() const;
    Complex trace() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex factor);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex factor);
ComplexMatrix operator*(Complex factor, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// M^power by repeated squaring; power 0 gives the identity.
ComplexMatrix power(const ComplexMatrix& m, unsigned power);

/// XY - YX
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// ‖lhs - rhs‖_F
double distance(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Columns of `vectors` scaled by `values`, then multiplied by the adjoint:
/// V diag(values) V*.
ComplexMatrix spectral_synthesis(const ComplexMatrix& vectors, std::span<const Complex> values);
ComplexMatrix spectral_synthesis(const ComplexMatrix& vectors, std::span<const double> values);

/// Throws PreconditionError unless both operands have the same dimension.
void require_same_dim(const ComplexMatrix& lhs, const ComplexMatrix& rhs, const char* context);

}  // namespace nroots
