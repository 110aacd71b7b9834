#include "nroots/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nroots/errors.hpp"
#include "nroots/kernels.hpp"

namespace nroots {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : ComplexMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw PreconditionError("ComplexMatrix: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(dim_));
        }
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
        ++i;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) { return scalar(dim, 1.0); }

ComplexMatrix ComplexMatrix::scalar(std::size_t dim, Complex value) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = value;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

double ComplexMatrix::frobenius_norm() const {
    // Scaled accumulation so huge or tiny entries neither overflow nor underflow.
    const double scale = max_abs();
    if (scale == 0.0 || !std::isfinite(scale)) {
        return scale;
    }
    double sum = 0.0;
    for (const Complex& z : data_) {
        sum += std::norm(z / scale);
    }
    return scale * std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex& z : data_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

Complex ComplexMatrix::trace() const {
    Complex sum{};
    for (std::size_t i = 0; i < dim_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
    for (Complex& z : data_) {
        z *= factor;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(ComplexMatrix m, Complex factor) { return m *= factor; }
ComplexMatrix operator*(Complex factor, ComplexMatrix m) { return m *= factor; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs, "operator*");
    ComplexMatrix out(lhs.dim());
    kernels::parallel::matmul(lhs.data(), rhs.data(), out.data(), lhs.dim());
    return out;
}

ComplexMatrix power(const ComplexMatrix& m, unsigned power) {
    ComplexMatrix result = ComplexMatrix::identity(m.dim());
    ComplexMatrix base = m;
    while (power > 0) {
        if (power & 1U) {
            result = result * base;
        }
        power >>= 1U;
        if (power > 0) {
            base = base * base;
        }
    }
    return result;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y - y * x; }

double distance(const ComplexMatrix& lhs, const ComplexMatrix& rhs) { return (lhs - rhs).frobenius_norm(); }

namespace {

template <typename T>
ComplexMatrix synthesize(const ComplexMatrix& vectors, std::span<const T> values) {
    const std::size_t n = vectors.dim();
    if (values.size() != n) {
        throw PreconditionError("spectral_synthesis: " + std::to_string(values.size()) + " values for dimension " +
                                std::to_string(n));
    }
    ComplexMatrix scaled = vectors;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scaled(i, j) *= values[j];
        }
    }
    return scaled * vectors.adjoint();
}

}  // namespace

ComplexMatrix spectral_synthesis(const ComplexMatrix& vectors, std::span<const Complex> values) {
    return synthesize(vectors, values);
}

ComplexMatrix spectral_synthesis(const ComplexMatrix& vectors, std::span<const double> values) {
    return synthesize(vectors, values);
}

void require_same_dim(const ComplexMatrix& lhs, const ComplexMatrix& rhs, const char* context) {
    if (lhs.dim() != rhs.dim()) {
        throw PreconditionError(std::string(context) + ": dimension mismatch (" + std::to_string(lhs.dim()) + " vs " +
                                std::to_string(rhs.dim()) + ")");
    }
}

}  // namespace nroots
