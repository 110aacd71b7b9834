#pragma once

#include "nroots/kernels.hpp"

namespace nroots::kernels::detail {

/// M <- M G on columns p, q.
void rotate_columns(std::span<Complex> m, std::size_t dim, const Rotation& r);
/// M <- G* M on rows p, q.
void rotate_rows(std::span<Complex> m, std::size_t dim, const Rotation& r);
/// Zeroes the annihilated pair and drops rounding noise from the two diagonal entries.
void clean_pair(std::span<Complex> h, std::size_t dim, const Rotation& r);

/// (xp, xq) <- (c xp + a xq, s xp + b xq), spelled out in real arithmetic.
inline void rotate_pair(Complex& xp, Complex& xq, double c, double s, Complex a, Complex b) {
    const double pr = xp.real(), pi = xp.imag();
    const double qr = xq.real(), qi = xq.imag();
    xp = {c * pr + a.real() * qr - a.imag() * qi, c * pi + a.real() * qi + a.imag() * qr};
    xq = {s * pr + b.real() * qr - b.imag() * qi, s * pi + b.real() * qi + b.imag() * qr};
}

inline bool is_identity(const Rotation& r) { return r.s == 0.0 && r.w == Complex{1.0, 0.0}; }

}  // namespace nroots::kernels::detail
