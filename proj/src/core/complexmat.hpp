#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qce {

using cplx = std::complex<double>;

// Row-major fixed-size complex matrices. Gate matrices and AQCE environments
// are all 4x4; the KAK path additionally needs 2x2 blocks.
using Mat2 = std::array<cplx, 4>;
using Mat4 = std::array<cplx, 16>;

inline cplx& at2(Mat2& m, int r, int c) { return m[static_cast<size_t>(2 * r + c)]; }
inline const cplx& at2(const Mat2& m, int r, int c) { return m[static_cast<size_t>(2 * r + c)]; }
inline cplx& at4(Mat4& m, int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
inline const cplx& at4(const Mat4& m, int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }

Mat2 identity2();
Mat4 identity4();

Mat2 mul(const Mat2& a, const Mat2& b);
Mat4 mul(const Mat4& a, const Mat4& b);

Mat2 adjoint(const Mat2& m);
Mat4 adjoint(const Mat4& m);

Mat2 scale(const Mat2& m, cplx s);
Mat4 scale(const Mat4& m, cplx s);

// Kronecker product; `hi` indexes the high-order bit of the 4x4 row/column.
Mat4 kron(const Mat2& hi, const Mat2& lo);

cplx det(const Mat2& m);
cplx det(const Mat4& m);
cplx trace(const Mat4& m);

// max |a_ij - b_ij|
double max_abs_diff(const Mat4& a, const Mat4& b);

// ||U^dagger U - I||_max; 0 for exactly unitary input.
double unitarity_defect(const Mat4& u);
double unitarity_defect2(const Mat2& u);

}  // namespace qce
