#pragma once

#include <array>

#include "core/complexmat.hpp"

namespace qce {

// Factorization A = X * diag(D) * Y with X, Y unitary and D sorted
// descending, D >= 0. Note the convention: Y is already the adjoint factor
// (standard A = U S V^dagger corresponds to Y = V^dagger here).
struct SvdResult {
    Mat4 X;
    std::array<double, 4> D;
    Mat4 Y;
};

// One-sided Jacobi SVD of a 4x4 complex matrix. Throws on non-finite input.
// Residual ||X diag(D) Y - A||_max stays below 1e-12 for unitary-scale input.
SvdResult svd_4x4(const Mat4& a);

double singular_value_sum(const Mat4& a);

}  // namespace qce
