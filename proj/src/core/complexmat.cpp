#include "core/complexmat.hpp"

#include <algorithm>
#include <cmath>

namespace qce {

Mat2 identity2() {
    Mat2 m{};
    at2(m, 0, 0) = 1.0;
    at2(m, 1, 1) = 1.0;
    return m;
}

Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) at4(m, i, i) = 1.0;
    return m;
}

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            const cplx aik = at2(a, i, k);
            for (int j = 0; j < 2; ++j) at2(r, i, j) += aik * at2(b, k, j);
        }
    return r;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx aik = at4(a, i, k);
            for (int j = 0; j < 4; ++j) at4(r, i, j) += aik * at4(b, k, j);
        }
    return r;
}

Mat2 adjoint(const Mat2& m) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) at2(r, i, j) = std::conj(at2(m, j, i));
    return r;
}

Mat4 adjoint(const Mat4& m) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) at4(r, i, j) = std::conj(at4(m, j, i));
    return r;
}

Mat2 scale(const Mat2& m, cplx s) {
    Mat2 r = m;
    for (auto& v : r) v *= s;
    return r;
}

Mat4 scale(const Mat4& m, cplx s) {
    Mat4 r = m;
    for (auto& v : r) v *= s;
    return r;
}

Mat4 kron(const Mat2& hi, const Mat2& lo) {
    Mat4 r{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    at4(r, 2 * a + c, 2 * b + d) = at2(hi, a, b) * at2(lo, c, d);
    return r;
}

cplx det(const Mat2& m) { return at2(m, 0, 0) * at2(m, 1, 1) - at2(m, 0, 1) * at2(m, 1, 0); }

cplx det(const Mat4& m) {
    // Laplace expansion over the first row with 3x3 cofactors.
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return at4(m, r0, c0) * (at4(m, r1, c1) * at4(m, r2, c2) - at4(m, r1, c2) * at4(m, r2, c1)) -
               at4(m, r0, c1) * (at4(m, r1, c0) * at4(m, r2, c2) - at4(m, r1, c2) * at4(m, r2, c0)) +
               at4(m, r0, c2) * (at4(m, r1, c0) * at4(m, r2, c1) - at4(m, r1, c1) * at4(m, r2, c0));
    };
    cplx d = 0.0;
    d += at4(m, 0, 0) * det3(1, 2, 3, 1, 2, 3);
    d -= at4(m, 0, 1) * det3(1, 2, 3, 0, 2, 3);
    d += at4(m, 0, 2) * det3(1, 2, 3, 0, 1, 3);
    d -= at4(m, 0, 3) * det3(1, 2, 3, 0, 1, 2);
    return d;
}

cplx trace(const Mat4& m) { return at4(m, 0, 0) + at4(m, 1, 1) + at4(m, 2, 2) + at4(m, 3, 3); }

double max_abs_diff(const Mat4& a, const Mat4& b) {
    double r = 0.0;
    for (size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

double unitarity_defect(const Mat4& u) {
    const Mat4 g = mul(adjoint(u), u);
    return max_abs_diff(g, identity4());
}

double unitarity_defect2(const Mat2& u) {
    const Mat2 g = mul(adjoint(u), u);
    double r = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r = std::max(r, std::abs(at2(g, i, j) - (i == j ? 1.0 : 0.0)));
    return r;
}

}  // namespace qce
