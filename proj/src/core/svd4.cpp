#include "core/svd4.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace qce {

namespace {

// Column view helpers on a row-major Mat4.
inline cplx col_dot(const Mat4& m, int ci, int cj) {
    // <col_i, col_j> with the left argument conjugated
    cplx s = 0.0;
    for (int r = 0; r < 4; ++r) s += std::conj(at4(m, r, ci)) * at4(m, r, cj);
    return s;
}

inline void rotate_cols(Mat4& m, int ci, int cj, double c, cplx s) {
    // (col_i, col_j) <- (c*col_i + conj(s)*col_j, -s*col_i + c*col_j)
    for (int r = 0; r < 4; ++r) {
        const cplx vi = at4(m, r, ci);
        const cplx vj = at4(m, r, cj);
        at4(m, r, ci) = c * vi + std::conj(s) * vj;
        at4(m, r, cj) = -s * vi + c * vj;
    }
}

}  // namespace

SvdResult svd_4x4(const Mat4& a) {
    for (const cplx& v : a)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error(Error::Kind::numeric, "svd_4x4: non-finite matrix entry");

    Mat4 w = a;            // columns get orthogonalized in place
    Mat4 v = identity4();  // accumulated right rotations: w = a * v

    constexpr int kMaxSweeps = 60;
    constexpr double kTol = 1e-30;  // on |<ci,cj>|^2 relative to norms
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                const double nii = col_dot(w, i, i).real();
                const double njj = col_dot(w, j, j).real();
                const cplx cij = col_dot(w, i, j);
                const double mag2 = std::norm(cij);
                if (mag2 <= kTol * std::max(nii * njj, 1e-300)) continue;
                off = std::max(off, mag2);

                // Complex Jacobi rotation zeroing <ci', cj'>.
                const double tau = (njj - nii) / (2.0 * std::abs(cij));
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx phase = cij / std::abs(cij);
                const cplx s = c * t * phase;

                rotate_cols(w, i, j, c, s);
                rotate_cols(v, i, j, c, s);
            }
        }
        if (off == 0.0) break;
    }

    // Singular values are the column norms; columns of X the directions.
    SvdResult out;
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> norms{};
    for (int j = 0; j < 4; ++j) norms[static_cast<size_t>(j)] = std::sqrt(std::max(0.0, col_dot(w, j, j).real()));
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return norms[static_cast<size_t>(x)] > norms[static_cast<size_t>(y)]; });

    Mat4 x{};
    for (int k = 0; k < 4; ++k) {
        const int j = order[static_cast<size_t>(k)];
        const double sv = norms[static_cast<size_t>(j)];
        out.D[static_cast<size_t>(k)] = sv;
        if (sv > 1e-150) {
            for (int r = 0; r < 4; ++r) at4(x, r, k) = at4(w, r, j) / sv;
        }
    }

    // Complete zero-norm columns of X to an orthonormal basis.
    for (int k = 0; k < 4; ++k) {
        if (out.D[static_cast<size_t>(k)] > 1e-150) continue;
        for (int cand = 0; cand < 4; ++cand) {
            cplx col[4] = {0.0, 0.0, 0.0, 0.0};
            col[cand] = 1.0;
            for (int other = 0; other < 4; ++other) {
                if (other == k) continue;
                cplx proj = 0.0;
                for (int r = 0; r < 4; ++r) proj += std::conj(at4(x, r, other)) * col[r];
                for (int r = 0; r < 4; ++r) col[r] -= proj * at4(x, r, other);
            }
            double nrm = 0.0;
            for (int r = 0; r < 4; ++r) nrm += std::norm(col[r]);
            nrm = std::sqrt(nrm);
            if (nrm > 0.5) {
                for (int r = 0; r < 4; ++r) at4(x, r, k) = col[r] / nrm;
                break;
            }
        }
    }

    // a = w * v^dagger = x * diag(D) * (v column-permuted)^dagger, so the
    // paper-convention right factor is Y = (permuted v)^dagger.
    Mat4 vp{};
    for (int k = 0; k < 4; ++k) {
        const int j = order[static_cast<size_t>(k)];
        for (int r = 0; r < 4; ++r) at4(vp, r, k) = at4(v, r, j);
    }
    out.X = x;
    out.Y = adjoint(vp);
    return out;
}

double singular_value_sum(const Mat4& a) {
    const SvdResult s = svd_4x4(a);
    return s.D[0] + s.D[1] + s.D[2] + s.D[3];
}

}  // namespace qce
