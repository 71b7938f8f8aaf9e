#include "core/kak.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace qce {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSnapTol = 1e-7;   // canonical-coordinate snapping
constexpr double kRealTol = 1e-8;   // allowed imaginary residue in O1
constexpr double kVerifyTol = 1e-8;

// Magic (Bell) basis columns: |Phi+>, i|Phi->, i|Psi+>, |Psi->.
const Mat4& magic_basis() {
    static const Mat4 b = [] {
        const double s = 1.0 / std::sqrt(2.0);
        Mat4 m{};
        at4(m, 0, 0) = s;
        at4(m, 3, 0) = s;
        at4(m, 0, 1) = cplx(0, s);
        at4(m, 3, 1) = cplx(0, -s);
        at4(m, 1, 2) = cplx(0, s);
        at4(m, 2, 2) = cplx(0, s);
        at4(m, 1, 3) = s;
        at4(m, 2, 3) = -s;
        return m;
    }();
    return b;
}

// ---- 4x4 real symmetric eigen solver (cyclic Jacobi) ----

struct Sym4 {
    double m[4][4];
};

void jacobi_sym4(Sym4 a, double evec[4][4], double eval[4]) {
    double v[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 4; ++q) off += a.m[p][q] * a.m[p][q];
        if (off < 1e-28) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (std::abs(a.m[p][q]) < 1e-300) continue;
                const double theta = (a.m[q][q] - a.m[p][p]) / (2.0 * a.m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a.m[k][p], akq = a.m[k][q];
                    a.m[k][p] = c * akp - s * akq;
                    a.m[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a.m[p][k], aqk = a.m[q][k];
                    a.m[p][k] = c * apk - s * aqk;
                    a.m[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    for (int i = 0; i < 4; ++i) {
        eval[i] = a.m[i][i];
        for (int k = 0; k < 4; ++k) evec[k][i] = v[k][i];
    }
}

// Orthogonal diagonalization of the commuting pair (Re m, Im m) of a
// symmetric unitary: diagonalize Re, then Im within Re's eigenvalue
// clusters. Returns false if the combined basis fails to diagonalize both.
bool simultaneous_diag(const Mat4& m, double p[4][4]) {
    Sym4 re{}, im{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            re.m[i][j] = at4(m, i, j).real();
            im.m[i][j] = at4(m, i, j).imag();
        }
    double evec[4][4], eval[4];
    jacobi_sym4(re, evec, eval);

    int order[4] = {0, 1, 2, 3};
    std::sort(order, order + 4, [&](int x, int y) { return eval[x] < eval[y]; });
    double base[4][4];
    double ev[4];
    for (int c = 0; c < 4; ++c) {
        ev[c] = eval[order[c]];
        for (int r = 0; r < 4; ++r) base[r][c] = evec[r][order[c]];
    }

    constexpr double kClusterTol = 1e-7;
    int c0 = 0;
    while (c0 < 4) {
        int c1 = c0 + 1;
        while (c1 < 4 && std::abs(ev[c1] - ev[c0]) < kClusterTol) ++c1;
        const int len = c1 - c0;
        if (len > 1) {
            Sym4 blk{};
            for (int i = 0; i < len; ++i)
                for (int j = 0; j < len; ++j) {
                    double s = 0.0;
                    for (int r = 0; r < 4; ++r)
                        for (int c = 0; c < 4; ++c)
                            s += base[r][c0 + i] * im.m[r][c] * base[c][c0 + j];
                    blk.m[i][j] = s;
                }
            double bvec[4][4], bval[4];
            jacobi_sym4(blk, bvec, bval);
            double rotated[4][4] = {};
            for (int r = 0; r < 4; ++r)
                for (int j = 0; j < len; ++j) {
                    double s = 0.0;
                    for (int i = 0; i < len; ++i) s += base[r][c0 + i] * bvec[i][j];
                    rotated[r][j] = s;
                }
            for (int r = 0; r < 4; ++r)
                for (int j = 0; j < len; ++j) base[r][c0 + j] = rotated[r][j];
        }
        c0 = c1;
    }

    Mat4 pm{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) at4(pm, i, j) = base[i][j];
    if (det(pm).real() < 0)
        for (int r = 0; r < 4; ++r) base[r][3] = -base[r][3];

    double offmax = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            double sre = 0.0, sim = 0.0;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    sre += base[r][i] * re.m[r][c] * base[c][j];
                    sim += base[r][i] * im.m[r][c] * base[c][j];
                }
            offmax = std::max(offmax, std::max(std::abs(sre), std::abs(sim)));
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p[i][j] = base[i][j];
    return offmax < 1e-8;
}

double max_imag(const Mat4& m) {
    double r = 0.0;
    for (const cplx& v : m) r = std::max(r, std::abs(v.imag()));
    return r;
}

// Split an exact tensor product k = hi ⊗ lo into unitary 2x2 factors.
bool split_product(const Mat4& k, Mat2& hi, Mat2& lo, double tol) {
    int br = 0, bc = 0;
    double best = -1.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            double n = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) n += std::norm(at4(k, 2 * r + i, 2 * c + j));
            if (n > best) {
                best = n;
                br = r;
                bc = c;
            }
        }
    Mat2 blk{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) at2(blk, i, j) = at4(k, 2 * br + i, 2 * bc + j);
    const double scale = std::sqrt(best / 2.0);  // |hi[br,bc]|
    if (scale < 1e-9) return false;
    for (auto& v : blk) v /= scale;
    lo = blk;

    const Mat2 lo_adj = adjoint(lo);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            cplx s = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    s += at4(k, 2 * r + i, 2 * c + j) * at2(lo_adj, j, i);
            at2(hi, r, c) = s / 2.0;
        }
    return max_abs_diff(kron(hi, lo), k) <= tol;
}

// |tr(a^dagger b)| / 4, equal to 1 iff a == b up to global phase
double phase_overlap(const Mat4& a, const Mat4& b) {
    cplx t = 0.0;
    for (size_t i = 0; i < a.size(); ++i) t += std::conj(a[i]) * b[i];
    return std::abs(t) / 4.0;
}

const Mat2 kPauliX{cplx(0), cplx(1), cplx(1), cplx(0)};
const Mat2 kPauliY{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)};
const Mat2 kPauliZ{cplx(1), cplx(0), cplx(0), cplx(-1)};
const Mat2 kHadamard{cplx(1 / std::sqrt(2.0)), cplx(1 / std::sqrt(2.0)),
                     cplx(1 / std::sqrt(2.0)), cplx(-1 / std::sqrt(2.0))};
const Mat2 kSGate{cplx(1), cplx(0), cplx(0), cplx(0, 1)};
// eigenbasis of Y: columns (1, i)/sqrt2 and (1, -i)/sqrt2
const Mat2 kYBasis{cplx(1 / std::sqrt(2.0)), cplx(1 / std::sqrt(2.0)),
                   cplx(0, 1 / std::sqrt(2.0)), cplx(0, -1 / std::sqrt(2.0))};

Mat2 rx(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return Mat2{cplx(c), cplx(0, -s), cplx(0, -s), cplx(c)};
}

Mat2 rz(double theta) {
    return Mat2{std::exp(cplx(0, -theta / 2)), cplx(0), cplx(0), std::exp(cplx(0, theta / 2))};
}

const Mat2& pauli(int axis) { return axis == 0 ? kPauliX : (axis == 1 ? kPauliY : kPauliZ); }

// ---- coordinate rewrites; each keeps U = e^{i phase} K1 Can(coords) K2 ----

void shift_coord(KakDecomposition& d, int axis, int steps) {
    // Can(.., c, ..) = Can(.., c - k*pi/2, ..) * i^k (sigma⊗sigma)^(k mod 2)
    d.coords[static_cast<size_t>(axis)] -= steps * (kPi / 2);
    d.phase += steps * (kPi / 2);
    if (steps & 1) {
        d.k2_hi = mul(pauli(axis), d.k2_hi);
        d.k2_lo = mul(pauli(axis), d.k2_lo);
    }
}

void flip_pair(KakDecomposition& d, int ax1, int ax2) {
    // conjugating by the remaining axis' Pauli on the hi qubit negates ax1, ax2
    const int f = 3 - ax1 - ax2;
    d.coords[static_cast<size_t>(ax1)] = -d.coords[static_cast<size_t>(ax1)];
    d.coords[static_cast<size_t>(ax2)] = -d.coords[static_cast<size_t>(ax2)];
    d.k1_hi = mul(d.k1_hi, pauli(f));
    d.k2_hi = mul(pauli(f), d.k2_hi);
}

void swap_axes(KakDecomposition& d, int ax1, int ax2) {
    if (ax1 > ax2) std::swap(ax1, ax2);
    Mat2 v;
    if (ax1 == 0 && ax2 == 1) {
        v = kSGate;  // S⊗S exchanges XX and YY
    } else if (ax1 == 0 && ax2 == 2) {
        v = kHadamard;  // H⊗H exchanges XX and ZZ
    } else {
        swap_axes(d, 0, 1);
        swap_axes(d, 0, 2);
        swap_axes(d, 0, 1);
        return;
    }
    std::swap(d.coords[static_cast<size_t>(ax1)], d.coords[static_cast<size_t>(ax2)]);
    const Mat2 vadj = adjoint(v);
    d.k1_hi = mul(d.k1_hi, vadj);
    d.k1_lo = mul(d.k1_lo, vadj);
    d.k2_hi = mul(v, d.k2_hi);
    d.k2_lo = mul(v, d.k2_lo);
}

void reduce_coords(KakDecomposition& d) {
    for (int i = 0; i < 3; ++i) {
        const int steps = static_cast<int>(std::lround(d.coords[static_cast<size_t>(i)] / (kPi / 2)));
        if (steps != 0) shift_coord(d, i, steps);
    }
    for (int i = 0; i < 3; ++i) {
        if (d.coords[static_cast<size_t>(i)] >= -kSnapTol) continue;
        for (int j = i + 1; j < 3; ++j) {
            if (d.coords[static_cast<size_t>(j)] < -kSnapTol) {
                flip_pair(d, i, j);
                break;
            }
        }
    }
    // a lone negative flips against a zero axis, or a pi/4 axis (which a
    // half-turn shift restores); otherwise it stays negative
    for (int i = 0; i < 3; ++i) {
        if (d.coords[static_cast<size_t>(i)] >= -kSnapTol) continue;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            const double cj = d.coords[static_cast<size_t>(j)];
            if (std::abs(cj) <= kSnapTol) {
                flip_pair(d, i, j);
                break;
            }
            if (std::abs(cj - kPi / 4) <= kSnapTol) {
                flip_pair(d, i, j);
                shift_coord(d, j, -1);
                break;
            }
        }
        break;
    }
    if (d.coords[0] < d.coords[1]) swap_axes(d, 0, 1);
    if (d.coords[1] < d.coords[2]) swap_axes(d, 1, 2);
    if (d.coords[0] < d.coords[1]) swap_axes(d, 0, 1);
}

Mat4 compose(double phase, const Mat2& a_hi, const Mat2& a_lo, const Mat4& mid,
             const Mat2& b_hi, const Mat2& b_lo) {
    Mat4 m = mul(kron(a_hi, a_lo), mul(mid, kron(b_hi, b_lo)));
    return scale(m, std::exp(cplx(0, phase)));
}

}  // namespace

Mat4 canonical_matrix(double x, double y, double z) {
    // diagonal in the magic basis with the Bell-state eigenphases
    const double lam[4] = {x - y + z, -x + y + z, x + y - z, -x - y - z};
    const Mat4& b = magic_basis();
    Mat4 d{};
    for (int i = 0; i < 4; ++i) at4(d, i, i) = std::exp(cplx(0, lam[i]));
    return mul(b, mul(d, adjoint(b)));
}

KakDecomposition kak_decompose(const Mat4& u) {
    if (unitarity_defect(u) > 1e-8)
        throw Error(Error::Kind::validation, "kak: input is not unitary");

    const double phase0 = std::arg(det(u)) / 4.0;
    const Mat4 usu = scale(u, std::exp(cplx(0, -phase0)));

    const Mat4& b = magic_basis();
    const Mat4 up = mul(adjoint(b), mul(usu, b));
    Mat4 upt{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) at4(upt, i, j) = at4(up, j, i);
    const Mat4 m2 = mul(upt, up);

    double p[4][4];
    if (!simultaneous_diag(m2, p))
        throw Error(Error::Kind::numeric, "kak: eigenbasis extraction failed");
    Mat4 pm{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) at4(pm, i, j) = p[i][j];
    const Mat4 pmt = adjoint(pm);  // real, adjoint == transpose

    // m2 = P diag(e^{2i lam}) P^T; pick lam with sum = 0 so det(Can) = 1
    const Mat4 diag = mul(pmt, mul(m2, pm));
    double lam[4];
    for (int i = 0; i < 3; ++i) lam[i] = std::arg(at4(diag, i, i)) / 2.0;
    lam[3] = -lam[0] - lam[1] - lam[2];

    // The true diagonal may differ by an even number of pi shifts; search
    // for the pattern that renders O1 = UP P D^{-1} real orthogonal.
    static const int kFlips[8][4] = {{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                     {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}};
    KakDecomposition out;
    bool ok = false;
    for (const auto& flip : kFlips) {
        double l[4];
        for (int i = 0; i < 4; ++i) l[i] = lam[i] + (flip[i] ? kPi : 0.0);
        Mat4 dinv{};
        for (int i = 0; i < 4; ++i) at4(dinv, i, i) = std::exp(cplx(0, -l[i]));
        const Mat4 o1 = mul(up, mul(pm, dinv));
        if (max_imag(o1) > kRealTol) continue;

        const Mat4 k1 = mul(b, mul(o1, adjoint(b)));
        const Mat4 k2 = mul(b, mul(pmt, adjoint(b)));
        Mat2 k1h, k1l, k2h, k2l;
        if (!split_product(k1, k1h, k1l, 1e-7)) continue;
        if (!split_product(k2, k2h, k2l, 1e-7)) continue;

        out.phase = phase0;
        out.k1_hi = k1h;
        out.k1_lo = k1l;
        out.k2_hi = k2h;
        out.k2_lo = k2l;
        out.coords[0] = (l[0] - l[1] + l[2] - l[3]) / 4.0;
        out.coords[1] = (-l[0] + l[1] + l[2] - l[3]) / 4.0;
        out.coords[2] = (l[0] + l[1] - l[2] - l[3]) / 4.0;
        ok = true;
        break;
    }
    if (!ok) throw Error(Error::Kind::numeric, "kak: no real orthogonal factorization found");

    reduce_coords(out);

    const Mat4 rebuilt = compose(out.phase, out.k1_hi, out.k1_lo,
                                 canonical_matrix(out.coords[0], out.coords[1], out.coords[2]),
                                 out.k2_hi, out.k2_lo);
    if (max_abs_diff(rebuilt, u) > 1e-7)
        throw Error(Error::Kind::numeric, "kak: reconstruction residual too large");
    return out;
}

namespace {

struct Builder {
    std::vector<PairOp> ops;
    Mat2 pending_hi = identity2();
    Mat2 pending_lo = identity2();

    void add_hi(const Mat2& u) { pending_hi = mul(u, pending_hi); }
    void add_lo(const Mat2& u) { pending_lo = mul(u, pending_lo); }

    static bool is_identity_up_to_phase(const Mat2& u) {
        if (std::abs(at2(u, 0, 1)) > 1e-12 || std::abs(at2(u, 1, 0)) > 1e-12) return false;
        return std::abs(std::arg(at2(u, 0, 0) / at2(u, 1, 1))) < 1e-12;
    }

    void flush() {
        if (!is_identity_up_to_phase(pending_hi))
            ops.push_back(PairOp{PairOp::Kind::one_qubit_hi, pending_hi});
        if (!is_identity_up_to_phase(pending_lo))
            ops.push_back(PairOp{PairOp::Kind::one_qubit_lo, pending_lo});
        pending_hi = identity2();
        pending_lo = identity2();
    }

    void cnot() {
        flush();
        ops.push_back(PairOp{PairOp::Kind::cnot, Mat2{}});
    }
};

Mat4 assemble(const PairOpSequence& seq) {
    Mat4 m = identity4();
    Mat4 cx{};
    at4(cx, 0, 0) = 1;
    at4(cx, 1, 1) = 1;
    at4(cx, 2, 3) = 1;
    at4(cx, 3, 2) = 1;
    for (const PairOp& op : seq.ops) {
        Mat4 g;
        switch (op.kind) {
            case PairOp::Kind::one_qubit_hi: g = kron(op.u, identity2()); break;
            case PairOp::Kind::one_qubit_lo: g = kron(identity2(), op.u); break;
            case PairOp::Kind::cnot: g = cx; break;
        }
        m = mul(g, m);  // application order
    }
    return m;
}

const KakDecomposition& cnot_reference() {
    static const KakDecomposition ref = [] {
        Mat4 cx{};
        at4(cx, 0, 0) = 1;
        at4(cx, 1, 1) = 1;
        at4(cx, 2, 3) = 1;
        at4(cx, 3, 2) = 1;
        return kak_decompose(cx);
    }();
    return ref;
}

// Emits the canonical block plus the outer locals for the given tier.
// Takes the decomposition by value: tier 2 moves the vanishing axis onto YY.
PairOpSequence build_tier(KakDecomposition d, int tier) {
    Builder bld;
    if (tier == 2 && std::abs(d.coords[1]) > kSnapTol) swap_axes(d, 1, 2);

    bld.add_hi(d.k2_hi);
    bld.add_lo(d.k2_lo);

    if (tier == 1) {
        // Can(pi/4,0,0) = e^{-i ref.phase} G1^dag CNOT G2^dag
        const KakDecomposition& ref = cnot_reference();
        bld.add_hi(adjoint(ref.k2_hi));
        bld.add_lo(adjoint(ref.k2_lo));
        bld.cnot();
        bld.add_hi(adjoint(ref.k1_hi));
        bld.add_lo(adjoint(ref.k1_lo));
    } else if (tier == 2) {
        // Can(x,0,z) = CNOT (Rx(-2x) ⊗ Rz(-2z)) CNOT
        bld.cnot();
        bld.add_hi(rx(-2.0 * d.coords[0]));
        bld.add_lo(rz(-2.0 * d.coords[2]));
        bld.cnot();
    } else if (tier == 3) {
        // Can(x,y,z) = CNOT (Rx(-2x)⊗Rz(-2z)) CZ (Rx(2y)⊗I)(S⊗V) CZ (I⊗V†)
        // with CZ = (I⊗H) CNOT (I⊗H); emitted in application order.
        bld.add_lo(adjoint(kYBasis));
        bld.add_lo(kHadamard);
        bld.cnot();
        bld.add_lo(kHadamard);
        bld.add_lo(kYBasis);
        bld.add_hi(kSGate);
        bld.add_hi(rx(2.0 * d.coords[1]));
        bld.add_lo(kHadamard);
        bld.cnot();
        bld.add_lo(kHadamard);
        bld.add_hi(rx(-2.0 * d.coords[0]));
        bld.add_lo(rz(-2.0 * d.coords[2]));
        bld.cnot();
    }
    // tier 0: only the locals remain

    bld.add_hi(d.k1_hi);
    bld.add_lo(d.k1_lo);
    bld.flush();

    PairOpSequence seq;
    seq.ops = std::move(bld.ops);
    for (const PairOp& op : seq.ops)
        if (op.kind == PairOp::Kind::cnot) ++seq.cnot_count;
    return seq;
}

}  // namespace

PairOpSequence synthesize_cnot_basis(const Mat4& u) {
    if (unitarity_defect(u) > 1e-8)
        throw Error(Error::Kind::validation, "synthesize: input is not unitary");

    Mat2 ph, pl;
    if (split_product(u, ph, pl, 1e-9)) {
        Builder bld;
        bld.add_hi(ph);
        bld.add_lo(pl);
        bld.flush();
        PairOpSequence seq;
        seq.ops = std::move(bld.ops);
        seq.cnot_count = 0;
        if (phase_overlap(assemble(seq), u) < 1.0 - kVerifyTol)
            throw Error(Error::Kind::numeric, "synthesize: product assembly failed");
        return seq;
    }

    const KakDecomposition d = kak_decompose(u);
    const auto near = [](double v, double t) { return std::abs(v - t) <= kSnapTol; };
    const double x = d.coords[0], y = d.coords[1], z = d.coords[2];

    int tier;
    if (near(x, 0) && near(y, 0) && near(z, 0)) tier = 0;
    else if (near(x, kPi / 4) && near(y, 0) && near(z, 0)) tier = 1;
    else if (near(y, 0) || near(z, 0)) tier = 2;
    else tier = 3;

    PairOpSequence seq = build_tier(d, tier);
    if (phase_overlap(assemble(seq), u) >= 1.0 - kVerifyTol) return seq;

    // snapped tiers can miss on borderline inputs; the generic tier is exact
    seq = build_tier(d, 3);
    if (phase_overlap(assemble(seq), u) < 1.0 - kVerifyTol)
        throw Error(Error::Kind::numeric, "synthesize: assembly mismatch");
    return seq;
}

EulerZYZ euler_zyz(const Mat2& u) {
    const cplx ph = std::exp(cplx(0, -std::arg(det(u)) / 2.0));
    const cplx x = at2(u, 0, 0) * ph;
    const cplx y = at2(u, 1, 0) * ph;

    EulerZYZ e{};
    e.theta = 2.0 * std::atan2(std::abs(y), std::abs(x));
    if (std::abs(y) < 1e-12) {
        e.lambda = 0.0;
        e.phi = -2.0 * std::arg(x);
    } else if (std::abs(x) < 1e-12) {
        e.lambda = 0.0;
        e.phi = 2.0 * std::arg(y);
    } else {
        e.phi = std::arg(y) - std::arg(x);
        e.lambda = -std::arg(x) - std::arg(y);
    }
    return e;
}

Mat2 u_gate_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    Mat2 m;
    at2(m, 0, 0) = c;
    at2(m, 0, 1) = -std::exp(cplx(0, lambda)) * s;
    at2(m, 1, 0) = std::exp(cplx(0, phi)) * s;
    at2(m, 1, 1) = std::exp(cplx(0, phi + lambda)) * c;
    return m;
}

}  // namespace qce
