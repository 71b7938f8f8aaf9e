#pragma once

#include <array>
#include <vector>

#include "core/complexmat.hpp"

namespace qce {

// Cartan decomposition of a two-qubit unitary:
//   U = e^{i phase} (k1_hi ⊗ k1_lo) · Can(c[0], c[1], c[2]) · (k2_hi ⊗ k2_lo)
// with Can(x,y,z) = exp(i (x XX + y YY + z ZZ)). The hi factor acts on the
// qubit carrying the high-order bit of the 4x4 index (qa of TwoQubitGate).
// Coordinates are reduced into [-pi/4, pi/4] and sorted descending; at most
// one may remain negative.
struct KakDecomposition {
    double phase = 0.0;
    Mat2 k1_hi, k1_lo, k2_hi, k2_lo;
    std::array<double, 3> coords{};
};

KakDecomposition kak_decompose(const Mat4& u);

// exp(i (x XX + y YY + z ZZ))
Mat4 canonical_matrix(double x, double y, double z);

// A two-qubit gate lowered onto the {single-qubit unitary, CNOT} basis.
// Ops are listed in application order; cnot is always control=hi, target=lo.
struct PairOp {
    enum class Kind { one_qubit_hi, one_qubit_lo, cnot };
    Kind kind;
    Mat2 u{};  // meaningful for the one-qubit kinds
};

struct PairOpSequence {
    std::vector<PairOp> ops;
    int cnot_count = 0;
};

// Synthesizes u with 0..3 CNOTs: product gates use none, CNOT-equivalent
// gates one, gates with a vanishing canonical coordinate two, generic gates
// three. The assembled sequence is verified against u (up to global phase)
// to 1e-8 before returning.
PairOpSequence synthesize_cnot_basis(const Mat4& u);

// Euler angles for the QASM U(theta, phi, lambda) builtin reproducing u up
// to global phase.
struct EulerZYZ {
    double theta, phi, lambda;
};
EulerZYZ euler_zyz(const Mat2& u);

Mat2 u_gate_matrix(double theta, double phi, double lambda);

}  // namespace qce
