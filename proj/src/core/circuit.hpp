#pragma once

#include <vector>

#include "core/complexmat.hpp"
#include "core/statevector.hpp"

namespace qce {

// 4x4 unitary acting on an ordered qubit pair. Matrix row/column index is
// 2*bit(qa) + bit(qb): qa carries the high-order bit, and qa is the qubit
// listed first in QASM (`q[a],q[b]`). For controlled gates the control is qa.
struct TwoQubitGate {
    Mat4 matrix{};
    int qa = 0;
    int qb = 1;
};

// Ordered two-qubit-gate list in application order: gates[0] acts on the
// state first. The whole-circuit operator is therefore
// gates[M-1] * ... * gates[0].
struct Circuit {
    int n_qubits = 0;
    std::vector<TwoQubitGate> gates;

    size_t gate_count() const { return gates.size(); }
};

TwoQubitGate identity_gate(int qa, int qb);
// CNOT with control qa, target qb.
TwoQubitGate cnot_gate(int qa, int qb);

// Validates qubit indices (distinct, within range) and unitarity within tol.
void check_gate(const TwoQubitGate& g, int n_qubits, double unitary_tol = 1e-10);

// state <- W|state>, in place. Preserves the norm to ~1e-15 per application.
void apply_gate_inplace(StateVector& state, const TwoQubitGate& gate);

StateVector apply_gate(const StateVector& state, const TwoQubitGate& gate);

StateVector run_circuit(const Circuit& circuit, const StateVector& initial);

// Gate list reversed with each matrix conjugate-transposed; running the
// result after the original restores the input state.
Circuit dagger_circuit(const Circuit& circuit);

}  // namespace qce
