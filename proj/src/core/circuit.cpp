#include "core/circuit.hpp"

#include <cmath>

#include "core/error.hpp"

namespace qce {

TwoQubitGate identity_gate(int qa, int qb) { return TwoQubitGate{identity4(), qa, qb}; }

TwoQubitGate cnot_gate(int qa, int qb) {
    Mat4 m{};
    at4(m, 0, 0) = 1.0;
    at4(m, 1, 1) = 1.0;
    at4(m, 2, 3) = 1.0;
    at4(m, 3, 2) = 1.0;
    return TwoQubitGate{m, qa, qb};
}

void check_gate(const TwoQubitGate& g, int n_qubits, double unitary_tol) {
    if (g.qa == g.qb) throw_invalid("gate: qubit indices must be distinct");
    if (g.qa < 0 || g.qb < 0 || g.qa >= n_qubits || g.qb >= n_qubits)
        throw_invalid("gate: qubit index out of range");
    if (unitarity_defect(g.matrix) > unitary_tol)
        throw Error(Error::Kind::validation, "gate: matrix is not unitary");
}

void apply_gate_inplace(StateVector& state, const TwoQubitGate& gate) {
    if (gate.qa == gate.qb) throw_invalid("apply_gate: qubit indices must be distinct");
    if (gate.qa < 0 || gate.qb < 0 || gate.qa >= state.n_qubits || gate.qb >= state.n_qubits)
        throw_invalid("apply_gate: qubit index out of range");

    const size_t ma = size_t{1} << gate.qa;
    const size_t mb = size_t{1} << gate.qb;
    const size_t dim = state.dim();
    const Mat4& w = gate.matrix;
    cplx* amp = state.amps.data();

    // Walk base indices with both pair bits clear; the pair spans
    // {i, i+mb, i+ma, i+ma+mb} ordered by 2*bit(qa)+bit(qb).
    for (size_t i = 0; i < dim; ++i) {
        if (i & (ma | mb)) continue;
        const size_t i00 = i;
        const size_t i01 = i | mb;
        const size_t i10 = i | ma;
        const size_t i11 = i | ma | mb;
        const cplx v0 = amp[i00], v1 = amp[i01], v2 = amp[i10], v3 = amp[i11];
        amp[i00] = w[0] * v0 + w[1] * v1 + w[2] * v2 + w[3] * v3;
        amp[i01] = w[4] * v0 + w[5] * v1 + w[6] * v2 + w[7] * v3;
        amp[i10] = w[8] * v0 + w[9] * v1 + w[10] * v2 + w[11] * v3;
        amp[i11] = w[12] * v0 + w[13] * v1 + w[14] * v2 + w[15] * v3;
    }
}

StateVector apply_gate(const StateVector& state, const TwoQubitGate& gate) {
    StateVector out = state;
    apply_gate_inplace(out, gate);
    return out;
}

StateVector run_circuit(const Circuit& circuit, const StateVector& initial) {
    if (circuit.n_qubits != initial.n_qubits)
        throw_invalid("run_circuit: qubit count mismatch");
    StateVector s = initial;
    for (const TwoQubitGate& g : circuit.gates) apply_gate_inplace(s, g);
    return s;
}

Circuit dagger_circuit(const Circuit& circuit) {
    Circuit d;
    d.n_qubits = circuit.n_qubits;
    d.gates.reserve(circuit.gates.size());
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it)
        d.gates.push_back(TwoQubitGate{adjoint(it->matrix), it->qa, it->qb});
    return d;
}

}  // namespace qce
