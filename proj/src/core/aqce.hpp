#pragma once

#include <vector>

#include "core/circuit.hpp"
#include "core/complexmat.hpp"
#include "core/statevector.hpp"

namespace qce {

// Inputs of the encoding loop: start from `initial_gates` identity gates,
// run up to `sweeps` optimization passes per round, grow by `delta` gates
// while the fidelity target is unmet and the gate budget allows.
struct EncodeParams {
    int initial_gates = 0;  // 0 picks the default (= delta)
    int delta = 12;
    int max_gates = 100;
    int sweeps = 100;
    double target_fidelity = 0.95;
};

struct EncodeResult {
    Circuit circuit;
    double fidelity = 0.0;
    int sweeps_used = 0;
    int gate_count = 0;
};

struct TraceEvent {
    enum class Kind { gate_update, gate_add, sweep_done };
    Kind kind;
    double fidelity;
};

// |<0^n| C^dagger |Psi>|
double fidelity(const Circuit& circuit, const StateVector& target);

// Fidelity environment of gate slot m (paper indexing, 1 <= m <= M+1; M+1
// probes the insertion slot next to |0^n>) for the qubit pair (qa, qb).
//
// Convention: with G = Tr_rest |Psi_{m+1}><Phi_{m-1}| the returned matrix is
// E = G^dagger, i.e. E[u,v] = sum_rest Phi_{m-1}[u,rest] * conj(Psi_{m+1}[v,rest])
// where the pair-bit composite index is 2*bit(qa) + bit(qb). For any gate W
// placed in slot m, tr(E W) is the complex conjugate of the resulting global
// overlap <0|C^dagger|Psi>; at the SVD-optimal gate it equals sum_n d_n, real.
Mat4 fidelity_env(const Circuit& circuit, const StateVector& target, int m, int qa, int qb);

struct GateChoice {
    Mat4 matrix;        // X*Y of the environment's SVD
    double achievable;  // sum of singular values = attainable |F|
};

// Best gate for an environment: svd_4x4(E^dagger) = X D Y gives U = X*Y,
// the unique (up to degeneracy) unitary with tr(E U) = sum_n d_n.
GateChoice optimal_gate(const Mat4& env);

// One full coordinate-ascent pass over every gate slot (paper steps
// (i)-(vi)): each slot is re-assigned the best qubit pair and SVD-optimal
// matrix. Returns the fidelity after the pass; never decreases it.
double sweep(Circuit& circuit, const StateVector& target, std::vector<TraceEvent>* trace = nullptr);

EncodeResult encode_target(const StateVector& target, const EncodeParams& params,
                           std::vector<TraceEvent>* trace = nullptr);

// from_classical + encode_target. Requires a vector of dimension >= 3
// (two or more qubits) so that candidate qubit pairs exist.
EncodeResult encode(const std::vector<double>& x, const EncodeParams& params,
                    std::vector<TraceEvent>* trace = nullptr);

void validate_params(const EncodeParams& params);

}  // namespace qce
