#include "core/aqce.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/svd4.hpp"

namespace qce {

namespace {

constexpr double kSweepImproveTol = 1e-6;
constexpr int kMaxGateBudget = 1024;

// Accumulates G = Tr_rest |psi><phi| restricted to the pair (qa, qb):
// G[r, c] = sum_rest psi[r, rest] * conj(phi[c, rest]),
// with composite pair index r = 2*bit(qa) + bit(qb).
Mat4 pair_contraction(const cplx* psi, const cplx* phi, int n_qubits, int qa, int qb) {
    const size_t ma = size_t{1} << qa;
    const size_t mb = size_t{1} << qb;
    const int lo = std::min(qa, qb);
    const int hi = std::max(qa, qb);
    const size_t lo_mask = (size_t{1} << lo) - 1;
    const size_t mid_mask = (size_t{1} << (hi - 1)) - 1;
    const size_t groups = size_t{1} << (n_qubits - 2);

    Mat4 g{};
    for (size_t rest = 0; rest < groups; ++rest) {
        // deposit the rest bits around positions lo and hi
        size_t i = rest & lo_mask;
        i |= (rest & (mid_mask & ~lo_mask)) << 1;
        i |= (rest & ~mid_mask) << 2;

        const size_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
        const cplx p0 = psi[idx[0]], p1 = psi[idx[1]], p2 = psi[idx[2]], p3 = psi[idx[3]];
        const cplx f0 = std::conj(phi[idx[0]]), f1 = std::conj(phi[idx[1]]),
                   f2 = std::conj(phi[idx[2]]), f3 = std::conj(phi[idx[3]]);
        g[0] += p0 * f0;  g[1] += p0 * f1;  g[2] += p0 * f2;  g[3] += p0 * f3;
        g[4] += p1 * f0;  g[5] += p1 * f1;  g[6] += p1 * f2;  g[7] += p1 * f3;
        g[8] += p2 * f0;  g[9] += p2 * f1;  g[10] += p2 * f2; g[11] += p2 * f3;
        g[12] += p3 * f0; g[13] += p3 * f1; g[14] += p3 * f2; g[15] += p3 * f3;
    }
    return g;
}

void apply_adjoint_inplace(StateVector& s, const TwoQubitGate& g) {
    apply_gate_inplace(s, TwoQubitGate{adjoint(g.matrix), g.qa, g.qb});
}

}  // namespace

double fidelity(const Circuit& circuit, const StateVector& target) {
    if (circuit.n_qubits != target.n_qubits)
        throw_invalid("fidelity: qubit count mismatch");
    const StateVector out = run_circuit(circuit, zero_state(circuit.n_qubits));
    return std::abs(inner_product(out, target));
}

Mat4 fidelity_env(const Circuit& circuit, const StateVector& target, int m, int qa, int qb) {
    const int M = static_cast<int>(circuit.gates.size());
    if (circuit.n_qubits != target.n_qubits)
        throw_invalid("fidelity_env: qubit count mismatch");
    if (m < 1 || m > M + 1) throw_invalid("fidelity_env: gate index out of range");
    if (qa == qb || qa < 0 || qb < 0 || qa >= circuit.n_qubits || qb >= circuit.n_qubits)
        throw_invalid("fidelity_env: invalid qubit pair");

    // Storage is application order, the paper's U_m is gates[M-m].
    // |Psi_{m+1}> applies the adjoints of gates[0 .. M-m-1] to the target;
    // |Phi_{m-1}> applies gates[M-1 .. M-m+1] (descending) to |0^n>.
    StateVector psi = target;
    for (int j = 0; j <= M - m - 1; ++j) apply_adjoint_inplace(psi, circuit.gates[static_cast<size_t>(j)]);
    StateVector phi = zero_state(circuit.n_qubits);
    for (int j = M - 1; j >= M - m + 1; --j) apply_gate_inplace(phi, circuit.gates[static_cast<size_t>(j)]);

    const Mat4 g = pair_contraction(psi.amps.data(), phi.amps.data(), circuit.n_qubits, qa, qb);
    return adjoint(g);
}

GateChoice optimal_gate(const Mat4& env) {
    const SvdResult s = svd_4x4(adjoint(env));
    GateChoice out;
    out.matrix = mul(s.X, s.Y);
    out.achievable = s.D[0] + s.D[1] + s.D[2] + s.D[3];
    return out;
}

double sweep(Circuit& circuit, const StateVector& target, std::vector<TraceEvent>* trace) {
    const int M = static_cast<int>(circuit.gates.size());
    const int n = circuit.n_qubits;
    if (M == 0) throw_invalid("sweep: circuit has no gates");
    if (n != target.n_qubits) throw_invalid("sweep: qubit count mismatch");
    if (n < 2) throw_invalid("sweep: need at least two qubits");

    // psi tracks |Psi_{m+1}> while m ascends (storage slot k = M-m descends).
    // Un-daggering the still-old gates[k-1] steps the stack back one level.
    StateVector psi = target;
    for (int j = 0; j <= M - 2; ++j) apply_adjoint_inplace(psi, circuit.gates[static_cast<size_t>(j)]);
    StateVector phi = zero_state(n);

    double achieved = 0.0;
    for (int k = M - 1; k >= 0; --k) {
        double best_s = -1.0;
        int best_a = 0, best_b = 1;
        Mat4 best_g{};
        for (int a = 0; a < n - 1; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const Mat4 g = pair_contraction(psi.amps.data(), phi.amps.data(), n, a, b);
                const double s = singular_value_sum(g);
                if (s > best_s) {
                    best_s = s;
                    best_a = a;
                    best_b = b;
                    best_g = g;
                }
            }
        }
        const SvdResult s = svd_4x4(best_g);
        circuit.gates[static_cast<size_t>(k)] = TwoQubitGate{mul(s.X, s.Y), best_a, best_b};
        achieved = best_s;
        if (trace) trace->push_back(TraceEvent{TraceEvent::Kind::gate_update, achieved});

        if (k > 0) {
            apply_gate_inplace(psi, circuit.gates[static_cast<size_t>(k - 1)]);
            apply_gate_inplace(phi, circuit.gates[static_cast<size_t>(k)]);
        }
    }
    if (trace) trace->push_back(TraceEvent{TraceEvent::Kind::sweep_done, achieved});
    return achieved;
}

void validate_params(const EncodeParams& params) {
    const int m0 = params.initial_gates == 0 ? params.delta : params.initial_gates;
    if (m0 < 1) throw_invalid("encode: initial gate count must be >= 1");
    if (params.delta < 1) throw_invalid("encode: delta must be >= 1");
    if (m0 > params.max_gates) throw_invalid("encode: initial gates exceed the gate budget");
    if (params.max_gates > kMaxGateBudget) throw_invalid("encode: gate budget above 1024");
    if (params.sweeps < 1) throw_invalid("encode: sweep count must be >= 1");
    if (!(params.target_fidelity > 0.0) || params.target_fidelity > 1.0)
        throw_invalid("encode: target fidelity must be in (0, 1]");
}

EncodeResult encode_target(const StateVector& target, const EncodeParams& params,
                           std::vector<TraceEvent>* trace) {
    validate_params(params);
    const int n = target.n_qubits;
    if (n < 2) throw_invalid("encode: need at least two qubits (input dimension >= 3)");
    const int m0 = params.initial_gates == 0 ? params.delta : params.initial_gates;

    Circuit circuit;
    circuit.n_qubits = n;
    for (int i = 0; i < m0; ++i) circuit.gates.push_back(identity_gate(0, 1));

    EncodeResult result;
    double f = std::abs(target.amps[0]);  // identity circuit overlap
    for (;;) {
        double before = f;
        for (int s = 0; s < params.sweeps; ++s) {
            f = sweep(circuit, target, trace);
            ++result.sweeps_used;
            if (f >= params.target_fidelity) break;
            if (f - before < kSweepImproveTol) break;
            before = f;
        }
        if (f >= params.target_fidelity) break;
        const int m = static_cast<int>(circuit.gates.size());
        if (m >= params.max_gates) break;

        // Grow at the |0^n>-facing end with identity gates; fidelity is
        // untouched, the next sweep assigns their pairs.
        const int add = std::min(params.delta, params.max_gates - m);
        circuit.gates.insert(circuit.gates.begin(), static_cast<size_t>(add), identity_gate(0, 1));
        if (trace) trace->push_back(TraceEvent{TraceEvent::Kind::gate_add, f});
    }

    result.circuit = std::move(circuit);
    result.fidelity = fidelity(result.circuit, target);
    result.gate_count = static_cast<int>(result.circuit.gates.size());
    return result;
}

EncodeResult encode(const std::vector<double>& x, const EncodeParams& params,
                    std::vector<TraceEvent>* trace) {
    return encode_target(from_classical(x), params, trace);
}

}  // namespace qce
