#pragma once

#include <cstdint>
#include <vector>

#include "core/complexmat.hpp"

namespace qce {

// Dense n-qubit state, 2^n amplitudes. Basis index i maps to qubits
// little-endian: qubit q holds bit (i >> q) & 1.
struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amps;

    size_t dim() const { return amps.size(); }
};

constexpr int kMaxQubits = 20;

StateVector zero_state(int n_qubits);

// Normalized amplitude embedding of a classical vector: n = ceil(log2(d))
// (at least 1), entries beyond d are zero. Throws on a zero vector.
StateVector from_classical(const std::vector<double>& x);
StateVector from_classical(const std::vector<cplx>& x);

cplx inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& s);

}  // namespace qce
