#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/circuit.hpp"
#include "core/statevector.hpp"

namespace qce {

enum class KernelMode {
    statevector,   // |<psi_j|psi_i>|^2 from the two simulated states
    concatenated,  // p_0 of C_j^dagger C_i |0^n>, the hardware-shaped route
};

// rows == cols for a training Gram; rectangular for test-vs-train blocks.
struct GramMatrix {
    size_t rows = 0, cols = 0;
    std::vector<double> data;

    double& at(size_t r, size_t c) { return data[r * cols + c]; }
    double at(size_t r, size_t c) const { return data[r * cols + c]; }
    bool square() const { return rows == cols; }
};

double kernel_entry(const Circuit& ci, const Circuit& cj, KernelMode mode);

// Symmetric Gram over one circuit list: upper triangle computed (in
// parallel when workers > 1), mirrored; diagonal simulated honestly.
GramMatrix gram(const std::vector<Circuit>& circuits, KernelMode mode, int workers = 1);

// Rectangular block K[i][j] between two circuit lists (rows x cols).
GramMatrix gram_block(const std::vector<Circuit>& rows, const std::vector<Circuit>& cols,
                      KernelMode mode, int workers = 1);

// Same contractions starting from pre-simulated states.
GramMatrix gram_from_states(const std::vector<StateVector>& states, int workers = 1);
GramMatrix gram_block_from_states(const std::vector<StateVector>& rows,
                                  const std::vector<StateVector>& cols, int workers = 1);

// smallest eigenvalue of a symmetric matrix (shifted power iteration);
// used for the PSD checks on Gram matrices
double min_eigenvalue_sym(const GramMatrix& g);

uint64_t fnv1a(const std::string& bytes, uint64_t seed = 1469598103934665603ULL);

// Text cache format: header with dimensions and source hashes, then one
// row of %.17g entries per line.
void save_gram(const GramMatrix& g, const std::string& path, uint64_t row_hash, uint64_t col_hash);
GramMatrix load_gram(const std::string& path, uint64_t expect_row_hash, uint64_t expect_col_hash);

}  // namespace qce
