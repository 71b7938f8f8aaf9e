#pragma once

#include <string>
#include <vector>

#include "core/circuit.hpp"

namespace qce {

enum class Dialect { dense, base };

struct QasmDocument {
    Dialect dialect = Dialect::dense;
    int n_qubits = 0;
    std::string text;
};

// One `DenseMatrix(2,0, r0,i0, ..., r15,i15) q[a],q[b];` line per gate in
// application order, 6-decimal fixed point, row-major entries interleaved
// real-then-imaginary. Header: `OPENQASM 2.0;` + the register declaration.
QasmDocument emit_dense(const Circuit& circuit);

// Lowers every gate onto U(theta,phi,lambda)/CX statements (at most three
// CX per gate). Simulating the result matches the dense form up to global
// phase.
QasmDocument emit_base(const Circuit& circuit);

// Accepts both dialects. Statement order in the file is application order.
// Throws Error(parse) with the 1-based line number on malformed input and
// Error(validation) for a DenseMatrix whose matrix is not unitary within
// 1e-3 (the slack covers 6-decimal truncation).
Circuit parse(const std::string& text);

QasmDocument parse_document(const std::string& text);  // dialect + qubit count only

struct TokenStream {
    std::vector<std::vector<std::string>> lines;  // one entry per statement
    int decimals = 1;

    std::vector<std::string> tokens() const;
    // rendering used for token files: tokens joined with ", ", one
    // statement per line
    std::string to_text() const;
};

// Strips headers and rounds the dense-matrix entries to `decimals` places
// (half away from zero); entries rounding to zero become the bare token
// "0". Base-dialect input is rejected.
TokenStream tokenize(const QasmDocument& doc, int decimals);

// Number-token formatting shared with the tokenizer tests.
std::string round_token(double value, int decimals);

}  // namespace qce
