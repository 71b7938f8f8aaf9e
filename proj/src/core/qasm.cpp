#include "core/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "core/error.hpp"
#include "core/kak.hpp"

namespace qce {

namespace {

std::string fixed6(double v) {
    if (v == 0.0) return "0.000000";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    if (std::strcmp(buf, "-0.000000") == 0) return "0.000000";
    return buf;
}

std::string angle17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string header_text(int n_qubits) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "qreg q[" << n_qubits << "];\n";
    return os.str();
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    std::ostringstream os;
    os << "line " << line << ": " << msg;
    throw Error(Error::Kind::parse, os.str(), line);
}

struct LineScanner {
    const std::string& s;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) parse_fail(line, std::string("expected '") + c + "' " + what);
    }

    bool starts_with(const char* kw) {
        skip_ws();
        return s.compare(pos, std::strlen(kw), kw) == 0;
    }

    void eat(const char* kw) {
        skip_ws();
        pos += std::strlen(kw);
    }

    double number() {
        skip_ws();
        const char* begin = s.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) parse_fail(line, "expected a number");
        pos += static_cast<size_t>(end - begin);
        return v;
    }

    int qubit_ref() {
        skip_ws();
        if (!starts_with("q[")) parse_fail(line, "expected qubit reference q[i]");
        eat("q[");
        const double v = number();
        expect(']', "after qubit index");
        const int q = static_cast<int>(v);
        if (q < 0 || static_cast<double>(q) != v) parse_fail(line, "qubit index must be a non-negative integer");
        return q;
    }

    void end_statement() {
        expect(';', "at end of statement");
        skip_ws();
        if (pos != s.size()) parse_fail(line, "trailing characters after ';'");
    }
};

struct ParsedDense {
    Mat4 matrix;
    int qa, qb;
    double raw[32];
};

ParsedDense parse_dense_line(const std::string& text, int line_no) {
    LineScanner sc{text, 0, line_no};
    sc.eat("DenseMatrix");
    sc.expect('(', "after DenseMatrix");
    std::vector<double> vals;
    vals.push_back(sc.number());
    while (sc.consume(',')) vals.push_back(sc.number());
    sc.expect(')', "closing DenseMatrix arguments");

    if (vals.size() < 2 || vals[0] != 2.0 || vals[1] != 0.0)
        parse_fail(line_no, "DenseMatrix must declare 2 target and 0 control qubits");
    if (vals.size() != 34)
        parse_fail(line_no, "DenseMatrix needs 32 matrix values, got " + std::to_string(vals.size() - 2));

    ParsedDense out;
    for (int k = 0; k < 16; ++k) {
        out.matrix[static_cast<size_t>(k)] = cplx(vals[static_cast<size_t>(2 + 2 * k)],
                                                  vals[static_cast<size_t>(3 + 2 * k)]);
    }
    for (int k = 0; k < 32; ++k) out.raw[k] = vals[static_cast<size_t>(2 + k)];
    out.qa = sc.qubit_ref();
    sc.expect(',', "between qubit references");
    out.qb = sc.qubit_ref();
    sc.end_statement();
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

QasmDocument emit_dense(const Circuit& circuit) {
    QasmDocument doc;
    doc.dialect = Dialect::dense;
    doc.n_qubits = circuit.n_qubits;
    std::ostringstream os;
    os << header_text(circuit.n_qubits);
    for (const TwoQubitGate& g : circuit.gates) {
        os << "DenseMatrix(2,0";
        for (int k = 0; k < 16; ++k) {
            const cplx v = g.matrix[static_cast<size_t>(k)];
            os << ',' << fixed6(v.real()) << ',' << fixed6(v.imag());
        }
        os << ") q[" << g.qa << "],q[" << g.qb << "];\n";
    }
    doc.text = os.str();
    return doc;
}

QasmDocument emit_base(const Circuit& circuit) {
    QasmDocument doc;
    doc.dialect = Dialect::base;
    doc.n_qubits = circuit.n_qubits;
    std::ostringstream os;
    os << header_text(circuit.n_qubits);
    for (const TwoQubitGate& g : circuit.gates) {
        const PairOpSequence seq = synthesize_cnot_basis(g.matrix);
        for (const PairOp& op : seq.ops) {
            switch (op.kind) {
                case PairOp::Kind::cnot:
                    os << "CX q[" << g.qa << "],q[" << g.qb << "];\n";
                    break;
                case PairOp::Kind::one_qubit_hi:
                case PairOp::Kind::one_qubit_lo: {
                    const EulerZYZ e = euler_zyz(op.u);
                    const int q = op.kind == PairOp::Kind::one_qubit_hi ? g.qa : g.qb;
                    os << "U(" << angle17(e.theta) << ',' << angle17(e.phi) << ','
                       << angle17(e.lambda) << ") q[" << q << "];\n";
                    break;
                }
            }
        }
    }
    doc.text = os.str();
    return doc;
}

namespace {

struct ParseOutput {
    Circuit circuit;
    Dialect dialect = Dialect::dense;
    bool saw_base = false;
    bool saw_dense = false;
};

ParseOutput parse_impl(const std::string& text) {
    ParseOutput out;
    int n_qubits = -1;
    bool saw_version = false;

    const std::vector<std::string> lines = split_lines(text);
    for (size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li + 1);
        const std::string& raw = lines[li];
        if (is_blank(raw)) continue;
        LineScanner sc{raw, 0, line_no};
        sc.skip_ws();

        if (sc.starts_with("//") || sc.starts_with("#")) continue;
        if (sc.starts_with("OPENQASM")) {
            saw_version = true;
            continue;
        }
        if (sc.starts_with("include")) continue;
        if (sc.starts_with("qreg")) {
            sc.eat("qreg");
            const int n = sc.qubit_ref();
            sc.end_statement();
            if (n < 1 || n > kMaxQubits) parse_fail(line_no, "register size out of range");
            if (n_qubits >= 0) parse_fail(line_no, "duplicate qreg declaration");
            n_qubits = n;
            continue;
        }
        if (sc.starts_with("creg")) continue;

        if (n_qubits < 0) parse_fail(line_no, "gate statement before qreg declaration");

        if (sc.starts_with("DenseMatrix")) {
            const ParsedDense d = parse_dense_line(raw, line_no);
            if (d.qa == d.qb) parse_fail(line_no, "qubit pair must be distinct");
            if (d.qa >= n_qubits || d.qb >= n_qubits) parse_fail(line_no, "qubit index exceeds register");
            if (unitarity_defect(d.matrix) > 1e-3)
                throw Error(Error::Kind::validation,
                            "line " + std::to_string(line_no) + ": DenseMatrix is not unitary", line_no);
            out.circuit.gates.push_back(TwoQubitGate{d.matrix, d.qa, d.qb});
            out.saw_dense = true;
            continue;
        }
        if (sc.starts_with("CX")) {
            sc.eat("CX");
            const int qa = sc.qubit_ref();
            sc.expect(',', "between qubit references");
            const int qb = sc.qubit_ref();
            sc.end_statement();
            if (qa == qb) parse_fail(line_no, "CX qubits must be distinct");
            if (qa >= n_qubits || qb >= n_qubits) parse_fail(line_no, "qubit index exceeds register");
            out.circuit.gates.push_back(cnot_gate(qa, qb));
            out.saw_base = true;
            continue;
        }
        if (sc.starts_with("U")) {
            sc.eat("U");
            sc.expect('(', "after U");
            const double theta = sc.number();
            sc.expect(',', "between angles");
            const double phi = sc.number();
            sc.expect(',', "between angles");
            const double lambda = sc.number();
            sc.expect(')', "closing U angles");
            const int q = sc.qubit_ref();
            sc.end_statement();
            if (q >= n_qubits) parse_fail(line_no, "qubit index exceeds register");
            if (n_qubits < 2) parse_fail(line_no, "single-qubit circuits are not representable");
            // fold into a pair gate together with an idle partner qubit
            const int partner = q == 0 ? 1 : 0;
            out.circuit.gates.push_back(
                TwoQubitGate{kron(u_gate_matrix(theta, phi, lambda), identity2()), q, partner});
            out.saw_base = true;
            continue;
        }
        parse_fail(line_no, "unrecognized statement");
    }

    if (!saw_version) parse_fail(1, "missing OPENQASM header");
    if (n_qubits < 0) parse_fail(1, "missing qreg declaration");
    if (out.saw_base && out.saw_dense)
        parse_fail(1, "file mixes DenseMatrix and base-form statements");
    out.circuit.n_qubits = n_qubits;
    out.dialect = out.saw_base ? Dialect::base : Dialect::dense;
    return out;
}

}  // namespace

Circuit parse(const std::string& text) { return parse_impl(text).circuit; }

QasmDocument parse_document(const std::string& text) {
    const ParseOutput out = parse_impl(text);
    QasmDocument doc;
    doc.dialect = out.dialect;
    doc.n_qubits = out.circuit.n_qubits;
    doc.text = text;
    return doc;
}

std::string round_token(double value, int decimals) {
    const double p = std::pow(10.0, decimals);
    const double r = std::round(value * p) / p;  // half away from zero
    if (r == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, r);
    return buf;
}

std::vector<std::string> TokenStream::tokens() const {
    std::vector<std::string> flat;
    for (const auto& line : lines) flat.insert(flat.end(), line.begin(), line.end());
    return flat;
}

std::string TokenStream::to_text() const {
    std::string out;
    for (const auto& line : lines) {
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) out += ", ";
            out += line[i];
        }
        out += '\n';
    }
    return out;
}

TokenStream tokenize(const QasmDocument& doc, int decimals) {
    if (doc.dialect != Dialect::dense)
        throw_invalid("tokenize: only the dense dialect is supported");
    if (decimals < 0 || decimals > 9) throw_invalid("tokenize: decimals out of range");

    TokenStream ts;
    ts.decimals = decimals;
    const std::vector<std::string> lines = split_lines(doc.text);
    for (size_t li = 0; li < lines.size(); ++li) {
        const std::string& raw = lines[li];
        LineScanner probe{raw, 0, static_cast<int>(li + 1)};
        if (!probe.starts_with("DenseMatrix")) continue;
        const ParsedDense d = parse_dense_line(raw, static_cast<int>(li + 1));
        std::vector<std::string> toks;
        toks.reserve(34);
        for (double v : d.raw) toks.push_back(round_token(v, decimals));
        toks.push_back("q[" + std::to_string(d.qa) + "]");
        toks.push_back("q[" + std::to_string(d.qb) + "]");
        ts.lines.push_back(std::move(toks));
    }
    return ts;
}

}  // namespace qce
