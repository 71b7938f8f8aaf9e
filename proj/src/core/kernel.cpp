#include "core/kernel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "core/error.hpp"

namespace qce {

namespace {

StateVector prepared(const Circuit& c) { return run_circuit(c, zero_state(c.n_qubits)); }

void parallel_for(size_t count, int workers, const std::function<void(size_t)>& fn) {
    if (workers <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const size_t nw = std::min<size_t>(static_cast<size_t>(workers), count);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += nw) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

double kernel_entry(const Circuit& ci, const Circuit& cj, KernelMode mode) {
    if (ci.n_qubits != cj.n_qubits) throw_invalid("kernel_entry: qubit count mismatch");
    if (mode == KernelMode::statevector) {
        const StateVector a = prepared(ci);
        const StateVector b = prepared(cj);
        return std::norm(inner_product(b, a));
    }
    // D = C_j^dagger C_i applied to |0^n>, then the all-zeros probability
    Circuit d;
    d.n_qubits = ci.n_qubits;
    d.gates = ci.gates;
    const Circuit dj = dagger_circuit(cj);
    d.gates.insert(d.gates.end(), dj.gates.begin(), dj.gates.end());
    const StateVector out = prepared(d);
    return std::norm(out.amps[0]);
}

GramMatrix gram_from_states(const std::vector<StateVector>& states, int workers) {
    const size_t n = states.size();
    if (n == 0) throw_invalid("gram: empty circuit list");
    GramMatrix g;
    g.rows = g.cols = n;
    g.data.assign(n * n, 0.0);
    parallel_for(n, workers, [&](size_t i) {
        for (size_t j = i; j < n; ++j) {
            const double v = std::norm(inner_product(states[j], states[i]));
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    });
    return g;
}

GramMatrix gram_block_from_states(const std::vector<StateVector>& rows,
                                  const std::vector<StateVector>& cols, int workers) {
    if (rows.empty() || cols.empty()) throw_invalid("gram: empty circuit list");
    GramMatrix g;
    g.rows = rows.size();
    g.cols = cols.size();
    g.data.assign(g.rows * g.cols, 0.0);
    parallel_for(g.rows, workers, [&](size_t i) {
        for (size_t j = 0; j < g.cols; ++j)
            g.at(i, j) = std::norm(inner_product(cols[j], rows[i]));
    });
    return g;
}

GramMatrix gram(const std::vector<Circuit>& circuits, KernelMode mode, int workers) {
    const size_t n = circuits.size();
    if (n == 0) throw_invalid("gram: empty circuit list");
    for (const Circuit& c : circuits)
        if (c.n_qubits != circuits[0].n_qubits) throw_invalid("gram: mixed qubit counts");

    if (mode == KernelMode::statevector) {
        std::vector<StateVector> states(n);
        parallel_for(n, workers, [&](size_t i) { states[i] = prepared(circuits[i]); });
        return gram_from_states(states, workers);
    }
    GramMatrix g;
    g.rows = g.cols = n;
    g.data.assign(n * n, 0.0);
    parallel_for(n, workers, [&](size_t i) {
        for (size_t j = i; j < n; ++j) {
            const double v = kernel_entry(circuits[i], circuits[j], mode);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    });
    return g;
}

GramMatrix gram_block(const std::vector<Circuit>& rows, const std::vector<Circuit>& cols,
                      KernelMode mode, int workers) {
    if (rows.empty() || cols.empty()) throw_invalid("gram: empty circuit list");
    if (mode == KernelMode::statevector) {
        std::vector<StateVector> rs(rows.size()), cs(cols.size());
        parallel_for(rows.size(), workers, [&](size_t i) { rs[i] = prepared(rows[i]); });
        parallel_for(cols.size(), workers, [&](size_t i) { cs[i] = prepared(cols[i]); });
        return gram_block_from_states(rs, cs, workers);
    }
    GramMatrix g;
    g.rows = rows.size();
    g.cols = cols.size();
    g.data.assign(g.rows * g.cols, 0.0);
    parallel_for(g.rows, workers, [&](size_t i) {
        for (size_t j = 0; j < g.cols; ++j) g.at(i, j) = kernel_entry(rows[i], cols[j], mode);
    });
    return g;
}

double min_eigenvalue_sym(const GramMatrix& g) {
    if (!g.square()) throw_invalid("min_eigenvalue: matrix must be square");
    const size_t n = g.rows;
    // Gershgorin upper bound, then power iteration on s*I - G.
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (size_t j = 0; j < n; ++j) row += std::abs(g.at(i, j));
        s = std::max(s, row);
    }
    std::vector<double> v(n), w(n);
    uint64_t rng = 0x9e3779b97f4a7c15ULL;
    for (double& x : v) {
        rng = rng * 6364136223846793005ULL + 1442695040888963407ULL;
        x = static_cast<double>(rng >> 11) / 9007199254740992.0 - 0.5;
    }
    double lam = 0.0;
    for (int it = 0; it < 400; ++it) {
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
        for (size_t i = 0; i < n; ++i) {
            double acc = s * v[i];
            for (size_t j = 0; j < n; ++j) acc -= g.at(i, j) * v[j];
            w[i] = acc;
        }
        lam = 0.0;
        for (size_t i = 0; i < n; ++i) lam += v[i] * w[i];
        v.swap(w);
    }
    return s - lam;  // smallest eigenvalue of G
}

uint64_t fnv1a(const std::string& bytes, uint64_t seed) {
    uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void save_gram(const GramMatrix& g, const std::string& path, uint64_t row_hash, uint64_t col_hash) {
    std::ofstream out(path);
    if (!out) throw Error(Error::Kind::io, "cannot write " + path);
    out << "qce-gram 1\n";
    out << "rows " << g.rows << "\ncols " << g.cols << "\n";
    char hb[64];
    std::snprintf(hb, sizeof hb, "hash %016llx %016llx\n",
                  static_cast<unsigned long long>(row_hash), static_cast<unsigned long long>(col_hash));
    out << hb;
    char buf[40];
    for (size_t i = 0; i < g.rows; ++i) {
        for (size_t j = 0; j < g.cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", g.at(i, j));
            out << buf << (j + 1 == g.cols ? "\n" : " ");
        }
    }
    if (!out) throw Error(Error::Kind::io, "write failed: " + path);
}

GramMatrix load_gram(const std::string& path, uint64_t expect_row_hash, uint64_t expect_col_hash) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Kind::io, "cannot read " + path);
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "qce-gram" || version != 1)
        throw Error(Error::Kind::parse, "not a gram cache file: " + path);
    std::string key;
    GramMatrix g;
    in >> key >> g.rows;
    if (key != "rows") throw Error(Error::Kind::parse, "gram cache: missing rows");
    in >> key >> g.cols;
    if (key != "cols") throw Error(Error::Kind::parse, "gram cache: missing cols");
    std::string h1, h2;
    in >> key >> h1 >> h2;
    if (key != "hash") throw Error(Error::Kind::parse, "gram cache: missing hash");
    if (expect_row_hash || expect_col_hash) {
        char hb1[20], hb2[20];
        std::snprintf(hb1, sizeof hb1, "%016llx", static_cast<unsigned long long>(expect_row_hash));
        std::snprintf(hb2, sizeof hb2, "%016llx", static_cast<unsigned long long>(expect_col_hash));
        if (h1 != hb1 || h2 != hb2)
            throw Error(Error::Kind::validation, "gram cache does not match its sources: " + path);
    }
    g.data.assign(g.rows * g.cols, 0.0);
    for (double& v : g.data)
        if (!(in >> v)) throw Error(Error::Kind::parse, "gram cache: truncated matrix");
    return g;
}

}  // namespace qce
