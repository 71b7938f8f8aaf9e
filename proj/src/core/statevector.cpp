#include "core/statevector.hpp"

#include <cmath>

#include "core/error.hpp"

namespace qce {

StateVector zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw_invalid("zero_state: qubit count must be in [1, 20]");
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(size_t{1} << n_qubits, cplx{0.0, 0.0});
    s.amps[0] = 1.0;
    return s;
}

namespace {

StateVector embed(const std::vector<cplx>& x) {
    if (x.empty()) throw_invalid("from_classical: empty vector");
    int n = 1;
    while ((size_t{1} << n) < x.size()) ++n;
    if (n > kMaxQubits) throw_invalid("from_classical: vector longer than 2^20");

    double nrm2 = 0.0;
    for (const cplx& v : x) nrm2 += std::norm(v);
    if (!(nrm2 > 0.0) || !std::isfinite(nrm2))
        throw Error(Error::Kind::numeric, "from_classical: vector has zero or non-finite norm");
    const double inv = 1.0 / std::sqrt(nrm2);

    StateVector s;
    s.n_qubits = n;
    s.amps.assign(size_t{1} << n, cplx{0.0, 0.0});
    for (size_t i = 0; i < x.size(); ++i) s.amps[i] = x[i] * inv;
    return s;
}

}  // namespace

StateVector from_classical(const std::vector<double>& x) {
    std::vector<cplx> c(x.begin(), x.end());
    return embed(c);
}

StateVector from_classical(const std::vector<cplx>& x) { return embed(x); }

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits)
        throw_invalid("inner_product: qubit count mismatch");
    cplx s = 0.0;
    for (size_t i = 0; i < a.amps.size(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
    return s;
}

double norm(const StateVector& s) {
    double n2 = 0.0;
    for (const cplx& v : s.amps) n2 += std::norm(v);
    return std::sqrt(n2);
}

}  // namespace qce
