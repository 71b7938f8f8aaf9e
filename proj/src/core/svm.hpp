#pragma once

#include <string>
#include <vector>

#include "core/kernel.hpp"

namespace qce {

// Soft-margin kernel SVM in the dual, solved with SMO (max-violating pair).
struct BinarySvm {
    std::vector<size_t> support;  // indices into the training set
    std::vector<double> alpha;    // dual coefficients of the support rows
    std::vector<int> target;      // +-1 per support row
    double bias = 0.0;
    double c_penalty = 1.0;
    int class_pos = 0;   // label mapped to +1
    int class_neg = -1;  // label mapped to -1 (or -1 marker for one-vs-rest)
};

enum class MulticlassStrategy { one_vs_one, one_vs_rest };

struct MulticlassSvm {
    MulticlassStrategy strategy = MulticlassStrategy::one_vs_one;
    std::vector<int> classes;  // sorted distinct labels
    size_t train_count = 0;
    std::vector<BinarySvm> models;
};

struct SmoOptions {
    double kkt_tol = 1e-3;
    long max_iterations = 1000000;
};

struct SmoStats {
    long iterations = 0;
    bool converged = false;
    double objective = 0.0;  // dual objective sum(alpha) - 1/2 a^T Q a
};

// Dense training interface: `targets` are +-1. Throws on single-class
// input. Gram matrices whose smallest eigenvalue is below -1e-8 get a
// 1e-8 diagonal jitter (serialized-precision kernels can dip below zero).
BinarySvm train_binary(const GramMatrix& gram, const std::vector<int>& targets, double c_penalty,
                       const SmoOptions& opts = {}, SmoStats* stats = nullptr);

// Signed score sum_n t_n alpha_n K(x_n, x) + b for a full training-set
// kernel row.
double decision(const BinarySvm& model, const std::vector<double>& kernel_row);

MulticlassSvm train_multiclass(const GramMatrix& gram, const std::vector<int>& labels,
                               MulticlassStrategy strategy, double c_penalty,
                               const SmoOptions& opts = {});

// One class id per row of `rows` (test x train kernel block).
std::vector<int> predict(const MulticlassSvm& model, const GramMatrix& rows);

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

void save_model(const MulticlassSvm& model, const std::string& path);
MulticlassSvm load_model(const std::string& path);

}  // namespace qce
