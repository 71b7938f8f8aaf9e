#include "core/svm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>

#include "core/error.hpp"

namespace qce {

namespace {

constexpr double kJitter = 1e-8;

// Shared SMO working state over Q_ij = t_i t_j K_ij.
struct Smo {
    const GramMatrix& k;
    const std::vector<int>& t;
    double c;
    double jitter;
    std::vector<double> alpha;
    std::vector<double> grad;  // (Q alpha)_i - 1

    double q(size_t i, size_t j) const {
        double v = k.at(i, j) * t[i] * t[j];
        if (i == j) v += jitter;
        return v;
    }
};

}  // namespace

BinarySvm train_binary(const GramMatrix& gram, const std::vector<int>& targets, double c_penalty,
                       const SmoOptions& opts, SmoStats* stats) {
    const size_t n = targets.size();
    if (!gram.square() || gram.rows != n) throw_invalid("train_binary: gram/target size mismatch");
    if (!(c_penalty > 0.0)) throw_invalid("train_binary: C must be positive");
    bool has_pos = false, has_neg = false;
    for (int t : targets) {
        if (t == 1) has_pos = true;
        else if (t == -1) has_neg = true;
        else throw_invalid("train_binary: targets must be +-1");
    }
    if (!has_pos || !has_neg) throw_invalid("train_binary: need samples of both classes");

    double jitter = 0.0;
    if (n <= 512 && min_eigenvalue_sym(gram) < -kJitter) jitter = kJitter;

    Smo smo{gram, targets, c_penalty, jitter, std::vector<double>(n, 0.0),
            std::vector<double>(n, -1.0)};

    long it = 0;
    double m = 0.0, M = 0.0;
    for (; it < opts.max_iterations; ++it) {
        // max-violating pair over I_up / I_low
        m = -std::numeric_limits<double>::infinity();
        M = std::numeric_limits<double>::infinity();
        size_t i_up = 0, j_low = 0;
        for (size_t i = 0; i < n; ++i) {
            const double v = -targets[i] * smo.grad[i];
            const bool in_up = (targets[i] == 1 && smo.alpha[i] < c_penalty - 0.0) ||
                               (targets[i] == -1 && smo.alpha[i] > 0.0);
            const bool in_low = (targets[i] == 1 && smo.alpha[i] > 0.0) ||
                                (targets[i] == -1 && smo.alpha[i] < c_penalty - 0.0);
            if (in_up && v > m) {
                m = v;
                i_up = i;
            }
            if (in_low && v < M) {
                M = v;
                j_low = i;
            }
        }
        if (m - M <= opts.kkt_tol) break;

        // two-variable subproblem along the feasible direction
        // d alpha_i = +t_i delta, d alpha_j = -t_j delta
        const size_t i = i_up, j = j_low;
        double a = smo.q(i, i) + smo.q(j, j) - 2.0 * targets[i] * targets[j] * smo.q(i, j);
        if (a <= 1e-12) a = 1e-12;

        double delta = (m - M) / a;
        const double lim_i = targets[i] == 1 ? c_penalty - smo.alpha[i] : smo.alpha[i];
        const double lim_j = targets[j] == 1 ? smo.alpha[j] : c_penalty - smo.alpha[j];
        delta = std::min(delta, std::min(lim_i, lim_j));
        if (delta <= 0.0) break;  // numerically stuck at the box boundary

        const double di = targets[i] * delta;
        const double dj = -targets[j] * delta;
        smo.alpha[i] = std::clamp(smo.alpha[i] + di, 0.0, c_penalty);
        smo.alpha[j] = std::clamp(smo.alpha[j] + dj, 0.0, c_penalty);
        for (size_t kx = 0; kx < n; ++kx)
            smo.grad[kx] += smo.q(kx, i) * di + smo.q(kx, j) * dj;
    }

    if (stats) {
        stats->iterations = it;
        stats->converged = m - M <= opts.kkt_tol;
        // sum(alpha) - 1/2 a^T Q a == (sum(alpha) - a^T grad) / 2
        double obj = 0.0;
        for (size_t i = 0; i < n; ++i) obj += 0.5 * smo.alpha[i] * (1.0 - smo.grad[i]);
        stats->objective = obj;
    }

    BinarySvm model;
    model.c_penalty = c_penalty;
    model.bias = (m + M) / 2.0;
    if (!std::isfinite(model.bias)) model.bias = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (smo.alpha[i] > 1e-12) {
            model.support.push_back(i);
            model.alpha.push_back(smo.alpha[i]);
            model.target.push_back(targets[i]);
        }
    }
    return model;
}

double decision(const BinarySvm& model, const std::vector<double>& kernel_row) {
    double s = model.bias;
    for (size_t k = 0; k < model.support.size(); ++k) {
        const size_t idx = model.support[k];
        if (idx >= kernel_row.size()) throw_invalid("decision: kernel row too short");
        s += model.alpha[k] * model.target[k] * kernel_row[idx];
    }
    return s;
}

MulticlassSvm train_multiclass(const GramMatrix& gram, const std::vector<int>& labels,
                               MulticlassStrategy strategy, double c_penalty,
                               const SmoOptions& opts) {
    const size_t n = labels.size();
    if (!gram.square() || gram.rows != n) throw_invalid("train_multiclass: gram/label size mismatch");
    std::set<int> class_set(labels.begin(), labels.end());
    if (class_set.size() < 2) throw_invalid("train_multiclass: need at least two classes");

    MulticlassSvm mc;
    mc.strategy = strategy;
    mc.classes.assign(class_set.begin(), class_set.end());
    mc.train_count = n;

    if (strategy == MulticlassStrategy::one_vs_rest) {
        for (int cls : mc.classes) {
            std::vector<int> t(n);
            for (size_t i = 0; i < n; ++i) t[i] = labels[i] == cls ? 1 : -1;
            BinarySvm b = train_binary(gram, t, c_penalty, opts);
            b.class_pos = cls;
            b.class_neg = -1;
            mc.models.push_back(std::move(b));
        }
        return mc;
    }

    for (size_t a = 0; a < mc.classes.size(); ++a) {
        for (size_t b = a + 1; b < mc.classes.size(); ++b) {
            const int ca = mc.classes[a], cb = mc.classes[b];
            std::vector<size_t> idx;
            std::vector<int> t;
            for (size_t i = 0; i < n; ++i) {
                if (labels[i] == ca) {
                    idx.push_back(i);
                    t.push_back(1);
                } else if (labels[i] == cb) {
                    idx.push_back(i);
                    t.push_back(-1);
                }
            }
            GramMatrix sub;
            sub.rows = sub.cols = idx.size();
            sub.data.assign(idx.size() * idx.size(), 0.0);
            for (size_t i = 0; i < idx.size(); ++i)
                for (size_t j = 0; j < idx.size(); ++j) sub.at(i, j) = gram.at(idx[i], idx[j]);

            BinarySvm model = train_binary(sub, t, c_penalty, opts);
            // remap support indices into the full training set
            for (size_t& s : model.support) s = idx[s];
            model.class_pos = ca;
            model.class_neg = cb;
            mc.models.push_back(std::move(model));
        }
    }
    return mc;
}

std::vector<int> predict(const MulticlassSvm& model, const GramMatrix& rows) {
    if (rows.rows == 0) return {};
    if (rows.cols != model.train_count)
        throw_invalid("predict: kernel row length does not match the training size");
    std::vector<int> out(rows.rows);

    std::vector<double> row(rows.cols);
    for (size_t r = 0; r < rows.rows; ++r) {
        for (size_t j = 0; j < rows.cols; ++j) row[j] = rows.at(r, j);

        if (model.strategy == MulticlassStrategy::one_vs_rest) {
            double best = -std::numeric_limits<double>::infinity();
            int cls = model.classes.front();
            for (const BinarySvm& b : model.models) {
                const double s = decision(b, row);
                if (s > best) {
                    best = s;
                    cls = b.class_pos;
                }
            }
            out[r] = cls;
            continue;
        }

        std::map<int, int> votes;
        std::map<int, double> score;
        for (int c : model.classes) {
            votes[c] = 0;
            score[c] = 0.0;
        }
        for (const BinarySvm& b : model.models) {
            const double s = decision(b, row);
            const int winner = s >= 0 ? b.class_pos : b.class_neg;
            votes[winner] += 1;
            score[b.class_pos] += s;
            score[b.class_neg] -= s;
        }
        int best_class = model.classes.front();
        for (int c : model.classes) {
            if (votes[c] > votes[best_class] ||
                (votes[c] == votes[best_class] && score[c] > score[best_class]))
                best_class = c;
        }
        out[r] = best_class;
    }
    return out;
}

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
    if (predicted.size() != truth.size()) throw_invalid("accuracy: size mismatch");
    if (predicted.empty()) return 0.0;
    size_t hit = 0;
    for (size_t i = 0; i < predicted.size(); ++i)
        if (predicted[i] == truth[i]) ++hit;
    return static_cast<double>(hit) / static_cast<double>(predicted.size());
}

void save_model(const MulticlassSvm& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Error::Kind::io, "cannot write " + path);
    out << "qce-svm 1\n";
    out << "strategy " << (model.strategy == MulticlassStrategy::one_vs_one ? "ovo" : "ovr") << "\n";
    out << "classes " << model.classes.size();
    for (int c : model.classes) out << ' ' << c;
    out << "\ntrain_count " << model.train_count << "\n";
    out << "models " << model.models.size() << "\n";
    char buf[40];
    for (const BinarySvm& b : model.models) {
        std::snprintf(buf, sizeof buf, "%.17g", b.bias);
        out << "model " << b.class_pos << ' ' << b.class_neg << ' ' << buf << ' '
            << b.c_penalty << ' ' << b.support.size() << "\n";
        for (size_t k = 0; k < b.support.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", b.alpha[k]);
            out << b.support[k] << ' ' << buf << ' ' << b.target[k] << "\n";
        }
    }
    if (!out) throw Error(Error::Kind::io, "write failed: " + path);
}

MulticlassSvm load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Kind::io, "cannot read " + path);
    std::string magic, key, strat;
    int version = 0;
    in >> magic >> version;
    if (magic != "qce-svm" || version != 1)
        throw Error(Error::Kind::parse, "not a model file: " + path);
    MulticlassSvm model;
    in >> key >> strat;
    if (key != "strategy" || (strat != "ovo" && strat != "ovr"))
        throw Error(Error::Kind::parse, "model file: bad strategy");
    model.strategy = strat == "ovo" ? MulticlassStrategy::one_vs_one : MulticlassStrategy::one_vs_rest;
    size_t n_classes = 0;
    in >> key >> n_classes;
    if (key != "classes") throw Error(Error::Kind::parse, "model file: missing classes");
    model.classes.resize(n_classes);
    for (int& c : model.classes) in >> c;
    in >> key >> model.train_count;
    if (key != "train_count") throw Error(Error::Kind::parse, "model file: missing train_count");
    size_t n_models = 0;
    in >> key >> n_models;
    if (key != "models") throw Error(Error::Kind::parse, "model file: missing models");
    for (size_t mi = 0; mi < n_models; ++mi) {
        BinarySvm b;
        size_t nsup = 0;
        in >> key >> b.class_pos >> b.class_neg >> b.bias >> b.c_penalty >> nsup;
        if (key != "model") throw Error(Error::Kind::parse, "model file: missing model record");
        b.support.resize(nsup);
        b.alpha.resize(nsup);
        b.target.resize(nsup);
        for (size_t k = 0; k < nsup; ++k) in >> b.support[k] >> b.alpha[k] >> b.target[k];
        model.models.push_back(std::move(b));
    }
    if (!in) throw Error(Error::Kind::parse, "model file: truncated");
    return model;
}

}  // namespace qce
