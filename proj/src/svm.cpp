#include "cpsvm/svm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cpsvm/numfmt.hpp"
#include "cpsvm/parallel.hpp"

namespace cpsvm::svm {

namespace {

constexpr double kTau = 1e-12;

void check_hyperparams(Hyperparams hp) {
    if (!(hp.C > 0.0) || !(hp.sigma > 0.0)) {
        throw std::runtime_error("svm: C and sigma must be positive");
    }
}

double rbf_from_sqdist(double sq, double sigma) { return std::exp(-sq / (sigma * sigma)); }

struct SmoOut {
    std::vector<double> alpha;
    double bias = 0.0;
    double gap = 0.0;
    bool converged = false;
};

// Two-variable working-set descent on the dual:
//   min 1/2 a^T Q a - e^T a,  0 <= a <= C,  y^T a = 0,  Q_ij = y_i y_j K_ij.
// Pair selection is the maximal-violating-pair rule with a second-order
// refinement for the second index.
SmoOut smo(const Matrix& gram, std::span<const int> y, double C, double tol,
           std::size_t max_updates) {
    const std::size_t n = y.size();
    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n, -1.0);

    auto q = [&](std::size_t i, std::size_t j) {
        return static_cast<double>(y[i] * y[j]) * gram(i, j);
    };

    double gap = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (std::size_t update = 0; update < max_updates; ++update) {
        // First index: largest -y G over samples that can move up.
        double g_max = -std::numeric_limits<double>::infinity();
        std::size_t i = n;
        for (std::size_t t = 0; t < n; ++t) {
            const bool in_up = (y[t] > 0 && alpha[t] < C) || (y[t] < 0 && alpha[t] > 0);
            if (!in_up) continue;
            const double v = -static_cast<double>(y[t]) * grad[t];
            if (v > g_max) {
                g_max = v;
                i = t;
            }
        }

        // Second index: best second-order objective decrease among samples
        // that can move down and still violate against i.
        double g_min = std::numeric_limits<double>::infinity();
        double best_obj = 0.0;
        std::size_t j = n;
        for (std::size_t t = 0; t < n; ++t) {
            const bool in_low = (y[t] > 0 && alpha[t] > 0) || (y[t] < 0 && alpha[t] < C);
            if (!in_low) continue;
            const double v = -static_cast<double>(y[t]) * grad[t];
            g_min = std::min(g_min, v);
            const double diff = g_max - v;
            if (diff > 0.0 && i < n) {
                double quad = gram(i, i) + gram(t, t) - 2.0 * gram(i, t);
                if (quad <= 0.0) quad = kTau;
                const double obj = -(diff * diff) / quad;
                if (obj < best_obj) {
                    best_obj = obj;
                    j = t;
                }
            }
        }

        gap = g_max - g_min;
        if (gap <= tol) {
            converged = true;
            break;
        }
        if (i >= n || j >= n) break; // no admissible pair left

        const double old_ai = alpha[i];
        const double old_aj = alpha[j];
        if (y[i] != y[j]) {
            double quad = gram(i, i) + gram(j, j) - 2.0 * gram(i, j);
            if (quad <= 0.0) quad = kTau;
            const double delta = (-grad[i] - grad[j]) / quad;
            const double diff = alpha[i] - alpha[j];
            alpha[i] += delta;
            alpha[j] += delta;
            if (diff > 0.0) {
                if (alpha[j] < 0.0) {
                    alpha[j] = 0.0;
                    alpha[i] = diff;
                }
            } else {
                if (alpha[i] < 0.0) {
                    alpha[i] = 0.0;
                    alpha[j] = -diff;
                }
            }
            if (diff > 0.0) {
                if (alpha[i] > C) {
                    alpha[i] = C;
                    alpha[j] = C - diff;
                }
            } else {
                if (alpha[j] > C) {
                    alpha[j] = C;
                    alpha[i] = C + diff;
                }
            }
        } else {
            double quad = gram(i, i) + gram(j, j) - 2.0 * gram(i, j);
            if (quad <= 0.0) quad = kTau;
            const double delta = (grad[i] - grad[j]) / quad;
            const double sum = alpha[i] + alpha[j];
            alpha[i] -= delta;
            alpha[j] += delta;
            if (sum > C) {
                if (alpha[i] > C) {
                    alpha[i] = C;
                    alpha[j] = sum - C;
                }
            } else {
                if (alpha[j] < 0.0) {
                    alpha[j] = 0.0;
                    alpha[i] = sum;
                }
            }
            if (sum > C) {
                if (alpha[j] > C) {
                    alpha[j] = C;
                    alpha[i] = sum - C;
                }
            } else {
                if (alpha[i] < 0.0) {
                    alpha[i] = 0.0;
                    alpha[j] = sum;
                }
            }
        }

        const double di = alpha[i] - old_ai;
        const double dj = alpha[j] - old_aj;
        for (std::size_t t = 0; t < n; ++t) {
            grad[t] += q(t, i) * di + q(t, j) * dj;
        }
    }

    SmoOut out;
    out.alpha = std::move(alpha);
    out.gap = gap;
    out.converged = converged;

    // Bias from free support vectors, averaged; midpoint of the bound
    // estimates when no multiplier is strictly inside (0, C).
    double sum_free = 0.0;
    std::size_t n_free = 0;
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
        const double v = -static_cast<double>(y[t]) * grad[t];
        const bool in_up = (y[t] > 0 && out.alpha[t] < C) || (y[t] < 0 && out.alpha[t] > 0);
        const bool in_low = (y[t] > 0 && out.alpha[t] > 0) || (y[t] < 0 && out.alpha[t] < C);
        if (out.alpha[t] > 0.0 && out.alpha[t] < C) {
            sum_free += v;
            ++n_free;
        } else {
            if (in_up) lb = std::max(lb, v);
            if (in_low) ub = std::min(ub, v);
        }
    }
    out.bias = n_free > 0 ? sum_free / static_cast<double>(n_free) : 0.5 * (ub + lb);
    return out;
}

BinarySvm pack_model(const Matrix& x, std::span<const int> y, Hyperparams hp,
                     const SmoOut& sol) {
    BinarySvm m;
    m.hp = hp;
    m.bias = sol.bias;
    std::vector<std::size_t> sv_rows;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (sol.alpha[i] > 0.0) sv_rows.push_back(i);
    }
    m.support_vectors = Matrix(sv_rows.size(), x.cols());
    m.alpha.resize(sv_rows.size());
    m.y.resize(sv_rows.size());
    for (std::size_t k = 0; k < sv_rows.size(); ++k) {
        m.support_vectors.set_row(k, x.row(sv_rows[k]));
        m.alpha[k] = sol.alpha[sv_rows[k]];
        m.y[k] = y[sv_rows[k]];
    }
    return m;
}

std::size_t update_cap(std::size_t n) { return 200000 + 100 * n; }

} // namespace

double rbf_kernel(std::span<const double> a, std::span<const double> b, double sigma) {
    if (a.size() != b.size()) throw std::runtime_error("rbf_kernel: length mismatch");
    if (!(sigma > 0.0)) throw std::runtime_error("rbf_kernel: sigma must be positive");
    return rbf_from_sqdist(squared_distance(a, b), sigma);
}

namespace detail {

void rbf_gram_serial(const Matrix& x, double sigma, Matrix& out) {
    const std::size_t n = x.rows();
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double k = rbf_from_sqdist(squared_distance(x.row(i), x.row(j)), sigma);
            out(i, j) = k;
            out(j, i) = k;
        }
    }
}

void rbf_gram_openmp(const Matrix& x, double sigma, Matrix& out) {
    const auto n = static_cast<long long>(x.rows());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        out(ui, ui) = 1.0;
        for (std::size_t j = ui + 1; j < static_cast<std::size_t>(n); ++j) {
            const double k = rbf_from_sqdist(squared_distance(x.row(ui), x.row(j)), sigma);
            out(ui, j) = k;
            out(j, ui) = k;
        }
    }
}

} // namespace detail

Matrix rbf_gram(const Matrix& x, double sigma) {
    if (!(sigma > 0.0)) throw std::runtime_error("rbf_gram: sigma must be positive");
    Matrix out(x.rows(), x.rows());
    if (par::mode() == par::Mode::openmp) {
        detail::rbf_gram_openmp(x, sigma, out);
    } else {
        detail::rbf_gram_serial(x, sigma, out);
    }
    return out;
}

BinarySvm train_binary(const Matrix& x, std::span<const int> y, Hyperparams hp, double tol) {
    check_hyperparams(hp);
    if (x.rows() < 2 || y.size() != x.rows()) {
        throw std::runtime_error("train_binary: need at least two labeled samples");
    }
    bool has_pos = false, has_neg = false;
    for (int v : y) {
        if (v == 1) has_pos = true;
        else if (v == -1) has_neg = true;
        else throw std::runtime_error("train_binary: labels must be +1/-1");
    }
    if (!has_pos || !has_neg) {
        throw std::runtime_error("train_binary: both classes must be present");
    }

    const Matrix gram = rbf_gram(x, hp.sigma);
    const SmoOut sol = smo(gram, y, hp.C, tol, update_cap(x.rows()));
    if (!sol.converged) {
        throw std::runtime_error("train_binary: no convergence, max KKT violation " +
                                 format_double(sol.gap));
    }
    return pack_model(x, y, hp, sol);
}

double decision_value(const BinarySvm& m, std::span<const double> x) {
    if (m.support_vectors.rows() > 0 && x.size() != m.support_vectors.cols()) {
        throw std::runtime_error("decision_value: length mismatch");
    }
    double f = m.bias;
    for (std::size_t i = 0; i < m.support_vectors.rows(); ++i) {
        f += m.alpha[i] * static_cast<double>(m.y[i]) *
             rbf_kernel(m.support_vectors.row(i), x, m.hp.sigma);
    }
    return f;
}

double max_kkt_violation(const BinarySvm& m, const Matrix& x, std::span<const int> y) {
    // Match training rows to support vectors to recover each alpha.
    std::map<std::vector<double>, double> alpha_of;
    for (std::size_t k = 0; k < m.support_vectors.rows(); ++k) {
        const auto row = m.support_vectors.row(k);
        alpha_of[std::vector<double>(row.begin(), row.end())] += m.alpha[k];
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto row = x.row(i);
        const auto it = alpha_of.find(std::vector<double>(row.begin(), row.end()));
        const double a = it == alpha_of.end() ? 0.0 : it->second;
        const double margin = static_cast<double>(y[i]) * decision_value(m, row);
        double r;
        if (a <= 0.0) {
            r = std::max(0.0, 1.0 - margin);
        } else if (a >= m.hp.C) {
            r = std::max(0.0, margin - 1.0);
        } else {
            r = std::abs(margin - 1.0);
        }
        worst = std::max(worst, r);
    }
    return worst;
}

double dual_objective(const BinarySvm& m) {
    const std::size_t n = m.support_vectors.rows();
    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) obj += m.alpha[i];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            obj -= 0.5 * m.alpha[i] * m.alpha[j] * static_cast<double>(m.y[i] * m.y[j]) *
                   rbf_kernel(m.support_vectors.row(i), m.support_vectors.row(j), m.hp.sigma);
        }
    }
    return obj;
}

namespace {

struct PairTask {
    int class_a;
    int class_b;
    std::vector<int> rows; // indices into the training matrix
};

std::vector<PairTask> make_pair_tasks(const FeatureMatrix& f) {
    std::vector<std::vector<int>> by_class(static_cast<std::size_t>(f.class_count));
    for (std::size_t i = 0; i < f.size(); ++i) {
        by_class[static_cast<std::size_t>(f.labels[i] - 1)].push_back(static_cast<int>(i));
    }
    for (int c = 0; c < f.class_count; ++c) {
        if (by_class[static_cast<std::size_t>(c)].empty()) {
            throw std::runtime_error("train_ovo: class " + std::to_string(c + 1) +
                                     " has no samples");
        }
    }
    std::vector<PairTask> tasks;
    for (int a = 1; a <= f.class_count; ++a) {
        for (int b = a + 1; b <= f.class_count; ++b) {
            PairTask t;
            t.class_a = a;
            t.class_b = b;
            for (int r : by_class[static_cast<std::size_t>(a - 1)]) t.rows.push_back(r);
            for (int r : by_class[static_cast<std::size_t>(b - 1)]) t.rows.push_back(r);
            tasks.push_back(std::move(t));
        }
    }
    return tasks;
}

// Train one pair against the shared full-training Gram.
PairModel train_pair(const PairTask& task, const FeatureMatrix& f, const Matrix& gram,
                     Hyperparams hp, double tol) {
    const std::size_t n = task.rows.size();
    Matrix local(n, n);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = f.labels[static_cast<std::size_t>(task.rows[i])] == task.class_a ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
            local(i, j) = gram(static_cast<std::size_t>(task.rows[i]),
                               static_cast<std::size_t>(task.rows[j]));
        }
    }
    const SmoOut sol = smo(local, y, hp.C, tol, update_cap(n));
    if (!sol.converged) {
        throw std::runtime_error("pair (" + std::to_string(task.class_a) + ", " +
                                 std::to_string(task.class_b) +
                                 "): no convergence, max KKT violation " +
                                 format_double(sol.gap));
    }
    PairModel pm;
    pm.class_a = task.class_a;
    pm.class_b = task.class_b;
    pm.bias = sol.bias;
    for (std::size_t i = 0; i < n; ++i) {
        if (sol.alpha[i] > 0.0) {
            pm.sv_index.push_back(task.rows[i]);
            pm.alpha.push_back(sol.alpha[i]);
            pm.y.push_back(y[i]);
        }
    }
    return pm;
}

// Replace training-row indices with rows of a compact pool holding only
// vectors that support at least one pair.
void build_pool(OvoSvmModel& m, const FeatureMatrix& f) {
    std::vector<int> pool_slot(f.size(), -1);
    std::vector<int> used;
    for (const auto& pm : m.pairs) {
        for (int r : pm.sv_index) {
            if (pool_slot[static_cast<std::size_t>(r)] < 0) {
                pool_slot[static_cast<std::size_t>(r)] = static_cast<int>(used.size());
                used.push_back(r);
            }
        }
    }
    m.sv_pool = Matrix(used.size(), f.dim());
    for (std::size_t k = 0; k < used.size(); ++k) {
        m.sv_pool.set_row(k, f.x.row(static_cast<std::size_t>(used[k])));
    }
    for (auto& pm : m.pairs) {
        for (int& r : pm.sv_index) r = pool_slot[static_cast<std::size_t>(r)];
    }
}

void vote_row(const OvoSvmModel& m, std::span<const double> kernel_values,
              std::vector<int>& votes, std::vector<double>& magnitude) {
    std::fill(votes.begin(), votes.end(), 0);
    std::fill(magnitude.begin(), magnitude.end(), 0.0);
    for (const auto& pm : m.pairs) {
        double f = pm.bias;
        for (std::size_t i = 0; i < pm.sv_index.size(); ++i) {
            f += pm.alpha[i] * static_cast<double>(pm.y[i]) *
                 kernel_values[static_cast<std::size_t>(pm.sv_index[i])];
        }
        const int winner = f > 0.0 ? pm.class_a : pm.class_b;
        votes[static_cast<std::size_t>(winner - 1)] += 1;
        magnitude[static_cast<std::size_t>(pm.class_a - 1)] += std::abs(f);
        magnitude[static_cast<std::size_t>(pm.class_b - 1)] += std::abs(f);
    }
}

int pick_winner(std::span<const int> votes, std::span<const double> magnitude) {
    int best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c) {
        const auto bc = static_cast<std::size_t>(best);
        if (votes[c] > votes[bc] ||
            (votes[c] == votes[bc] && magnitude[c] > magnitude[bc])) {
            best = static_cast<int>(c);
        }
    }
    return best + 1;
}

int predict_pooled(const OvoSvmModel& m, std::span<const double> x,
                   std::vector<double>& kv, std::vector<int>& votes,
                   std::vector<double>& magnitude) {
    for (std::size_t r = 0; r < m.sv_pool.rows(); ++r) {
        kv[r] = rbf_kernel(m.sv_pool.row(r), x, m.hp.sigma);
    }
    vote_row(m, kv, votes, magnitude);
    return pick_winner(votes, magnitude);
}

} // namespace

BinarySvm OvoSvmModel::pair_as_binary(std::size_t pair_index) const {
    const PairModel& pm = pairs.at(pair_index);
    BinarySvm b;
    b.hp = hp;
    b.bias = pm.bias;
    b.support_vectors = Matrix(pm.sv_index.size(), sv_pool.cols());
    for (std::size_t i = 0; i < pm.sv_index.size(); ++i) {
        b.support_vectors.set_row(i, sv_pool.row(static_cast<std::size_t>(pm.sv_index[i])));
    }
    b.alpha = pm.alpha;
    b.y = pm.y;
    return b;
}

OvoSvmModel train_ovo(const FeatureMatrix& f, Hyperparams hp, double tol) {
    check_hyperparams(hp);
    if (f.class_count < 2) throw std::runtime_error("train_ovo: need at least two classes");
    if (f.size() == 0) throw std::runtime_error("train_ovo: empty training set");

    const auto tasks = make_pair_tasks(f);
    const Matrix gram = rbf_gram(f.x, hp.sigma);

    OvoSvmModel m;
    m.class_count = f.class_count;
    m.hp = hp;
    m.pairs.resize(tasks.size());

    std::string first_error;
    if (par::mode() == par::Mode::openmp) {
        const auto n_tasks = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
        for (long long t = 0; t < n_tasks; ++t) {
            try {
                m.pairs[static_cast<std::size_t>(t)] =
                    train_pair(tasks[static_cast<std::size_t>(t)], f, gram, hp, tol);
            } catch (const std::exception& e) {
#pragma omp critical
                if (first_error.empty()) first_error = e.what();
            }
        }
    } else {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            try {
                m.pairs[t] = train_pair(tasks[t], f, gram, hp, tol);
            } catch (const std::exception& e) {
                if (first_error.empty()) first_error = e.what();
                break;
            }
        }
    }
    if (!first_error.empty()) throw std::runtime_error("train_ovo: " + first_error);

    build_pool(m, f);
    return m;
}

int predict_ovo(const OvoSvmModel& m, std::span<const double> x) {
    if (x.size() != m.sv_pool.cols()) throw std::runtime_error("predict_ovo: length mismatch");
    std::vector<double> kv(m.sv_pool.rows());
    std::vector<int> votes(static_cast<std::size_t>(m.class_count));
    std::vector<double> magnitude(static_cast<std::size_t>(m.class_count));
    return predict_pooled(m, x, kv, votes, magnitude);
}

namespace detail {

void predict_batch_serial(const OvoSvmModel& m, const Matrix& x, std::vector<int>& out) {
    std::vector<double> kv(m.sv_pool.rows());
    std::vector<int> votes(static_cast<std::size_t>(m.class_count));
    std::vector<double> magnitude(static_cast<std::size_t>(m.class_count));
    for (std::size_t r = 0; r < x.rows(); ++r) {
        out[r] = predict_pooled(m, x.row(r), kv, votes, magnitude);
    }
}

void predict_batch_openmp(const OvoSvmModel& m, const Matrix& x, std::vector<int>& out) {
    const auto n = static_cast<long long>(x.rows());
#pragma omp parallel
    {
        std::vector<double> kv(m.sv_pool.rows());
        std::vector<int> votes(static_cast<std::size_t>(m.class_count));
        std::vector<double> magnitude(static_cast<std::size_t>(m.class_count));
#pragma omp for schedule(static)
        for (long long r = 0; r < n; ++r) {
            out[static_cast<std::size_t>(r)] =
                predict_pooled(m, x.row(static_cast<std::size_t>(r)), kv, votes, magnitude);
        }
    }
}

} // namespace detail

std::vector<int> predict_batch(const OvoSvmModel& m, const Matrix& x) {
    if (x.cols() != m.sv_pool.cols()) throw std::runtime_error("predict_batch: width mismatch");
    std::vector<int> out(x.rows());
    if (par::mode() == par::Mode::openmp) {
        detail::predict_batch_openmp(m, x, out);
    } else {
        detail::predict_batch_serial(m, x, out);
    }
    return out;
}

double accuracy(const OvoSvmModel& m, const FeatureMatrix& f_test) {
    if (f_test.size() == 0) throw std::runtime_error("accuracy: empty test set");
    const auto preds = predict_batch(m, f_test.x);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if (preds[i] == f_test.labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(preds.size());
}

void save_model(const OvoSvmModel& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "ovo-rbf-svm v1\n";
    out << "classes " << m.class_count << " dim " << m.sv_pool.cols() << '\n';
    out << "C " << format_double(m.hp.C) << " sigma " << format_double(m.hp.sigma) << '\n';
    out << "pairs " << m.pairs.size() << '\n';
    for (const auto& pm : m.pairs) {
        out << "pair " << pm.class_a << ' ' << pm.class_b << " sv " << pm.sv_index.size()
            << " bias " << format_double(pm.bias) << '\n';
        for (std::size_t i = 0; i < pm.sv_index.size(); ++i) {
            out << format_double(pm.alpha[i]) << ' ' << pm.y[i];
            const auto row = m.sv_pool.row(static_cast<std::size_t>(pm.sv_index[i]));
            for (double v : row) out << ' ' << format_double(v);
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

OvoSvmModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    auto next_line = [&]() {
        if (!std::getline(in, line)) throw std::runtime_error(path + ": truncated model file");
        return std::istringstream(line);
    };

    next_line();
    if (line != "ovo-rbf-svm v1") throw std::runtime_error(path + ": not an ovo-rbf-svm file");

    OvoSvmModel m;
    std::string tag;
    std::size_t dim = 0, n_pairs = 0;
    {
        auto s = next_line();
        s >> tag >> m.class_count >> tag >> dim;
    }
    {
        auto s = next_line();
        std::string c_str, sig_str;
        s >> tag >> c_str >> tag >> sig_str;
        m.hp.C = parse_double(c_str);
        m.hp.sigma = parse_double(sig_str);
    }
    {
        auto s = next_line();
        s >> tag >> n_pairs;
    }

    // Identical rows shared by several pairs collapse to one pool entry.
    std::map<std::vector<double>, int> pool_slot;
    std::vector<std::vector<double>> pool_rows;
    for (std::size_t p = 0; p < n_pairs; ++p) {
        PairModel pm;
        std::size_t n_sv = 0;
        std::string bias_str;
        {
            auto s = next_line();
            s >> tag >> pm.class_a >> pm.class_b >> tag >> n_sv >> tag >> bias_str;
            pm.bias = parse_double(bias_str);
        }
        for (std::size_t i = 0; i < n_sv; ++i) {
            auto s = next_line();
            std::string alpha_str;
            int label = 0;
            s >> alpha_str >> label;
            std::vector<double> row(dim);
            std::string v;
            for (std::size_t j = 0; j < dim; ++j) {
                if (!(s >> v)) throw std::runtime_error(path + ": truncated support vector");
                row[j] = parse_double(v);
            }
            auto [it, inserted] = pool_slot.try_emplace(row, static_cast<int>(pool_rows.size()));
            if (inserted) pool_rows.push_back(std::move(row));
            pm.sv_index.push_back(it->second);
            pm.alpha.push_back(parse_double(alpha_str));
            pm.y.push_back(label);
        }
        m.pairs.push_back(std::move(pm));
    }
    m.sv_pool = Matrix(pool_rows.size(), dim);
    for (std::size_t r = 0; r < pool_rows.size(); ++r) m.sv_pool.set_row(r, pool_rows[r]);
    return m;
}

} // namespace cpsvm::svm
