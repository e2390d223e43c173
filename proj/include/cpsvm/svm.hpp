#ifndef CPSVM_SVM_HPP
#define CPSVM_SVM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cpsvm/matrix.hpp"
#include "cpsvm/spectra.hpp"

namespace cpsvm::svm {

struct Hyperparams {
    double C = 1.0;
    double sigma = 1.0;
};

// Soft-margin RBF binary SVM in dual form: f(x) = sum_i alpha_i y_i k(x_i, x) + b.
struct BinarySvm {
    Matrix support_vectors;
    std::vector<double> alpha;
    std::vector<int> y; // +1 / -1, one per support vector
    double bias = 0.0;
    Hyperparams hp;
};

struct PairModel {
    int class_a = 0; // lower id, mapped to +1
    int class_b = 0;
    std::vector<int> sv_index; // rows of OvoSvmModel::sv_pool
    std::vector<double> alpha;
    std::vector<int> y;
    double bias = 0.0;
};

// One binary SVM per unordered class pair. Support vectors of all pairs are
// pooled so a prediction computes each kernel value once per test point.
struct OvoSvmModel {
    int class_count = 0;
    Hyperparams hp;
    Matrix sv_pool;
    std::vector<PairModel> pairs;

    BinarySvm pair_as_binary(std::size_t pair_index) const;
};

// Radial basis kernel exp(-||a - b||^2 / sigma^2). Note the sigma^2
// denominator: sigma is searched directly, so no 2-factor convention.
double rbf_kernel(std::span<const double> a, std::span<const double> b, double sigma);

// Gram matrix of the rows of X (serial/OpenMP per cpsvm::par::mode()).
Matrix rbf_gram(const Matrix& x, double sigma);

// SMO working-set solver for the soft-margin dual. Throws if both labels
// are not present or the KKT gap does not reach tol within the update cap.
BinarySvm train_binary(const Matrix& x, std::span<const int> y, Hyperparams hp,
                       double tol = 1e-3);

double decision_value(const BinarySvm& m, std::span<const double> x);

// Max KKT residual over the training set, given each sample's alpha regime.
double max_kkt_violation(const BinarySvm& m, const Matrix& x, std::span<const int> y);

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j k(x_i, x_j)
// evaluated at the model's multipliers.
double dual_objective(const BinarySvm& m);

OvoSvmModel train_ovo(const FeatureMatrix& f, Hyperparams hp, double tol = 1e-3);

int predict_ovo(const OvoSvmModel& m, std::span<const double> x);

// Per-row predictions (serial/OpenMP per cpsvm::par::mode()).
std::vector<int> predict_batch(const OvoSvmModel& m, const Matrix& x);

double accuracy(const OvoSvmModel& m, const FeatureMatrix& f_test);

void save_model(const OvoSvmModel& m, const std::string& path);
OvoSvmModel load_model(const std::string& path);

} // namespace cpsvm::svm

#endif
