#ifndef CPSVM_SPECTRA_HPP
#define CPSVM_SPECTRA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpsvm/matrix.hpp"

namespace cpsvm {

// A corpus of spectra (or feature vectors): one row per sample, with a
// 1-based class label per row. Every class in [1, class_count] is populated.
struct LabeledDataset {
    Matrix x;
    std::vector<int> labels;
    int class_count = 0;

    std::size_t size() const { return x.rows(); }
    std::size_t dim() const { return x.cols(); }

    friend bool operator==(const LabeledDataset&, const LabeledDataset&) = default;
};

// Feature tables share the dataset layout (labels carried through).
using FeatureMatrix = LabeledDataset;

struct ValueRange {
    double lo = 0.0;
    double hi = 0.0;
};

// Synthetic stand-in for a detector corpus: each class is a fixed template of
// Gaussian peaks on a smooth decaying background. All classes share peak
// centers; they differ only in per-class peak amplitudes and widths, so the
// classes look near-identical at a glance. Per-sample variation comes from
// small peak-center jitter and Poisson counting noise.
struct SyntheticConfig {
    int class_count = 14;
    int spectra_per_class = 200;
    int channel_count = 1024;
    int peaks_per_class = 6;
    double peak_center_jitter = 1.5; // channels; per-sample uniform in [-j, +j]
    ValueRange peak_width_range{3.0, 9.0};
    ValueRange amplitude_range{50.0, 400.0};
    bool poisson_noise = true;
    std::uint64_t seed = 42;
};

// Per-spectrum min-max rescaling to [0, 1]. A constant spectrum maps to all
// zeros rather than erroring.
std::vector<double> normalize_minmax(std::span<const double> spectrum);

// In-place row-wise min-max normalization of a whole dataset.
void normalize_dataset(LabeledDataset& d);

// Stratified random split: per class, round(train_fraction * n_class)
// samples go to the training set and the rest to the test set. Both outputs
// are shuffled. Identical seeds reproduce identical splits.
std::pair<LabeledDataset, LabeledDataset>
shuffle_split(const LabeledDataset& d, double train_fraction, std::uint64_t seed);

LabeledDataset generate_synthetic(const SyntheticConfig& cfg);

// CSV with header `label,c0,...,c{N-1}`, one row per spectrum. Values are
// written with round-trip precision so save/load is lossless.
void save_dataset(const LabeledDataset& d, const std::string& path);
LabeledDataset load_dataset(const std::string& path);

} // namespace cpsvm

#endif
