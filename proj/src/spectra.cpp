#include "cpsvm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "cpsvm/numfmt.hpp"
#include "cpsvm/rng.hpp"

namespace cpsvm {

namespace {

void validate_dataset(const LabeledDataset& d) {
    if (d.size() == 0) throw std::runtime_error("dataset: no samples");
    if (d.labels.size() != d.size()) throw std::runtime_error("dataset: label count mismatch");
    std::vector<char> seen(static_cast<std::size_t>(d.class_count) + 1, 0);
    for (int lab : d.labels) {
        if (lab < 1 || lab > d.class_count) {
            throw std::runtime_error("dataset: label " + std::to_string(lab) +
                                     " outside [1, " + std::to_string(d.class_count) + "]");
        }
        seen[static_cast<std::size_t>(lab)] = 1;
    }
    for (int c = 1; c <= d.class_count; ++c) {
        if (!seen[static_cast<std::size_t>(c)]) {
            throw std::runtime_error("dataset: class " + std::to_string(c) + " has no samples");
        }
    }
}

std::vector<std::vector<std::size_t>> indices_by_class(const LabeledDataset& d) {
    std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(d.class_count));
    for (std::size_t i = 0; i < d.size(); ++i) {
        by_class[static_cast<std::size_t>(d.labels[i] - 1)].push_back(i);
    }
    return by_class;
}

LabeledDataset gather(const LabeledDataset& d, const std::vector<std::size_t>& rows) {
    LabeledDataset out;
    out.class_count = d.class_count;
    out.x = Matrix(rows.size(), d.dim());
    out.labels.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.x.set_row(i, d.x.row(rows[i]));
        out.labels[i] = d.labels[rows[i]];
    }
    return out;
}

} // namespace

std::vector<double> normalize_minmax(std::span<const double> spectrum) {
    if (spectrum.empty()) throw std::runtime_error("normalize_minmax: empty spectrum");
    const auto [lo_it, hi_it] = std::minmax_element(spectrum.begin(), spectrum.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(spectrum.size());
    if (hi == lo) return out; // constant spectrum maps to all zeros
    const double inv = 1.0 / (hi - lo);
    for (std::size_t i = 0; i < spectrum.size(); ++i) out[i] = (spectrum[i] - lo) * inv;
    return out;
}

void normalize_dataset(LabeledDataset& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto scaled = normalize_minmax(d.x.row(i));
        d.x.set_row(i, scaled);
    }
}

std::pair<LabeledDataset, LabeledDataset>
shuffle_split(const LabeledDataset& d, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::runtime_error("shuffle_split: train_fraction must be in (0, 1)");
    }
    validate_dataset(d);
    for (const auto& members : indices_by_class(d)) {
        if (members.size() < 2) throw std::runtime_error("shuffle_split: every class needs >= 2 samples");
    }

    Rng rng(seed);
    std::vector<std::size_t> train_rows, test_rows;
    for (auto& members : indices_by_class(d)) {
        rng.shuffle(members);
        const auto n_train = static_cast<std::size_t>(
            std::llround(train_fraction * static_cast<double>(members.size())));
        for (std::size_t i = 0; i < members.size(); ++i) {
            (i < n_train ? train_rows : test_rows).push_back(members[i]);
        }
    }
    rng.shuffle(train_rows);
    rng.shuffle(test_rows);
    return {gather(d, train_rows), gather(d, test_rows)};
}

LabeledDataset generate_synthetic(const SyntheticConfig& cfg) {
    if (cfg.class_count < 1 || cfg.spectra_per_class < 1 || cfg.channel_count < 1 ||
        cfg.peaks_per_class < 1) {
        throw std::runtime_error("generate_synthetic: counts must be positive");
    }
    if (!(cfg.peak_width_range.lo > 0.0 && cfg.peak_width_range.hi >= cfg.peak_width_range.lo) ||
        !(cfg.amplitude_range.lo > 0.0 && cfg.amplitude_range.hi >= cfg.amplitude_range.lo) ||
        cfg.peak_center_jitter < 0.0) {
        throw std::runtime_error("generate_synthetic: ranges must be positive and ordered");
    }

    Rng rng(cfg.seed);
    const double length = static_cast<double>(cfg.channel_count);
    const int n_peaks = cfg.peaks_per_class;

    // Shared peak centers: evenly spaced with a fixed random offset per peak,
    // identical across classes.
    std::vector<double> centers(static_cast<std::size_t>(n_peaks));
    const double spacing = length / static_cast<double>(n_peaks + 1);
    for (int p = 0; p < n_peaks; ++p) {
        centers[static_cast<std::size_t>(p)] =
            spacing * static_cast<double>(p + 1) + rng.uniform(-0.25 * spacing, 0.25 * spacing);
    }

    // Per-class peak templates (amplitude, width per peak).
    Matrix amp(static_cast<std::size_t>(cfg.class_count), static_cast<std::size_t>(n_peaks));
    Matrix width(static_cast<std::size_t>(cfg.class_count), static_cast<std::size_t>(n_peaks));
    for (int c = 0; c < cfg.class_count; ++c) {
        for (int p = 0; p < n_peaks; ++p) {
            amp(c, p) = rng.uniform(cfg.amplitude_range.lo, cfg.amplitude_range.hi);
            width(c, p) = rng.uniform(cfg.peak_width_range.lo, cfg.peak_width_range.hi);
        }
    }

    LabeledDataset d;
    d.class_count = cfg.class_count;
    const std::size_t total =
        static_cast<std::size_t>(cfg.class_count) * static_cast<std::size_t>(cfg.spectra_per_class);
    d.x = Matrix(total, static_cast<std::size_t>(cfg.channel_count));
    d.labels.resize(total);

    std::vector<double> expected(static_cast<std::size_t>(cfg.channel_count));
    std::size_t row = 0;
    for (int c = 0; c < cfg.class_count; ++c) {
        for (int s = 0; s < cfg.spectra_per_class; ++s, ++row) {
            // Smooth decaying background common to all classes.
            for (int t = 0; t < cfg.channel_count; ++t) {
                const double u = static_cast<double>(t) / length;
                expected[static_cast<std::size_t>(t)] = 30.0 * std::exp(-3.0 * u) + 5.0;
            }
            for (int p = 0; p < n_peaks; ++p) {
                const double jitter =
                    cfg.peak_center_jitter > 0.0
                        ? rng.uniform(-cfg.peak_center_jitter, cfg.peak_center_jitter)
                        : 0.0;
                const double mu = centers[static_cast<std::size_t>(p)] + jitter;
                const double a = amp(c, p);
                const double w = width(c, p);
                const double inv2w2 = 1.0 / (2.0 * w * w);
                // Evaluate only within 6 widths of the center.
                const int t0 = std::max(0, static_cast<int>(mu - 6.0 * w));
                const int t1 = std::min(cfg.channel_count - 1, static_cast<int>(mu + 6.0 * w) + 1);
                for (int t = t0; t <= t1; ++t) {
                    const double dt = static_cast<double>(t) - mu;
                    expected[static_cast<std::size_t>(t)] += a * std::exp(-dt * dt * inv2w2);
                }
            }
            for (int t = 0; t < cfg.channel_count; ++t) {
                const double lambda = expected[static_cast<std::size_t>(t)];
                d.x(row, static_cast<std::size_t>(t)) =
                    cfg.poisson_noise ? static_cast<double>(rng.poisson(lambda)) : lambda;
            }
            d.labels[row] = c + 1;
        }
    }
    return d;
}

void save_dataset(const LabeledDataset& d, const std::string& path) {
    validate_dataset(d);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "label";
    for (std::size_t j = 0; j < d.dim(); ++j) out << ",c" << j;
    out << '\n';
    std::string line;
    for (std::size_t i = 0; i < d.size(); ++i) {
        line.clear();
        line += std::to_string(d.labels[i]);
        for (std::size_t j = 0; j < d.dim(); ++j) {
            line += ',';
            line += format_double(d.x(i, j));
        }
        line += '\n';
        out << line;
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

LabeledDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);

    auto fail = [&](std::size_t line_no, const std::string& what) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
    };

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": no samples");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("label", 0) != 0) fail(line_no, "missing 'label,...' header");
    const std::size_t dim = static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
    if (dim == 0) fail(line_no, "header names no channels");

    std::vector<double> row_values;
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        row_values.clear();
        std::size_t start = 0;
        int label = 0;
        bool first = true;
        while (start <= line.size()) {
            std::size_t end = line.find(',', start);
            if (end == std::string::npos) end = line.size();
            const std::string_view field(line.data() + start, end - start);
            try {
                if (first) {
                    label = static_cast<int>(parse_long(field));
                    first = false;
                } else {
                    row_values.push_back(parse_double(field));
                }
            } catch (const std::exception& e) {
                fail(line_no, e.what());
            }
            start = end + 1;
        }
        if (row_values.size() != dim) {
            fail(line_no, "expected " + std::to_string(dim) + " channel values, got " +
                              std::to_string(row_values.size()));
        }
        if (label < 1) fail(line_no, "unknown label " + std::to_string(label));
        labels.push_back(label);
        rows.push_back(row_values);
    }
    if (rows.empty()) throw std::runtime_error(path + ": no samples");

    LabeledDataset d;
    d.class_count = *std::max_element(labels.begin(), labels.end());
    d.labels = std::move(labels);
    d.x = Matrix(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) d.x.set_row(i, rows[i]);
    validate_dataset(d);
    return d;
}

} // namespace cpsvm
