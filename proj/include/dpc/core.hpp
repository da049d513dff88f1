#ifndef DPC_CORE_HPP
#define DPC_CORE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dpc {

/// One measured specimen: the process parameters that produced it and the
/// properties measured on it.
struct Sample {
    std::string experiment_id;
    std::string sample_id;
    std::vector<double> features;
    std::map<std::string, double> properties;

    double property(const std::string& name) const;
};

/// Samples grouped by the experiment that produced them. Immutable after
/// construction by convention; all operations below are pure.
struct Dataset {
    struct Experiment {
        std::string id;
        std::vector<Sample> samples;
    };

    std::vector<std::string> feature_names;
    std::vector<std::string> property_names;
    std::vector<Experiment> experiments;

    std::size_t n_experiments() const { return experiments.size(); }
    std::size_t total_samples() const;
    std::size_t feature_dim() const { return feature_names.size(); }

    /// All samples flattened in experiment order, row order preserved.
    std::vector<Sample> flatten() const;

    /// Property column across all samples, same order as flatten().
    std::vector<double> property_values(const std::string& name) const;

    bool has_property(const std::string& name) const;
};

/// The minimum property difference treated as meaningful.
struct Threshold {
    enum class Recipe { Absolute, StdFraction };

    double value = 0.0;     // resolved t, >= 0
    Recipe recipe = Recipe::Absolute;
    double fraction = 0.0;  // only meaningful for StdFraction

    static Threshold absolute(double t);

    nlohmann::json to_json() const;
    static Threshold from_json(const nlohmann::json& j);
};

// --- CSV schema ---
// Header: experiment_id,sample_id,<feature...>,<property...>
// UTF-8, '.' decimal separator, no quoting; ids must not contain commas.
// Property columns are the ones named in `property_names`; every remaining
// column after the two id columns is a feature, in file order.

/// Loads a dataset CSV. Rows are grouped by experiment_id (first-appearance
/// order), file row order preserved within each experiment.
/// Throws: EmptyFileError, MissingColumnError, NonNumericCellError (with the
/// 1-based data row and column name), DuplicateSampleIdError.
Dataset load_dataset(const std::string& path,
                     const std::vector<std::string>& property_names);

/// Parses the same schema from an in-memory string (used by tests and the
/// loader itself).
Dataset parse_dataset_csv(const std::string& content,
                          const std::vector<std::string>& property_names,
                          const std::string& origin = "<memory>");

/// Serializes back to the schema above. load(parse(csv)) is value-identical.
std::string dataset_to_csv(const Dataset& ds);

/// Canonical content fingerprint (hash of dataset_to_csv).
std::string dataset_fingerprint(const Dataset& ds);

/// Splits whole experiments into train/test. Experiments are shuffled with
/// the seeded generator, then the first round-half-up(train_fraction * n)
/// become the training set. No experiment straddles the split.
/// Throws TooFewExperimentsError if the dataset has fewer than 2 experiments.
std::pair<Dataset, Dataset> split_by_experiment(const Dataset& ds,
                                                double train_fraction,
                                                std::uint64_t seed);

/// StdFraction threshold: fraction * sample standard deviation (n-1
/// denominator) of `values`. Throws TooFewValuesError if values.size() < 2.
Threshold compute_threshold(std::span<const double> values, double fraction);

// Locale-independent numeric conversions (shortest round-trip formatting).
std::string format_double(double v);
double parse_double(const std::string& cell, bool& ok);

}  // namespace dpc

#endif  // DPC_CORE_HPP
