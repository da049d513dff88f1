#include "dpc/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "dpc/errors.hpp"
#include "dpc/fingerprint.hpp"
#include "dpc/rng.hpp"

namespace dpc {

double Sample::property(const std::string& name) const {
    auto it = properties.find(name);
    if (it == properties.end()) {
        throw UnknownPropertyError("sample " + experiment_id + "/" + sample_id +
                                   " has no property '" + name + "'");
    }
    return it->second;
}

std::size_t Dataset::total_samples() const {
    std::size_t n = 0;
    for (const auto& e : experiments) n += e.samples.size();
    return n;
}

std::vector<Sample> Dataset::flatten() const {
    std::vector<Sample> out;
    out.reserve(total_samples());
    for (const auto& e : experiments) {
        out.insert(out.end(), e.samples.begin(), e.samples.end());
    }
    return out;
}

std::vector<double> Dataset::property_values(const std::string& name) const {
    std::vector<double> out;
    out.reserve(total_samples());
    for (const auto& e : experiments) {
        for (const auto& s : e.samples) out.push_back(s.property(name));
    }
    return out;
}

bool Dataset::has_property(const std::string& name) const {
    return std::find(property_names.begin(), property_names.end(), name) !=
           property_names.end();
}

Threshold Threshold::absolute(double t) {
    if (t < 0.0) throw InvalidConfigError("threshold must be >= 0");
    Threshold th;
    th.value = t;
    th.recipe = Recipe::Absolute;
    return th;
}

nlohmann::json Threshold::to_json() const {
    if (recipe == Recipe::StdFraction) {
        return {{"kind", "std_fraction"}, {"fraction", fraction}, {"resolved", value}};
    }
    return {{"kind", "absolute"}, {"value", value}};
}

Threshold Threshold::from_json(const nlohmann::json& j) {
    Threshold th;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "std_fraction") {
        th.recipe = Recipe::StdFraction;
        th.fraction = j.at("fraction").get<double>();
        th.value = j.at("resolved").get<double>();
    } else if (kind == "absolute") {
        th.recipe = Recipe::Absolute;
        th.value = j.at("value").get<double>();
    } else {
        throw InvalidConfigError("unknown threshold kind: " + kind);
    }
    if (th.value < 0.0) throw InvalidConfigError("threshold must be >= 0");
    return th;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& cell, bool& ok) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto res = std::from_chars(first, last, v);
    ok = res.ec == std::errc() && res.ptr == last && std::isfinite(v);
    return v;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

}  // namespace

Dataset parse_dataset_csv(const std::string& content,
                          const std::vector<std::string>& property_names,
                          const std::string& origin) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line) || line.empty()) {
        throw EmptyFileError("no header row in " + origin);
    }
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "experiment_id" || header[1] != "sample_id") {
        throw MissingColumnError("header of " + origin +
                                 " must start with experiment_id,sample_id");
    }
    if (property_names.empty()) {
        throw MissingColumnError("no property columns requested for " + origin);
    }

    // Every requested property must exist; whatever is left is a feature.
    std::vector<std::size_t> prop_cols;
    std::vector<bool> is_prop(header.size(), false);
    for (const auto& p : property_names) {
        auto it = std::find(header.begin() + 2, header.end(), p);
        if (it == header.end()) {
            throw MissingColumnError("property column '" + p + "' not found in " + origin);
        }
        std::size_t idx = static_cast<std::size_t>(it - header.begin());
        if (is_prop[idx]) {
            throw MissingColumnError("property column '" + p + "' requested twice");
        }
        is_prop[idx] = true;
        prop_cols.push_back(idx);
    }

    Dataset ds;
    ds.property_names = property_names;
    for (std::size_t c = 2; c < header.size(); ++c) {
        if (!is_prop[c]) ds.feature_names.push_back(header[c]);
    }

    std::map<std::string, std::size_t> exp_index;
    std::set<std::pair<std::string, std::string>> seen_ids;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++row;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw NonNumericCellError("row " + std::to_string(row) + " of " + origin +
                                      " has " + std::to_string(cells.size()) +
                                      " cells, expected " + std::to_string(header.size()));
        }
        Sample s;
        s.experiment_id = cells[0];
        s.sample_id = cells[1];
        if (s.experiment_id.empty()) {
            throw MissingColumnError("row " + std::to_string(row) +
                                     ": empty experiment_id");
        }
        if (!seen_ids.insert({s.experiment_id, s.sample_id}).second) {
            throw DuplicateSampleIdError("duplicate sample id '" + s.experiment_id +
                                         "/" + s.sample_id + "' at row " +
                                         std::to_string(row));
        }
        for (std::size_t c = 2; c < cells.size(); ++c) {
            bool ok = false;
            double v = parse_double(cells[c], ok);
            if (!ok) {
                throw NonNumericCellError("non-numeric cell at row " + std::to_string(row) +
                                          ", column '" + header[c] + "' in " + origin +
                                          ": '" + cells[c] + "'");
            }
            if (is_prop[c]) {
                s.properties[header[c]] = v;
            } else {
                s.features.push_back(v);
            }
        }
        auto [it, inserted] = exp_index.try_emplace(s.experiment_id, ds.experiments.size());
        if (inserted) {
            ds.experiments.push_back({s.experiment_id, {}});
        }
        ds.experiments[it->second].samples.push_back(std::move(s));
    }
    if (row == 0) throw EmptyFileError("no data rows in " + origin);
    return ds;
}

Dataset load_dataset(const std::string& path,
                     const std::vector<std::string>& property_names) {
    return parse_dataset_csv(read_file(path), property_names, path);
}

std::string dataset_to_csv(const Dataset& ds) {
    std::string out = "experiment_id,sample_id";
    for (const auto& f : ds.feature_names) out += "," + f;
    for (const auto& p : ds.property_names) out += "," + p;
    out += "\n";
    for (const auto& e : ds.experiments) {
        for (const auto& s : e.samples) {
            out += s.experiment_id + "," + s.sample_id;
            for (double v : s.features) out += "," + format_double(v);
            for (const auto& p : ds.property_names) out += "," + format_double(s.property(p));
            out += "\n";
        }
    }
    return out;
}

std::string dataset_fingerprint(const Dataset& ds) {
    return fingerprint(dataset_to_csv(ds));
}

std::pair<Dataset, Dataset> split_by_experiment(const Dataset& ds,
                                                double train_fraction,
                                                std::uint64_t seed) {
    const std::size_t n = ds.n_experiments();
    if (n < 2) {
        throw TooFewExperimentsError("need at least 2 experiments to split, have " +
                                     std::to_string(n));
    }
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw InvalidConfigError("train_fraction must be in (0, 1)");
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    // round half up
    const std::size_t n_train =
        static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n) + 0.5));

    Dataset train, test;
    train.feature_names = test.feature_names = ds.feature_names;
    train.property_names = test.property_names = ds.property_names;
    for (std::size_t i = 0; i < n; ++i) {
        (i < n_train ? train : test).experiments.push_back(ds.experiments[order[i]]);
    }
    return {std::move(train), std::move(test)};
}

Threshold compute_threshold(std::span<const double> values, double fraction) {
    if (values.size() < 2) {
        throw TooFewValuesError("need at least 2 values for a std-fraction threshold, have " +
                                std::to_string(values.size()));
    }
    if (fraction < 0.0) throw InvalidConfigError("threshold fraction must be >= 0");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));

    Threshold th;
    th.recipe = Threshold::Recipe::StdFraction;
    th.fraction = fraction;
    th.value = fraction * sd;
    return th;
}

}  // namespace dpc
