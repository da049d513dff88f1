#ifndef DPC_PAIRING_HPP
#define DPC_PAIRING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dpc/core.hpp"

namespace dpc {

/// 3-way outcome of comparing two property values at threshold t.
enum class PairLabel : int {
    Same = 0,          // |y1 - y2| <= t
    FirstHigher = 1,   // y1 - y2 > t
    SecondHigher = 2,  // y2 - y1 > t
};

inline int to_int(PairLabel l) { return static_cast<int>(l); }
PairLabel pair_label_from_int(int v);

/// The labeling rule. Total on finite inputs; t must be >= 0.
/// Exact equality |y1 - y2| == t counts as Same.
inline PairLabel label_pair(double y1, double y2, double t) {
    if (y1 - y2 > t) return PairLabel::FirstHigher;
    if (y2 - y1 > t) return PairLabel::SecondHigher;
    return PairLabel::Same;
}

/// An ordered-pair classification dataset over a fixed sample universe.
struct PairDataset {
    struct Pair {
        std::int32_t first;   // index into samples
        std::int32_t second;  // index into samples
        PairLabel label;
    };

    std::vector<Sample> samples;
    std::vector<Pair> pairs;
    std::string property_name;
    Threshold threshold;

    std::size_t size() const { return pairs.size(); }
    double y(std::int32_t sample_index) const;
};

/// All k^2 ordered pairs (self-pairs included) in lexicographic (i1, i2)
/// order, labeled by label_pair on the named property.
/// Throws UnknownPropertyError if any sample lacks the property.
PairDataset build_pair_dataset(std::vector<Sample> samples,
                               const std::string& property_name,
                               const Threshold& t);

/// Uniform seeded subsample without replacement, capped at max_pairs.
/// Relative pair order is preserved; a no-op when already small enough.
PairDataset subsample_pairs(const PairDataset& pd, std::size_t max_pairs,
                            std::uint64_t seed);

/// Pair counts per label, indexed by label value. Sums to pd.size().
std::array<std::size_t, 3> class_balance(const PairDataset& pd);

/// Debug export: i1,i2,experiment_id_1,sample_id_1,experiment_id_2,
/// sample_id_2,y1,y2,label
std::string pair_dataset_to_csv(const PairDataset& pd);

}  // namespace dpc

#endif  // DPC_PAIRING_HPP
