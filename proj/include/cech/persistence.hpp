#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cech/metric.hpp"

namespace cech {

/// Interval bars of the scale filtration. Every point is present at every
/// scale, so births are always 0; deaths are the merge radii, one infinite
/// bar per final component. Bars are sorted with infinite deaths first, then
/// by death descending.
struct Barcode {
    struct Bar {
        double birth = 0.0;
        std::optional<double> death;  // nullopt = infinite
    };
    std::vector<Bar> bars;

    std::size_t alive_at(double r) const;  // bars with death > r (infinite included)
};

/// One merge event: the classes named by their smallest members fuse at
/// `radius`. Ties at equal radius that chain together fuse in a single
/// multiway event.
struct MergeEvent {
    double radius;
    std::vector<std::size_t> roots;  // >= 2 class representatives, ascending
};

struct MergeTree {
    std::size_t n = 0;
    std::vector<MergeEvent> events;  // radii nondecreasing

    /// Partition at scale r as a representative per point.
    std::vector<std::size_t> partition_at(double r) const;
};

Barcode pi0_barcode(const MetricSpace& ms);
MergeTree dendrogram(const MetricSpace& ms);

std::string dendrogram_newick(const MergeTree& tree, const MetricSpace& ms);

/// The surjection from components at scale q onto components at scale r.
/// Classes are listed by smallest member; `onto[i]` is the r-class of the
/// i-th q-class. Refuses q > r unless the diameter is at most r (in which
/// case the identity is still continuous because the target is indiscrete).
struct ComponentMap {
    std::vector<std::vector<std::size_t>> from_classes;
    std::vector<std::vector<std::size_t>> to_classes;
    std::vector<std::size_t> onto;
};

ComponentMap persistent_components(const MetricSpace& ms, double q, double r,
                                   double tol = kDefaultTol);

}  // namespace cech
