#pragma once

#include <string>
#include <vector>

#include "cech/closure_space.hpp"

namespace cech {

/// Absolute tolerance used by every distance comparison of the form d <= r.
/// Points at distance exactly r land inside the scale-r closure; the
/// tolerance keeps that convention stable under floating-point noise.
inline constexpr double kDefaultTol = 1e-9;

enum class MetricKind {
    Euclidean,
    Circle,  // circumference-1 circle; points are 1-d coordinates taken mod 1
};

/// Finite metric space as a full symmetric distance matrix.
class MetricSpace {
public:
    static MetricSpace from_matrix(std::vector<std::string> labels,
                                   std::vector<std::vector<double>> dist);
    static MetricSpace from_points(std::vector<std::string> labels,
                                   const std::vector<std::vector<double>>& coords,
                                   MetricKind kind);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    double dist(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
    double diameter() const;

    /// Max violation of the triangle inequality, 0 if it holds.
    double triangle_defect() const;

private:
    MetricSpace() = default;
    std::vector<std::string> labels_;
    std::vector<double> dist_;  // row-major n*n
};

double circle_distance(double a, double b);

/// Scale-r closure of a finite metric space: y lies in c({x}) iff
/// d(x,y) <= r (+tol). The relation is symmetric.
ClosureSpace metric_closure(const MetricSpace& ms, double r, double tol = kDefaultTol);

/// Total map between finite metric spaces, by codomain index.
struct MetricMap {
    MetricSpace domain;
    MetricSpace codomain;
    std::vector<std::size_t> values;

    MetricMap(MetricSpace dom, MetricSpace cod, std::vector<std::size_t> vals);
};

/// Scale-shifted continuity on finite metric spaces:
///   for all x, x': d(x,x') <= q  implies  d(f(x),f(x')) <= r.
/// On a finite space this closed-inequality form is equivalent to the
/// epsilon-delta version (with strict inequalities and a per-point delta):
/// taking delta smaller than the least positive gap between distances and
/// epsilon likewise turns each strict bound into the closed one, and
/// conversely closed bounds imply the strict ones for every positive
/// epsilon. It is also equivalent to continuity of the map from the scale-q
/// closure of the domain to the scale-r closure of the codomain, which the
/// tests exercise exhaustively.
bool qr_continuous(const MetricMap& f, double q, double r, double tol = kDefaultTol);

SpaceMap closure_map(const MetricMap& f, double q, double r, double tol = kDefaultTol);

}  // namespace cech
