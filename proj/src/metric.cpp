#include "cech/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace cech {

double circle_distance(double a, double b) {
    double x = std::fmod(a - b, 1.0);
    if (x < 0) x += 1.0;
    return std::min(x, 1.0 - x);
}

MetricSpace MetricSpace::from_matrix(std::vector<std::string> labels,
                                     std::vector<std::vector<double>> dist) {
    const std::size_t n = labels.size();
    if (dist.size() != n) throw std::invalid_argument("distance matrix must be square");
    MetricSpace ms;
    ms.labels_ = std::move(labels);
    ms.dist_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n) throw std::invalid_argument("distance matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            const double d = dist[i][j];
            if (!(d >= 0.0)) throw std::invalid_argument("distances must be nonnegative");
            ms.dist_[i * n + j] = d;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (ms.dist_[i * n + i] != 0.0)
            throw std::invalid_argument("distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(ms.dist_[i * n + j] - ms.dist_[j * n + i]) > kDefaultTol)
                throw std::invalid_argument("distance matrix must be symmetric");
    }
    return ms;
}

MetricSpace MetricSpace::from_points(std::vector<std::string> labels,
                                     const std::vector<std::vector<double>>& coords,
                                     MetricKind kind) {
    const std::size_t n = labels.size();
    if (coords.size() != n) throw std::invalid_argument("one coordinate row per label required");
    const std::size_t dim = n == 0 ? 0 : coords[0].size();
    for (const auto& c : coords)
        if (c.size() != dim) throw std::invalid_argument("inconsistent coordinate dimension");
    if (kind == MetricKind::Circle && n > 0 && dim != 1)
        throw std::invalid_argument("circle metric requires one coordinate per point");

    MetricSpace ms;
    ms.labels_ = std::move(labels);
    ms.dist_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = 0.0;
            if (kind == MetricKind::Euclidean) {
                double s = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    const double t = coords[i][k] - coords[j][k];
                    s += t * t;
                }
                d = std::sqrt(s);
            } else {
                d = circle_distance(coords[i][0], coords[j][0]);
            }
            ms.dist_[i * n + j] = d;
            ms.dist_[j * n + i] = d;
        }
    }
    return ms;
}

double MetricSpace::diameter() const {
    double m = 0.0;
    for (double d : dist_) m = std::max(m, d);
    return m;
}

double MetricSpace::triangle_defect() const {
    const std::size_t n = size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                worst = std::max(worst, dist(i, j) - (dist(i, k) + dist(k, j)));
    return std::max(worst, 0.0);
}

ClosureSpace metric_closure(const MetricSpace& ms, double r, double tol) {
    if (r < 0) throw std::invalid_argument("closure scale r must be nonnegative");
    const std::size_t n = ms.size();
    std::vector<PointSet> rows;
    rows.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        PointSet row(n);
        for (std::size_t y = 0; y < n; ++y)
            if (ms.dist(x, y) <= r + tol) row.set(y);
        rows.push_back(std::move(row));
    }
    return ClosureSpace(ms.labels(), std::move(rows));
}

MetricMap::MetricMap(MetricSpace dom, MetricSpace cod, std::vector<std::size_t> vals)
    : domain(std::move(dom)), codomain(std::move(cod)), values(std::move(vals)) {
    if (values.size() != domain.size())
        throw std::invalid_argument("map must assign a value to every domain point");
    for (auto v : values)
        if (v >= codomain.size()) throw std::invalid_argument("map value out of codomain range");
}

bool qr_continuous(const MetricMap& f, double q, double r, double tol) {
    if (q < 0 || r < 0) throw std::invalid_argument("scales q, r must be nonnegative");
    const std::size_t n = f.domain.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (f.domain.dist(x, y) <= q + tol &&
                f.codomain.dist(f.values[x], f.values[y]) > r + tol)
                return false;
    return true;
}

SpaceMap closure_map(const MetricMap& f, double q, double r, double tol) {
    return SpaceMap(metric_closure(f.domain, q, tol), metric_closure(f.codomain, r, tol),
                    f.values);
}

}  // namespace cech
