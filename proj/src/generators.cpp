#include "cech/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace cech {

ClosureSpace graph_closure(const Digraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<PointSet> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(PointSet::singleton(n, i));
    for (const auto& [u, v] : g.edges) {
        if (u >= n || v >= n) throw std::invalid_argument("graph edge endpoint out of range");
        rows[u].set(v);
    }
    return ClosureSpace(g.vertices, std::move(rows));
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels,
                                     const std::vector<std::vector<std::size_t>>& simplices)
    : vertex_labels_(std::move(vertex_labels)) {
    for (const auto& s : simplices) {
        std::vector<std::size_t> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (sorted.size() != s.size())
            throw std::invalid_argument("simplex contains a repeated vertex");
        if (sorted.empty()) throw std::invalid_argument("empty simplex");
        for (auto v : sorted)
            if (v >= vertex_labels_.size())
                throw std::invalid_argument("simplex vertex index out of range");
        // Close under faces: insert every nonempty subset.
        const std::size_t k = sorted.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) face.push_back(sorted[b]);
            simplices_.insert(std::move(face));
        }
    }
}

bool SimplicialComplex::has(const std::vector<std::size_t>& sorted_simplex) const {
    return simplices_.count(sorted_simplex) > 0;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::k_simplices(std::size_t k) const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : simplices_)
        if (s.size() == k + 1) out.push_back(s);
    return out;  // std::set iterates lexicographically
}

std::string SimplicialComplex::simplex_label(const std::vector<std::size_t>& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += vertex_labels_.at(s[i]);
    }
    out += "}";
    return out;
}

ClosureSpace skeleton_closure(const SimplicialComplex& sc, std::size_t k) {
    const auto simplices = sc.k_simplices(k);
    const std::size_t n = simplices.size();

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& s : simplices) labels.push_back(sc.simplex_label(s));

    std::vector<PointSet> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PointSet row = PointSet::singleton(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<std::size_t> inter, uni;
            std::set_intersection(simplices[i].begin(), simplices[i].end(), simplices[j].begin(),
                                  simplices[j].end(), std::back_inserter(inter));
            std::set_union(simplices[i].begin(), simplices[i].end(), simplices[j].begin(),
                           simplices[j].end(), std::back_inserter(uni));
            const bool shared_face = k >= 1 && inter.size() == k && sc.has(inter);
            const bool common_coface = uni.size() == k + 2 && sc.has(uni);
            if (shared_face || common_coface) row.set(j);
        }
        rows.push_back(std::move(row));
    }
    return ClosureSpace(std::move(labels), std::move(rows));
}

CyclicSpace::CyclicSpace(std::size_t n_, std::size_t m_) : n(n_), m(m_) {
    if (n == 0) throw std::invalid_argument("cyclic space requires n >= 1");
}

ClosureSpace CyclicSpace::space() const { return cyclic_space(n, m); }

ClosureSpace cyclic_space(std::size_t n, std::size_t m) {
    if (n == 0) throw std::invalid_argument("cyclic space requires n >= 1");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));

    std::vector<PointSet> rows;
    rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        PointSet row(n);
        if (2 * m + 1 >= n) {
            row = PointSet::full(n);
        } else {
            for (std::size_t d = 0; d <= m; ++d) {
                row.set((k + d) % n);
                row.set((k + n - d) % n);
            }
        }
        rows.push_back(std::move(row));
    }
    return ClosureSpace(std::move(labels), std::move(rows));
}

std::optional<CyclicSpace> detect_cyclic(const ClosureSpace& space) {
    const std::size_t n = space.size();
    if (n == 0) return std::nullopt;
    const std::size_t pop = space.row(0).count();
    if (pop % 2 == 0) return std::nullopt;  // arcs have odd size 2m+1
    const std::size_t m = (pop - 1) / 2;
    if (2 * m + 1 > n) return std::nullopt;
    const ClosureSpace model = cyclic_space(n, m);
    for (std::size_t k = 0; k < n; ++k)
        if (space.row(k) != model.row(k)) return std::nullopt;
    return CyclicSpace(n, m);
}

}  // namespace cech
